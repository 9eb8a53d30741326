"""Coproduct and counit on the free algebra, and the bialgebra-level checks.

Generators are either grouplike (Delta g = g (x) g, eps g = 1) or
skew-primitive against a designated grouplike companion
(Delta x = 1 (x) x + x (x) a, eps x = 0); both maps extend to algebra
maps.  Membership of a tensor element in I (x) F + F (x) I is decided by
reducing each tensor leg to normal form.  That computes in the quotient
tensor square, so correctness of a zero verdict as a *certificate of
membership* needs the underlying system to be confluent, and the report
refuses to certify otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freealg import Alphabet, NcPoly, TensorPoly, bidegree_sum
from .presentations import DefiningPolynomial, Presentation, build_system
from .rewrite import ReductionSystem, check_confluence, normal_form

GROUPLIKE = "grouplike"
SKEW = "skew"


@dataclass(frozen=True)
class CoalgebraContext:
    """Per-generator coproduct shapes over one alphabet."""

    alphabet: Alphabet
    shapes: tuple  # per generator: (GROUPLIKE,) or (SKEW, companion_index)

    def __post_init__(self):
        for shape in self.shapes:
            if shape[0] == SKEW:
                companion = self.shapes[shape[1]]
                if companion[0] != GROUPLIKE:
                    raise ValueError("skew companion must be a grouplike generator")

    @classmethod
    def standard(cls, alphabet: Alphabet, skew_pairs) -> "CoalgebraContext":
        """Build from (skew, companion) name pairs; all other generators are
        grouplike."""
        shapes = [(GROUPLIKE,)] * len(alphabet)
        for skew_name, companion_name in skew_pairs:
            shapes[alphabet.index(skew_name)] = (SKEW, alphabet.index(companion_name))
        return cls(alphabet, tuple(shapes))

    def is_grouplike(self, letter: int) -> bool:
        return self.shapes[letter][0] == GROUPLIKE


#: the (a, x) context: a grouplike, x skew against a
AX_CONTEXT = CoalgebraContext.standard(Alphabet(("a", "x")), [("x", "a")])


def _letter_coproduct(ctx: CoalgebraContext, letter: int) -> TensorPoly:
    shape = ctx.shapes[letter]
    if shape[0] == GROUPLIKE:
        return TensorPoly.simple(ctx.alphabet, (letter,), (letter,))
    companion = shape[1]
    return TensorPoly.simple(ctx.alphabet, (), (letter,)) + TensorPoly.simple(
        ctx.alphabet, (letter,), (companion,)
    )


def coproduct(poly: NcPoly, ctx: CoalgebraContext) -> TensorPoly:
    """Algebra-map extension of the generator coproducts."""
    if poly.alphabet != ctx.alphabet:
        raise ValueError("alphabet mismatch")
    total = TensorPoly.zero(ctx.alphabet)
    cache: dict = {}
    for word, coeff in poly.items():
        value = cache.get(word)
        if value is None:
            value = TensorPoly.one(ctx.alphabet)
            for letter in word:
                value = value * _letter_coproduct(ctx, letter)
            cache[word] = value
        total = total + value.scale(coeff)
    return total


def counit(poly: NcPoly, ctx: CoalgebraContext):
    """Multiplicative-linear extension: a word counts 1 unless it contains a
    skew-primitive letter."""
    total = Fraction(0)
    for word, coeff in poly.items():
        if all(ctx.is_grouplike(c) for c in word):
            total = total + coeff
    return total


def check_coproduct_powers(ell: int, ctx: CoalgebraContext = AX_CONTEXT, pair=(0, 1)) -> bool:
    """Closed form for the coproduct of x^ell:

        Delta(x^ell) = sum_s  x^s (x) bidegree_sum(s, ell - s).
    """
    x = pair[1]
    lhs = coproduct(NcPoly.monomial(ctx.alphabet, (x,) * ell), ctx)
    rhs = TensorPoly.zero(ctx.alphabet)
    for s in range(ell + 1):
        rhs = rhs + TensorPoly.of(
            NcPoly.monomial(ctx.alphabet, (x,) * s),
            bidegree_sum(ctx.alphabet, s, ell - s, pair),
        )
    return lhs == rhs


def check_coproduct_bidegree(
    j: int, t: int, ctx: CoalgebraContext = AX_CONTEXT, pair=(0, 1)
) -> bool:
    """Closed form for the coproduct of a bidegree sum:

        Delta(P(j, t)) = sum_l  P(j, l) (x) P(j + l, t - l).
    """
    lhs = coproduct(bidegree_sum(ctx.alphabet, j, t, pair), ctx)
    rhs = TensorPoly.zero(ctx.alphabet)
    for ell in range(t + 1):
        rhs = rhs + TensorPoly.of(
            bidegree_sum(ctx.alphabet, j, ell, pair),
            bidegree_sum(ctx.alphabet, j + ell, t - ell, pair),
        )
    return lhs == rhs


def tensor_normal_form(tensor: TensorPoly, system: ReductionSystem) -> TensorPoly:
    """Reduce every left and right leg word to normal form and recombine.

    This computes the image in (F/I) (x) (F/I); its kernel is exactly
    I (x) F + F (x) I.  Representative-independence needs confluence.
    """
    out = TensorPoly.zero(tensor.alphabet)
    for (left, right), coeff in tensor.items():
        nf_left = normal_form(NcPoly.monomial(tensor.alphabet, left), system)
        nf_right = normal_form(NcPoly.monomial(tensor.alphabet, right), system)
        out = out + TensorPoly.of(nf_left, nf_right).scale(coeff)
    return out


def coassociativity_holds(poly: NcPoly, ctx: CoalgebraContext) -> bool:
    """(Delta (x) id) Delta = (id (x) Delta) Delta, exactly."""
    delta = coproduct(poly, ctx)
    left: dict = {}
    right: dict = {}
    for (u, v), coeff in delta.items():
        for (u1, u2), c2 in coproduct(NcPoly.monomial(ctx.alphabet, u), ctx).items():
            key = (u1, u2, v)
            left[key] = left.get(key, 0) + coeff * c2
        for (v1, v2), c2 in coproduct(NcPoly.monomial(ctx.alphabet, v), ctx).items():
            key = (u, v1, v2)
            right[key] = right.get(key, 0) + coeff * c2
    left = {k: c for k, c in left.items() if c}
    right = {k: c for k, c in right.items() if c}
    return left == right


def counit_laws_hold(poly: NcPoly, ctx: CoalgebraContext) -> bool:
    """(eps (x) id) Delta(p) = p = (id (x) eps) Delta(p)."""
    delta = coproduct(poly, ctx)
    left = NcPoly.zero(ctx.alphabet)
    right = NcPoly.zero(ctx.alphabet)
    for (u, v), coeff in delta.items():
        eps_u = counit(NcPoly.monomial(ctx.alphabet, u), ctx)
        if eps_u:
            left = left + NcPoly.monomial(ctx.alphabet, v, coeff * eps_u)
        eps_v = counit(NcPoly.monomial(ctx.alphabet, v), ctx)
        if eps_v:
            right = right + NcPoly.monomial(ctx.alphabet, u, coeff * eps_v)
    return left == poly and right == poly


@dataclass
class HopfIdealReport:
    """Per-relation bialgebra-ideal verdicts for one defining polynomial."""

    presentation: Presentation
    confluent: bool
    entries: list  # [(label, counit_zero, coproduct_in_ideal)]

    @property
    def certified(self) -> bool:
        return self.confluent

    @property
    def ok(self) -> bool:
        return self.confluent and all(e and c for _, e, c in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "system": self.presentation.system.describe(),
            "confluent": self.confluent,
            "certified": self.certified,
            "relations": [
                {
                    "label": label,
                    "counit_zero": eps,
                    "coproduct_in_ideal": cop,
                }
                for label, eps, cop in self.entries
            ],
            "ok": self.ok,
        }


def hopf_ideal_check(g: DefiningPolynomial, ctx: CoalgebraContext = AX_CONTEXT) -> HopfIdealReport:
    """Check that every defining relation generates a bialgebra ideal:
    eps(sigma_j) = 0 and Delta(sigma_j) lies in I (x) F + F (x) I.

    Gated on a confluence check of the oriented system; without confluence
    the per-leg reduction is representative-dependent and the zero verdicts
    are not certificates, so the report is marked uncertified.
    """
    pres = build_system(g, ctx.alphabet)
    confluent = check_confluence(pres.system).overall
    entries = []
    for label, sigma in pres.relations:
        eps_zero = not counit(sigma, ctx)
        cop_zero = tensor_normal_form(coproduct(sigma, ctx), pres.system).is_zero()
        entries.append((label, eps_zero, cop_zero))
    return HopfIdealReport(pres, confluent, entries)
