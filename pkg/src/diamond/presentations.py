"""Presentation builders.

Everything here turns defining polynomial data into oriented reduction
systems: the skew-primitive systems generated by a single polynomial g, the
one-rule root-of-unity plane, down-up relation sets, the combined
two-polynomial tensor system over four generators, and the commutative
plane-curve quotient used as its census oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import Alphabet, NcPoly, Word, bidegree_sum, render_word
from .ordering import GrlexPlus, ProductGrlex
from .rewrite import ReductionSystem, Rule
from .scalars import CyclotomicField

AX = Alphabet(("a", "x"))


@dataclass(frozen=True)
class DefiningPolynomial:
    """A polynomial sum r_i t^i, i = 1..n, with r_n != 0 and no constant term."""

    coefficients: tuple  # (r_1, ..., r_n)

    def __post_init__(self):
        if not self.coefficients or not self.coefficients[-1]:
            raise ValueError("defining polynomial needs a nonzero top coefficient")

    @classmethod
    def from_coefficients(cls, coeffs) -> "DefiningPolynomial":
        """Coefficients listed from r_1 upward; ints become Fractions."""
        out = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)
        while out and not out[-1]:
            out = out[:-1]
        return cls(out)

    @classmethod
    def from_ncpoly(cls, poly: NcPoly, gen: int) -> "DefiningPolynomial":
        """Extract coefficients from a one-variable polynomial in generator
        ``gen`` with zero constant term."""
        coeffs: dict[int, object] = {}
        for word, coeff in poly.items():
            if any(c != gen for c in word):
                raise ValueError("polynomial involves more than one generator")
            if not word:
                raise ValueError("defining polynomial must have zero constant term")
            coeffs[len(word)] = coeff
        degree = max(coeffs, default=0)
        if degree == 0:
            raise ValueError("defining polynomial must be nonzero")
        return cls(tuple(coeffs.get(i, Fraction(0)) for i in range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def coefficient(self, i: int):
        """r_i, with r_i = 0 outside 1..n."""
        if 1 <= i <= self.degree:
            return self.coefficients[i - 1]
        return Fraction(0)

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def monic(self) -> "DefiningPolynomial":
        """Divide through by the top coefficient; the relation ideal is
        unchanged because every relation is linear in the coefficients."""
        top = self.coefficients[-1]
        if top == 1:
            return self
        return DefiningPolynomial(tuple(c / top for c in self.coefficients))

    def as_ncpoly(self, alphabet: Alphabet, gen: int) -> NcPoly:
        terms = {}
        for i, c in enumerate(self.coefficients, start=1):
            if c:
                terms[(gen,) * i] = c
        return NcPoly(alphabet, terms)

    def rescaled(self, lam) -> "DefiningPolynomial":
        """The polynomial t -> g(lam * t): coefficients r_i lam^i."""
        if not lam:
            raise ValueError("rescaling factor must be nonzero")
        return DefiningPolynomial(
            tuple(c * lam ** i for i, c in enumerate(self.coefficients, start=1))
        )

    def render(self, name: str = "x") -> str:
        from .scalars import scalar_str

        parts = []
        for i in range(self.degree, 0, -1):
            c = self.coefficient(i)
            if not c:
                continue
            power = name if i == 1 else f"{name}^{i}"
            cs = scalar_str(c)
            if cs == "1":
                body = power
            elif cs == "-1":
                body = f"-{power}"
            else:
                body = f"{cs}*{power}"
            parts.append(body)
        text = " + ".join(parts) if parts else "0"
        return text.replace("+ -", "- ")


def defining_relation(
    g: DefiningPolynomial, j: int, alphabet: Alphabet = AX, pair=(0, 1)
) -> NcPoly:
    """The j-th relation of the skew-primitive presentation of g:

        sum_{i=j}^{n} r_i * bidegree_sum(j, i - j)  -  r_j * a^n,

    for 1 <= j <= n - 1, written in the letters ``pair`` = (a-like, x-like).
    """
    n = g.degree
    if not 1 <= j <= n - 1:
        raise ValueError(f"relation index {j} outside 1..{n - 1}")
    first, _ = pair
    total = NcPoly.zero(alphabet)
    for i in range(j, n + 1):
        c = g.coefficient(i)
        if c:
            total = total + bidegree_sum(alphabet, j, i - j, pair).scale(c)
    rj = g.coefficient(j)
    if rj:
        total = total - NcPoly.monomial(alphabet, (first,) * n, rj)
    return total


@dataclass
class Presentation:
    """A relation set plus its oriented, compatibility-checked system."""

    alphabet: Alphabet
    relations: list  # [(label, NcPoly)]
    system: ReductionSystem
    metadata: dict = field(default_factory=dict)

    def relation(self, label: str) -> NcPoly:
        for name, poly in self.relations:
            if name == label:
                return poly
        raise KeyError(label)

    def to_json_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet.names),
            "order": self.system.order.describe(),
            "relations": [
                {"label": label, "poly": poly.render(self.system.order)}
                for label, poly in self.relations
            ],
            "rules": [
                {
                    "label": rule.label,
                    "lhs": render_word(self.alphabet, rule.lhs),
                    "rhs": rule.rhs.render(self.system.order),
                }
                for rule in self.system.rules
            ],
            "metadata": {
                k: str(v) for k, v in sorted(self.metadata.items())
            },
        }


def build_system(g: DefiningPolynomial, alphabet: Alphabet = AX, pair=(0, 1)) -> Presentation:
    """Orient the relations of g into rules a^j x^(n-j) -> lower terms.

    g is normalized monic first (the ideal does not change); for monic g the
    j-th rule reads

        a^j x^(n-j) -> -bidegree_rest(j, n-j)
                       - sum_{i=j}^{n-1} r_i * bidegree_sum(j, i-j)
                       + r_j * a^n.
    """
    n = g.degree
    if n < 2:
        raise ValueError("defining polynomial must have degree >= 2")
    scale = g.coefficients[-1]
    gm = g.monic()
    first, second = pair
    order = GrlexPlus(alphabet, weight_letter=second, lex_top=first)
    rules = []
    relations = []
    for j in range(1, n):
        sigma = defining_relation(gm, j, alphabet, pair)
        lhs = (first,) * j + (second,) * (n - j)
        rhs = NcPoly.monomial(alphabet, lhs) - sigma
        label = f"sigma_{j}"
        rules.append(Rule(lhs, rhs, label))
        relations.append((label, sigma))
    system = ReductionSystem(
        alphabet, order, rules, name=f"Sigma[{gm.render(alphabet.names[second])}]"
    )
    return Presentation(
        alphabet,
        relations,
        system,
        metadata={
            "construction": "skew-primitive",
            "degree": n,
            "defining_polynomial": gm.render(alphabet.names[second]),
            "scale": scale,
        },
    )


def rescale_letter(poly: NcPoly, lam, letter: int) -> NcPoly:
    """The algebra endomorphism fixing every generator except ``letter``,
    which is sent to lam * letter."""
    if not lam:
        raise ValueError("rescaling factor must be nonzero")
    terms = {}
    for word, coeff in poly.items():
        count = sum(1 for c in word if c == letter)
        terms[word] = coeff * lam ** count
    return NcPoly(poly.alphabet, terms)


def build_quantum_plane(n: int) -> ReductionSystem:
    """The one-rule system  x*a -> q * a*x  over Q[q]/Phi_n.

    q is a primitive n-th root of unity, so the n-th bidegree sums all
    reduce to zero; that vanishing is what drives the root-of-unity quotient.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    field_ = CyclotomicField(n)
    # orientation x*a -> a*x needs x on top of the lex tie-break
    order = GrlexPlus(AX, weight_letter=0, lex_top=1)
    rule = Rule((1, 0), NcPoly.monomial(AX, (0, 1), field_.q), "q_commute")
    return ReductionSystem(AX, order, [rule], name=f"quantum-plane({n})")


DU = Alphabet(("d", "u"))


def downup_relations(alpha, beta, gamma, alphabet: Alphabet = DU) -> list:
    """The two down-up relations, as polynomials set to zero:

        d^2 u - alpha*d u d - beta*u d^2 - gamma*d,
        d u^2 - alpha*u d u - beta*u^2 d - gamma*u.
    """
    d, u = 0, 1

    def mono(*letters):
        return NcPoly.monomial(alphabet, letters)

    first = mono(d, d, u) - alpha * mono(d, u, d) - beta * mono(u, d, d) - gamma * mono(d)
    second = mono(d, u, u) - alpha * mono(u, d, u) - beta * mono(u, u, d) - gamma * mono(u)
    return [first, second]


def leading_filtered_part(poly: NcPoly, weights) -> NcPoly:
    """Sum of the terms of maximal total weight; weights map letter -> int."""
    if poly.is_zero():
        return poly
    def wt(word):
        return sum(weights[c] for c in word)
    top = max(wt(w) for w in poly.support())
    return NcPoly(
        poly.alphabet, {w: c for w, c in poly.items() if wt(w) == top}
    )


def tensor_alphabet(n: int, m: int) -> Alphabet:
    """Four generators a, x, b, y with weights m, m, n, n."""
    return Alphabet(("a", "x", "b", "y"), (m, m, n, n))


def build_tensor_presentation(g: DefiningPolynomial, f: DefiningPolynomial) -> Presentation:
    """The combined system for the pair (g, f) on generators a, x, b, y.

    Relations: the four cross commutators (oriented with first-factor
    letters leftmost), both skew-primitive families, the group relation
    b^m -> a^n and the curve relation y^m -> g(x) - (f(y) - s_m y^m)/s_m.
    All rules are oriented under the product order and compatibility is
    checked at construction.
    """
    n, m = g.degree, f.degree
    if n < 2 or m < 2:
        raise ValueError("both defining polynomials must have degree >= 2")
    alphabet = tensor_alphabet(n, m)
    a, x, b, y = 0, 1, 2, 3
    order = ProductGrlex(alphabet, a=a, x=x, b=b, y=y)
    gm, fm = g.monic(), f.monic()

    def mono(*letters):
        return NcPoly.monomial(alphabet, letters)

    rules = []
    relations = []

    commutators = [
        ("comm_ya", (y, a), (a, y)),
        ("comm_yx", (y, x), (x, y)),
        ("comm_ba", (b, a), (a, b)),
        ("comm_bx", (b, x), (x, b)),
    ]
    for label, lhs, rhs in commutators:
        rules.append(Rule(lhs, mono(*rhs), label))
        relations.append((label, mono(*lhs) - mono(*rhs)))

    for j in range(1, n):
        sigma = defining_relation(gm, j, alphabet, (a, x))
        lhs = (a,) * j + (x,) * (n - j)
        rules.append(Rule(lhs, mono(*lhs) - sigma, f"sigma_{j}"))
        relations.append((f"sigma_{j}", sigma))
    for p in range(1, m):
        tau = defining_relation(fm, p, alphabet, (b, y))
        lhs = (b,) * p + (y,) * (m - p)
        rules.append(Rule(lhs, mono(*lhs) - tau, f"tau_{p}"))
        relations.append((f"tau_{p}", tau))

    group_lhs = (b,) * m
    rules.append(Rule(group_lhs, mono(*((a,) * n)), "group"))
    relations.append(("group", mono(*group_lhs) - mono(*((a,) * n))))

    # curve relation g(x) = f(y), oriented to eliminate y^m; dividing by the
    # top coefficient of f leaves the ideal unchanged
    sm = f.coefficients[-1]
    g_x = g.as_ncpoly(alphabet, x)
    f_y = f.as_ncpoly(alphabet, y)
    curve_rel = g_x - f_y
    curve_lhs = (y,) * m
    curve_rhs = NcPoly.monomial(alphabet, curve_lhs) + curve_rel.scale(1 / sm)
    rules.append(Rule(curve_lhs, curve_rhs, "curve"))
    relations.append(("curve", curve_rel))

    system = ReductionSystem(
        alphabet,
        order,
        rules,
        name=f"A[{g.render('x')} | {f.render('y')}]",
    )
    return Presentation(
        alphabet,
        relations,
        system,
        metadata={
            "construction": "tensor-pair",
            "degrees": (n, m),
            "g": g.render("x"),
            "f": f.render("y"),
        },
    )


@dataclass
class CurvePresentation:
    """The commutative quotient k[x, y] / (g(x) - f(y)).

    Standard monomials eliminate y^m: the basis is { x^i y^j : j < m }.
    """

    g: DefiningPolynomial
    f: DefiningPolynomial

    @property
    def relation(self) -> dict:
        """g - f as a map (x-exponent, y-exponent) -> coefficient."""
        rel: dict = {}
        for i, c in enumerate(self.g.coefficients, start=1):
            if c:
                rel[(i, 0)] = rel.get((i, 0), 0) + c
        for j, c in enumerate(self.f.coefficients, start=1):
            if c:
                rel[(0, j)] = rel.get((0, j), 0) - c
        return {k: v for k, v in rel.items() if v}

    def basis(self, max_degree: int, weights=(1, 1)):
        """Standard monomials (i, j), j < deg f, of weighted degree <= bound."""
        wx, wy = weights
        m = self.f.degree
        out = []
        for j in range(m):
            if wy * j > max_degree:
                break
            for i in range((max_degree - wy * j) // wx + 1):
                out.append((i, j))
        return sorted(out, key=lambda ij: (wx * ij[0] + wy * ij[1], ij))

    def basis_counts(self, max_degree: int, weights=(1, 1)) -> list:
        """Number of standard monomials at each weighted degree 0..max."""
        counts = [0] * (max_degree + 1)
        wx, wy = weights
        for i, j in self.basis(max_degree, weights):
            counts[wx * i + wy * j] += 1
        return counts
