"""PBW enumeration, growth census, the independent linear-algebra dimension
oracle, centrality checks, tensor-quotient counts, and the claim suites.

The dimension oracle deliberately avoids the rewriting engine: it spans the
ideal by explicit rows u * relation * v inside the word-indexed vector
space, row-reduces exactly over the integers, and reads filtration
dimensions off the pivot profile.  Agreement with the irreducible census is
then a machine proof, at these sizes, that the irreducible words really are
a basis of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, log

from .freealg import (
    Alphabet,
    NcPoly,
    Word,
    bidegree_sum,
    check_splitting_identity,
    render_word,
)
from .presentations import (
    AX,
    CurvePresentation,
    DefiningPolynomial,
    build_system,
    defining_relation,
)
from .rewrite import check_confluence, normal_form
from .scalars import CyclotomicField, scalar_str

# ---------------------------------------------------------------------------
# PBW words and the irreducible census
# ---------------------------------------------------------------------------


def pbw_block_letters(n: int, pair=(0, 1)) -> list:
    """The block alphabet { a^i x^j : i, j > 0, i + j < n }; it has
    (n-1)(n-2)/2 members and freely generates the middle of every
    irreducible word."""
    if n < 2:
        raise ValueError("need n >= 2")
    a, x = pair
    out = []
    for total in range(2, n):
        for i in range(1, total):
            out.append((a,) * i + (x,) * (total - i))
    return out


def pbw_words(n: int, max_len: int, pair=(0, 1)) -> list:
    """All words x^i * (block product) * a^k of length <= max_len.

    The block products range over the free monoid on the block alphabet,
    so the enumeration is independent of the rewriting engine.
    """
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    a, x = pair
    blocks = pbw_block_letters(n, pair)
    products = [()]
    frontier = [()]
    while frontier:
        new = []
        for word in frontier:
            for block in blocks:
                grown = word + block
                if len(grown) <= max_len:
                    new.append(grown)
        products.extend(new)
        frontier = new
    out = []
    for middle in products:
        room = max_len - len(middle)
        for i in range(room + 1):
            for k in range(room - i + 1):
                out.append((x,) * i + middle + (a,) * k)
    out = sorted(set(out), key=lambda w: (len(w), w))
    return out


@dataclass
class GrowthReport:
    """Number of irreducible words at each length 0..L."""

    counts: list

    def cumulative(self) -> list:
        out, total = [], 0
        for c in self.counts:
            total += c
            out.append(total)
        return out


def irreducible_census(system, max_len: int) -> GrowthReport:
    """Exhaustive filter: count irreducible words of every length <= max_len."""
    k = len(system.alphabet)
    counts = []
    for length in range(max_len + 1):
        total = 0
        for word in product(range(k), repeat=length):
            if system.is_irreducible(word):
                total += 1
        counts.append(total)
    return GrowthReport(counts)


@dataclass
class Classification:
    kind: str  # "polynomial" | "exponential" | "inconclusive"
    exponent: int | None = None
    tail_ratio: float | None = None
    residual: float | None = None


def growth_classify(
    report: GrowthReport, fit_from: int = 6, tail: int = 4, theta: float = 1.2
) -> Classification:
    """Classify a census as polynomial or exponential growth.

    Exponential is certified by every one of the last ``tail`` per-length
    ratios being >= theta.  Otherwise the per-length counts are fitted by
    least squares on a log-log scale; the growth exponent of the cumulative
    dimensions is the rounded slope plus one, accepted when the RMS residual
    is below 0.1.
    """
    counts = report.counts
    top = len(counts) - 1
    if top < 10:
        raise ValueError("need counts up to length >= 10")
    ratios = [counts[i + 1] / counts[i] for i in range(top - tail, top)]
    if all(r >= theta for r in ratios):
        return Classification("exponential", tail_ratio=min(ratios))
    xs = [log(ell) for ell in range(fit_from, top + 1)]
    ys = [log(counts[ell]) for ell in range(fit_from, top + 1)]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    var = sum((x - mean_x) ** 2 for x in xs)
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    slope = cov / var
    intercept = mean_y - slope * mean_x
    rss = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    residual = (rss / len(xs)) ** 0.5
    if residual < 0.1:
        return Classification("polynomial", exponent=round(slope) + 1, residual=residual)
    return Classification("inconclusive", residual=residual)


# ---------------------------------------------------------------------------
# Sparse exact row echelon and the dimension oracle
# ---------------------------------------------------------------------------


def _strip_content(row: dict) -> dict:
    content = 0
    for v in row.values():
        content = gcd(content, v)
        if content == 1:
            break
    if content > 1:
        row = {k: v // content for k, v in row.items()}
    lead = min(row)
    if row[lead] < 0:
        row = {k: -v for k, v in row.items()}
    return row


def _reduce_row(row: dict, pivots: dict) -> dict:
    """Eliminate a row against the pivot table; fraction-free combinations
    with content stripping keep the integers small."""
    while row:
        lead = min(row)
        pivot = pivots.get(lead)
        if pivot is None:
            return _strip_content(row)
        a, b = row[lead], pivot[lead]
        g = gcd(a, b)
        fa, fb = b // g, a // g
        new = {k: fa * v for k, v in row.items()}
        for k, v in pivot.items():
            value = new.get(k, 0) - fb * v
            if value:
                new[k] = value
            elif k in new:
                del new[k]
        row = new
    return row


def _row_echelon(rows) -> dict:
    """Sparse row echelon form; returns {leading column: pivot row}."""
    pivots: dict = {}
    for row in sorted(rows, key=min):
        reduced = _reduce_row(dict(row), pivots)
        if reduced:
            pivots[min(reduced)] = reduced
    return pivots


def _integer_row(terms, rank_of: dict) -> dict:
    for coeff in terms.values():
        if not isinstance(coeff, (int, Fraction)):
            raise TypeError("the exact-rank oracle works over rational scalars only")
    denominators = [c.denominator for c in terms.values() if isinstance(c, Fraction)]
    scale = reduce(lambda acc, d: acc * d // gcd(acc, d), denominators, 1)
    row = {}
    for word, coeff in terms.items():
        value = coeff * scale
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ArithmeticError("denominator clearing failed")
            value = value.numerator
        row[rank_of[word]] = value
    return row


_PROFILE_CACHE: dict = {}
_PIVOT_CACHE: dict = {}
_MEMBERSHIP_BOUND = 10


def _all_words(max_len: int, k: int = 2) -> list:
    out = []
    for length in range(max_len + 1):
        out.extend(product(range(k), repeat=length))
    return out


def _word_ranks(bound: int):
    # columns ordered longest word first, so every length split is a block split
    order_key = lambda w: (len(w), sum(1 for c in w if c == 1), tuple(w))
    words = sorted(_all_words(bound), key=order_key, reverse=True)
    return {w: i for i, w in enumerate(words)}, [len(w) for w in words]


def _ideal_rows(gm: DefiningPolynomial, bound: int, rank_of: dict):
    n = gm.degree
    sigmas = [list(defining_relation(gm, j).items()) for j in range(1, n)]
    for total in range(bound - n + 1):
        for left_len in range(total + 1):
            for u in product((0, 1), repeat=left_len):
                for v in product((0, 1), repeat=total - left_len):
                    for sigma in sigmas:
                        yield _integer_row(
                            {u + word + v: coeff for word, coeff in sigma}, rank_of
                        )


def ideal_filtration_profile(g: DefiningPolynomial, bound: int) -> list:
    """Pivot counts per word length for the row space spanned by
    u * sigma_j * v with |u| + |v| + n <= bound.

    Columns are all words of length <= bound ordered longest first, so the
    pivot profile simultaneously yields dim(span cap F_ell) for every
    ell <= bound.
    """
    gm = g.monic()
    key = (gm.coefficients, bound)
    cached = _PROFILE_CACHE.get(key)
    if cached is not None:
        return cached
    rank_of, length_of_rank = _word_ranks(bound)
    pivots = _row_echelon(_ideal_rows(gm, bound, rank_of))
    profile = [0] * (bound + 1)
    for lead in pivots:
        profile[length_of_rank[lead]] += 1
    _PROFILE_CACHE[key] = profile
    return profile


def _dimension_at(profile: list, ell: int) -> int:
    words = 2 ** (ell + 1) - 1
    pivots = sum(profile[: ell + 1])
    return words - pivots


MAX_ORACLE_BOUND = 12


@dataclass
class DimOracleResult:
    ell: int
    slack: int
    dimension: int
    stable: bool
    values: tuple  # dimensions at slack, slack+1, slack+2


def dimension_oracle(g: DefiningPolynomial, ell: int, slack: int = 2) -> DimOracleResult:
    """Filtration dimension of the quotient at degree <= ell, via exact rank.

    Runs the row space at bounds ell+slack, ell+slack+1, ell+slack+2; the
    value is certified (``stable``) only when all three agree, since the
    free algebra gives no a-priori degree bound on ideal elements.  Every
    bound is capped at 12 words of length, as a resource guard.
    """
    if ell < 0 or slack < 0:
        raise ValueError("ell and slack must be nonnegative")
    if ell + slack + 2 > MAX_ORACLE_BOUND:
        raise ValueError(
            f"resource guard: ell + slack + 2 must be <= {MAX_ORACLE_BOUND}"
        )
    values = tuple(
        _dimension_at(ideal_filtration_profile(g, ell + slack + k), ell)
        for k in range(3)
    )
    return DimOracleResult(ell, slack, values[-1], len(set(values)) == 1, values)


def ideal_span_contains(g: DefiningPolynomial, poly: NcPoly, bound: int | None = None) -> bool:
    """Linear-algebra membership: does poly lie in the span of
    u * sigma_j * v with total length <= bound?

    Every elementary reduction step stays within the starting length, so
    bound = poly.degree() suffices to witness normal_form(w) - w.
    """
    if poly.is_zero():
        return True
    if bound is None:
        bound = poly.degree()
    if bound > _MEMBERSHIP_BOUND:
        raise ValueError(f"resource guard: membership bound must be <= {_MEMBERSHIP_BOUND}")
    gm = g.monic()
    key = (gm.coefficients, bound)
    cached = _PIVOT_CACHE.get(key)
    if cached is None:
        rank_of, _ = _word_ranks(bound)
        pivots = _row_echelon(_ideal_rows(gm, bound, rank_of))
        cached = (rank_of, pivots)
        _PIVOT_CACHE[key] = cached
    rank_of, pivots = cached
    vector = _integer_row(dict(poly.items()), rank_of)
    return not _reduce_row(vector, pivots)


# ---------------------------------------------------------------------------
# Centrality
# ---------------------------------------------------------------------------


def is_central(poly: NcPoly, system) -> bool:
    """poly commutes with every generator, modulo the system."""
    for letter in range(len(system.alphabet)):
        gen = NcPoly.generator(system.alphabet, letter)
        if not normal_form(poly * gen - gen * poly, system).is_zero():
            return False
    return True


def cubic_centre_elements():
    """The five listed central elements of the cubic system over the field
    with a primitive cube root of unity lam = q."""
    field_ = CyclotomicField(3)
    lam = field_.q
    a, x = 0, 1

    def mono(*letters):
        return NcPoly.monomial(AX, letters)

    xa, ax = mono(x, a), mono(a, x)
    cubic_mix_1 = (
        xa ** 3 - 3 * lam ** 2 * (xa ** 2 * ax) + 3 * lam * (xa * ax ** 2) - ax ** 3
    )
    cubic_mix_2 = (
        xa ** 3 - 3 * lam * (xa ** 2 * ax) + 3 * lam ** 2 * (xa * ax ** 2) - ax ** 3
    )
    return [
        ("a^3", mono(a, a, a)),
        ("x^3", mono(x, x, x)),
        ("mixed_cubic_1", cubic_mix_1),
        ("mixed_cubic_2", cubic_mix_2),
        ("(ax)^2 - x^2*a^2", ax ** 2 - mono(x, x, a, a)),
    ]


def cubic_centre_suite() -> dict:
    """Check centrality of every listed generator of the cubic centre."""
    pres = build_system(DefiningPolynomial.from_coefficients((0, 0, 1)))
    entries = []
    for label, element in cubic_centre_elements():
        entries.append((label, is_central(element, pres.system)))
    return {
        "system": pres.system.describe(),
        "entries": entries,
        "ok": all(v for _, v in entries),
    }


def degree_three_centre_element(g: DefiningPolynomial) -> NcPoly:
    """axax - x^2 a^2 - r_2 x a^2 - r_1 a^2, central for every monic cubic g."""
    if g.degree != 3:
        raise ValueError("need a degree-3 defining polynomial")
    a, x = 0, 1

    def mono(word, coeff=Fraction(1)):
        return NcPoly.monomial(AX, word, coeff)

    return (
        mono((a, x, a, x))
        - mono((x, x, a, a))
        - mono((x, a, a), g.coefficient(2))
        - mono((a, a), g.coefficient(1))
    )


# ---------------------------------------------------------------------------
# The tensor algebra of two factor quotients
# ---------------------------------------------------------------------------

BY = Alphabet(("b", "y"))


class TensorAlgebra:
    """Tensor product of the two factor quotients, with elements stored as
    maps (factor-1 normal word, factor-2 normal word) -> scalar."""

    def __init__(self, g: DefiningPolynomial, f: DefiningPolynomial):
        self.g, self.f = g, f
        self.left = build_system(g, AX)
        self.right = build_system(f, BY)

    def one(self) -> "PairElement":
        return PairElement(self, {((), ()): Fraction(1)})

    def embed_left(self, poly: NcPoly) -> "PairElement":
        nf = normal_form(poly, self.left.system)
        return PairElement(self, {(w, ()): c for w, c in nf.items()})

    def embed_right(self, poly: NcPoly) -> "PairElement":
        nf = normal_form(poly, self.right.system)
        return PairElement(self, {((), w): c for w, c in nf.items()})

    def monomial(self, left_word: Word, right_word: Word, coeff=Fraction(1)):
        return PairElement(self, {(tuple(left_word), tuple(right_word)): coeff})


class PairElement:
    """An element of the tensor algebra in factor normal form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: TensorAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PairElement") -> "PairElement":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            elif k in terms:
                del terms[k]
        return PairElement(self.algebra, terms)

    def __neg__(self):
        return PairElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff) -> "PairElement":
        if not coeff:
            return PairElement(self.algebra, {})
        return PairElement(self.algebra, {k: coeff * c for k, c in self.terms.items()})

    def __mul__(self, other: "PairElement") -> "PairElement":
        alg = self.algebra
        out: dict = {}
        for (u1, u2), c1 in self.terms.items():
            for (v1, v2), c2 in other.terms.items():
                left = normal_form(
                    NcPoly.monomial(AX, u1 + v1), alg.left.system
                )
                right = normal_form(
                    NcPoly.monomial(BY, u2 + v2), alg.right.system
                )
                base = c1 * c2
                for w1, d1 in left.items():
                    for w2, d2 in right.items():
                        key = (w1, w2)
                        s = out.get(key, 0) + base * d1 * d2
                        if s:
                            out[key] = s
                        elif key in out:
                            del out[key]
        return PairElement(self.algebra, out)

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (w1, w2), c in sorted(
            self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0])
        ):
            bits.append(
                f"{scalar_str(c)}*{render_word(AX, w1)}(x){render_word(BY, w2)}"
            )
        return " + ".join(bits)


@dataclass
class TensorQuotientReport:
    """Rank-computed filtration dimensions of the tensor quotient against the
    closed-form standard-monomial census, per weighted degree."""

    degrees: list
    rank_dimensions: list
    census_dimensions: list
    first_mismatch: int | None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None

    def to_json_dict(self) -> dict:
        return {
            "degrees": self.degrees,
            "rank_dimensions": self.rank_dimensions,
            "census_dimensions": self.census_dimensions,
            "first_mismatch": self.first_mismatch,
            "ok": self.ok,
        }


def _census_counts(g: DefiningPolynomial, f: DefiningPolynomial, max_degree: int) -> list:
    """Cumulative counts of the product basis
    { x^al y^be * <blocks(a,x)> <blocks(b,y)> * a^i b^j : be < m, j < m }
    by weighted degree (letters of the first factor weigh m, of the second n)."""
    n, m = g.degree, f.degree
    wx, wy = m, n

    def block_length_counts(k: int, weight: int) -> list:
        counts = [0] * (max_degree + 1)
        counts[0] = 1
        lengths = [len(b) for b in pbw_block_letters(k)]
        for degree in range(1, max_degree + 1):
            total = 0
            for blen in lengths:
                w = blen * weight
                if w <= degree:
                    total += counts[degree - w]
            counts[degree] += total
        return counts

    blocks1 = block_length_counts(n, wx)
    blocks2 = block_length_counts(m, wy)
    curve = CurvePresentation(g, f).basis_counts(max_degree, (wx, wy))
    tails = [0] * (max_degree + 1)
    for i in range(max_degree // wx + 1):
        for j in range(m):
            w = wx * i + wy * j
            if w <= max_degree:
                tails[w] += 1

    def convolve(u: list, v: list) -> list:
        out = [0] * (max_degree + 1)
        for i, a in enumerate(u):
            if a:
                for j_, b in enumerate(v):
                    if b and i + j_ <= max_degree:
                        out[i + j_] += a * b
        return out

    per_degree = convolve(convolve(convolve(curve, blocks1), blocks2), tails)
    out, total = [], 0
    for c in per_degree:
        total += c
        out.append(total)
    return out


def quotient_dimension_tensor(
    g: DefiningPolynomial, f: DefiningPolynomial, max_degree: int
) -> TensorQuotientReport:
    """Exact filtration dimensions of T / (g - f, a^n - b^m) at every
    weighted degree <= max_degree, versus the standard-monomial census.

    Both relations are central, so the two-sided ideal piece is spanned by
    left multiples u * z over the pair basis; the dimensions are read off a
    sparse exact row echelon of those rows.  A mismatch is reported with the
    first disagreeing degree, never raised.
    """
    n, m = g.degree, f.degree
    algebra = TensorAlgebra(g, f)
    if not check_confluence(algebra.left.system).overall:
        raise ValueError("first factor system is not confluent")
    if not check_confluence(algebra.right.system).overall:
        raise ValueError("second factor system is not confluent")
    wx, wy = m, n

    left_words = [w for w in pbw_words(n, max_degree // wx) if wx * len(w) <= max_degree]
    right_words = [w for w in pbw_words(m, max_degree // wy) if wy * len(w) <= max_degree]
    pairs = []
    for u in left_words:
        for w in right_words:
            wdeg = wx * len(u) + wy * len(w)
            if wdeg <= max_degree:
                pairs.append((wdeg, u, w))
    pairs.sort(key=lambda t: (t[0], t[1], t[2]))
    ordered = sorted(pairs, key=lambda t: (-t[0], t[1], t[2]))
    rank_of = {(u, w): i for i, (_, u, w) in enumerate(ordered)}
    wdeg_of_rank = [t[0] for t in ordered]

    a, x = 0, 1
    z_curve = algebra.embed_left(g.as_ncpoly(AX, x)) - algebra.embed_right(
        f.as_ncpoly(BY, 1)
    )
    z_group = algebra.monomial((a,) * n, ()) - algebra.monomial((), (0,) * m)
    top = n * m

    rows = []
    for wdeg, u, w in pairs:
        if wdeg + top > max_degree:
            continue
        basis_el = algebra.monomial(u, w)
        for z in (z_curve, z_group):
            element = basis_el * z
            if not element.is_zero():
                rows.append(_integer_row(element.terms, rank_of))
    pivots = _row_echelon(rows)
    pivot_by_degree = [0] * (max_degree + 1)
    for lead in pivots:
        pivot_by_degree[wdeg_of_rank[lead]] += 1
    pair_by_degree = [0] * (max_degree + 1)
    for wdeg, _, _ in pairs:
        pair_by_degree[wdeg] += 1

    rank_dims, census = [], _census_counts(g, f, max_degree)
    total_pairs = total_pivots = 0
    first_mismatch = None
    degrees = list(range(max_degree + 1))
    for d in degrees:
        total_pairs += pair_by_degree[d]
        total_pivots += pivot_by_degree[d]
        rank_dims.append(total_pairs - total_pivots)
        if first_mismatch is None and rank_dims[d] != census[d]:
            first_mismatch = d
    return TensorQuotientReport(degrees, rank_dims, census, first_mismatch)


# ---------------------------------------------------------------------------
# Power-of-the-variable chains and the degree-2 identity
# ---------------------------------------------------------------------------


def power_chain_report(m: int, n: int) -> dict:
    """Reduce each generator of the degree-m power ideal under the confluent
    degree-n power system and report the normal forms; verdicts only, the
    containment itself is a known discrepancy candidate."""
    if not 2 <= n < m or n > 5:
        raise ValueError("need 2 <= n < m with n <= 5")
    pres = build_system(DefiningPolynomial.from_coefficients((0,) * (n - 1) + (1,)))
    confluent = check_confluence(pres.system).overall
    entries = []
    for j in range(1, m):
        generator = bidegree_sum(AX, j, m - j)
        nf = normal_form(generator, pres.system)
        entries.append(
            {
                "generator": f"sum_bidegree({j},{m - j})",
                "normal_form": nf.render(pres.system.order),
                "zero": nf.is_zero(),
            }
        )
    recursion = all(
        check_splitting_identity("tail1", j, m - j) for j in range(1, m)
    )
    return {
        "m": m,
        "n": n,
        "confluent": confluent,
        "entries": entries,
        "all_zero": all(e["zero"] for e in entries),
        "recursion_identity": recursion,
    }


def degree_two_suite(r, s) -> dict:
    """The degree-2 change of variable and the tensor-square identity.

    With x' = x + (r/2)(1 - a):  a x' + x' a  reduces to zero, and in the
    tensor algebra of the two quadratic factors

        x'^2 - y'^2 = (g - f) + (r^2 - s^2)/4 - (r^2 a^2 - s^2 b^2)/4.

    The juxtaposed variant with f - g in place of g - f is also evaluated:
    it differs by 2(g - f) and is reported as a discrepancy witness, not
    asserted.
    """
    r, s = Fraction(r), Fraction(s)
    g = DefiningPolynomial.from_coefficients((r, 1))
    f = DefiningPolynomial.from_coefficients((s, 1))
    pres = build_system(g)
    a, x = 0, 1
    x_prime = (
        NcPoly.generator(AX, x)
        + NcPoly.one(AX).scale(r / 2)
        - NcPoly.monomial(AX, (a,), r / 2)
    )
    anticommute = normal_form(
        NcPoly.generator(AX, a) * x_prime + x_prime * NcPoly.generator(AX, a),
        pres.system,
    ).is_zero()

    algebra = TensorAlgebra(g, f)
    b, y = 0, 1
    y_prime_poly = (
        NcPoly.generator(BY, y)
        + NcPoly.one(BY).scale(s / 2)
        - NcPoly.monomial(BY, (b,), s / 2)
    )
    x1 = algebra.embed_left(x_prime)
    y1 = algebra.embed_right(y_prime_poly)
    lhs = x1 * x1 - y1 * y1
    g_minus_f = algebra.embed_left(g.as_ncpoly(AX, 1)) - algebra.embed_right(
        f.as_ncpoly(BY, 1)
    )
    correction = (
        algebra.one().scale((r * r - s * s) / 4)
        - algebra.monomial((a, a), ()).scale(r * r / 4)
        + algebra.monomial((), (b, b)).scale(s * s / 4)
    )
    identity_ok = (lhs - (g_minus_f + correction)).is_zero()
    displayed_variant = lhs - ((-g_minus_f) + correction)
    return {
        "r": str(r),
        "s": str(s),
        "anticommute_ok": anticommute,
        "identity_ok": identity_ok,
        "displayed_variant_zero": displayed_variant.is_zero(),
        "displayed_variant_difference": displayed_variant.render(),
    }


# ---------------------------------------------------------------------------
# Randomized inputs
# ---------------------------------------------------------------------------


def random_defining_polynomial(rng, degree: int, bound: int = 9) -> DefiningPolynomial:
    """Random monic defining polynomial with numerators and denominators
    bounded by ``bound``."""
    coeffs = [
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(degree - 1)
    ]
    coeffs.append(Fraction(1))
    return DefiningPolynomial(tuple(coeffs))


def random_ncpoly(rng, alphabet: Alphabet, max_len: int, terms: int, bound: int = 5) -> NcPoly:
    out = {}
    for _ in range(terms):
        length = rng.randint(0, max_len)
        word = tuple(rng.randrange(len(alphabet)) for _ in range(length))
        out[word] = out.get(word, 0) + Fraction(
            rng.randint(-bound, bound), rng.randint(1, bound)
        )
    return NcPoly(alphabet, out)
