import random
from fractions import Fraction

import pytest

from diamond.analysis import (
    GrowthReport,
    TensorAlgebra,
    TensorQuotientReport,
    cubic_centre_elements,
    cubic_centre_suite,
    degree_three_centre_element,
    degree_two_suite,
    dimension_oracle,
    growth_classify,
    ideal_span_contains,
    irreducible_census,
    is_central,
    pbw_block_letters,
    pbw_words,
    power_chain_report,
    quotient_dimension_tensor,
    random_defining_polynomial,
)
from diamond.freealg import NcPoly, bidegree_sum
from diamond.presentations import AX, DefiningPolynomial, build_system
from diamond.rewrite import normal_form

A, X = 0, 1


def power_poly(n):
    return DefiningPolynomial.from_coefficients((0,) * (n - 1) + (1,))


def test_block_letters():
    assert pbw_block_letters(2) == []
    assert set(pbw_block_letters(4)) == {(A, X), (A, A, X), (A, X, X)}
    for n in range(2, 13):
        assert len(pbw_block_letters(n)) == (n - 1) * (n - 2) // 2


def test_pbw_words_small():
    words = pbw_words(3, 3)
    assert len(words) == 13
    counts = [0, 0, 0, 0]
    for w in words:
        counts[len(w)] += 1
    assert counts == [1, 2, 4, 6]
    words2 = pbw_words(2, 6)
    per_len = [sum(1 for w in words2 if len(w) == ell) for ell in range(7)]
    assert per_len == [ell + 1 for ell in range(7)]


def test_census_equals_pbw_enumeration():
    for n in range(2, 6):
        system = build_system(power_poly(n)).system
        census = irreducible_census(system, 8)
        words = pbw_words(n, 8)
        per_len = [0] * 9
        for w in words:
            per_len[len(w)] += 1
        assert per_len == census.counts
        # and as sets: every enumerated word is irreducible
        assert all(system.is_irreducible(w) for w in words)


def test_census_degree_four_series_oracle():
    # independent check: the census matches the power series of
    # 1 / ((1-s)^2 (1 - s^2 - 2 s^3)), the length generating function of
    # words x^i <blocks> a^k with blocks {ax, a^2x, ax^2}
    L = 12
    d = [0] * (L + 1)
    d[0] = 1
    for ell in range(1, L + 1):
        d[ell] = (d[ell - 2] if ell >= 2 else 0) + 2 * (d[ell - 3] if ell >= 3 else 0)
    e = [sum(d[: ell + 1]) for ell in range(L + 1)]
    expected = [sum(e[: ell + 1]) for ell in range(L + 1)]
    census = irreducible_census(build_system(power_poly(4)).system, L)
    assert census.counts == expected


def test_dimension_oracle_examples():
    assert dimension_oracle(power_poly(2), 4).dimension == 15
    assert dimension_oracle(power_poly(3), 4).dimension == 22
    deformed = DefiningPolynomial.from_coefficients((1, 1, 1))
    result = dimension_oracle(deformed, 4)
    assert result.stable and result.dimension == 22


def test_dimension_oracle_guard():
    with pytest.raises(ValueError):
        dimension_oracle(power_poly(2), 9, 2)
    with pytest.raises(ValueError):
        dimension_oracle(power_poly(2), -1, 2)


def test_dimension_oracle_monotone_in_slack():
    # adding slack can only add relation rows, so dimensions never increase
    for n in (2, 3):
        for ell in (3, 5):
            values = dimension_oracle(power_poly(n), ell, 0).values
            assert list(values) == sorted(values, reverse=True)


def test_ideal_span_soundness():
    # normal_form(w) - w always lies in the span of u * relation * v
    rng = random.Random(41)
    for coeffs in ((0, 0, 1), (1, 2, 1)):
        g = DefiningPolynomial.from_coefficients(coeffs)
        system = build_system(g).system
        for _ in range(10):
            word = tuple(rng.randint(0, 1) for _ in range(rng.randint(3, 10)))
            p = NcPoly.monomial(AX, word)
            diff = normal_form(p, system) - p
            assert ideal_span_contains(g, diff)
    # and non-members are rejected
    assert not ideal_span_contains(power_poly(2), NcPoly.monomial(AX, (X, X, A)))
    with pytest.raises(ValueError):
        ideal_span_contains(power_poly(2), NcPoly.monomial(AX, (X,) * 11))


def test_is_central():
    rng = random.Random(43)
    for _ in range(10):
        n = rng.randint(2, 5)
        g = random_defining_polynomial(rng, n)
        system = build_system(g).system
        assert is_central(NcPoly.monomial(AX, (A,) * n), system)
        assert is_central(g.monic().as_ncpoly(AX, X), system)
        assert not is_central(NcPoly.generator(AX, A), system)


def test_cubic_centre_element_deformed():
    rng = random.Random(47)
    for _ in range(10):
        g = random_defining_polynomial(rng, 3)
        system = build_system(g).system
        assert is_central(degree_three_centre_element(g.monic()), system)


def test_cubic_centre_suite():
    suite = cubic_centre_suite()
    assert suite["ok"]
    labels = [label for label, _ in cubic_centre_elements()]
    assert labels == [
        "a^3",
        "x^3",
        "mixed_cubic_1",
        "mixed_cubic_2",
        "(ax)^2 - x^2*a^2",
    ]


def test_tensor_quotient_squares():
    g = DefiningPolynomial.from_coefficients((0, 1))
    report = quotient_dimension_tensor(g, g, 6)
    assert report.ok
    assert report.rank_dimensions == [1, 1, 5, 5, 13, 13, 25]
    assert report.census_dimensions == report.rank_dimensions


def test_tensor_quotient_mixed():
    g = DefiningPolynomial.from_coefficients((0, 1))
    f = DefiningPolynomial.from_coefficients((0, 0, 1))
    report = quotient_dimension_tensor(g, f, 6)
    assert report.ok
    assert report.first_mismatch is None


def test_tensor_quotient_degree_zero():
    g = DefiningPolynomial.from_coefficients((0, 1))
    report = quotient_dimension_tensor(g, g, 0)
    assert report.rank_dimensions == [1] and report.census_dimensions == [1]


def test_tensor_quotient_report_mismatch_shape():
    report = TensorQuotientReport([0, 1], [1, 2], [1, 3], 1)
    assert not report.ok
    doc = report.to_json_dict()
    assert doc["first_mismatch"] == 1


def test_tensor_algebra_multiplication():
    g = DefiningPolynomial.from_coefficients((0, 1))
    algebra = TensorAlgebra(g, g)
    xa = algebra.monomial((A, X), ())  # reducible word in the first leg
    one = algebra.one()
    assert (xa * one).terms == {((X, A), ()): Fraction(-1)}
    left = algebra.embed_left(NcPoly.monomial(AX, (A, X)))
    assert left.terms == {((X, A), ()): Fraction(-1)}


def test_power_chain_report():
    chain = power_chain_report(3, 2)
    assert chain["confluent"]
    assert chain["entries"][0]["normal_form"] == "x^2*a"
    assert not chain["all_zero"]
    assert chain["recursion_identity"]
    chain43 = power_chain_report(4, 3)
    assert [e["zero"] for e in chain43["entries"]] == [False, True, False]
    with pytest.raises(ValueError):
        power_chain_report(2, 3)


def test_degree_two_suite():
    r0 = degree_two_suite(0, 0)
    assert r0["anticommute_ok"] and r0["identity_ok"]
    r20 = degree_two_suite(2, 0)
    assert r20["anticommute_ok"] and r20["identity_ok"]
    assert not r20["displayed_variant_zero"]
    # equal parameters: the constant correction vanishes but the identity holds
    rss = degree_two_suite(Fraction(3, 2), Fraction(3, 2))
    assert rss["identity_ok"]


def test_growth_classification():
    for n, kind, exponent in ((2, "polynomial", 2), (3, "polynomial", 3)):
        census = irreducible_census(build_system(power_poly(n)).system, 12)
        cls = growth_classify(census)
        assert cls.kind == kind and cls.exponent == exponent
    for n in (4, 5):
        census = irreducible_census(build_system(power_poly(n)).system, 12)
        assert growth_classify(census).kind == "exponential"
    with pytest.raises(ValueError):
        growth_classify(GrowthReport([1, 2, 3]))
