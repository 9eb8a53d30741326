import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diamond.freealg import Alphabet, NcPoly
from diamond.ordering import (
    GREATER,
    LESS,
    GrlexPlus,
    ProductGrlex,
    check_compatibility,
    compare,
    max_word,
)
from diamond.presentations import (
    DefiningPolynomial,
    build_system,
    build_tensor_presentation,
    defining_relation,
    tensor_alphabet,
)
from diamond.rewrite import Rule

AX = Alphabet(("a", "x"))
A, X = 0, 1
ORDER = GrlexPlus(AX, weight_letter=X, lex_top=A)


def test_compare_examples():
    # lengths tie, the x-heavier word wins
    assert compare((X, X), (A, X), ORDER) == GREATER
    # lengths and x-weights tie, lex with a on top
    assert compare((A, X, A), (X, A, A), ORDER) == GREATER
    # a^n carries no x-weight, so it sits below every a^j x^(n-j)
    for n in range(2, 7):
        for j in range(1, n):
            assert compare((A,) * n, (A,) * j + (X,) * (n - j), ORDER) == LESS


def test_equal_only_on_equal_words():
    assert compare((A, X), (A, X), ORDER) == 0
    assert compare((), (A,), ORDER) == LESS


words = st.lists(st.integers(0, 1), max_size=6).map(tuple)


@settings(max_examples=100, deadline=None)
@given(words, words, words, words)
def test_semigroup_property(a, b, c, d):
    if compare(a, b, ORDER) == LESS:
        assert compare(c + a + d, c + b + d, ORDER) == LESS


def test_leading_word_of_relations():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(2, 5)
        coeffs = [rng.randint(-5, 5) for _ in range(n - 1)] + [1]
        g = DefiningPolynomial.from_coefficients(coeffs)
        for j in range(1, n):
            sigma = defining_relation(g, j)
            assert max_word(sigma, ORDER) == (A,) * j + (X,) * (n - j)


def test_max_word_of_zero_raises():
    with pytest.raises(ValueError):
        max_word(NcPoly.zero(AX), ORDER)


def test_compatibility_good_and_bad():
    pres = build_system(DefiningPolynomial.from_coefficients((0, 0, 1)))
    assert check_compatibility(pres.system.order, pres.system.rules).ok
    assert check_compatibility(pres.system).ok  # system-argument form
    bad = Rule(
        (A, X),
        NcPoly.monomial(AX, (X, A)) + NcPoly.monomial(AX, (A, X, X)),
        "bad",
    )
    report = check_compatibility(ORDER, [bad])
    assert not report.ok
    assert report.violations == [("bad", (A, X, X))]


def test_tensor_order_facts():
    g = DefiningPolynomial.from_coefficients((0, 1))       # degree 2
    f = DefiningPolynomial.from_coefficients((0, 0, 1))     # degree 3
    pres = build_tensor_presentation(g, f)  # construction checks compatibility
    order = pres.system.order
    a, x, b, y = 0, 1, 2, 3
    # b^m outranks a^n; commutators orient first-factor letters leftmost
    assert compare((b,) * 3, (a,) * 2, order) == GREATER
    assert compare((y, a), (a, y), order) == GREATER
    assert compare((y, x), (x, y), order) == GREATER
    assert compare((b, a), (a, b), order) == GREATER
    assert compare((b, x), (x, b), order) == GREATER
    # y^m outranks every word of g and of the tail of f
    assert compare((y,) * 3, (x,) * 2, order) == GREATER
    assert compare((y,) * 3, (y,), order) == GREATER


def test_product_order_needs_weights():
    with pytest.raises(ValueError):
        ProductGrlex(Alphabet(("a", "x", "b", "y")))


def test_product_order_restricts_to_grlex():
    alphabet = tensor_alphabet(3, 2)
    order = ProductGrlex(alphabet)
    # within the (a, x) factor: length, then x-count, then lex with a on top
    assert compare((1, 1), (0, 1), order) == GREATER
    assert compare((0, 1, 0), (1, 0, 0), order) == GREATER
    # within the (b, y) factor: y plays the weight role, b the lex top
    assert compare((3, 3), (2, 3), order) == GREATER
    assert compare((2, 3, 2), (3, 2, 2), order) == GREATER
