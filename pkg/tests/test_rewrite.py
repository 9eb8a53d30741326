import random
from fractions import Fraction

import pytest

from diamond.freealg import Alphabet, NcPoly, bidegree_sum
from diamond.ordering import GrlexPlus
from diamond.presentations import AX, DefiningPolynomial, build_system, defining_relation
from diamond.rewrite import (
    INCLUSION,
    NOT_CONFLUENT,
    OVERLAP,
    RESOLVABLE,
    Ambiguity,
    IncompatibleSystem,
    ReductionBudgetExceeded,
    ReductionSystem,
    Rule,
    check_confluence,
    find_ambiguities,
    ideal_membership,
    normal_form,
    reduce_once,
    resolve_ambiguity,
)

A, X = 0, 1


def mono(*letters):
    return NcPoly.monomial(AX, letters)


def system_for(*coeffs):
    return build_system(DefiningPolynomial.from_coefficients(coeffs)).system


def sign_count_normal_form(word):
    """Independent oracle for the degree-2 pure-power system: each adjacent
    (a, x) swap flips the sign, so the normal form of a word with p x's and
    q a's is (-1)^inversions x^p a^q."""
    inversions = 0
    for i, ci in enumerate(word):
        if ci == A:
            inversions += sum(1 for cj in word[i + 1 :] if cj == X)
    p = sum(1 for c in word if c == X)
    q = len(word) - p
    return NcPoly.monomial(AX, (X,) * p + (A,) * q, Fraction(-1) ** inversions)


def test_reduce_once_examples():
    sys2 = system_for(0, 1)  # single rule ax -> -xa
    out, changed = reduce_once(mono(A, X), sys2)
    assert changed and out == -mono(X, A)
    out, changed = reduce_once(mono(X, A), sys2)
    assert not changed and out == mono(X, A)
    sys3 = system_for(0, 0, 1)
    out, changed = reduce_once(mono(A, X, X), sys3)
    assert changed and out == -mono(X, A, X) - mono(X, X, A)


def test_normal_form_sign_oracle():
    sys2 = system_for(0, 1)
    assert normal_form(mono(A, X, A, X), sys2) == -mono(X, X, A, A)
    assert normal_form(mono(A, A, X), sys2) == mono(X, A, A)
    rng = random.Random(11)
    for _ in range(60):
        word = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 10)))
        assert normal_form(NcPoly.monomial(AX, word), sys2) == sign_count_normal_form(word)


def test_relations_reduce_to_zero():
    for coeffs in ((0, 1), (3, 1), (0, 0, 1), (1, 2, 1), (0, 0, 0, 1), (1, 0, 2, 0, 1)):
        g = DefiningPolynomial.from_coefficients(coeffs)
        pres = build_system(g)
        for j in range(1, g.degree):
            assert normal_form(defining_relation(g.monic(), j), pres.system).is_zero()


def test_is_irreducible():
    sys3 = system_for(0, 0, 1)
    assert sys3.is_irreducible((A, X))
    # x^5 (ax) a^2 is a standard word
    assert sys3.is_irreducible((X,) * 5 + (A, X) + (A, A))
    assert not sys3.is_irreducible((A, A, X, X))  # contains a^2 x
    sys4 = system_for(0, 0, 0, 1)
    assert not sys4.is_irreducible((A, A, X, X))  # is itself a left side
    sys5 = system_for(0, 0, 0, 0, 1)
    assert sys5.is_irreducible((A, A, X, X))  # shorter than every left side


def test_find_ambiguities_census():
    sys3 = system_for(0, 0, 1)
    ambs = find_ambiguities(sys3)
    assert len(ambs) == 1
    amb = ambs[0]
    assert amb.kind == OVERLAP
    assert (amb.a, amb.b, amb.c) == ((A,), (A, X), (X,))
    # the left rule of the pair owns the word A + B = a^2 x
    assert sys3.rules[amb.sigma].lhs == (A, A, X)
    assert sys3.rules[amb.tau].lhs == (A, X, X)

    sys5 = system_for(0, 0, 0, 0, 1)
    ambs5 = find_ambiguities(sys5)
    assert len(ambs5) == 6
    assert all(a.kind == OVERLAP for a in ambs5)


def test_ambiguity_family_exact():
    # for every n the overlaps are exactly (a^t, a^j x^(n-j-t), x^t) with the
    # larger-index rule on the prefix side
    for n in (4, 5):
        system = system_for(*((0,) * (n - 1) + (1,)))
        found = {
            (system.rules[amb.sigma].lhs, system.rules[amb.tau].lhs, amb.a, amb.b, amb.c)
            for amb in find_ambiguities(system)
        }
        expected = set()
        for j in range(1, n):
            for t in range(1, n - j):
                expected.add(
                    (
                        (A,) * (j + t) + (X,) * (n - j - t),
                        (A,) * j + (X,) * (n - j),
                        (A,) * t,
                        (A,) * j + (X,) * (n - j - t),
                        (X,) * t,
                    )
                )
        assert found == expected


def test_single_rule_no_ambiguities():
    order = GrlexPlus(AX, weight_letter=X, lex_top=A)
    rule = Rule((A, X), -mono(X, A), "r")
    system = ReductionSystem(AX, order, [rule])
    assert find_ambiguities(system) == []
    assert rule.as_relation() == mono(A, X) + mono(X, A)


def test_inclusion_detection():
    order = GrlexPlus(AX, weight_letter=X, lex_top=A)
    rules = [
        Rule((A, X, A), mono(A), "outer"),
        Rule((X,), NcPoly.zero(AX), "inner"),
    ]
    system = ReductionSystem(AX, order, rules)
    kinds = [amb.kind for amb in find_ambiguities(system)]
    assert INCLUSION in kinds


def test_toy_not_confluent():
    # two rules ab -> 0, ba -> a over letters (a, b)
    AB = Alphabet(("a", "b"))
    order = GrlexPlus(AB, weight_letter=1, lex_top=0)
    r1 = Rule((0, 1), NcPoly.zero(AB), "ab")
    r2 = Rule((1, 0), NcPoly.monomial(AB, (0,)), "ba")
    system = ReductionSystem(AB, order, [r1, r2])
    report = check_confluence(system)
    assert len(report.resolutions) == 2
    verdicts = {
        (system.rules[res.ambiguity.sigma].label, res.verdict)
        for res in report.resolutions
    }
    # on the word aba the two routes give 0 and a^2
    assert ("ab", NOT_CONFLUENT) in verdicts
    assert ("ba", RESOLVABLE) in verdicts
    assert not report.overall
    bad = next(r for r in report.resolutions if r.verdict == NOT_CONFLUENT)
    assert bad.difference == -NcPoly.monomial(AB, (0, 0))


def test_check_confluence_cases():
    report = check_confluence(system_for(3, 1))  # x^2 + 3x: no pairs at all
    assert report.overall and len(report.resolutions) == 0
    report = check_confluence(system_for(0, 1, 0, 1))  # x^4 + x^2
    assert report.overall
    assert report.overlap_count == 3 and report.inclusion_count == 0


def test_confluence_report_json():
    doc = check_confluence(system_for(0, 0, 1)).to_json_dict()
    assert doc["overall"] == RESOLVABLE
    assert len(doc["ambiguities"]) == 1
    entry = doc["ambiguities"][0]
    assert entry["sigma"] == "sigma_2" and entry["tau"] == "sigma_1"
    assert (entry["A"], entry["B"], entry["C"]) == ("a", "a*x", "x")
    assert doc["stats"]["elementary_steps"] > 0


def test_normal_form_idempotent_and_linear():
    rng = random.Random(5)
    g = DefiningPolynomial.from_coefficients(
        (Fraction(1, 2), Fraction(-2), 1)
    )
    system = build_system(g).system
    for _ in range(15):
        terms = {
            tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 7))): Fraction(
                rng.randint(-5, 5), rng.randint(1, 5)
            )
            for _ in range(4)
        }
        p = NcPoly(AX, terms)
        q = NcPoly(
            AX,
            {
                tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 6))): Fraction(
                    rng.randint(-5, 5)
                )
                for _ in range(3)
            },
        )
        alpha, beta = Fraction(2, 3), Fraction(-5)
        nf_p = normal_form(p, system)
        assert normal_form(nf_p, system) == nf_p
        assert normal_form(p.scale(alpha) + q.scale(beta), system) == normal_form(
            p, system
        ).scale(alpha) + normal_form(q, system).scale(beta)


def test_ideal_membership():
    sys3 = system_for(0, 0, 1)
    assert ideal_membership(defining_relation(DefiningPolynomial.from_coefficients((0, 0, 1)), 2), sys3)
    sys2 = system_for(0, 1)
    p12 = bidegree_sum(AX, 1, 2)
    assert normal_form(p12, sys2) == mono(X, X, A)
    assert not ideal_membership(p12, sys2)
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(2, 5)
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(n - 1)] + [Fraction(1)]
        g = DefiningPolynomial.from_coefficients(coeffs)
        system = build_system(g).system
        an_x = mono(*((A,) * n + (X,)))
        x_an = mono(*((X,) + (A,) * n))
        assert ideal_membership(an_x - x_an, system)


def test_budget_guard():
    sys3 = system_for(0, 0, 1)
    with pytest.raises(ReductionBudgetExceeded):
        normal_form(mono(A, A, X, X, A, X), sys3, budget=1)


def test_incompatible_rules_rejected():
    order = GrlexPlus(AX, weight_letter=X, lex_top=A)
    uphill = Rule((A, X), mono(X, A) + mono(A, X, X), "uphill")
    with pytest.raises(IncompatibleSystem):
        ReductionSystem(AX, order, [uphill])


def test_duplicate_lhs_rejected():
    order = GrlexPlus(AX, weight_letter=X, lex_top=A)
    with pytest.raises(ValueError):
        ReductionSystem(
            AX,
            order,
            [Rule((A, X), -mono(X, A), "r1"), Rule((A, X), mono(X, A), "r2")],
        )


def _branch_normal_forms(word, system, alphabet):
    # every single-step rewrite of the word, finished by the deterministic
    # engine; a confluent system must land every branch on one normal form
    out = set()
    for rule in system.rules:
        for pos in range(len(word) - len(rule.lhs) + 1):
            if word[pos : pos + len(rule.lhs)] == rule.lhs:
                repl = {}
                for rword, rcoeff in rule.rhs.items():
                    new_word = word[:pos] + rword + word[pos + len(rule.lhs) :]
                    repl[new_word] = repl.get(new_word, 0) + rcoeff
                nf = normal_form(NcPoly(alphabet, repl), system)
                out.add(tuple(sorted(nf.items(), key=lambda kv: kv[0])))
    return out


def test_all_branches_join():
    from itertools import product

    for system in (system_for(0, 0, 1), system_for(1, 1, 1), system_for(0, 1, 0, 1)):
        for length in range(9):
            for word in product((0, 1), repeat=length):
                assert len(_branch_normal_forms(word, system, AX)) <= 1


def test_branches_separate_for_non_confluent_system():
    from itertools import product

    AB = Alphabet(("a", "b"))
    order = GrlexPlus(AB, weight_letter=1, lex_top=0)
    system = ReductionSystem(
        AB,
        order,
        [Rule((0, 1), NcPoly.zero(AB), "ab"), Rule((1, 0), NcPoly.monomial(AB, (0,)), "ba")],
    )
    split = [
        word
        for length in range(4)
        for word in product((0, 1), repeat=length)
        if len(_branch_normal_forms(word, system, AB)) > 1
    ]
    assert (0, 1, 0) in split  # the word a b a reduces to both 0 and a^2


def test_threaded_confluence_matches_sequential():
    system = system_for(0, 0, 0, 0, 1)
    sequential = check_confluence(system, threads=1)
    threaded = check_confluence(system, threads=4)
    assert [r.verdict for r in sequential.resolutions] == [
        r.verdict for r in threaded.resolutions
    ]
    assert sequential.stats.steps == threaded.stats.steps


def test_strategy_rewrites_strictly_descending():
    # the key of the rewritten monomial strictly decreases step by step
    sys3 = system_for(0, 0, 1)
    order = sys3.order
    p = mono(A, A, X, X) + mono(A, X, X, A) - mono(X, A, A, X)
    keys = []
    while True:
        before = {w for w in p.support() if not sys3.is_irreducible(w)}
        if not before:
            break
        target = max(before, key=order.sort_key)
        keys.append(order.sort_key(target))
        p, changed = reduce_once(p, sys3)
        assert changed
    assert keys == sorted(keys, reverse=True)
    assert all(k1 > k2 for k1, k2 in zip(keys, keys[1:]))
