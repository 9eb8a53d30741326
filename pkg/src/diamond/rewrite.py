"""Reduction systems, normal forms, ambiguities and confluence checking.

The reduction strategy is deterministic: always rewrite the order-largest
reducible monomial, using the leftmost occurrence of the order-largest
applicable left side.  Equality of the two normal forms of an ambiguity
certifies resolvability; inequality exhibits two distinct normal forms of
the same word and therefore certifies non-confluence of the system itself,
not merely of the strategy.
"""

from __future__ import annotations

import heapq
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .freealg import Alphabet, NcPoly, Word, render_word
from .ordering import check_compatibility

DEFAULT_BUDGET = 10_000_000

RESOLVABLE = "resolvable"
NOT_CONFLUENT = "not_confluent"


class ReductionBudgetExceeded(RuntimeError):
    """Raised when a normal-form computation exceeds its step budget."""


class IncompatibleSystem(ValueError):
    """Raised at construction when some rule is not oriented downhill."""

    def __init__(self, report, alphabet):
        self.report = report
        words = ", ".join(
            f"{label}: {render_word(alphabet, w)}" for label, w in report.violations
        )
        super().__init__(f"rules not compatible with the order ({words})")


@dataclass(frozen=True)
class Rule:
    """An oriented relation lhs -> rhs with lhs a single word."""

    lhs: Word
    rhs: NcPoly
    label: str

    def __post_init__(self):
        if not self.lhs:
            raise ValueError("rule left side must be a nonempty word")

    def as_relation(self) -> NcPoly:
        """The ideal generator lhs - rhs."""
        return NcPoly.monomial(self.rhs.alphabet, self.lhs) - self.rhs


@dataclass
class ReductionStats:
    steps: int = 0
    max_support: int = 0

    def merge(self, other: "ReductionStats"):
        self.steps += other.steps
        self.max_support = max(self.max_support, other.max_support)


def _find_subword(word: Word, pattern: Word) -> int:
    n, m = len(word), len(pattern)
    first = pattern[0]
    for i in range(n - m + 1):
        if word[i] == first and word[i : i + m] == pattern:
            return i
    return -1


class ReductionSystem:
    """Oriented rules over one alphabet together with a compatible order."""

    def __init__(self, alphabet: Alphabet, order, rules, name="", budget=DEFAULT_BUDGET):
        rules = list(rules)
        seen = set()
        for rule in rules:
            if rule.lhs in seen:
                raise ValueError(f"duplicate rule left side {rule.lhs}")
            seen.add(rule.lhs)
        report = check_compatibility(order, rules)
        if not report.ok:
            raise IncompatibleSystem(report, alphabet)
        self.alphabet = alphabet
        self.order = order
        self.rules = tuple(rules)
        self.name = name
        self.budget = budget
        # rules sorted by descending left side so the first match wins
        self._by_size = sorted(
            range(len(rules)), key=lambda i: order.sort_key(rules[i].lhs), reverse=True
        )
        self._match_cache: dict = {}

    def match(self, word: Word):
        """(rule, position) for the order-largest applicable left side at its
        leftmost occurrence, or None when the word is irreducible."""
        hit = self._match_cache.get(word, _MISS)
        if hit is not _MISS:
            return hit
        found = None
        for idx in self._by_size:
            rule = self.rules[idx]
            pos = _find_subword(word, rule.lhs)
            if pos >= 0:
                found = (rule, pos)
                break
        self._match_cache[word] = found
        return found

    def is_irreducible(self, word: Word) -> bool:
        return self.match(tuple(word)) is None

    def describe(self) -> str:
        return self.name or f"system({len(self.rules)} rules)"


_MISS = object()


class _Rev:
    # max-heap adaptor for heapq
    __slots__ = ("key", "word")

    def __init__(self, key, word):
        self.key = key
        self.word = word

    def __lt__(self, other):
        return self.key > other.key


def reduce_once(poly: NcPoly, system: ReductionSystem):
    """One elementary reduction of the order-largest reducible monomial.

    Returns (new_poly, changed).
    """
    target = None
    target_key = None
    for word in poly.support():
        if system.match(word) is not None:
            key = system.order.sort_key(word)
            if target is None or key > target_key:
                target, target_key = word, key
    if target is None:
        return poly, False
    rule, pos = system.match(target)
    coeff = poly.coeff(target)
    replacement = {}
    for rword, rcoeff in rule.rhs.items():
        new_word = target[:pos] + rword + target[pos + len(rule.lhs) :]
        replacement[new_word] = replacement.get(new_word, 0) + coeff * rcoeff
    out = poly - NcPoly.monomial(poly.alphabet, target, coeff) + NcPoly(
        poly.alphabet, replacement
    )
    return out, True


def normal_form(
    poly: NcPoly,
    system: ReductionSystem,
    budget: int | None = None,
    stats: ReductionStats | None = None,
) -> NcPoly:
    """Fixed point of reduce_once under the deterministic strategy.

    Terminates for every compatible system by the descending chain
    condition; the step budget is a diagnostic guard against misuse with
    incompatible inputs.
    """
    if budget is None:
        budget = system.budget
    order = system.order
    terms = dict(poly.items())
    heap = []
    for word in terms:
        if system.match(word) is not None:
            heapq.heappush(heap, _Rev(order.sort_key(word), word))
    steps = 0
    max_support = len(terms)
    while heap:
        word = heapq.heappop(heap).word
        coeff = terms.get(word)
        if not coeff:
            terms.pop(word, None)
            continue
        rule, pos = system.match(word)
        del terms[word]
        steps += 1
        if steps > budget:
            raise ReductionBudgetExceeded(
                f"exceeded {budget} elementary reductions in {system.describe()}"
            )
        suffix_start = pos + len(rule.lhs)
        for rword, rcoeff in rule.rhs.items():
            new_word = word[:pos] + rword + word[suffix_start:]
            if new_word in terms:
                total = terms[new_word] + coeff * rcoeff
                if total:
                    terms[new_word] = total
                else:
                    del terms[new_word]
            else:
                value = coeff * rcoeff
                if value:
                    terms[new_word] = value
                    if system.match(new_word) is not None:
                        heapq.heappush(heap, _Rev(order.sort_key(new_word), new_word))
        if len(terms) > max_support:
            max_support = len(terms)
    if stats is not None:
        stats.steps += steps
        stats.max_support = max(stats.max_support, max_support)
    return NcPoly(poly.alphabet, terms)


def ideal_membership(poly: NcPoly, system: ReductionSystem) -> bool:
    """normal_form(poly) == 0.

    Decides membership in the two-sided ideal of the relations when the
    system is confluent; otherwise a True answer is still a certificate,
    a False answer is not.
    """
    return normal_form(poly, system).is_zero()


OVERLAP = "overlap"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """An overlap (W_sigma = AB, W_tau = BC) or inclusion (ABC = W_sigma,
    B = W_tau) between two rules, stored by rule index."""

    kind: str
    sigma: int
    tau: int
    a: Word
    b: Word
    c: Word

    def word(self) -> Word:
        return self.a + self.b + self.c


def find_ambiguities(system: ReductionSystem) -> list:
    """Complete, deduplicated, deterministically ordered ambiguity list."""
    out = []
    rules = system.rules
    for i, ri in enumerate(rules):
        for j, rj in enumerate(rules):
            wi, wj = ri.lhs, rj.lhs
            # overlaps: a proper nonempty suffix of wi equals a proper prefix of wj
            for blen in range(1, min(len(wi), len(wj))):
                if wi[len(wi) - blen :] == wj[:blen]:
                    out.append(
                        Ambiguity(
                            OVERLAP, i, j, wi[: len(wi) - blen], wj[:blen], wj[blen:]
                        )
                    )
            # inclusions: wj occurs properly inside wi
            if i != j and len(wj) < len(wi):
                start = 0
                while True:
                    pos = _find_subword(wi[start:], wj)
                    if pos < 0:
                        break
                    pos += start
                    out.append(
                        Ambiguity(
                            INCLUSION, i, j, wi[:pos], wj, wi[pos + len(wj) :]
                        )
                    )
                    start = pos + 1
    return out


@dataclass
class Resolution:
    ambiguity: Ambiguity
    verdict: str
    left_normal: NcPoly
    right_normal: NcPoly

    @property
    def difference(self) -> NcPoly:
        return self.left_normal - self.right_normal


def resolve_ambiguity(
    ambiguity: Ambiguity,
    system: ReductionSystem,
    stats: ReductionStats | None = None,
) -> Resolution:
    """Reduce both one-step rewrites of the ambiguous word to normal form.

    Equal normal forms mean the ambiguity is resolvable; unequal normal
    forms are two distinct normal forms of A B C and certify that the
    system is not confluent, with the difference as witness.
    """
    sigma = system.rules[ambiguity.sigma]
    tau = system.rules[ambiguity.tau]
    alphabet = system.alphabet
    if ambiguity.kind == OVERLAP:
        left = sigma.rhs * NcPoly.monomial(alphabet, ambiguity.c)
        right = NcPoly.monomial(alphabet, ambiguity.a) * tau.rhs
    else:
        left = sigma.rhs
        right = (
            NcPoly.monomial(alphabet, ambiguity.a)
            * tau.rhs
            * NcPoly.monomial(alphabet, ambiguity.c)
        )
    nf_left = normal_form(left, system, stats=stats)
    nf_right = normal_form(right, system, stats=stats)
    verdict = RESOLVABLE if nf_left == nf_right else NOT_CONFLUENT
    return Resolution(ambiguity, verdict, nf_left, nf_right)


@dataclass
class ConfluenceReport:
    system: ReductionSystem
    resolutions: list
    stats: ReductionStats = field(default_factory=ReductionStats)

    @property
    def overall(self) -> bool:
        return all(r.verdict == RESOLVABLE for r in self.resolutions)

    @property
    def overlap_count(self) -> int:
        return sum(1 for r in self.resolutions if r.ambiguity.kind == OVERLAP)

    @property
    def inclusion_count(self) -> int:
        return sum(1 for r in self.resolutions if r.ambiguity.kind == INCLUSION)

    def to_json_dict(self) -> dict:
        alphabet = self.system.alphabet
        rules = [
            {
                "label": rule.label,
                "lhs": render_word(alphabet, rule.lhs),
                "rhs": rule.rhs.render(self.system.order),
            }
            for rule in self.system.rules
        ]
        ambiguities = []
        for res in self.resolutions:
            amb = res.ambiguity
            entry = {
                "kind": amb.kind,
                "sigma": self.system.rules[amb.sigma].label,
                "tau": self.system.rules[amb.tau].label,
                "A": render_word(alphabet, amb.a),
                "B": render_word(alphabet, amb.b),
                "C": render_word(alphabet, amb.c),
                "verdict": res.verdict,
            }
            if res.verdict == NOT_CONFLUENT:
                entry["difference"] = res.difference.render(self.system.order)
            ambiguities.append(entry)
        return {
            "system": self.system.describe(),
            "order": self.system.order.describe(),
            "rules": rules,
            "ambiguities": ambiguities,
            "overall": RESOLVABLE if self.overall else NOT_CONFLUENT,
            "stats": {
                "elementary_steps": self.stats.steps,
                "max_support": self.stats.max_support,
            },
        }


def _thread_count() -> int:
    value = os.environ.get("DIAMOND_THREADS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def check_confluence(system: ReductionSystem, threads: int | None = None) -> ConfluenceReport:
    """Resolve every ambiguity; aggregation order is the deterministic
    ambiguity order regardless of completion order."""
    ambiguities = find_ambiguities(system)
    if threads is None:
        threads = _thread_count()
    stats = ReductionStats()
    if threads > 1 and len(ambiguities) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_amb = [ReductionStats() for _ in ambiguities]
            futures = [
                pool.submit(resolve_ambiguity, amb, system, st)
                for amb, st in zip(ambiguities, per_amb)
            ]
            resolutions = [f.result() for f in futures]
        for st in per_amb:
            stats.merge(st)
    else:
        resolutions = [resolve_ambiguity(amb, system, stats) for amb in ambiguities]
    return ConfluenceReport(system, resolutions, stats)
