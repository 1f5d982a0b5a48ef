"""Bounded confluence verification for the rewriting system.

Enumerates every rule instance up to a left-hand-side length bound,
forms all overlap ambiguities between ordered pairs of instances
(intersection overlaps, where a suffix of one left-hand side is a prefix
of the other, and inclusion overlaps, where one left-hand side sits
inside the other), and checks that each ambiguity is resolvable: the two
one-step descendants must rewrite to the same normal form while staying
strictly below the ambiguity in deg-lex.

A complete, non-vacuous run with zero non-trivial compositions certifies
confluence of the system up to the bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .idempotents import first_return
from .rewrite import (
    NormalizationTrace,
    RuleInstance,
    commutation_rule,
    contraction_rule,
    normal_form_traced,
)
from .words import Letter, OrderSpec, Word, standard_alphabet


@dataclass(frozen=True)
class Relation:
    """An oriented relation lhs -> rhs with rhs deg-lex below lhs."""

    lhs: Word
    rhs: Word


@dataclass(frozen=True)
class Composition:
    """An overlap ambiguity between two relations.

    ``offset`` is the index at which ``right.lhs`` starts inside the
    ambiguity word; ``pair`` holds the two one-step descendants.
    """

    kind: str  # "intersection" | "inclusion"
    left: object
    right: object
    ambiguity: Word
    pair: tuple[Word, Word]
    offset: int


@dataclass(frozen=True)
class TrivialityReport:
    composition: Composition
    trivial: bool
    witness: tuple[NormalizationTrace, NormalizationTrace]
    below_ambiguity: bool


def _factor_heads(h: Word) -> set[Letter]:
    """First letters of the top-level factors of an idempotent."""
    heads: set[Letter] = set()
    i = 0
    while i < len(h):
        heads.add(h[i])
        j = first_return(h, i)
        assert j is not None
        i = j
    return heads


def _ordered_canonicals(
    letters: Word, max_len: int, order: OrderSpec
) -> tuple[dict[int, list[Word]], dict[int, list[Word]]]:
    """Ordered canonical idempotents and ordered prime canonical
    idempotents, grouped by length, grown from the recursive grammar:
    a prime of length L brackets an ordered canonical of length L-2 whose
    factors avoid the bracketing letter; a product concatenates primes
    with strictly increasing first letters."""
    ocis: dict[int, list[Word]] = {0: [()]}
    primes: dict[int, list[Word]] = {}
    for length in range(2, max_len + 1, 2):
        ps: list[Word] = []
        for h in ocis[length - 2]:
            banned = _factor_heads(h)
            for x in letters:
                if x not in banned:
                    ps.append((x.inverse,) + h + (x,))
        primes[length] = ps

        combos: list[Word] = []

        def grow(cur: Word, last_rank: int, remaining: int, count: int) -> None:
            if remaining == 0:
                if count >= 2:
                    combos.append(cur)
                return
            for part in range(2, remaining + 1, 2):
                for p in primes[part]:
                    rk = order.rank(p[0])
                    if rk > last_rank:
                        grow(cur + p, rk, remaining - part, count + 1)

        grow((), -1, length, 0)
        ocis[length] = ps + combos
    return ocis, primes


def enumerate_rule_instances(
    ngen: int, max_lhs: int, order: OrderSpec | None = None
) -> list[RuleInstance]:
    """Every rule instance with |lhs| <= ``max_lhs`` over ``ngen``
    generators, in deterministic deg-lex order of the left-hand side.

    When ``order`` is supplied its letter set defines the alphabet.
    """
    if ngen < 1:
        raise ValueError("need at least one generator")
    if max_lhs < 2:
        raise ValueError("left-hand sides have length at least 3")
    if order is None:
        order = standard_alphabet(ngen).default_order()
    letters = order.ranking
    _, primes_by_len = _ordered_canonicals(letters, max(max_lhs - 1, 0), order)
    primes = [p for length in sorted(primes_by_len) for p in primes_by_len[length]]

    rules: list[RuleInstance] = []
    by_head: dict[Letter, list[Word]] = {}
    for p in primes:
        by_head.setdefault(p[0], []).append(p)

    # contraction instances: two primes sharing the middle letter
    for p in primes:
        x = p[-1]
        for q in by_head.get(x, ()):
            if len(p) + len(q) - 1 <= max_lhs:
                rules.append(contraction_rule(x, p[1:-1], q[1:-1], order))

    # commutation instances: adjacent primes, smaller product on the right
    for e in primes:
        for f in primes:
            if (
                len(e) + len(f) <= max_lhs
                and e[0] is not f[0]
                and order.less(f + e, e + f)
            ):
                rules.append(commutation_rule(e, f, order))

    rules.sort(key=lambda r: (order.key(r.lhs), r.kind))
    return rules


def find_compositions(rules, max_ambiguity: int) -> list[Composition]:
    """All intersection and inclusion overlaps between ordered pairs of
    ``rules`` (self-pairs included) with ambiguity length bounded by
    ``max_ambiguity``."""
    out: list[Composition] = []
    for r1 in rules:
        u1, n1 = r1.lhs, len(r1.lhs)
        for r2 in rules:
            u2, n2 = r2.lhs, len(r2.lhs)
            # intersection: proper two-sided overlap
            for k in range(1, min(n1, n2)):
                if n1 + n2 - k > max_ambiguity:
                    continue
                if u1[n1 - k :] == u2[:k]:
                    ambiguity = u1 + u2[k:]
                    pair = (r1.rhs + u2[k:], u1[: n1 - k] + r2.rhs)
                    out.append(
                        Composition("intersection", r1, r2, ambiguity, pair, n1 - k)
                    )
            # inclusion: the second left-hand side strictly inside the first
            if n2 < n1 and n1 <= max_ambiguity:
                for t in range(n1 - n2 + 1):
                    if u1[t : t + n2] == u2:
                        pair = (r1.rhs, u1[:t] + r2.rhs + u1[t + n2 :])
                        out.append(Composition("inclusion", r1, r2, u1, pair, t))
    return out


def check_triviality(comp: Composition, order: OrderSpec) -> TrivialityReport:
    """Resolve an ambiguity.

    Both descendants are rewritten to normal form with the full
    schema-matching engine (not a finite rule list); the composition is
    trivial when they agree and every intermediate word stays strictly
    deg-lex below the ambiguity.
    """
    left = normal_form_traced(comp.pair[0], order)
    right = normal_form_traced(comp.pair[1], order)
    below = all(
        order.less(word, comp.ambiguity)
        for trace in (left, right)
        for word in (trace.input, *(s.after for s in trace.steps))
    )
    trivial = below and left.output == right.output
    return TrivialityReport(comp, trivial, (left, right), below)


def _first_component_len(rule: RuleInstance) -> int:
    if rule.kind == "a":
        return len(rule.site[0])
    return len(rule.site[1]) + 2


def intersection_case(comp: Composition) -> str:
    """Label an intersection overlap by where the second rule's first
    bracketed component sits relative to the first rule's parts.

    Labels starting with "impossible" mark shapes that the structural
    theory rules out; the verifier's tests assert they never occur.
    """
    u1 = comp.left.lhs
    n = len(u1)
    p = comp.offset
    q = p + _first_component_len(comp.right)
    if comp.left.kind == "a":
        s = len(comp.left.site[0])
        if q < s:
            return "inside_first"
        if p < s and q > n:
            return "first_then_beyond"
        if p < s:
            return "impossible_straddle"
        if (s < p and q < n) or (p == s and q == n):
            return "inside_second"
        if s < p and q > n:
            return "second_then_beyond"
        return "impossible_suffix"
    m = len(comp.left.site[1]) + 2
    if q <= m - 1:
        return "inside_inner"
    if p == m - 1 and q == n:
        return "whole_second_bracket"
    if p < m - 1 and q > n:
        return "inner_then_beyond"
    if p == n - 1:
        return "shared_final_letter"
    if m <= p and q <= n - 1:
        return "inside_second_inner"
    if m <= p < n - 1 and q > n:
        return "second_inner_then_beyond"
    return "impossible"


def inclusion_case(comp: Composition) -> str:
    """Inclusions occur only with a contraction on the outside and a
    commutation inside, aligned with the outer rule's bracket structure
    in one of two ways; everything else is ruled out."""
    if comp.left.kind != "b" or comp.right.kind != "a":
        return "impossible"
    u1, u2 = comp.left.lhs, comp.right.lhs
    m = len(comp.left.site[1]) + 2
    t = comp.offset
    e2 = comp.right.site[0]
    if t == 0 and len(e2) == m:
        return "prefix_with_first_factor"
    if t + len(u2) == len(u1) and len(u2) - len(e2) == len(u1) - m + 1:
        return "suffix_with_last_factor"
    return "impossible"


@dataclass
class VerificationReport:
    ngen: int
    max_lhs: int
    max_ambiguity: int
    rule_count: int = 0
    rules_by_kind: dict[str, int] = field(default_factory=dict)
    composition_count: int = 0
    compositions_by_kind: dict[str, int] = field(default_factory=dict)
    pair_counts: dict[str, int] = field(default_factory=dict)
    inclusion_pair_counts: dict[str, int] = field(default_factory=dict)
    trivial_count: int = 0
    nontrivial: list[Composition] = field(default_factory=list)
    vacuous: bool = True
    complete: bool = True
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.complete and not self.vacuous and not self.nontrivial


def verify_bounded(
    ngen: int,
    max_lhs: int,
    max_ambiguity: int,
    order: OrderSpec | None = None,
    budget: int | None = None,
) -> VerificationReport:
    """Check every composition at the given bounds.

    ``budget`` caps the number of triviality checks; when exceeded the
    remaining compositions are left unchecked and the report is flagged
    incomplete.  Suggested bounds: ngen <= 2, max_lhs <= 8,
    max_ambiguity <= 10.
    """
    start = time.perf_counter()
    if order is None:
        order = standard_alphabet(ngen).default_order()
    rules = enumerate_rule_instances(ngen, max_lhs, order)
    comps = find_compositions(rules, max_ambiguity)

    report = VerificationReport(ngen, max_lhs, max_ambiguity)
    report.rule_count = len(rules)
    for r in rules:
        report.rules_by_kind[r.kind] = report.rules_by_kind.get(r.kind, 0) + 1
    report.composition_count = len(comps)
    report.vacuous = not comps
    for c in comps:
        tag = f"{c.left.kind}^{c.right.kind}"
        report.compositions_by_kind[c.kind] = (
            report.compositions_by_kind.get(c.kind, 0) + 1
        )
        report.pair_counts[tag] = report.pair_counts.get(tag, 0) + 1
        if c.kind == "inclusion":
            report.inclusion_pair_counts[tag] = (
                report.inclusion_pair_counts.get(tag, 0) + 1
            )

    to_check = comps
    if budget is not None and len(comps) > budget:
        to_check = comps[:budget]
        report.complete = False
    for c in to_check:
        if check_triviality(c, order).trivial:
            report.trivial_count += 1
        else:
            report.nontrivial.append(c)
    report.elapsed = time.perf_counter() - start
    return report
