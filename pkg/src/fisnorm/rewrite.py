"""Rewriting engine producing unique shortest normal forms.

Two rule schemas drive every word strictly down the deg-lex order:

* commutation, kind "a": a product e·f of two ordered prime canonical
  idempotents with distinct first letters rewrites to f·e whenever f·e
  is deg-lex smaller;
* contraction, kind "b": the overlapped pattern x⁻¹e'x f'x⁻¹, in which
  both x⁻¹e'x and xf'x⁻¹ are ordered prime canonical idempotents
  (sharing the middle letter x), rewrites to f'x⁻¹e', two letters
  shorter.

A word admitting no redex of either kind is the unique normal form of
its equivalence class, and it has minimal length within the class.
Matching is linear per position because a prime idempotent starting at a
given index is exactly the first closed excursion of the free-group walk
from that index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .idempotents import first_return, is_ordered_canonical, walk_returns
from .words import Letter, OrderSpec, Word


@lru_cache(maxsize=1 << 17)
def _is_oci(w: Word, order: OrderSpec) -> bool:
    return is_ordered_canonical(w, order)


@lru_cache(maxsize=1 << 17)
def _is_opci(w: Word, order: OrderSpec) -> bool:
    return len(w) >= 2 and first_return(w, 0) == len(w) and _is_oci(w, order)


@dataclass(frozen=True)
class RuleInstance:
    """A concrete oriented rule.

    ``site`` carries the matched pieces: (e, f) for kind "a",
    (x, left_inner, right_inner) for kind "b".
    """

    kind: str
    lhs: Word
    rhs: Word
    site: tuple

    def __repr__(self) -> str:
        return f"RuleInstance({self.kind}, {self.lhs!r} -> {self.rhs!r})"


@dataclass(frozen=True)
class RewriteStep:
    position: int
    rule: RuleInstance
    before: Word
    after: Word


@dataclass(frozen=True)
class NormalizationTrace:
    input: Word
    steps: tuple[RewriteStep, ...]
    output: Word


def commutation_rule(e: Word, f: Word, order: OrderSpec) -> RuleInstance:
    """Kind "a" instance e·f -> f·e.

    Both words must be ordered prime canonical idempotents with distinct
    first letters (so e·f is canonical), and f·e must be deg-lex smaller.
    """
    if not _is_opci(e, order) or not _is_opci(f, order):
        raise ValueError("commutation needs two ordered prime canonical idempotents")
    if e[0] is f[0]:
        raise ValueError("product is not canonical: first letters coincide")
    lhs, rhs = e + f, f + e
    if not order.less(rhs, lhs):
        raise ValueError("wrong orientation: f·e is not deg-lex below e·f")
    return RuleInstance("a", lhs, rhs, (e, f))


def contraction_rule(
    x: Letter, left_inner: Word, right_inner: Word, order: OrderSpec
) -> RuleInstance:
    """Kind "b" instance x⁻¹e'x f'x⁻¹ -> f'x⁻¹e' with e' = ``left_inner``
    and f' = ``right_inner``.

    Both bracketed parts x⁻¹e'x and xf'x⁻¹ must be ordered prime
    canonical idempotents; the right-hand side is two letters shorter.
    """
    left = (x.inverse,) + left_inner + (x,)
    right = (x,) + right_inner + (x.inverse,)
    if not _is_opci(left, order) or not _is_opci(right, order):
        raise ValueError("contraction needs ordered prime canonical brackets")
    lhs = left + right[1:]
    rhs = right_inner + (x.inverse,) + left_inner
    return RuleInstance("b", lhs, rhs, (x, left_inner, right_inner))


def _redexes(w: Word, order: OrderSpec) -> Iterator[tuple[int, RuleInstance]]:
    """Yield (position, rule) pairs left to right; at equal positions the
    contraction comes before the commutation."""
    n = len(w)
    for i in range(n):
        j = first_return(w, i)
        if j is None:
            continue
        e = w[i:j]
        if not _is_opci(e, order):
            continue
        k = first_return(w, j - 1)
        if k is not None and _is_opci(w[j - 1 : k], order):
            yield i, contraction_rule(w[j - 1], w[i + 1 : j - 1], w[j : k - 1], order)
        if j < n:
            k = first_return(w, j)
            if k is not None:
                f = w[j:k]
                if f[0] is not e[0] and _is_opci(f, order) and order.less(f + e, e + f):
                    yield i, commutation_rule(e, f, order)


def find_redexes(w: Word, order: OrderSpec) -> list[tuple[int, RuleInstance]]:
    """Every redex of either schema in ``w``, scanning left to right."""
    return list(_redexes(w, order))


def apply_step(w: Word, position: int, rule: RuleInstance) -> Word:
    """Replace ``rule.lhs`` by ``rule.rhs`` at ``position``."""
    end = position + len(rule.lhs)
    if position < 0 or w[position:end] != rule.lhs:
        raise ValueError(f"rule left-hand side not present at position {position}")
    return w[:position] + rule.rhs + w[end:]


def reduce_once(w: Word, order: OrderSpec) -> Word | None:
    """One leftmost rewriting step, or None when ``w`` is irreducible."""
    hit = next(_redexes(w, order), None)
    if hit is None:
        return None
    i, rule = hit
    return w[:i] + rule.rhs + w[i + len(rule.lhs) :]


def normal_form(w: Word, order: OrderSpec) -> Word:
    """The unique irreducible word equivalent to ``w``.

    This is the deg-lex least element of the equivalence class, hence
    also of minimal length.  Termination is guaranteed because every
    step strictly decreases the deg-lex value.
    """
    while True:
        nxt = reduce_once(w, order)
        if nxt is None:
            return w
        w = nxt


def normal_form_traced(w: Word, order: OrderSpec) -> NormalizationTrace:
    """Like :func:`normal_form`, recording every leftmost step."""
    steps: list[RewriteStep] = []
    cur = w
    while True:
        hit = next(_redexes(cur, order), None)
        if hit is None:
            return NormalizationTrace(w, tuple(steps), cur)
        i, rule = hit
        nxt = cur[:i] + rule.rhs + cur[i + len(rule.lhs) :]
        assert order.less(nxt, cur), "rewriting must strictly descend"
        steps.append(RewriteStep(i, rule, cur, nxt))
        cur = nxt


def is_irreducible(w: Word, order: OrderSpec) -> bool:
    """True when no rule instance matches anywhere in ``w``."""
    return next(_redexes(w, order), None) is None


def equal(u: Word, v: Word, order: OrderSpec) -> bool:
    """Decide word equality in the free inverse monoid via normal forms."""
    return normal_form(u, order) == normal_form(v, order)


def validate_irr_structure(w: Word, order: OrderSpec) -> bool:
    """Structural description of irreducible words, checked independently
    of the redex scanner.

    Searches for a decomposition u₀e₁u₁⋯eₘuₘ (m ≥ 0) where every eᵢ is a
    nonempty ordered canonical idempotent, the inner uᵢ are nonempty, the
    concatenation u₀u₁⋯uₘ carries no y·y⁻¹, no factor of eᵢ starts with
    the first letter of uᵢ, and no factor of eᵢ ends with the last letter
    of uᵢ₋₁.
    """
    n = len(w)
    # Candidate idempotent blocks starting at each index, with the first
    # and last letters of their top-level factors.
    blocks: list[list[tuple[int, frozenset[Letter], frozenset[Letter]]]] = []
    for i in range(n):
        row: list[tuple[int, frozenset[Letter], frozenset[Letter]]] = []
        heads: list[Letter] = []
        tails: list[Letter] = []
        prev_boundary = i
        for j in walk_returns(w, i):
            heads.append(w[prev_boundary])
            tails.append(w[j - 1])
            prev_boundary = j
            if _is_oci(w[i:j], order):
                row.append((j, frozenset(heads), frozenset(tails)))
        blocks.append(row)

    memo: dict[tuple[int, Letter | None, bool], bool] = {}

    def ok(i: int, prev: Letter | None, just_closed: bool) -> bool:
        if i == n:
            return True
        key = (i, prev, just_closed)
        got = memo.get(key)
        if got is not None:
            return got
        res = False
        y = w[i]
        # consume w[i] as a u-letter
        if prev is None or not (prev.base == y.base and prev.inverted != y.inverted):
            res = ok(i + 1, y, False)
        # or open an idempotent block here (two blocks may not touch)
        if not res and not just_closed:
            for j, heads, tails in blocks[i]:
                if prev is not None and prev in tails:
                    continue
                if j < n and w[j] in heads:
                    continue
                if ok(j, prev, True):
                    res = True
                    break
        memo[key] = res
        return res

    return ok(0, None, False)
