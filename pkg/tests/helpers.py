"""Independent brute-force oracles and enumerators for the test suite.

Everything here is deliberately naive: separate cancellation strategies,
a recursive-grammar recogniser for idempotents, and exhaustive walkers.
They exist to cross-check the production implementations, so they avoid
sharing code paths with them wherever the check would otherwise be
circular.
"""

from __future__ import annotations

import itertools

from fisnorm.idempotents import (
    first_return,
    is_canonical,
    is_idempotent,
    is_ordered_canonical,
    walk_returns,
)
from fisnorm.words import Letter, OrderSpec, Word


def cancels(a: Letter, b: Letter) -> bool:
    return a.base == b.base and a.inverted != b.inverted


def words_up_to(letters, max_len: int):
    """All words of length <= max_len, shortest first, lexicographic within
    a length (deg-lex order when ``letters`` is sorted by rank)."""
    for length in range(max_len + 1):
        yield from itertools.product(letters, repeat=length)


def naive_reduce(w: Word, rightmost: bool = False) -> Word:
    """Free reduction by repeatedly deleting one cancelling pair, chosen
    leftmost-first or rightmost-first."""
    letters = list(w)
    while True:
        positions = range(len(letters) - 1)
        if rightmost:
            positions = reversed(positions)
        for i in positions:
            if cancels(letters[i], letters[i + 1]):
                del letters[i : i + 2]
                break
        else:
            return tuple(letters)


_GRAMMAR_IDEM: dict[Word, bool] = {(): True}
_GRAMMAR_PRIME: dict[Word, bool] = {}


def grammar_is_prime(w: Word) -> bool:
    """Prime idempotent per the inductive definition: x⁻¹·h·x with h an
    idempotent (no excursion requirement)."""
    got = _GRAMMAR_PRIME.get(w)
    if got is None:
        got = len(w) >= 2 and cancels(w[0], w[-1]) and grammar_is_idempotent(w[1:-1])
        _GRAMMAR_PRIME[w] = got
    return got


def grammar_is_idempotent(w: Word) -> bool:
    """Idempotent per the inductive definition: a product of one or more
    primes, or the empty word."""
    got = _GRAMMAR_IDEM.get(w)
    if got is None:
        got = False
        for k in range(2, len(w) + 1, 2):
            if grammar_is_prime(w[:k]) and grammar_is_idempotent(w[k:]):
                got = True
                break
        _GRAMMAR_IDEM[w] = got
    return got


def idempotent_words(letters, max_len: int) -> list[Word]:
    """Every word of length <= max_len whose free-group walk closes,
    enumerated by depth-pruned DFS."""
    out: list[Word] = []
    letters = tuple(letters)
    prefix: list[Letter] = []
    stack: list[Letter] = []

    def rec() -> None:
        if not stack:
            out.append(tuple(prefix))
        room = max_len - len(prefix)
        if room <= 0:
            return
        for y in letters:
            if stack and cancels(stack[-1], y):
                if len(stack) - 1 <= room - 1:
                    popped = stack.pop()
                    prefix.append(y)
                    rec()
                    prefix.pop()
                    stack.append(popped)
            elif len(stack) + 1 <= room - 1:
                stack.append(y)
                prefix.append(y)
                rec()
                prefix.pop()
                stack.pop()

    rec()
    return out


def factor_boundaries(w: Word) -> set[int]:
    """Cut positions of an idempotent that fall between top-level factors,
    endpoints included."""
    bounds = {0}
    i = 0
    while i < len(w):
        j = first_return(w, i)
        assert j is not None
        bounds.add(j)
        i = j
    return bounds


# ---------------------------------------------------------------------------
# structural-property sweeps shared by the unit tests and the acceptance
# suite (which runs them at the full bounds)


def split_violations(letters, max_len: int) -> int:
    """Cutting a canonical idempotent through the middle of a factor must
    break canonicity of both the prefix and the suffix."""
    bad = 0
    for w in idempotent_words(letters, max_len):
        if not is_canonical(w):
            continue
        bounds = factor_boundaries(w)
        for c in range(1, len(w)):
            if c in bounds:
                continue
            if is_canonical(w[:c]) or is_canonical(w[c:]):
                bad += 1
    return bad


def has_overlapped_brackets(w: Word) -> bool:
    """Scanner for the forbidden pattern: two prime canonical excursions
    sharing their middle letter (x⁻¹ex followed by xfx⁻¹)."""
    from fisnorm.idempotents import is_prime_canonical

    for i in range(len(w)):
        j = first_return(w, i)
        if j is None or not is_prime_canonical(w[i:j]):
            continue
        k = first_return(w, j - 1)
        if k is not None and is_prime_canonical(w[j - 1 : k]):
            return True
    return False


def forbidden_pattern_mismatches(letters, max_len: int) -> int:
    """Canonicity of an idempotent must coincide with the absence of the
    overlapped-brackets pattern."""
    bad = 0
    for w in idempotent_words(letters, max_len):
        if is_canonical(w) == has_overlapped_brackets(w):
            bad += 1
    return bad


def insertion_mismatches(letters, word_max: int, idem_max: int) -> int:
    """Splicing an idempotent into a word never changes whether the word
    is an idempotent, in either direction."""
    idems = [e for e in idempotent_words(letters, idem_max) if e]
    bad = 0
    for w in words_up_to(letters, word_max):
        base = is_idempotent(w)
        for c in range(len(w) + 1):
            a, b = w[:c], w[c:]
            for e in idems:
                if is_idempotent(a + e + b) != base:
                    bad += 1
    return bad


def adjacency_order_violations(letters, max_len: int, order: OrderSpec) -> int:
    """Inside an ordered canonical idempotent, any two adjacent nonempty
    ordered canonical sub-idempotents e, f satisfy e·f < f·e."""
    bad = 0
    for w in idempotent_words(letters, max_len):
        if not is_ordered_canonical(w, order):
            continue
        for i in range(len(w)):
            for j in walk_returns(w, i):
                e = w[i:j]
                if not is_ordered_canonical(e, order):
                    continue
                for k in walk_returns(w, j):
                    f = w[j:k]
                    if is_ordered_canonical(f, order) and not order.less(e + f, f + e):
                        bad += 1
    return bad
