"""Recognition and structure of formal idempotents.

A word over Y is an idempotent exactly when it freely reduces to the
empty word, i.e. when it traces a closed walk on the Cayley tree of the
free group.  Splitting the walk at its returns to the basepoint yields
the unique factorisation into *prime* idempotents x⁻¹·h·x (closed
excursions).  On top of that factor tree the classifiers grade a word as

* canonical: at every level the factor first letters are pairwise
  distinct and no factor of an inner part h starts with the letter x
  that brackets it;
* ordered: canonical, and at every level the factor first letters
  strictly increase under the chosen letter order.

The empty word counts as an (ordered) canonical idempotent with no
factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Letter, OrderSpec, Word, free_reduce


class NotAnIdempotentError(ValueError):
    """Input word does not freely reduce to the empty word."""


@dataclass(frozen=True)
class PrimeFactor:
    """One prime factor x⁻¹·h·x: ``bracket`` is x, ``inner`` is h."""

    bracket: Letter
    inner: "IdempotentTree"

    @property
    def fir(self) -> Letter:
        """First letter of the flattened factor (the bracket's inverse)."""
        return self.bracket.inverse

    def flatten(self) -> Word:
        return (self.bracket.inverse,) + self.inner.flatten() + (self.bracket,)


@dataclass(frozen=True)
class IdempotentTree:
    """Factor decomposition of an idempotent; no factors = empty word."""

    factors: tuple[PrimeFactor, ...]

    def flatten(self) -> Word:
        out: Word = ()
        for factor in self.factors:
            out = out + factor.flatten()
        return out


@dataclass(frozen=True)
class Classification:
    is_idempotent: bool
    is_canonical: bool
    is_prime: bool
    is_ordered: bool


def first_return(w: Word, start: int = 0) -> int | None:
    """Index just past the point where the free-group walk started fresh at
    ``start`` first returns to its origin, or None if it never does.

    ``w[start:first_return(w, start)]`` is the unique prime idempotent
    beginning at ``start``.
    """
    stack: list[Letter] = []
    for j in range(start, len(w)):
        y = w[j]
        if stack:
            top = stack[-1]
            if top.base == y.base and top.inverted != y.inverted:
                stack.pop()
                if not stack:
                    return j + 1
                continue
        stack.append(y)
    return None


def walk_returns(w: Word, start: int = 0) -> list[int]:
    """Every index j > start where the walk from ``start`` closes, so that
    ``w[start:j]`` is an idempotent."""
    out: list[int] = []
    stack: list[Letter] = []
    for j in range(start, len(w)):
        y = w[j]
        if stack:
            top = stack[-1]
            if top.base == y.base and top.inverted != y.inverted:
                stack.pop()
                if not stack:
                    out.append(j + 1)
                continue
        stack.append(y)
    return out


def is_idempotent(w: Word) -> bool:
    """True when the word freely reduces to nothing (a closed walk)."""
    return not free_reduce(w)


def parse_idempotent(w: Word) -> IdempotentTree:
    """Factor an idempotent into its prime excursions, recursively.

    The factorisation is unique: a prime factor is a maximal sub-walk
    touching the basepoint only at its two ends.  Raises
    :class:`NotAnIdempotentError` on non-idempotent input.
    """
    factors: list[PrimeFactor] = []
    i, n = 0, len(w)
    while i < n:
        j = first_return(w, i)
        if j is None:
            raise NotAnIdempotentError(f"not an idempotent: {w!r}")
        factors.append(PrimeFactor(w[j - 1], parse_idempotent(w[i + 1 : j - 1])))
        i = j
    return IdempotentTree(tuple(factors))


def fir(w: Word) -> Letter:
    """First letter of a nonempty word."""
    if not w:
        raise ValueError("empty word has no first letter")
    return w[0]


def _try_parse(w: Word) -> IdempotentTree | None:
    try:
        return parse_idempotent(w)
    except NotAnIdempotentError:
        return None


def _tree_flags(tree: IdempotentTree, order: OrderSpec | None) -> tuple[bool, bool]:
    """(canonical, ordered) for a factor tree; ordered is only evaluated
    when an order is supplied."""
    ordered = order is not None
    prev_rank = -1
    firs: set[Letter] = set()
    for factor in tree.factors:
        head = factor.bracket.inverse
        if head in firs:
            return (False, False)
        firs.add(head)
        if any(g.bracket.inverse is factor.bracket for g in factor.inner.factors):
            return (False, False)
        inner_canonical, inner_ordered = _tree_flags(factor.inner, order)
        if not inner_canonical:
            return (False, False)
        if ordered:
            rk = order.rank(head)
            if rk <= prev_rank or not inner_ordered:
                ordered = False
            prev_rank = rk
    return (True, ordered)


def is_canonical(w: Word) -> bool:
    """True for canonical idempotents; False for everything else."""
    tree = _try_parse(w)
    return tree is not None and _tree_flags(tree, None)[0]


def is_prime_canonical(w: Word) -> bool:
    """True for canonical idempotents with a single factor x⁻¹·h·x."""
    tree = _try_parse(w)
    return tree is not None and len(tree.factors) == 1 and _tree_flags(tree, None)[0]


def is_ordered_canonical(w: Word, order: OrderSpec) -> bool:
    """True for canonical idempotents whose factor first letters strictly
    increase under ``order`` at every level."""
    tree = _try_parse(w)
    return tree is not None and _tree_flags(tree, order)[1]


def classify(w: Word, order: OrderSpec) -> Classification:
    """All four flags at once; non-idempotents come back all-False."""
    tree = _try_parse(w)
    if tree is None:
        return Classification(False, False, False, False)
    canonical, ordered = _tree_flags(tree, order)
    return Classification(
        True, canonical, canonical and len(tree.factors) == 1, canonical and ordered
    )


def canonicalize_idempotent(e: Word, order: OrderSpec) -> Word:
    """Rewrite an idempotent to the equivalent ordered canonical idempotent.

    Delegates to the rewrite engine; the result never exceeds ``e`` in
    deg-lex and is checked before being returned.
    """
    from .rewrite import normal_form  # deferred: rewrite depends on this module

    if not is_idempotent(e):
        raise NotAnIdempotentError(f"not an idempotent: {e!r}")
    nf = normal_form(e, order)
    assert is_ordered_canonical(nf, order)
    return nf
