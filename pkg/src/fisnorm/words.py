"""Letters, words and orderings over an involutive alphabet.

A word over the symmetrised alphabet Y = X ∪ X⁻¹ is a plain tuple of
interned :class:`Letter` objects, so slicing, concatenation with ``+``,
hashing and dict keys all behave like ordinary tuples.  Everything in
this module is immutable and safe to share between concurrent tasks.
"""

from __future__ import annotations

import re
from typing import Iterable, Literal

SyntaxMode = Literal["compact", "verbose"]

_NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class WordSyntaxError(ValueError):
    """Raised when text cannot be parsed against the declared alphabet."""


class Letter:
    """A generator or its formal inverse.

    Instances are interned: two letters with the same base name and the
    same inversion flag are the same object, so identity, equality and
    hashing all coincide.
    """

    __slots__ = ("base", "inverted")
    _pool: dict[tuple[str, bool], "Letter"] = {}

    def __new__(cls, base: str, inverted: bool = False) -> "Letter":
        inverted = bool(inverted)
        got = cls._pool.get((base, inverted))
        if got is None:
            got = super().__new__(cls)
            got.base = base
            got.inverted = inverted
            cls._pool[(base, inverted)] = got
        return got

    @property
    def inverse(self) -> "Letter":
        return Letter(self.base, not self.inverted)

    def __repr__(self) -> str:
        return self.base + "'" if self.inverted else self.base


# A word is any tuple of letters; the empty tuple is the identity.
Word = tuple[Letter, ...]


class Alphabet:
    """An ordered, finite set of generator names."""

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[str]):
        gens = tuple(generators)
        if not gens:
            raise ValueError("alphabet needs at least one generator")
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        for name in gens:
            if not _NAME_RE.match(name):
                raise ValueError(
                    f"bad generator name {name!r}: want a lowercase identifier"
                )
        self.generators = gens

    @property
    def compact(self) -> bool:
        """True when every generator has the single-character compact form."""
        return all(len(g) == 1 for g in self.generators)

    def letters(self) -> Word:
        """All letters of Y, interleaved: x₁, x₁⁻¹, x₂, x₂⁻¹, …"""
        out: list[Letter] = []
        for g in self.generators:
            out.append(Letter(g))
            out.append(Letter(g, True))
        return tuple(out)

    def letter(self, base: str, inverted: bool = False) -> Letter:
        if base not in self.generators:
            raise WordSyntaxError(f"unknown generator {base!r}")
        return Letter(base, inverted)

    def default_order(self) -> "OrderSpec":
        """x₁ < x₁⁻¹ < x₂ < x₂⁻¹ < … in declaration order."""
        return OrderSpec(self.letters())

    def __contains__(self, base: str) -> bool:
        return base in self.generators

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"Alphabet({self.generators!r})"


def standard_alphabet(ngen: int) -> Alphabet:
    """The alphabet on the first ``ngen`` latin letters a, b, c, ..."""
    if not 1 <= ngen <= 26:
        raise ValueError("generator count must be between 1 and 26")
    return Alphabet(tuple("abcdefghijklmnopqrstuvwxyz"[:ngen]))


class OrderSpec:
    """A total order on the letters of Y, extended deg-lex to words.

    Words compare first by length, then letter by letter using the
    ranking.  The ranking must list every letter exactly once and be
    closed under inversion.
    """

    __slots__ = ("ranking", "_rank")

    def __init__(self, ranking: Iterable[Letter]):
        rk = tuple(ranking)
        if len(set(rk)) != len(rk):
            raise ValueError("ranking repeats a letter")
        have = set(rk)
        for letter in rk:
            if letter.inverse not in have:
                raise ValueError(f"ranking lists {letter!r} but not its inverse")
        self.ranking = rk
        self._rank = {letter: i for i, letter in enumerate(rk)}

    def rank(self, letter: Letter) -> int:
        try:
            return self._rank[letter]
        except KeyError:
            raise ValueError(f"letter {letter!r} is not ranked") from None

    def key(self, w: Word) -> tuple[int, tuple[int, ...]]:
        """Sort key realising the deg-lex order."""
        return (len(w), tuple(self.rank(letter) for letter in w))

    def cmp(self, u: Word, v: Word) -> int:
        nu, nv = len(u), len(v)
        if nu != nv:
            return -1 if nu < nv else 1
        rank = self._rank
        for a, b in zip(u, v):
            if a is not b:
                try:
                    ra, rb = rank[a], rank[b]
                except KeyError as exc:
                    raise ValueError(f"letter {exc.args[0]!r} is not ranked") from None
                if ra != rb:
                    return -1 if ra < rb else 1
        return 0

    def less(self, u: Word, v: Word) -> bool:
        return self.cmp(u, v) < 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OrderSpec) and self.ranking == other.ranking

    def __hash__(self) -> int:
        return hash(self.ranking)

    def __repr__(self) -> str:
        return f"OrderSpec({self.ranking!r})"


def invert(w: Word) -> Word:
    """Reverse the word and invert every letter; an anti-involution."""
    return tuple(letter.inverse for letter in reversed(w))


def free_reduce(w: Word) -> Word:
    """Cancel adjacent y·y⁻¹ pairs until none remain.

    The result is the reduced form of ``w`` in the free group and does
    not depend on the cancellation order.
    """
    out: list[Letter] = []
    for y in w:
        if out:
            top = out[-1]
            if top.base == y.base and top.inverted != y.inverted:
                out.pop()
                continue
        out.append(y)
    return tuple(out)


def deg_lex_cmp(u: Word, v: Word, order: OrderSpec) -> int:
    """Three-way deg-lex comparison: -1, 0 or 1.

    Every letter of both words must be ranked by ``order``.
    """
    for letter in u:
        order.rank(letter)
    for letter in v:
        order.rank(letter)
    return order.cmp(u, v)


def parse_word(text: str, alphabet: Alphabet, mode: SyntaxMode = "compact") -> Word:
    """Parse ``text`` into a word over ``alphabet``.

    Compact mode: one character per letter, uppercase marks the inverse
    ("aAb"); an apostrophe straight after a lowercase letter also marks
    the inverse ("ab'a").  Verbose mode: whitespace separated tokens with
    a trailing apostrophe for the inverse ("a a' b").
    """
    if mode == "compact":
        if not alphabet.compact:
            raise WordSyntaxError(
                "compact syntax needs single-character generators; use verbose mode"
            )
        out: list[Letter] = []
        for ch in text:
            if ch.isspace():
                continue
            if ch == "'":
                if not out or out[-1].inverted:
                    raise WordSyntaxError("misplaced apostrophe")
                out[-1] = out[-1].inverse
                continue
            base = ch.lower()
            if not ("a" <= base <= "z") or base not in alphabet.generators:
                raise WordSyntaxError(f"unknown letter {ch!r}")
            out.append(Letter(base, ch.isupper()))
        return tuple(out)
    if mode == "verbose":
        out = []
        for tok in text.split():
            base, inverted = (tok[:-1], True) if tok.endswith("'") else (tok, False)
            if not base or base not in alphabet.generators:
                raise WordSyntaxError(f"unknown token {tok!r}")
            out.append(Letter(base, inverted))
        return tuple(out)
    raise ValueError(f"unknown syntax mode {mode!r}")


def format_word(w: Word, mode: SyntaxMode = "compact") -> str:
    """Render a word; round-trips through :func:`parse_word` for the same mode."""
    if mode == "compact":
        parts = []
        for letter in w:
            if len(letter.base) != 1:
                raise ValueError(
                    f"generator {letter.base!r} has no single-character form; use verbose mode"
                )
            parts.append(letter.base.upper() if letter.inverted else letter.base)
        return "".join(parts)
    if mode == "verbose":
        return " ".join(l.base + ("'" if l.inverted else "") for l in w)
    raise ValueError(f"unknown syntax mode {mode!r}")
