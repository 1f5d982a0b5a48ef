"""Birooted word-tree equality oracle.

Independent ground truth for the word problem: a word maps to the tree
of its reduced prefixes (a subtree of the free-group Cayley tree rooted
at the empty word) together with the end root, the reduced word itself.
Two words are equal in the free inverse monoid exactly when those
birooted trees coincide.

Deliberately built on free reduction alone, sharing nothing with the
rewriting machinery, so it can cross-check the engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .words import Letter, Word, format_word, standard_alphabet


def _vertex_sort_key(v: Word) -> tuple[int, tuple[tuple[str, bool], ...]]:
    return (len(v), tuple((l.base, l.inverted) for l in v))


@dataclass(frozen=True)
class MunnTree:
    """Vertex set of reduced prefixes plus the end root.

    The start root is always the empty word; the vertex set is closed
    under truncation, so parent links are implicit.
    """

    vertices: frozenset[Word]
    end: Word

    @property
    def start(self) -> Word:
        return ()

    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def edges(self) -> list[tuple[Word, Letter]]:
        """(parent, letter) pairs, listed in sorted child-vertex order."""
        out: list[tuple[Word, Letter]] = []
        for v in sorted(self.vertices, key=_vertex_sort_key):
            if v:
                out.append((v[:-1], v[-1]))
        return out

    def minimal_length(self) -> int:
        """Length of the shortest word with this tree: a covering walk
        traverses every edge twice except those on the straight path from
        the start root to the end root."""
        return 2 * self.edge_count() - len(self.end)

    def key(self) -> str:
        """Canonical serialisation; equal trees give identical strings.

        Vertices are sorted by (length, fixed letter order), rendered in
        verbose syntax and joined with "|", a character excluded from
        generator names; the end root follows after "||".
        """
        vs = "|".join(
            format_word(v, "verbose")
            for v in sorted(self.vertices, key=_vertex_sort_key)
        )
        return vs + "||" + format_word(self.end, "verbose")


def munn_tree(w: Word) -> MunnTree:
    """Tree of reduced prefixes of ``w``; the end root is the full reduction."""
    pos: Word = ()
    vertices = {pos}
    for y in w:
        if pos and pos[-1].base == y.base and pos[-1].inverted != y.inverted:
            pos = pos[:-1]
        else:
            pos = pos + (y,)
        vertices.add(pos)
    return MunnTree(frozenset(vertices), pos)


def munn_equal(u: Word, v: Word) -> bool:
    """Ground-truth equality in the free inverse monoid."""
    return munn_tree(u) == munn_tree(v)


def munn_minimal_length(w: Word) -> int:
    """Minimum length over all words equal to ``w``."""
    return munn_tree(w).minimal_length()


def munn_key(w: Word) -> str:
    """Canonical class key; equal words give identical keys."""
    return munn_tree(w).key()


def class_representatives(ngen: int, max_len: int) -> dict[str, list[Word]]:
    """Partition all words of length <= ``max_len`` over ``ngen``
    generators by oracle key.

    Words appear in deg-lex order of the standard alphabet.  Intended for
    desk-scale sweeps (ngen <= 2, max_len <= 8).
    """
    letters = standard_alphabet(ngen).letters()
    classes: dict[str, list[Word]] = {}
    for length in range(max_len + 1):
        for tup in itertools.product(letters, repeat=length):
            classes.setdefault(munn_key(tup), []).append(tup)
    return classes
