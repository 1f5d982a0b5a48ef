"""Structural properties of the idempotent taxonomy at quick bounds.

The acceptance suite repeats these sweeps at their full documented
bounds; here they run small so failures localise fast.
"""

import random

from fisnorm.rewrite import equal
from fisnorm.words import Alphabet, invert
from helpers import (
    adjacency_order_violations,
    forbidden_pattern_mismatches,
    idempotent_words,
    insertion_mismatches,
    split_violations,
)

AB = Alphabet(("a", "b"))
ORD = AB.default_order()
LETTERS = AB.letters()


def test_factor_splits_break_canonicity():
    assert split_violations(LETTERS, 8) == 0


def test_canonicity_matches_forbidden_pattern_scan():
    assert forbidden_pattern_mismatches(LETTERS, 8) == 0


def test_idempotent_insertion_preserves_idempotency():
    assert insertion_mismatches(LETTERS, 4, 4) == 0


def test_adjacent_idempotents_inside_ordered_words_are_sorted():
    assert adjacency_order_violations(LETTERS, 8, ORD) == 0


def test_idempotents_commute_under_engine_equality():
    rng = random.Random(11)
    pool = idempotent_words(LETTERS, 6)
    for _ in range(300):
        e = rng.choice(pool)
        f = rng.choice(pool)
        assert equal(e + f, f + e, ORD)


def test_defining_relations_hold_under_engine_equality():
    rng = random.Random(12)
    for _ in range(300):
        a = tuple(rng.choices(LETTERS, k=rng.randrange(0, 6)))
        b = tuple(rng.choices(LETTERS, k=rng.randrange(0, 6)))
        assert equal(a + invert(a) + a, a, ORD)
        assert equal(
            a + invert(a) + b + invert(b), b + invert(b) + a + invert(a), ORD
        )
