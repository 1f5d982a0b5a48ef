import pytest

from fisnorm.idempotents import (
    NotAnIdempotentError,
    canonicalize_idempotent,
    classify,
    fir,
    first_return,
    is_canonical,
    is_idempotent,
    is_ordered_canonical,
    is_prime_canonical,
    parse_idempotent,
)
from fisnorm.munn import munn_equal
from fisnorm.words import Alphabet, Letter, parse_word
from helpers import grammar_is_idempotent, idempotent_words, words_up_to

AB = Alphabet(("a", "b"))
ORD = AB.default_order()


def w(text):
    return parse_word(text, AB)


def factors_of(word):
    return [f.flatten() for f in parse_idempotent(word).factors]


def test_is_idempotent_examples():
    assert is_idempotent(w(""))
    assert is_idempotent(w("aA"))
    assert not is_idempotent(w("ab"))


def test_parse_examples():
    assert factors_of(w("AabB")) == [w("Aa"), w("bB")]
    tree = parse_idempotent(w("aA"))
    assert len(tree.factors) == 1
    assert tree.factors[0].bracket is Letter("a", True)
    assert tree.factors[0].inner.factors == ()
    assert factors_of(w("aAaA")) == [w("aA"), w("aA")]


def test_parse_rejects_non_idempotents():
    with pytest.raises(NotAnIdempotentError):
        parse_idempotent(w("ab"))
    with pytest.raises(NotAnIdempotentError):
        parse_idempotent(w("a"))


def test_parse_round_trip_and_boundaries():
    # flattening reproduces the input; factors are exactly the walk
    # excursions, checked against an exhaustive enumeration
    for word in idempotent_words(AB.letters(), 8):
        tree = parse_idempotent(word)
        assert tree.flatten() == word
        pos = 0
        for factor in tree.factors:
            flat = factor.flatten()
            assert first_return(word, pos) == pos + len(flat)
            assert flat[0] is factor.bracket.inverse
            assert flat[-1] is factor.bracket
            pos += len(flat)
        assert pos == len(word)


def test_grammar_walk_equivalence():
    # the inductive grammar accepts exactly the closed walks
    for word in words_up_to(AB.letters(), 8):
        assert is_idempotent(word) == grammar_is_idempotent(word)


def test_is_canonical_examples():
    assert is_canonical(w("AabB"))
    assert not is_canonical(w("aAaA"))
    assert is_canonical(w(""))


def test_is_prime_canonical_examples():
    assert is_prime_canonical(w("aA"))
    assert not is_prime_canonical(w("AabB"))
    assert is_prime_canonical(w("AbBa"))


def test_is_ordered_canonical_examples():
    assert is_ordered_canonical(w("AabB"), ORD)
    assert not is_ordered_canonical(w("bBaA"), ORD)
    assert is_ordered_canonical(w("aAbB"), ORD)


def test_classify_flag_implications():
    for word in words_up_to(AB.letters(), 6):
        flags = classify(word, ORD)
        if flags.is_prime or flags.is_ordered:
            assert flags.is_canonical
        if flags.is_canonical:
            assert flags.is_idempotent
        assert flags.is_idempotent == is_idempotent(word)
        assert flags.is_canonical == is_canonical(word)
        assert flags.is_ordered == is_ordered_canonical(word, ORD)
        assert flags.is_prime == (is_prime_canonical(word) and flags.is_canonical)


def test_classifiers_are_total_on_non_idempotents():
    assert not is_canonical(w("ab"))
    assert not is_prime_canonical(w("ab"))
    assert not is_ordered_canonical(w("ab"), ORD)
    assert classify(w("ab"), ORD) == classify(w("ba"), ORD)


def test_fir():
    assert fir(w("aA")) is Letter("a")
    assert fir(w("bBa")) is Letter("b")
    with pytest.raises(ValueError):
        fir(w(""))


def test_canonicalize_examples():
    assert canonicalize_idempotent(w("bBaA"), ORD) == w("aAbB")
    assert canonicalize_idempotent(w("aAaA"), ORD) == w("aA")
    assert canonicalize_idempotent(w(""), ORD) == ()


def test_canonicalize_rejects_non_idempotents():
    with pytest.raises(NotAnIdempotentError):
        canonicalize_idempotent(w("ab"), ORD)


def test_canonicalize_output_is_ordered_and_equivalent():
    for word in idempotent_words(AB.letters(), 8):
        out = canonicalize_idempotent(word, ORD)
        assert is_ordered_canonical(out, ORD)
        assert munn_equal(out, word)
        assert ORD.cmp(out, word) <= 0
