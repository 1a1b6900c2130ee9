"""Word predicates, cross-validated against the brute-force oracle."""

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqwalk.walks import thue_stream
from sqwalk.words import (Word, brute_force_square_check, extends_square_free,
                          find_square, has_factor, is_reduced_free_group_word,
                          is_square_free, is_tournament_word)

THUE_27 = "012021012102012021020121012"


def w(text, alphabet_size=None):
    return Word.from_text(text, alphabet_size)


class TestWordType:
    def test_rejects_letters_outside_alphabet(self):
        with pytest.raises(ValueError):
            Word((0, 3), 3)
        with pytest.raises(ValueError):
            Word.from_text("012", alphabet_size=2)

    def test_rejects_empty_alphabet(self):
        with pytest.raises(ValueError):
            Word((), 0)

    def test_digit_format_round_trip(self):
        word = w("012021")
        assert word.alphabet_size == 3
        assert word.text() == "012021"
        assert len(word) == 6

    def test_comma_format(self):
        word = Word.from_text("0,1,11,3")
        assert word.letters == (0, 1, 11, 3)
        assert word.alphabet_size == 12
        assert word.text() == "0,1,11,3"

    def test_empty_word(self):
        assert w("").letters == ()
        assert w("").alphabet_size == 1

    def test_malformed_text(self):
        with pytest.raises(ValueError):
            Word.from_text("01a2")
        with pytest.raises(ValueError):
            Word.from_text("0,x")


class TestIsSquareFree:
    def test_thue_prefix(self):
        assert is_square_free(w(THUE_27))

    @pytest.mark.parametrize("text,expected", [
        ("", True),
        ("0", True),
        ("00", False),
        ("0101", False),
        ("010", True),
        ("01201201", False),
    ])
    def test_small_cases(self, text, expected):
        assert is_square_free(w(text)) is expected

    def test_find_square_reports_shortest_then_leftmost(self):
        assert find_square(w("0101")) == (0, 2)
        assert find_square(w("1212")) == (0, 2)
        assert find_square(w("0120012")) == (3, 1)
        assert find_square(w(THUE_27)) is None

    def test_long_words_take_the_vectorized_path(self):
        prefix = thue_stream().prefix(5000)
        assert is_square_free(prefix)
        spoiled = Word(prefix.letters + (prefix.letters[-1],), 3)
        assert not is_square_free(spoiled)


class TestBruteForceOracle:
    @pytest.mark.parametrize("text,expected", [
        ("0102010", True),
        ("1212", False),
        ("012101232101210", True),
    ])
    def test_examples(self, text, expected):
        assert brute_force_square_check(w(text)) is expected

    def test_exhaustive_agreement_ternary(self):
        # acceptance pushes this to length 14; keep the unit sweep quick
        for k in range(12):
            for letters in itertools.product(range(3), repeat=k):
                word = Word(letters, 3)
                assert is_square_free(word) == brute_force_square_check(word), letters

    def test_random_agreement_quaternary(self):
        rng = random.Random(20250810)
        for _ in range(10_000):
            letters = tuple(rng.randrange(4) for _ in range(rng.randrange(61)))
            word = Word(letters, 4)
            assert is_square_free(word) == brute_force_square_check(word), letters

    def test_wide_alphabet_path(self):
        word = Word.from_text("0,300,0,300")
        assert not brute_force_square_check(word)
        assert not is_square_free(word)
        word = Word.from_text("0,300,1")
        assert brute_force_square_check(word)

    @given(st.lists(st.integers(0, 3), max_size=40))
    def test_agreement_property(self, letters):
        word = Word(tuple(letters), 4)
        assert is_square_free(word) == brute_force_square_check(word)


class TestExtendsSquareFree:
    @pytest.mark.parametrize("text,letter,expected", [
        ("01", 0, True),    # 010 is square-free
        ("010", 1, False),  # 0101 = (01)^2
        ("01", 2, True),
    ])
    def test_examples(self, text, letter, expected):
        assert extends_square_free(w(text), letter) is expected

    def test_agrees_with_oracle_on_spec_case(self):
        word = w("0120210121")
        assert extends_square_free(word, 0) == brute_force_square_check(w("01202101210"))

    def test_incremental_soundness_random(self):
        rng = random.Random(7)
        for _ in range(2000):
            # grow a random square-free word, then test a random extension
            word = Word((), 4)
            for _ in range(rng.randrange(30)):
                a = rng.randrange(4)
                if extends_square_free(word, a):
                    word = word.append(a)
            a = rng.randrange(4)
            assert extends_square_free(word, a) == brute_force_square_check(word.append(a))

    @given(st.lists(st.integers(0, 2), max_size=25), st.integers(0, 2))
    def test_monotonicity(self, letters, a):
        word = Word(tuple(letters), 3)
        if not is_square_free(word):
            assert not is_square_free(word.append(a))


class TestBinaryExtremal:
    def test_every_binary_word_of_length_4_has_a_square(self):
        for letters in itertools.product(range(2), repeat=4):
            assert not is_square_free(Word(letters, 2))

    def test_square_free_binary_words_of_length_3_exist(self):
        hits = [letters for letters in itertools.product(range(2), repeat=3)
                if is_square_free(Word(letters, 2))]
        assert hits == [(0, 1, 0), (1, 0, 1)]


class TestHasFactor:
    def test_thue_avoids_010_and_212(self):
        prefix = thue_stream().prefix(1000)
        assert not has_factor(prefix, w("010"))
        assert not has_factor(prefix, w("212"))

    def test_empty_factor(self):
        assert has_factor(w("0120"), w(""))
        assert has_factor(w(""), w(""))

    def test_positive_and_negative(self):
        assert has_factor(w("012021"), w("202"))
        assert not has_factor(w("012021"), w("00"))
        assert not has_factor(w("01"), w("012"))


class TestTournamentWords:
    @pytest.mark.parametrize("text,expected", [
        ("01201320120320132032", True),
        ("010", False),
        ("0123014", True),
        ("", True),
        ("00", True),   # equal letters never conflict (but 00 is a square)
    ])
    def test_examples(self, text, expected):
        assert is_tournament_word(w(text)) is expected


class TestReducedFreeGroupWords:
    @pytest.mark.parametrize("text,expected", [
        ("0103", True),
        ("013", False),
        ("", True),
    ])
    def test_examples(self, text, expected):
        assert is_reduced_free_group_word(w(text, 4)) is expected

    def test_rejects_other_alphabets(self):
        with pytest.raises(ValueError):
            is_reduced_free_group_word(w("010", 3))
