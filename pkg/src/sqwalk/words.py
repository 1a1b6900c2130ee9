"""Finite words over integer alphabets and the square-freeness predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

# Below this length the pure-Python scan beats the numpy one (call overhead).
_NUMPY_THRESHOLD = 96


@dataclass(frozen=True)
class Word:
    """Immutable word over the alphabet {0, ..., alphabet_size-1}."""

    letters: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        for a in self.letters:
            if not 0 <= a < self.alphabet_size:
                raise ValueError(
                    f"letter {a} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def from_letters(cls, letters: Iterable[int], alphabet_size: Optional[int] = None) -> "Word":
        """Build a word, inferring the alphabet as max(letters)+1 when not given."""
        ls = tuple(letters)
        if alphabet_size is None:
            alphabet_size = max(ls) + 1 if ls else 1
        return cls(ls, alphabet_size)

    @classmethod
    def from_text(cls, text: str, alphabet_size: Optional[int] = None) -> "Word":
        """Parse a word from text.

        Two formats: a run of decimal digits ("012021"), or comma-separated
        decimal integers ("0,1,11,3") for alphabets past size 10.  The comma
        format is detected by the presence of a comma.
        """
        text = text.strip()
        if not text:
            return cls.from_letters((), alphabet_size)
        if "," in text:
            try:
                ls = tuple(int(part) for part in text.split(","))
            except ValueError:
                raise ValueError(f"malformed word {text!r}") from None
        else:
            if not text.isdigit():
                raise ValueError(f"malformed word {text!r}")
            ls = tuple(int(c) for c in text)
        if any(a < 0 for a in ls):
            raise ValueError(f"negative letter in {text!r}")
        return cls.from_letters(ls, alphabet_size)

    def text(self) -> str:
        """Render: digit string for alphabets up to 10, comma-separated beyond."""
        if self.alphabet_size <= 10:
            return "".join(str(a) for a in self.letters)
        return ",".join(str(a) for a in self.letters)

    def append(self, letter: int) -> "Word":
        return Word(self.letters + (letter,), self.alphabet_size)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, idx):
        return self.letters[idx]

    def __str__(self) -> str:
        return self.text()


def _word_args(w) -> tuple[int, ...]:
    return w.letters if isinstance(w, Word) else tuple(w)


def _find_square_scan(letters) -> Optional[tuple[int, int]]:
    """First square by half-length, then position: (start, half_length) or None.

    Scans the word against its own shift by L; a run of L consecutive
    agreements w[i]==w[i+L] is exactly a square of half-length L.
    """
    n = len(letters)
    for L in range(1, n // 2 + 1):
        run = 0
        for i in range(n - L):
            if letters[i] == letters[i + L]:
                run += 1
                if run >= L:
                    return (i - L + 1, L)
            else:
                run = 0
    return None


def _find_square_numpy(letters) -> Optional[tuple[int, int]]:
    """Same shift scan as _find_square_scan, vectorized per shift."""
    a = np.asarray(letters, dtype=np.int64)
    n = a.size
    for L in range(1, n // 2 + 1):
        eq = a[: n - L] == a[L:]
        c = np.cumsum(eq)
        # window sums of length L over eq
        sums = c[L - 1:] - np.concatenate(([0], c[:-L]))
        hits = np.flatnonzero(sums == L)
        if hits.size:
            return (int(hits[0]), L)
    return None


def find_square(w: Word) -> Optional[tuple[int, int]]:
    """Locate a square uu in w: returns (start, len(u)), or None if square-free.

    The square of the smallest half-length is reported, leftmost first.
    """
    letters = _word_args(w)
    if len(letters) < _NUMPY_THRESHOLD:
        return _find_square_scan(letters)
    return _find_square_numpy(letters)


def is_square_free(w: Word) -> bool:
    """True iff w has no factor uu for nonempty u."""
    return find_square(w) is None


def brute_force_square_check(w: Word) -> bool:
    """Independent square-freeness oracle: test every (start, length) candidate.

    For each start i and each half-length L it compares w[i:i+L] against
    w[i+L:i+2L] directly.  Kept deliberately separate from the shift scan in
    is_square_free so the two implementations cross-validate each other.
    """
    letters = _word_args(w)
    n = len(letters)
    if n < 2:
        return True
    if max(letters) < 256:
        s = bytes(letters)
        mv = memoryview(s)
        for i in range(n - 1):
            hi = i + (n - i) // 2  # largest admissible second-half start
            ch = s[i]
            j = s.find(ch, i + 1, hi + 1)
            while j != -1:
                if mv[i:j] == mv[j:2 * j - i]:
                    return False
                j = s.find(ch, j + 1, hi + 1)
        return True
    for i in range(n - 1):
        for L in range(1, (n - i) // 2 + 1):
            if letters[i] == letters[i + L] and letters[i:i + L] == letters[i + L:i + 2 * L]:
                return False
    return True


def _extension_square_free(letters, n: Optional[int] = None) -> bool:
    """True iff letters[:n] (square-free up to its last letter) stays square-free.

    Only squares ending at position n-1 need checking: any square created by
    appending a letter must use it, i.e. end exactly at the new position.
    """
    if n is None:
        n = len(letters)
    last = letters[n - 1]
    for L in range(1, n // 2 + 1):
        if last != letters[n - 1 - L]:
            continue
        if letters[n - L:n] == letters[n - 2 * L:n - L]:
            return False
    return True


def extends_square_free(w: Word, a: int) -> bool:
    """Given square-free w, decide whether w + [a] is still square-free."""
    letters = w.letters + (a,)
    if len(letters) == 1:
        return True
    return _extension_square_free(letters)


def has_factor(w: Word, f: Word) -> bool:
    """True iff f occurs contiguously in w (the empty word always does)."""
    fs = _word_args(f)
    if not fs:
        return True
    ws = _word_args(w)
    if len(fs) > len(ws):
        return False
    if max(ws) < 256 and max(fs) < 256:
        return bytes(ws).find(bytes(fs)) != -1
    m = len(fs)
    return any(ws[i:i + m] == fs for i in range(len(ws) - m + 1))


def find_tournament_conflict(w: Word) -> Optional[tuple[int, tuple[int, int]]]:
    """First position p where the pair w[p]w[p+1] reverses an earlier factor.

    Returns (p, (w[p], w[p+1])) or None if w is a tournament word.
    """
    letters = _word_args(w)
    seen: set[tuple[int, int]] = set()
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if a != b and (b, a) in seen:
            return (p, (a, b))
        seen.add((a, b))
    return None


def is_tournament_word(w: Word) -> bool:
    """True iff no unordered letter pair occurs in both orders as a factor."""
    return find_tournament_conflict(w) is None


# Free group on two generators: letters 0, 1 are the generators and
# letters 2, 3 their respective inverses.
_REDUCTION_PAIRS = {(0, 2), (2, 0), (1, 3), (3, 1)}


def find_reduction_violation(w: Word) -> Optional[tuple[int, tuple[int, int]]]:
    """First adjacent generator/inverse pair in w, or None if reduced."""
    if w.alphabet_size != 4:
        raise ValueError("reduced-word check requires alphabet_size 4")
    letters = w.letters
    for p in range(len(letters) - 1):
        pair = (letters[p], letters[p + 1])
        if pair in _REDUCTION_PAIRS:
            return (p, pair)
    return None


def is_reduced_free_group_word(w: Word) -> bool:
    """True iff w avoids the factors 02, 20, 13 and 31."""
    return find_reduction_violation(w) is None
