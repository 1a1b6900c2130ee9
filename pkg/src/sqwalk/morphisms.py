"""Morphisms, letter colourings, lazy infinite streams, and preservation tests."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .words import Word, is_square_free


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word map, extended to words by concatenation of images."""

    source_alphabet_size: int
    target_alphabet_size: int
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.images) != self.source_alphabet_size:
            raise ValueError("need exactly one image per source letter")
        for a, img in enumerate(self.images):
            if not img:
                raise ValueError(f"image of {a} is empty")
            for x in img:
                if not 0 <= x < self.target_alphabet_size:
                    raise ValueError(
                        f"image of {a} uses letter {x} outside target alphabet")

    @classmethod
    def from_images(cls, images, target_alphabet_size: Optional[int] = None) -> "Morphism":
        imgs = tuple(tuple(img) for img in images)
        if target_alphabet_size is None:
            target_alphabet_size = max(max(img) for img in imgs) + 1
        return cls(len(imgs), target_alphabet_size, imgs)

    @classmethod
    def from_texts(cls, texts: Iterable[str], target_alphabet_size: Optional[int] = None) -> "Morphism":
        return cls.from_images(
            [Word.from_text(t).letters for t in texts], target_alphabet_size)

    @classmethod
    def identity(cls, n: int) -> "Morphism":
        return cls(n, n, tuple((a,) for a in range(n)))

    def image(self, a: int) -> tuple[int, ...]:
        if not 0 <= a < self.source_alphabet_size:
            raise ValueError(f"letter {a} outside source alphabet")
        return self.images[a]

    def is_uniform(self) -> bool:
        return len({len(img) for img in self.images}) == 1

    def text(self) -> str:
        """One "i -> image" line per source letter."""
        lines = []
        for a, img in enumerate(self.images):
            lines.append(f"{a} -> {Word(img, self.target_alphabet_size).text()}")
        return "\n".join(lines)


def parse_morphism(text: str) -> Morphism:
    """Parse the "i -> image" line format, one line per source letter in order."""
    images = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            left, right = line.split("->")
        except ValueError:
            raise ValueError(f"malformed morphism line {line!r}") from None
        if int(left.strip()) != len(images):
            raise ValueError(f"source letters must appear in order, got line {line!r}")
        images.append(Word.from_text(right.strip()).letters)
    if not images:
        raise ValueError("empty morphism definition")
    return Morphism.from_images(images)


def apply(m: Morphism, w: Word) -> Word:
    """Image of w under m: the concatenation of the letter images."""
    out: list[int] = []
    for a in w.letters:
        out.extend(m.image(a))
    return Word(tuple(out), m.target_alphabet_size)


@dataclass(frozen=True)
class Colouring:
    """Letter-to-letter map from a source alphabet onto colour indices."""

    source_alphabet_size: int
    target_alphabet_size: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source_alphabet_size:
            raise ValueError("need exactly one colour per source letter")
        for a, x in enumerate(self.images):
            if not 0 <= x < self.target_alphabet_size:
                raise ValueError(f"colour of {a} outside target alphabet")

    @classmethod
    def from_images(cls, images, target_alphabet_size: Optional[int] = None) -> "Colouring":
        imgs = tuple(images)
        if target_alphabet_size is None:
            target_alphabet_size = max(imgs) + 1 if imgs else 1
        return cls(len(imgs), target_alphabet_size, imgs)

    @classmethod
    def identity(cls, n: int) -> "Colouring":
        return cls(n, n, tuple(range(n)))

    def colour(self, a: int) -> int:
        return self.images[a]

    def as_morphism(self) -> Morphism:
        return Morphism(self.source_alphabet_size, self.target_alphabet_size,
                        tuple((x,) for x in self.images))


def compose_colouring(phi: Colouring, m: Morphism) -> Morphism:
    """The morphism sending each letter a to phi applied letterwise to m(a)."""
    if phi.source_alphabet_size < m.target_alphabet_size:
        raise ValueError("colouring not defined on the morphism's target alphabet")
    images = tuple(tuple(phi.images[x] for x in img) for img in m.images)
    return Morphism(m.source_alphabet_size, phi.target_alphabet_size, images)


class InfiniteWordStream:
    """Lazy, deterministic infinite word.

    prefix(n) materializes the first n letters; repeated calls share one
    internal buffer, so prefix(m) is always a prefix of prefix(n) for m <= n.
    Single consumer: instances are not safe for concurrent use.
    """

    def __init__(self, alphabet_size: int, factory: Callable[[], Iterator[int]]):
        self.alphabet_size = alphabet_size
        self._factory = factory
        self._buf: list[int] = []
        self._gen: Optional[Iterator[int]] = None

    def _ensure(self, n: int) -> None:
        if self._gen is None:
            self._gen = self._factory()
        buf = self._buf
        gen = self._gen
        while len(buf) < n:
            buf.append(next(gen))

    def prefix(self, n: int) -> Word:
        """The first n letters as a Word."""
        if n < 0:
            raise ValueError("prefix length must be >= 0")
        self._ensure(n)
        return Word(tuple(self._buf[:n]), self.alphabet_size)

    def letters(self) -> Iterator[int]:
        """Iterate letters from the start, extending the buffer on demand."""
        i = 0
        while True:
            if i >= len(self._buf):
                self._ensure(i + 1)
            yield self._buf[i]
            i += 1


def fixed_point_stream(m: Morphism, seed: int) -> InfiniteWordStream:
    """The infinite fixed point of m starting from seed.

    Requires m(seed) to start with seed and have length >= 2 (so iteration is
    prolongable).  Letters are produced by expanding the images of already
    produced letters, never materializing whole iterates.
    """
    if not 0 <= seed < m.source_alphabet_size:
        raise ValueError(f"seed {seed} outside source alphabet")
    if m.target_alphabet_size > m.source_alphabet_size:
        raise ValueError("fixed point needs images over the source alphabet")
    img = m.images[seed]
    if img[0] != seed:
        raise ValueError(f"image of seed {seed} does not start with {seed}")
    if len(img) < 2:
        raise ValueError(f"image of seed {seed} is too short to iterate")

    def factory() -> Iterator[int]:
        buf = list(m.images[seed])
        emit = 0
        expand = 1  # buf[0]'s image is buf itself, start expanding at 1
        while True:
            while emit < len(buf):
                yield buf[emit]
                emit += 1
            buf.extend(m.images[buf[expand]])
            expand += 1

    return InfiniteWordStream(m.source_alphabet_size, factory)


def image_stream(m: Morphism, s: InfiniteWordStream) -> InfiniteWordStream:
    """Lazy concatenation of m-images of the letters of s."""

    def factory() -> Iterator[int]:
        for a in s.letters():
            yield from m.image(a)

    return InfiniteWordStream(m.target_alphabet_size, factory)


def crochemore_uniform_test(m: Morphism) -> bool:
    """Square-freeness certificate for uniform endomorphisms.

    A uniform morphism is square-free iff it maps every square-free word of
    length 3 to a square-free word; this checks exactly those images.
    Non-uniform input or distinct source/target alphabets is an error, not a
    False verdict.
    """
    if not m.is_uniform():
        raise ValueError("crochemore_uniform_test requires a uniform morphism")
    if m.source_alphabet_size != m.target_alphabet_size:
        raise ValueError("crochemore_uniform_test requires source alphabet == target alphabet")
    n = m.source_alphabet_size
    for v in itertools.product(range(n), repeat=3):
        w = Word(v, n)
        if not is_square_free(w):
            continue
        if not is_square_free(apply(m, w)):
            return False
    return True


def preservation_test(m: Morphism, max_len: int,
                      forbidden: Iterable[Word] = ()) -> Optional[Word]:
    """Search for a square-free word whose image under m is not square-free.

    Enumerates, in lexicographic order, the square-free words over the source
    alphabet of length <= max_len that avoid every factor in `forbidden`.
    Returns the first word whose image contains a square, or None when the
    sweep passes.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    forb = [tuple(f) for f in forbidden]
    n = m.source_alphabet_size
    buf: list[int] = []

    def new_factor_forbidden() -> bool:
        for f in forb:
            k = len(f)
            if k and len(buf) >= k and tuple(buf[-k:]) == f:
                return True
        return False

    def suffix_square() -> bool:
        d = len(buf)
        last = buf[-1]
        for L in range(1, d // 2 + 1):
            if last != buf[d - 1 - L]:
                continue
            if buf[d - L:] == buf[d - 2 * L:d - L]:
                return True
        return False

    def dfs() -> Optional[Word]:
        if buf and not is_square_free(apply(m, Word(tuple(buf), n))):
            return Word(tuple(buf), n)
        if len(buf) >= max_len:
            return None
        for a in range(n):
            buf.append(a)
            if not suffix_square() and not new_factor_forbidden():
                hit = dfs()
                if hit is not None:
                    return hit
            buf.pop()
        return None

    if any(not f for f in forb):
        return None  # the empty factor forbids every word
    return dfs()


def alignment_test(m: Morphism, letters: Iterable[int], window: int = 3) -> bool:
    """Check that the images of the given letters occur only on image boundaries.

    Scans every concatenation m(j_1)...m(j_k) for k up to `window`; each
    occurrence of m(i) must start at an image boundary whose image is exactly
    m(i).  Three images suffice as a window because an interior occurrence
    spans at most two boundaries.
    """
    targets = sorted(set(letters))
    for i in targets:
        if not 0 <= i < m.source_alphabet_size:
            raise ValueError(f"letter {i} outside source alphabet")
    src = range(m.source_alphabet_size)
    for i in targets:
        needle = m.images[i]
        k_len = len(needle)
        for k in range(1, window + 1):
            for combo in itertools.product(src, repeat=k):
                boundaries: dict[int, int] = {}
                concat: list[int] = []
                for j in combo:
                    boundaries[len(concat)] = j
                    concat.extend(m.images[j])
                limit = len(concat) - k_len
                for p in range(limit + 1):
                    if tuple(concat[p:p + k_len]) != needle:
                        continue
                    at = boundaries.get(p)
                    if at is None or m.images[at] != needle:
                        return False
    return True


def _w(text: str, alphabet_size: int) -> tuple[int, ...]:
    return Word.from_text(text, alphabet_size).letters


# The classic ternary square-free generator: iterate from 0 to get the
# Thue word 012021012102... (which avoids the factors 010 and 212).
TAU = Morphism(3, 3, (_w("012", 3), _w("02", 3), _w("1", 3)))

# Ternary endomorphism whose image of the Thue word is square-free; image
# lengths 24, 16, 8.  Not square-free on all inputs: alpha(010) contains a
# square, but 010 never occurs in the Thue word.
ALPHA_P5 = Morphism(3, 3, (
    _w("201021202101201021012021", 3),
    _w("2010212021012021", 3),
    _w("20102101", 3),
))

# Lift of ALPHA_P5 onto walks on the path 0-1-2-3-4: PHI_P5 composed with
# BETA_P5 reproduces ALPHA_P5 exactly, image for image.
BETA_P5 = Morphism(3, 5, (
    _w("210123212343210123432123", 5),
    _w("2101232123432123", 5),
    _w("21012343", 5),
))

PHI_P5 = Colouring(5, 3, (1, 0, 2, 1, 0))

# Uniform square-free endomorphism of A4 whose images are walks on the
# 4-cycle; certified by crochemore_uniform_test.
ALPHA_C4 = Morphism(4, 4, (
    _w("010301210323", 4),
    _w("010321230323", 4),
    _w("010301232123", 4),
    _w("010321030123", 4),
))

# Uniform morphism producing square-free tournament words over A5: the
# letter 4 ends every image and is preceded by the source letter.
ALPHA_T5 = Morphism(3, 5, (
    _w("0123014", 5),
    _w("0130124", 5),
    _w("0120134", 5),
))

BUILTIN_MORPHISMS: dict[str, Morphism | Colouring] = {
    "tau": TAU,
    "alpha-p5": ALPHA_P5,
    "beta-p5": BETA_P5,
    "phi-p5": PHI_P5,
    "alpha-c4": ALPHA_C4,
    "alpha-t5": ALPHA_T5,
}
