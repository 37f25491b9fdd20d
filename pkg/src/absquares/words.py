"""Words over small indexed alphabets.

Letters are stored as integer indices in ``[0, t)`` where ``t`` is the
alphabet size (at most 8).  Rendering maps indices to glyphs, either
``a..h`` or ``0..7``; the two glyph sets are interchangeable on input and
are always resolved through the fixed glyph table (``b`` is letter 1 even
in a word that never uses ``a``).

Positions in the public API are 1-based, matching the usual convention
for factors ``w[i..j]``.  A circular word admits wraparound factors, which
are handled by doubling the letter sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

MAX_ALPHABET = 8
LETTER_GLYPHS = "abcdefgh"
DIGIT_GLYPHS = "01234567"

_GLYPH_TO_INDEX = {g: i for i, g in enumerate(LETTER_GLYPHS)}
_GLYPH_TO_INDEX.update({g: i for i, g in enumerate(DIGIT_GLYPHS)})


class WordFormatError(ValueError):
    """Word text contains a glyph outside ``a..h`` / ``0..7``."""


@dataclass(frozen=True)
class Alphabet:
    """An indexed alphabet of ``size`` letters with a rendering style."""

    size: int
    style: str = "letters"  # "letters" -> a..h, "digits" -> 0..7

    def __post_init__(self) -> None:
        if not 1 <= self.size <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.size}")
        if self.style not in ("letters", "digits"):
            raise ValueError(f"unknown glyph style {self.style!r}")

    def glyph(self, letter: int) -> str:
        if not 0 <= letter < self.size:
            raise ValueError(f"letter index {letter} outside alphabet of size {self.size}")
        table = LETTER_GLYPHS if self.style == "letters" else DIGIT_GLYPHS
        return table[letter]

    def render(self, letters: Iterable[int]) -> str:
        return "".join(self.glyph(c) for c in letters)


@dataclass(frozen=True)
class Word:
    """An immutable finite word; ``circular`` selects the topology."""

    letters: tuple[int, ...]
    alphabet_size: int
    circular: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.alphabet_size <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {self.alphabet_size}")
        for c in self.letters:
            if not 0 <= c < self.alphabet_size:
                raise ValueError(f"letter index {c} outside alphabet of size {self.alphabet_size}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return render_word(self)

    @property
    def n(self) -> int:
        return len(self.letters)

    def with_topology(self, circular: bool) -> "Word":
        return Word(self.letters, self.alphabet_size, circular)


def word(text: str, alphabet_size: int | None = None, circular: bool = False) -> Word:
    """Build a :class:`Word` from glyph text (``a..h`` and ``0..7`` both accepted)."""
    letters = []
    for ch in text:
        idx = _GLYPH_TO_INDEX.get(ch)
        if idx is None:
            raise WordFormatError(f"invalid word glyph {ch!r} (expected a-h or 0-7)")
        letters.append(idx)
    inferred = max(letters, default=0) + 1
    if alphabet_size is None:
        alphabet_size = inferred
    elif alphabet_size < inferred:
        raise WordFormatError(
            f"alphabet size {alphabet_size} too small for word using letter index {inferred - 1}"
        )
    return Word(tuple(letters), alphabet_size, circular)


parse_word = word


def glyph_style(text: str) -> str:
    """Glyph style of a word text, judged by its first glyph (default letters)."""
    for ch in text:
        if ch in DIGIT_GLYPHS:
            return "digits"
        if ch in LETTER_GLYPHS:
            return "letters"
    return "letters"


def render_word(w: Word, style: str = "letters") -> str:
    return Alphabet(w.alphabet_size, style).render(w.letters)


def parse_word_file(text: str, circular: bool = False) -> list[Word]:
    """Parse the one-word-per-line text format; blank lines are skipped."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            out.append(word(line, circular=circular))
    return out


def _sequence(w: Word) -> tuple[int, ...]:
    """Letter sequence with wraparound material (doubled when circular)."""
    return w.letters + w.letters if w.circular else w.letters


def parikh(w: Word, i: int, j: int) -> tuple[int, ...]:
    """Parikh vector of the factor ``w[i..j]`` (1-based, inclusive).

    ``i == j + 1`` denotes the empty factor.  Circular words accept
    ``j <= 2n`` so factors may wrap around the end once.
    """
    n = len(w)
    limit = 2 * n if w.circular else n
    if not (1 <= i <= j + 1) or j > limit:
        raise IndexError(f"factor bounds ({i}, {j}) out of range for n={n}")
    counts = [0] * w.alphabet_size
    seq = _sequence(w)
    for pos in range(i - 1, j):
        counts[seq[pos]] += 1
    return tuple(counts)


class ParikhPrefixTable:
    """Parikh vectors of all prefixes, enabling O(t) factor queries.

    Row ``i`` is the Parikh vector of ``w[1..i]``; for a circular word the
    table is built over the doubled letter sequence so wraparound factors
    are branch-free.
    """

    def __init__(self, w: Word) -> None:
        self.word = w
        self.alphabet_size = w.alphabet_size
        seq = _sequence(w)
        t = w.alphabet_size
        rows = [(0,) * t]
        counts = [0] * t
        for c in seq:
            counts[c] += 1
            rows.append(tuple(counts))
        self._rows = rows

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def __len__(self) -> int:
        return len(self._rows)

    def factor(self, i: int, j: int) -> tuple[int, ...]:
        """Parikh vector of ``w[i..j]`` (same bounds contract as :func:`parikh`)."""
        n = len(self.word)
        limit = 2 * n if self.word.circular else n
        if not (1 <= i <= j + 1) or j > limit:
            raise IndexError(f"factor bounds ({i}, {j}) out of range for n={n}")
        lo, hi = self._rows[i - 1], self._rows[j]
        return tuple(h - l for h, l in zip(hi, lo))


def complement(w: Word) -> Word:
    """Swap the two letters of a binary word."""
    if w.alphabet_size != 2:
        raise ValueError("complement is defined only for binary words")
    return Word(tuple(1 - c for c in w.letters), 2, w.circular)


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.alphabet_size, w.circular)


def rotate(w: Word, r: int) -> Word:
    """Rotation starting at offset ``r`` (``rotate(w, 1)`` drops the first letter to the end)."""
    n = len(w)
    if n == 0:
        return w
    r %= n
    return Word(w.letters[r:] + w.letters[:r], w.alphabet_size, w.circular)


def conjugates(w: Word) -> set[Word]:
    """All rotations of ``w`` (defined for any topology)."""
    n = len(w)
    if n == 0:
        return {w}
    return {rotate(w, r) for r in range(n)}


def canonical_representative(
    w: Word,
    permute_letters: bool = False,
    reverse_flag: bool = False,
    rotate_flag: bool = False,
) -> Word:
    """Lexicographically least word in the orbit of ``w`` under the selected group.

    ``permute_letters`` applies all permutations of the full alphabet (for
    binary words this is the complement closure), ``reverse_flag`` adds
    reversal, and ``rotate_flag`` adds all rotations and requires a
    circular word.  Idempotent and constant on orbits.
    """
    if rotate_flag and not w.circular:
        raise ValueError("rotation reduction requires a circular word")
    t = w.alphabet_size
    base_variants = [w.letters]
    if reverse_flag:
        base_variants.append(w.letters[::-1])
    n = len(w)
    rotations = range(n) if (rotate_flag and n > 0) else (0,)
    perms = list(permutations(range(t))) if permute_letters else [tuple(range(t))]
    best = None
    for variant in base_variants:
        for r in rotations:
            rotated = variant[r:] + variant[:r]
            for perm in perms:
                image = tuple(perm[c] for c in rotated)
                if best is None or image < best:
                    best = image
    return Word(best if best is not None else (), t, w.circular)


def letter_images(letters: tuple[int, ...], alphabet_size: int) -> Iterator[tuple[int, ...]]:
    """All images of a letter tuple under permutations of the alphabet."""
    seen = set()
    for perm in permutations(range(alphabet_size)):
        image = tuple(perm[c] for c in letters)
        if image not in seen:
            seen.add(image)
            yield image
