"""Exact detectors and counters for abelian squares and their relatives.

An abelian square is a factor ``uv`` whose halves have equal Parikh
vectors.  Occurrences are located by ``(start, half_length)`` with
1-based starts.  Three counts are maintained for a word:

* ``total``          - occurrences, with multiplicity over (start, half length);
* ``distinct``       - distinct factor strings ``uv`` among occurrences;
* ``nonequivalent``  - distinct Parikh vectors of the half ``u``.

For circular words factors may wrap, but a square never exceeds the word
length (no self-overlap), so half lengths run up to ``n // 2`` and every
start ``1..n`` is eligible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .words import Word, render_word

# Above this length the per-half-length scans are vectorised with numpy.
_VECTOR_THRESHOLD = 192


class Occurrence(NamedTuple):
    start: int
    half_length: int


@dataclass(frozen=True)
class SquareCensus:
    total: int
    distinct: int
    nonequivalent: int
    occurrences: tuple[Occurrence, ...] | None = None

    def by_mode(self, mode: str) -> int:
        if mode == "total":
            return self.total
        if mode == "distinct":
            return self.distinct
        if mode == "noneq":
            return self.nonequivalent
        raise KeyError(f"unknown census mode {mode!r}")


def _prefix_counts(seq: Sequence[int], t: int) -> list[list[int]]:
    """Per-letter prefix counts: ``pref[c][j]`` letters ``c`` among the first ``j``."""
    pref = [[0] * (len(seq) + 1) for _ in range(t)]
    for j, c in enumerate(seq):
        for cc in range(t):
            pref[cc][j + 1] = pref[cc][j] + (1 if cc == c else 0)
    return pref


def _scan_matches(seq: tuple[int, ...], n: int, t: int, circular: bool) -> Iterator[tuple[int, int]]:
    """Yield 0-based (start, half_length) of abelian squares, l ascending then start."""
    if n < 2:
        return
    if len(seq) > _VECTOR_THRESHOLD:
        yield from _scan_matches_vector(seq, n, t, circular)
        return
    pref = _prefix_counts(seq, t)
    tm1 = t - 1
    for l in range(1, n // 2 + 1):
        top = n if circular else n - 2 * l + 1
        for a in range(top):
            b = a + l
            e = b + l
            for cc in range(tm1):
                p = pref[cc]
                if 2 * p[b] != p[a] + p[e]:
                    break
            else:
                yield a, l


def _scan_matches_vector(
    seq: tuple[int, ...], n: int, t: int, circular: bool
) -> Iterator[tuple[int, int]]:
    arr = np.asarray(seq, dtype=np.int8)
    m = len(arr)
    pref = np.zeros((m + 1, t - 1), dtype=np.int32)
    for cc in range(t - 1):
        pref[1:, cc] = np.cumsum(arr == cc)
    for l in range(1, n // 2 + 1):
        top = n if circular else n - 2 * l + 1
        if top <= 0:
            break
        eq = 2 * pref[l : l + top] == pref[0:top] + pref[2 * l : 2 * l + top]
        hits = np.nonzero(eq.all(axis=1))[0]
        for a in hits:
            yield int(a), l


def enumerate_abelian_squares(w: Word) -> Iterator[Occurrence]:
    """Stream the abelian-square occurrences of ``w`` (half length ascending, then start)."""
    seq = w.letters + w.letters if w.circular else w.letters
    for a, l in _scan_matches(seq, len(w), w.alphabet_size, w.circular):
        yield Occurrence(a + 1, l)


def census(
    w: Word,
    keep_occurrences: bool = False,
    circular_distinct_by_rotation: bool = False,
) -> SquareCensus:
    """All three abelian-square counts of ``w`` in one pass.

    ``circular_distinct_by_rotation`` switches the distinct count of a
    circular word from string identity to (rotation, string) identity;
    string identity is the default reading.
    """
    n = len(w)
    t = w.alphabet_size
    circular = w.circular
    seq = w.letters + w.letters if circular else w.letters
    total = 0
    dist: set = set()
    neq: set = set()
    occ: list[Occurrence] = []
    for a, l in _scan_matches(seq, n, t, circular):
        total += 1
        factor = seq[a : a + 2 * l]
        if circular and circular_distinct_by_rotation:
            dist.add((a, factor))
        else:
            dist.add(factor)
        half = seq[a : a + l]
        neq.add(tuple(half.count(c) for c in range(t)))
        if keep_occurrences:
            occ.append(Occurrence(a + 1, l))
    return SquareCensus(
        total=total,
        distinct=len(dist),
        nonequivalent=len(neq),
        occurrences=tuple(occ) if keep_occurrences else None,
    )


def occurrence_factors(w: Word) -> list[tuple[Occurrence, tuple[int, ...]]]:
    """Occurrences paired with their factor strings (testing / reporting aid)."""
    seq = w.letters + w.letters if w.circular else w.letters
    return [
        (Occurrence(a + 1, l), seq[a : a + 2 * l])
        for a, l in _scan_matches(seq, len(w), w.alphabet_size, w.circular)
    ]


def is_abelian_power(w: Word, p: int) -> bool:
    """True iff ``w`` splits into ``p`` consecutive blocks with one shared Parikh vector."""
    if p < 2:
        raise ValueError(f"power must be at least 2, got {p}")
    n = len(w)
    if n % p:
        return False
    l = n // p
    first = None
    for b in range(p):
        block = w.letters[b * l : (b + 1) * l]
        counts = tuple(block.count(c) for c in range(w.alphabet_size))
        if first is None:
            first = counts
        elif counts != first:
            return False
    return True


def _gram_counts(seq: Sequence[int], k: int) -> Counter:
    counts: Counter = Counter()
    for length in range(1, k + 1):
        for i in range(len(seq) - length + 1):
            counts[tuple(seq[i : i + length])] += 1
    return counts


def _k_equivalent_seq(x: Sequence[int], y: Sequence[int], k: int) -> bool:
    if len(x) != len(y):
        return False
    return _gram_counts(x, k) == _gram_counts(y, k)


def k_equivalent(x: Word, y: Word, k: int) -> bool:
    """Equality of occurrence counts of every factor of length at most ``k``.

    ``k = 1`` coincides with Parikh-vector equality.  Letter sequences are
    compared as written (no wraparound).
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return _k_equivalent_seq(x.letters, y.letters, k)


def enumerate_k_abelian_squares(w: Word, k: int) -> Iterator[Occurrence]:
    """Occurrences ``(i, l)`` whose halves are k-equivalent; ``k = 1`` matches
    :func:`enumerate_abelian_squares` exactly."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    n = len(w)
    seq = w.letters + w.letters if w.circular else w.letters
    for l in range(1, n // 2 + 1):
        top = n if w.circular else n - 2 * l + 1
        for a in range(top):
            if _k_equivalent_seq(seq[a : a + l], seq[a + l : a + 2 * l], k):
                yield Occurrence(a + 1, l)


def count_distinct_ordinary_squares(w: Word) -> int:
    """Number of distinct strings ``uu`` occurring as factors of ``w``."""
    n = len(w)
    seq = w.letters + w.letters if w.circular else w.letters
    found: set = set()
    for l in range(1, n // 2 + 1):
        top = n if w.circular else n - 2 * l + 1
        for a in range(top):
            if seq[a : a + l] == seq[a + l : a + 2 * l]:
                found.add(seq[a : a + 2 * l])
    return len(found)


def min_factor_square_mass(w: Word, m: int) -> int:
    """Minimum, over all length-``m`` factors ``v`` of ``w``, of ``census(v).total``.

    The density probe behind abelian-square richness: a quadratic lower
    bound on this quantity over all factor lengths is what "uniformly
    rich" asks for.
    """
    n = len(w)
    if not 1 <= m <= n:
        raise ValueError(f"factor length {m} out of range 1..{n}")
    seq = w.letters + w.letters if w.circular else w.letters
    top = n if w.circular else n - m + 1
    best = None
    for a in range(top):
        window = Word(seq[a : a + m], w.alphabet_size)
        value = census(window).total
        if best is None or value < best:
            best = value
            if best == 0:
                break
    return best if best is not None else 0


def verify_restricted_abelian_squares(
    w: Word, max_square_length: int
) -> tuple[bool, tuple[int, int] | None]:
    """Check that every abelian square of ``w`` has length at most ``max_square_length``.

    Returns ``(True, None)`` on success, else ``(False, (l, i))`` for the
    least violating half length ``l`` and, within it, least start ``i``.
    """
    if max_square_length < 0 or max_square_length % 2:
        raise ValueError("max square length must be even and non-negative")
    n = len(w)
    t = w.alphabet_size
    seq = w.letters + w.letters if w.circular else w.letters
    l_min = max_square_length // 2 + 1
    if n >= 2 and len(seq) > _VECTOR_THRESHOLD:
        arr = np.asarray(seq, dtype=np.int8)
        pref = np.zeros((len(arr) + 1, t - 1), dtype=np.int32)
        for cc in range(t - 1):
            pref[1:, cc] = np.cumsum(arr == cc)
        for l in range(l_min, n // 2 + 1):
            top = n if w.circular else n - 2 * l + 1
            if top <= 0:
                break
            eq = 2 * pref[l : l + top] == pref[0:top] + pref[2 * l : 2 * l + top]
            hits = np.nonzero(eq.all(axis=1))[0]
            if hits.size:
                return False, (l, int(hits[0]) + 1)
        return True, None
    for a, l in _scan_matches(seq, n, t, w.circular):
        if l >= l_min:
            return False, (l, a + 1)
    return True, None


def census_record(w: Word, c: SquareCensus, style: str = "letters") -> dict:
    """The fixed JSON record shape for a census (field names are stable)."""
    record = {
        "word": render_word(w, style),
        "topology": "circular" if w.circular else "linear",
        "n": len(w),
        "total": c.total,
        "distinct": c.distinct,
        "nonequivalent": c.nonequivalent,
    }
    if c.occurrences is not None:
        record["occurrences"] = [[o.start, o.half_length] for o in c.occurrences]
    return record
