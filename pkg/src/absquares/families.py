"""Generators for the named word families used throughout the tool."""

from __future__ import annotations

from .words import Word


def power(n: int, letter: int = 0, alphabet_size: int | None = None) -> Word:
    """The word ``a^n`` (or another repeated letter)."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if alphabet_size is None:
        alphabet_size = letter + 1
    return Word((letter,) * n, alphabet_size)


def fici_block(k: int) -> Word:
    """The block word ``a^k b a^k b a^{2k}`` of length ``4k + 2``.

    Contains quadratically many distinct abelian squares; the count is
    bounded below by ``k + (floor(k/2) + 1)^2 + (k + 1) * ceil(k/2)``.
    """
    if k < 1:
        raise ValueError("block parameter must be at least 1")
    letters = (0,) * k + (1,) + (0,) * k + (1,) + (0,) * (2 * k)
    return Word(letters, 2)


def fici_block_distinct_bound(k: int) -> int:
    """Lower bound on distinct abelian squares in :func:`fici_block`; 23 at ``k = 4``."""
    if k < 1:
        raise ValueError("block parameter must be at least 1")
    return k + (k // 2 + 1) ** 2 + (k + 1) * ((k + 1) // 2)


def kucherov(k: int) -> Word:
    """The recursive family ``w_1 = ab``, ``w_k = w_{k-1} a^k b^k``; length ``k(k+1)``."""
    if k < 1:
        raise ValueError("family index must be at least 1")
    letters: list[int] = [0, 1]
    for j in range(2, k + 1):
        letters.extend([0] * j)
        letters.extend([1] * j)
    return Word(tuple(letters), 2)


def thue_morse(n: int) -> Word:
    """Length-``n`` prefix of the Thue-Morse fixed point 0110100110010110...

    Characterised by ``t[2i] = t[i]`` and ``t[2i+1] = 1 - t[i]``; letter
    ``i`` is the bit parity of ``i``.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    return Word(tuple(bin(i).count("1") & 1 for i in range(n)), 2)


def named(word_id: str) -> Word:
    """A word from the bundled catalog (table examples, extremal words, appendix)."""
    from . import catalog

    return catalog.named_word(word_id)


FAMILY_NAMES = ("power", "fici-block", "kucherov", "thue-morse", "named")


def generate(family: str, param: int | str) -> Word:
    """Dispatch a family name and parameter to the matching generator."""
    if family == "power":
        return power(int(param))
    if family == "fici-block":
        return fici_block(int(param))
    if family == "kucherov":
        return kucherov(int(param))
    if family == "thue-morse":
        return thue_morse(int(param))
    if family == "named":
        return named(str(param))
    raise KeyError(f"unknown word family {family!r}")
