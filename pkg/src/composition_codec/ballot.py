"""Ballot-constrained pair-symbol sequences: counting, rank, and unrank.

A codeword assigns each mirrored position pair ``(i, n+1-i)`` one of four
joint values.  Equal pairs carry ``SYM0``/``SYM1``; unequal pairs carry
``ANTI0`` (zero first) or ``ANTI1`` (one first).  Scanning pairs inward,
``ANTI0`` raises a running height by one and ``ANTI1`` lowers it; a valid
sequence never lets the height drop below zero.  That ballot condition is
what keeps every codeword prefix strictly lighter than the matching
suffix, so it is the load-bearing constraint of both codebooks.

Counts are exact big integers.  ``count_sequences(m)`` equals the binomial
coefficient C(2m+1, m); the identity against the dynamic-programming table
is pinned down in the test suite.
"""

from __future__ import annotations

import math
from enum import IntEnum
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidSequence, RankOutOfRange


class PairSymbol(IntEnum):
    """Joint value of one mirrored bit pair; the int order is the rank order."""

    SYM0 = 0
    SYM1 = 1
    ANTI0 = 2
    ANTI1 = 3

    @property
    def bits(self) -> tuple[int, int]:
        """(outer-left bit, outer-right bit) for this pair value."""
        return _BITS[self]

    @property
    def height_step(self) -> int:
        if self is PairSymbol.ANTI0:
            return 1
        if self is PairSymbol.ANTI1:
            return -1
        return 0

    @classmethod
    def from_bits(cls, first: int, second: int) -> "PairSymbol":
        return _FROM_BITS[(first, second)]


_BITS = {
    PairSymbol.SYM0: (0, 0),
    PairSymbol.SYM1: (1, 1),
    PairSymbol.ANTI0: (0, 1),
    PairSymbol.ANTI1: (1, 0),
}
_FROM_BITS = {bits: sym for sym, bits in _BITS.items()}


def is_valid_sequence(seq: Iterable[PairSymbol]) -> bool:
    """True when the running height never goes negative."""
    height = 0
    for sym in seq:
        height += sym.height_step
        if height < 0:
            return False
    return True


class BallotTable:
    """Exact counts of valid sequences, by length and running height.

    ``forward[t][h]`` counts valid sequences of length ``t`` ending at
    height ``h`` (the classic recurrence: two symbols keep the height, one
    raises it, one lowers it, and negative heights are forbidden).
    ``suffix(t, h)`` counts the valid length-``t`` continuations from
    height ``h``; rank and unrank walk those counts.
    """

    def __init__(self, m: int):
        if m < 0:
            raise ValueError("sequence length must be non-negative")
        self.m = m
        forward = [[1]]
        for t in range(1, m + 1):
            prev = forward[-1]
            row = []
            for h in range(t + 1):
                total = 2 * (prev[h] if h < len(prev) else 0)
                if h - 1 >= 0:
                    total += prev[h - 1] if h - 1 < len(prev) else 0
                if h + 1 < len(prev):
                    total += prev[h + 1]
                row.append(total)
            forward.append(row)
        self.forward = forward
        # suffix[t][h] for h <= m - t; heights never exceed the symbols left
        suffix = [[1] * (m + 1)]
        for t in range(1, m + 1):
            prev = suffix[-1]
            row = []
            for h in range(m - t + 1):
                total = 2 * prev[h] + prev[h + 1]
                if h > 0:
                    total += prev[h - 1]
                row.append(total)
            suffix.append(row)
        self._suffix = suffix

    def total(self) -> int:
        """Number of valid sequences of length m."""
        return sum(self.forward[self.m])

    def suffix(self, t: int, h: int) -> int:
        return self._suffix[t][h]


@lru_cache(maxsize=None)
def _table(m: int) -> BallotTable:
    return BallotTable(m)


def count_sequences(m: int) -> int:
    """Number of valid pair-symbol sequences of length ``m``.

    Evaluated in closed form as C(2m+1, m), which the suite verifies
    against :meth:`BallotTable.total` -- the closed form stays cheap for
    the large lengths the parameter search probes.
    """
    if m < 0:
        raise ValueError("sequence length must be non-negative")
    return math.comb(2 * m + 1, m)


_ORDER = (PairSymbol.SYM0, PairSymbol.SYM1, PairSymbol.ANTI0, PairSymbol.ANTI1)


def unrank(m: int, r: int) -> tuple[PairSymbol, ...]:
    """The r-th valid sequence of length m, in lexicographic symbol order."""
    if m < 0 or r < 0 or r >= count_sequences(m):
        raise RankOutOfRange(f"rank {r} outside [0, {count_sequences(max(m, 0))})")
    table = _table(m)
    out = []
    height = 0
    for remaining in range(m, 0, -1):
        for sym in _ORDER:
            next_height = height + sym.height_step
            if next_height < 0:
                continue
            below = table.suffix(remaining - 1, next_height)
            if r < below:
                out.append(sym)
                height = next_height
                break
            r -= below
        else:  # pragma: no cover - counts guarantee a symbol is found
            raise AssertionError("unrank walked past the table")
    return tuple(out)


def rank(seq: Sequence[PairSymbol]) -> int:
    """Position of a valid sequence in lexicographic order; inverse of unrank."""
    if not is_valid_sequence(seq):
        raise InvalidSequence("running height drops below zero")
    m = len(seq)
    table = _table(m)
    r = 0
    height = 0
    for index, sym in enumerate(seq):
        remaining = m - index
        for candidate in _ORDER:
            if candidate is sym:
                break
            next_height = height + candidate.height_step
            if next_height < 0:
                continue
            r += table.suffix(remaining - 1, next_height)
        height += sym.height_step
    return r
