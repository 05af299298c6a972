from itertools import product
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from composition_codec.ballot import (
    BallotTable,
    PairSymbol,
    count_sequences,
    is_valid_sequence,
    rank,
    unrank,
)
from composition_codec.errors import InvalidSequence, RankOutOfRange

SYM0, SYM1, ANTI0, ANTI1 = (
    PairSymbol.SYM0,
    PairSymbol.SYM1,
    PairSymbol.ANTI0,
    PairSymbol.ANTI1,
)


def brute_sequences(m):
    """All valid sequences of length m, in lexicographic order."""
    return [
        seq
        for seq in product(sorted(PairSymbol), repeat=m)
        if is_valid_sequence(seq)
    ]


def test_symbol_bit_mapping_round_trips():
    for sym in PairSymbol:
        assert PairSymbol.from_bits(*sym.bits) is sym
    assert ANTI0.bits == (0, 1)
    assert ANTI1.bits == (1, 0)


@pytest.mark.parametrize(
    "seq, ok",
    [
        ([ANTI0, ANTI1], True),
        ([ANTI1], False),
        ([SYM1, ANTI0, SYM0, ANTI1], True),
        ([], True),
        ([ANTI0, ANTI1, ANTI1], False),
    ],
)
def test_is_valid_sequence(seq, ok):
    assert is_valid_sequence(seq) is ok


def test_count_small_values():
    assert count_sequences(0) == 1
    assert count_sequences(1) == 3
    assert count_sequences(3) == 35
    assert count_sequences(1) == len(brute_sequences(1))
    assert count_sequences(3) == len(brute_sequences(3))


def test_table_matches_closed_form_up_to_64():
    table = BallotTable(64)
    for m in range(65):
        assert sum(table.forward[m]) == comb(2 * m + 1, m)
    assert table.total() == comb(129, 64)
    assert table.suffix(64, 0) == comb(129, 64)


@pytest.mark.parametrize("m", range(0, 9))
def test_unrank_enumerates_in_lexicographic_order(m):
    expected = brute_sequences(m)
    got = [unrank(m, r) for r in range(count_sequences(m))]
    assert [tuple(seq) for seq in got] == expected


@pytest.mark.parametrize("m", range(0, 9))
def test_rank_inverts_unrank(m):
    for r in range(count_sequences(m)):
        assert rank(unrank(m, r)) == r


def test_unrank_first_values_at_m1():
    assert unrank(1, 0) == (SYM0,)
    assert unrank(1, 1) == (SYM1,)
    assert unrank(1, 2) == (ANTI0,)


def test_unrank_last_sequence():
    assert unrank(3, 34) == tuple(brute_sequences(3)[-1])


def test_rank_of_trivial_sequences():
    assert rank([]) == 0
    assert rank([SYM0]) == 0


def test_rank_rejects_invalid_sequence():
    with pytest.raises(InvalidSequence):
        rank([ANTI1])


def test_unrank_rejects_out_of_range():
    with pytest.raises(RankOutOfRange):
        unrank(2, count_sequences(2))
    with pytest.raises(RankOutOfRange):
        unrank(2, -1)


@given(st.integers(0, 40), st.data())
def test_rank_unrank_bijection_random(m, data):
    r = data.draw(st.integers(0, count_sequences(m) - 1))
    seq = unrank(m, r)
    assert len(seq) == m
    assert is_valid_sequence(seq)
    assert rank(seq) == r


@given(st.integers(0, 30), st.data())
def test_heights_stay_non_negative(m, data):
    r = data.draw(st.integers(0, count_sequences(m) - 1))
    height = 0
    for sym in unrank(m, r):
        height += sym.height_step
        assert height >= 0


@given(st.integers(0, 12), st.data())
def test_unrank_is_monotone(m, data):
    top = count_sequences(m) - 1
    r1 = data.draw(st.integers(0, top))
    r2 = data.draw(st.integers(0, top))
    if r1 > r2:
        r1, r2 = r2, r1
    if r1 != r2:
        assert unrank(m, r1) < unrank(m, r2)
