import math

import pytest

from composition_codec import codebook
from composition_codec.compositions import fragment
from composition_codec.errors import NotACodeword, TooLarge

from conftest import all_strings


def brute_members(n):
    """Codebook membership by definition: boundary bits + ballot scan."""
    out = []
    for s in all_strings(n):
        if s[0] != "0" or s[-1] != "1":
            continue
        height = 0
        for i in range(2, n // 2 + 1):
            first, second = s[i - 1], s[n - i]
            if first != second:
                height += 1 if (first, second) == ("0", "1") else -1
                if height < 0:
                    break
        else:
            out.append(s)
    return out


@pytest.mark.parametrize(
    "k, n, capacity",
    [(1, 3, 2), (2, 5, 6), (4, 7, 20), (7, 11, 252), (8, 12, 462), (10, 14, 1716)],
)
def test_params_picks_minimal_length(k, n, capacity):
    p = codebook.params(k)
    assert (p.n, p.capacity) == (n, capacity)
    assert p.capacity >= 1 << k
    assert codebook.capacity(p.n - 1) < 1 << k


def test_params_rejects_non_positive():
    with pytest.raises(ValueError):
        codebook.params(0)


@pytest.mark.parametrize("n", range(2, 12))
def test_enumeration_matches_brute_filter(n):
    members = codebook.enumerate_codewords(n)
    assert len(members) == len(set(members)) == codebook.capacity(n)
    assert sorted(members) == brute_members(n)


def test_enumeration_examples():
    assert set(codebook.enumerate_codewords(4)) == {"0001", "0011", "0111"}
    assert codebook.enumerate_codewords(2) == ["01"]
    assert len(codebook.enumerate_codewords(6)) == 10


def test_enumeration_guard():
    with pytest.raises(TooLarge):
        codebook.enumerate_codewords(25)


@pytest.mark.parametrize("n", range(3, 15))
def test_capacity_matches_enumeration_and_binomial(n):
    cap = codebook.capacity(n)
    assert cap == len(codebook.enumerate_codewords(n))
    if n % 2 == 0:
        assert cap == math.comb(n - 1, n // 2 - 1)


@pytest.mark.parametrize("n", range(4, 65, 2))
def test_capacity_respects_lower_bound(n):
    bound = 3 * 2 ** (n - 5) / math.sqrt(2 * math.pi * (n - 2))
    assert codebook.capacity(n) >= bound


def test_encode_shortest_messages():
    assert codebook.encode("0") == "001"
    assert codebook.encode("1") == "011"


def test_encode_two_bits_lands_on_first_codeword():
    assert codebook.encode("00") == codebook.enumerate_codewords(5)[0] == "00001"


@pytest.mark.parametrize("k", range(1, 9))
def test_encode_message_of_round_trip(k):
    seen = set()
    for r in range(1 << k):
        message = format(r, f"0{k}b")
        codeword = codebook.encode(message)
        assert codebook.is_codeword(codeword)
        assert codebook.message_of(codeword, k) == message
        seen.add(codeword)
    assert len(seen) == 1 << k


def test_membership_examples():
    assert codebook.is_codeword("0001")
    assert codebook.is_codeword("0011")
    assert codebook.is_codeword("0111")
    assert not codebook.is_codeword("0101")
    assert not codebook.is_codeword("1001")
    assert not codebook.is_codeword("0")
    assert not codebook.is_codeword("abc")


def test_message_of_rejects_non_codewords():
    with pytest.raises(NotACodeword):
        codebook.message_of("0101", 2)


def test_message_of_rejects_rank_overflow():
    # "0011" has pair rank 2, which no 1-bit message reaches
    with pytest.raises(NotACodeword):
        codebook.message_of("0011", 1)


@pytest.mark.parametrize("n", range(2, 15))
def test_prefixes_strictly_lighter_than_suffixes(n):
    for codeword in codebook.enumerate_codewords(n):
        for j in range(1, n // 2 + 1):
            assert codeword[:j].count("1") < codeword[n - j :].count("1")


@pytest.mark.parametrize("n", range(2, 11))
def test_no_codeword_reversal_is_a_codeword(n):
    members = set(codebook.enumerate_codewords(n))
    assert all(word[::-1] not in members for word in members)


def test_decode_round_trip_through_multiset():
    for k in (1, 2, 5):
        for r in range(1 << k):
            message = format(r, f"0{k}b")
            assert codebook.decode(fragment(codebook.encode(message)), k) == message
