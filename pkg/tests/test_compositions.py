import pytest
from collections import Counter

from hypothesis import given, settings
from hypothesis import strategies as st

from composition_codec.compositions import (
    Composition,
    CompositionMultiset,
    bits_of,
    cumulative_weights,
    fragment,
    multiset_difference_size,
    multiset_subtract,
    sigma_direct,
    sigma_from_weights,
    weight_profile,
)
from composition_codec.errors import (
    DimensionMismatch,
    InconsistentMultiset,
    InvalidMultiset,
    MalformedInput,
    SigmaOutOfRange,
    SymmetryViolation,
)

from conftest import all_strings, brute_fragment, brute_weights

bit_strings = st.text(alphabet="01", min_size=1, max_size=32)


def test_fragment_smallest_example():
    assert fragment("0").classes == {1: Counter({Composition(1, 0): 1})}


def test_fragment_three_bit_example():
    classes = fragment("101").classes
    assert classes[1] == Counter({Composition(0, 1): 2, Composition(1, 0): 1})
    assert classes[2] == Counter({Composition(1, 1): 2})
    assert classes[3] == Counter({Composition(1, 2): 1})


def test_fragment_class_two_of_running_example():
    assert fragment("100101").classes[2] == Counter(
        {Composition(1, 1): 4, Composition(2, 0): 1}
    )


@pytest.mark.parametrize("n", range(1, 9))
def test_fragment_matches_slicing_exhaustively(n):
    for s in all_strings(n):
        got = fragment(s)
        assert got.n == n
        assert {l: c for l, c in got.classes.items()} == brute_fragment(s)


@given(bit_strings)
def test_fragment_matches_slicing(s):
    assert fragment(s).classes == brute_fragment(s)


@given(bit_strings)
def test_fragment_cardinalities(s):
    n = len(s)
    multiset = fragment(s).validate()
    assert multiset.total() == n * (n + 1) // 2
    for length, counter in multiset.classes.items():
        assert counter.total() == n - length + 1


@given(bit_strings)
def test_fragment_reversal_invariance(s):
    assert fragment(s) == fragment(s[::-1])


def test_bits_of_rejects_garbage():
    with pytest.raises(MalformedInput):
        bits_of("")
    with pytest.raises(MalformedInput):
        bits_of("012")


def test_cumulative_weights_examples():
    assert cumulative_weights(fragment("100101")) == (3, 4, 5, 5, 4, 3)
    assert cumulative_weights(fragment("101")) == (2, 2, 2)
    assert cumulative_weights(fragment("1")) == (1,)


@given(bit_strings)
def test_cumulative_weights_match_slicing_and_symmetry(s):
    w = cumulative_weights(fragment(s))
    assert w == brute_weights(s)
    assert w == w[::-1]
    assert w[0] == s.count("1")


def test_cumulative_weights_validates_cardinality():
    broken = fragment("1001")
    broken.classes[2][Composition(1, 1)] -= 1
    broken = CompositionMultiset(4, broken.classes)
    with pytest.raises(InvalidMultiset):
        cumulative_weights(broken)


def test_missing_class_fails_validation():
    broken = fragment("1001")
    del broken.classes[3]
    with pytest.raises(InvalidMultiset, match="class 3"):
        broken.validate()


def test_sigma_from_weights_examples():
    assert sigma_from_weights(cumulative_weights(fragment("1010001010"))) == (1, 1, 1, 1, 0)
    assert sigma_from_weights(cumulative_weights(fragment("100101"))) == (2, 0, 1)
    assert sigma_from_weights((1, 1)) == (1,)


def test_sigma_direct_examples():
    assert sigma_direct("100101") == (2, 0, 1)
    assert sigma_direct("1010001010") == (1, 1, 1, 1, 0)
    assert sigma_direct("11") == (2,)


def test_sigma_rejects_asymmetric_weights():
    with pytest.raises(SymmetryViolation):
        sigma_from_weights((1, 2, 3))


def test_sigma_rejects_out_of_range():
    with pytest.raises(SigmaOutOfRange):
        sigma_from_weights((3, 3))


@pytest.mark.parametrize("n", range(1, 13))
def test_sigma_solver_agrees_with_direct_reading_exhaustively(n):
    for s in all_strings(n):
        w = cumulative_weights(fragment(s))
        assert sigma_from_weights(w) == sigma_direct(s)


@given(bit_strings)
def test_sigma_solver_agrees_with_direct_reading(s):
    assert sigma_from_weights(cumulative_weights(fragment(s))) == sigma_direct(s)


def test_weight_profile_bundles_both():
    profile = weight_profile(fragment("100101"))
    assert profile.n == 6
    assert profile.w == (3, 4, 5, 5, 4, 3)
    assert profile.sigma == (2, 0, 1)


def test_multiset_subtract_multiplicities():
    a = Counter({Composition(1, 1): 4, Composition(2, 0): 1})
    out = multiset_subtract(a, [Composition(1, 1)] * 3)
    assert out == Counter({Composition(1, 1): 1, Composition(2, 0): 1})


def test_multiset_subtract_rejects_missing():
    with pytest.raises(InconsistentMultiset):
        multiset_subtract(Counter({Composition(1, 1): 1}), [Composition(2, 0)])


def test_multiset_subtract_worked_step():
    # removing the known length-8 interior composition exposes the two
    # boundary windows, which happen to share its weight here
    class8 = fragment("1010001010").classes[8]
    assert class8 == Counter({Composition(5, 3): 3})
    assert multiset_subtract(class8, [Composition(5, 3)]) == Counter(
        {Composition(5, 3): 2}
    )


def test_difference_size_zero_for_identical_and_reversal():
    assert multiset_difference_size(fragment("100101"), fragment("100101")) == 0
    assert multiset_difference_size(fragment("01"), fragment("10")) == 0


def test_difference_size_counts_one_shift():
    corrupted = fragment("100101")
    corrupted.classes[2][Composition(1, 1)] -= 1
    corrupted.classes[2][Composition(2, 0)] += 1
    corrupted = CompositionMultiset(6, corrupted.classes)
    assert multiset_difference_size(fragment("100101"), corrupted) == 1


def test_difference_size_requires_same_length():
    with pytest.raises(DimensionMismatch):
        multiset_difference_size(fragment("01"), fragment("011"))
