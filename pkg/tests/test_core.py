import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dyckforest.core import (
    MAX_RANGE,
    U64_MAX,
    NotAMemberError,
    WidthOverflowError,
    central_binomial,
    dyck_mask,
    enumerate_terms,
    first_of_range,
    is_dyck,
    iter_range,
    mersenne,
    range_of,
    range_size,
    successor,
    trailing_ones,
)
from oracles import reference_is_dyck
from reference_data import CENTRAL_BINOMIALS, TERM_PREFIX, TRIPLETS_BY_RANGE


class TestIsDyck:
    @pytest.mark.parametrize(
        "value,expected",
        [(7, True), (9, False), (2, False), (227, False), (0, False), (1, True)],
    )
    def test_examples(self, value, expected):
        assert is_dyck(value) is expected

    def test_exhaustive_below_2_14(self):
        for v in range(1 << 14):
            assert is_dyck(v) == reference_is_dyck(v), v

    @given(st.integers(min_value=0, max_value=U64_MAX))
    def test_matches_reference(self, v):
        assert is_dyck(v) == reference_is_dyck(v)

    def test_negative_is_false(self):
        assert not is_dyck(-5)


class TestDyckMask:
    def test_matches_scalar_exhaustively(self):
        values = np.arange(1 << 14, dtype=np.uint64)
        mask = dyck_mask(values)
        assert mask.tolist() == [is_dyck(v) for v in range(1 << 14)]

    def test_large_values(self):
        rng = np.random.default_rng(7)
        values = rng.integers(0, U64_MAX, size=2000, dtype=np.uint64)
        assert dyck_mask(values).tolist() == [is_dyck(int(v)) for v in values]

    def test_empty(self):
        assert dyck_mask(np.array([], dtype=np.uint64)).shape == (0,)


class TestTrailingOnes:
    @pytest.mark.parametrize("value,expected", [(7, 3), (11, 2), (8, 0), (0, 0), (1, 1)])
    def test_examples(self, value, expected):
        assert trailing_ones(value) == expected

    @given(st.integers(min_value=0, max_value=U64_MAX))
    def test_matches_string_scan(self, v):
        bits = bin(v)[2:]
        assert trailing_ones(v) == len(bits) - len(bits.rstrip("1"))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            trailing_ones(-1)


class TestMersenne:
    @pytest.mark.parametrize("n,expected", [(4, 15), (15, 32767), (1, 1)])
    def test_examples(self, n, expected):
        assert mersenne(n) == expected

    def test_bounds(self):
        assert mersenne(MAX_RANGE) == (1 << 63) - 1
        with pytest.raises(ValueError):
            mersenne(0)
        with pytest.raises(WidthOverflowError):
            mersenne(64)


class TestCentralBinomial:
    def test_prefix(self):
        assert [central_binomial(k) for k in range(17)] == CENTRAL_BINOMIALS

    @pytest.mark.parametrize("k,expected", [(0, 1), (5, 10), (15, 6435)])
    def test_examples(self, k, expected):
        assert central_binomial(k) == expected

    def test_bounds(self):
        assert central_binomial(67) <= U64_MAX
        with pytest.raises(ValueError):
            central_binomial(-1)
        with pytest.raises(WidthOverflowError):
            central_binomial(68)


class TestRanges:
    @pytest.mark.parametrize("value,expected", [(11, 4), (1, 1), (33023, 16)])
    def test_range_of(self, value, expected):
        assert range_of(value) == expected

    def test_range_of_rejects_non_member(self):
        with pytest.raises(NotAMemberError):
            range_of(9)

    @pytest.mark.parametrize("n,expected", [(4, 3), (8, 35), (16, 6435)])
    def test_range_size(self, n, expected):
        assert range_size(n) == expected

    def test_range_size_rejects_zero(self):
        with pytest.raises(ValueError):
            range_size(0)


class TestSuccessor:
    @pytest.mark.parametrize(
        "d,expected", [(31, 39), (32767, 33023), (143, 151), (1, 3)]
    )
    def test_examples(self, d, expected):
        assert successor(d) == expected

    def test_covers_every_member_below_2_14(self):
        # walking successor from 1 must hit exactly the odd values passing
        # membership, in order
        expected = [v for v in range(1, 1 << 14) if is_dyck(v)]
        walked = [1]
        while walked[-1] < expected[-1]:
            walked.append(successor(walked[-1]))
        assert walked == expected

    def test_rejects_non_member(self):
        with pytest.raises(NotAMemberError):
            successor(9)

    def test_overflow_at_top(self):
        assert is_dyck(U64_MAX)
        with pytest.raises(WidthOverflowError):
            successor(U64_MAX)


class TestFirstOfRange:
    @pytest.mark.parametrize("n,expected", [(4, 11), (16, 33023), (1, 1)])
    def test_examples(self, n, expected):
        assert first_of_range(n) == expected

    def test_agrees_with_successor_of_mersenne(self):
        for n in range(2, 23):
            assert first_of_range(n) == successor(mersenne(n - 1)), n

    def test_bounds(self):
        with pytest.raises(ValueError):
            first_of_range(0)
        with pytest.raises(WidthOverflowError):
            first_of_range(64)
        assert first_of_range(MAX_RANGE).bit_length() == MAX_RANGE


class TestIterRange:
    @pytest.mark.parametrize(
        "n,expected",
        [
            (1, [1]),
            (2, [3]),
            (3, [5, 7]),
            (4, [11, 13, 15]),
            (5, [19, 21, 23, 27, 29, 31]),
        ],
    )
    def test_small_ranges(self, n, expected):
        assert list(iter_range(n)) == expected

    def test_matches_membership_filter(self):
        for n in range(1, 15):
            lo, hi = 1 << (n - 1), 1 << n
            assert list(iter_range(n)) == [v for v in range(lo, hi) if is_dyck(v)]

    def test_structure_through_range_16(self):
        for n in range(1, 17):
            terms = list(iter_range(n))
            assert len(terms) == range_size(n)
            assert terms[0] == first_of_range(n)
            assert terms[-1] == mersenne(n)
            assert terms == sorted(terms)

    def test_bounds(self):
        with pytest.raises(ValueError):
            list(iter_range(0))
        with pytest.raises(WidthOverflowError):
            list(iter_range(64))


class TestEnumerateTerms:
    def test_prefix(self):
        assert list(enumerate_terms(21)) == TERM_PREFIX

    def test_single(self):
        assert list(enumerate_terms(1)) == [1]

    def test_21st_term(self):
        assert list(enumerate_terms(21))[-1] == 59

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            list(enumerate_terms(0))


class TestMembershipVersusSuccessorStream:
    def test_sweep_below_2_20(self):
        # membership and the successor walk must agree exactly
        top = 1 << 20
        walked = set()
        v = 1
        while v < top:
            walked.add(v)
            v = successor(v)
        for odd in range(1, top, 2):
            assert (odd in walked) == is_dyck(odd), odd


def test_range_sizes_match_table_counts():
    # ranges 4..8 carry 3 * triplets + lone terms; spot the sizes recorded
    # alongside the census listings
    sizes = {4: 3, 5: 6, 6: 10, 7: 20, 8: 35}
    for n, size in sizes.items():
        assert range_size(n) == size
        assert len(TRIPLETS_BY_RANGE[n]) * 3 <= size
