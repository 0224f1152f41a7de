"""Sumset arithmetic: examples, validation, and the strongness equivalence."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from iasi import (
    DomainError,
    IntSet,
    difference_set,
    is_strong_pair,
    sumset,
    translate,
)
from oracles import brute_difference_set, brute_sumset
from strategies import int_sets


class TestIntSet:
    def test_from_iterable_sorts_and_dedups(self):
        assert IntSet.from_iterable([3, 1, 3, 0]).elements == (0, 1, 3)

    def test_rejects_negative_elements(self):
        with pytest.raises(DomainError):
            IntSet.of(-1, 2)

    def test_rejects_unsorted_direct_construction(self):
        with pytest.raises(DomainError):
            IntSet((2, 1))

    def test_rejects_duplicates_direct_construction(self):
        with pytest.raises(DomainError):
            IntSet((1, 1))

    def test_json_round_trip(self):
        s = IntSet.of(0, 1, 4)
        assert s.to_json() == [0, 1, 4]
        assert IntSet.from_json(s.to_json()) == s


class TestSumset:
    def test_all_sums_distinct(self):
        assert sumset(IntSet.of(0, 1), IntSet.of(0, 2)).elements == (0, 1, 2, 3)

    def test_singleton_translation(self):
        assert sumset(IntSet.of(0), IntSet.of(5, 7)).elements == (5, 7)

    def test_collision(self):
        # 0 + 3 = 1 + 2
        assert sumset(IntSet.of(0, 1), IntSet.of(2, 3)).elements == (2, 3, 4)

    def test_empty_input_rejected(self):
        with pytest.raises(DomainError):
            sumset(IntSet(), IntSet.of(1))

    @given(a=int_sets, b=int_sets)
    def test_matches_brute_force(self, a, b):
        assert sumset(a, b).elements == brute_sumset(a.elements, b.elements)

    @given(a=int_sets, b=int_sets)
    def test_cardinality_bounds(self, a, b):
        s = sumset(a, b)
        assert max(len(a), len(b)) <= len(s) <= len(a) * len(b)

    @given(a=int_sets, b=int_sets)
    def test_commutative(self, a, b):
        assert sumset(a, b) == sumset(b, a)

    @given(a=int_sets, b=int_sets, c=int_sets)
    def test_associative(self, a, b, c):
        assert sumset(sumset(a, b), c) == sumset(a, sumset(b, c))


class TestDifferenceSet:
    def test_singleton_has_empty_difference_set(self):
        assert difference_set(IntSet.of(5)).elements == ()

    def test_pairwise_differences(self):
        assert difference_set(IntSet.of(1, 3, 4)).elements == (1, 2, 3)

    def test_arithmetic_progression(self):
        assert difference_set(IntSet.of(0, 2, 4)).elements == (2, 4)

    def test_zero_never_included(self):
        # distinct pairs only, so 0 cannot appear
        assert 0 not in difference_set(IntSet.of(0, 1, 2, 7))

    @given(a=int_sets)
    def test_matches_brute_force(self, a):
        assert difference_set(a).elements == brute_difference_set(a.elements)


class TestStrongPair:
    def test_disjoint_differences(self):
        assert is_strong_pair(IntSet.of(0, 1), IntSet.of(0, 2))

    def test_shared_difference(self):
        assert not is_strong_pair(IntSet.of(0, 1), IntSet.of(2, 3))

    def test_singleton_always_strong(self):
        assert is_strong_pair(IntSet.of(7), IntSet.of(0, 1, 2))

    @given(a=int_sets, b=int_sets)
    def test_criteria_agree(self, a, b):
        # cross_check raises InternalCheckError on any disagreement
        got = is_strong_pair(a, b, cross_check=True)
        assert got == (len(sumset(a, b)) == len(a) * len(b))


class TestTranslate:
    def test_shift(self):
        assert translate(IntSet.of(0, 3), 5).elements == (5, 8)

    def test_identity(self):
        assert translate(IntSet.of(1), 0).elements == (1,)

    def test_difference_set_invariant(self):
        assert difference_set(translate(IntSet.of(0, 2, 5), 9)).elements == (2, 3, 5)

    @given(a=int_sets, t=st.integers(0, 1000))
    def test_preserves_cardinality_and_differences(self, a, t):
        shifted = translate(a, t)
        assert len(shifted) == len(a)
        assert difference_set(shifted) == difference_set(a)

    @given(a=int_sets, b=int_sets, t=st.integers(0, 1000))
    def test_preserves_sumset_cardinality(self, a, b, t):
        assert len(sumset(translate(a, t), b)) == len(sumset(a, b))
