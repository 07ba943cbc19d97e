"""
Тесты PackedLabelString: access / partial rank / select над {0..2^p − 1}.
"""
import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.errors import IndexOutOfRange, LabelOutOfRange, OrdinalOutOfRange
from app.succinct import PackedLabelString, seq_access, seq_build, seq_partial_rank, seq_select


@st.composite
def label_strings(draw):
    p = draw(st.integers(1, 5))
    labels = draw(st.lists(st.integers(0, (1 << p) - 1), min_size=1, max_size=300))
    return labels, p


class TestExamples:

    def test_two_bit_labels(self):
        s = seq_build([2, 0, 3, 2, 1, 2], 2)
        assert [seq_access(s, i) for i in range(1, 7)] == [2, 0, 3, 2, 1, 2]
        assert seq_select(s, 2, 3) == 6
        assert seq_select(s, 0, 1) == 2
        assert seq_partial_rank(s, 4) == 2
        assert seq_partial_rank(s, 6) == 3

    def test_cumulative_counts(self):
        s = PackedLabelString([1, 0, 1], 1)
        assert s.cumulative == (0, 1, 3)
        assert s.count(1) == 2

    def test_cumulative_is_not_copied(self):
        s = PackedLabelString(list(range(1 << 12)), 12)
        assert s.cumulative is s.cumulative
        assert s.cumulative_at(5) == 5

    def test_label_at_rank(self):
        s = seq_build([2, 0, 3, 2, 1, 2], 2)
        # устойчивая сортировка: 0 | 1 | 2 2 2 | 3
        assert [s.label_at_rank(r) for r in range(1, 7)] == [0, 1, 2, 2, 2, 3]
        with pytest.raises(IndexOutOfRange):
            s.label_at_rank(7)

    def test_label_too_wide(self):
        with pytest.raises(LabelOutOfRange):
            PackedLabelString([4], 2)

    def test_bad_positions(self):
        s = PackedLabelString([0, 1], 1)
        with pytest.raises(IndexOutOfRange):
            s.access(3)
        with pytest.raises(OrdinalOutOfRange):
            s.select(1, 2)
        with pytest.raises(LabelOutOfRange):
            s.select(2, 1)

    def test_payload_is_m_times_p(self):
        s = PackedLabelString(list(range(8)) * 5, 3)
        assert s.payload_bits() == 40 * 3
        assert s.space_bits().total >= s.payload_bits()


class TestLaws:

    @settings(max_examples=80, deadline=None)
    @given(label_strings())
    def test_matches_naive(self, case):
        labels, p = case
        s = PackedLabelString(labels, p)
        assert s.to_labels() == labels
        for i, label in enumerate(labels, start=1):
            assert s.partial_rank(i) == labels[:i].count(label)
            assert s.select(label, s.partial_rank(i)) == i

    @settings(max_examples=60, deadline=None)
    @given(label_strings())
    def test_cumulative_orders_by_label(self, case):
        labels, p = case
        s = PackedLabelString(labels, p)
        cumulative = s.cumulative
        # C[ℓ] + partial_rank — позиция в устойчивой сортировке по метке
        order = sorted(range(1, len(labels) + 1), key=lambda i: labels[i - 1])
        for target, i in enumerate(order, start=1):
            assert cumulative[s.access(i)] + s.partial_rank(i) == target
