"""
Тесты IndexedBitvector: access/rank/select против наивных списков.
"""
import os
import sys
import unittest

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.errors import IndexOutOfRange, OrdinalOutOfRange
from app.succinct import IndexedBitvector, bv_access, bv_build, bv_rank, bv_select, pack_bits
from app.succinct.bitvector import space_bound


def naive_select(bits, j, bit):
    seen = 0
    for i, b in enumerate(bits, start=1):
        if b == bit:
            seen += 1
            if seen == j:
                return i
    raise AssertionError("ordinal out of range")


class TestSmallVectors:

    def test_access_rank_select_example(self):
        bv = bv_build([1, 0, 1, 1, 0])
        assert [bv_access(bv, i) for i in range(1, 6)] == [1, 0, 1, 1, 0]
        assert bv_rank(bv, 3, 1) == 2
        assert bv_rank(bv, 3, 0) == 1
        assert bv_select(bv, 2, 1) == 3
        assert bv_select(bv, 2, 0) == 5

    def test_rank_zero_prefix(self):
        bv = bv_build([1, 1])
        assert bv.rank(0, 1) == 0
        assert bv.rank(0, 0) == 0

    def test_empty_vector(self):
        bv = bv_build([])
        assert len(bv) == 0
        assert bv.rank(0) == 0
        with pytest.raises(OrdinalOutOfRange):
            bv.select(1, 1)

    def test_access_out_of_range(self):
        bv = bv_build([0, 1])
        with pytest.raises(IndexOutOfRange):
            bv.access(0)
        with pytest.raises(IndexOutOfRange):
            bv.access(3)
        with pytest.raises(IndexOutOfRange):
            bv.rank(3)

    def test_select_beyond_count(self):
        bv = bv_build([0, 1, 0])
        with pytest.raises(OrdinalOutOfRange):
            bv.select(2, 1)
        with pytest.raises(OrdinalOutOfRange):
            bv.select(0, 0)

    def test_counts(self):
        bv = bv_build([1, 0, 0, 1, 0])
        assert bv.ones == 2
        assert bv.zeros == 3
        assert bv.to_list() == [1, 0, 0, 1, 0]

    def test_from_limbs_masks_tail(self):
        limbs, length = pack_bits([1, 1, 1])
        dirty = limbs.copy()
        dirty[0] = np.uint64(0xFF)
        assert IndexedBitvector.from_limbs(dirty, length) == IndexedBitvector(limbs, length)

    def test_limbs_are_read_only(self):
        bv = bv_build([1, 0, 1])
        with pytest.raises(ValueError):
            bv.limbs[0] = 0


class TestLargeVectors(unittest.TestCase):
    """Несколько суперблоков и сэмплов select."""

    def _check(self, bits):
        bv = IndexedBitvector.build(bits)
        prefix = np.concatenate([[0], np.cumsum(bits)])
        rng = np.random.default_rng(7)
        for i in rng.integers(0, len(bits) + 1, size=400).tolist():
            self.assertEqual(bv.rank(i, 1), int(prefix[i]))
            self.assertEqual(bv.rank(i, 0), i - int(prefix[i]))
        ones = np.flatnonzero(bits) + 1
        zeros = np.flatnonzero(bits == 0) + 1
        for j in range(1, len(ones) + 1, max(1, len(ones) // 300)):
            self.assertEqual(bv.select(j, 1), int(ones[j - 1]))
        for j in range(1, len(zeros) + 1, max(1, len(zeros) // 300)):
            self.assertEqual(bv.select(j, 0), int(zeros[j - 1]))
        if len(ones):
            self.assertEqual(bv.select(len(ones), 1), int(ones[-1]))
        if len(zeros):
            self.assertEqual(bv.select(len(zeros), 0), int(zeros[-1]))

    def test_dense(self):
        rng = np.random.default_rng(1)
        self._check((rng.random(20_011) < 0.5).astype(np.uint8))

    def test_sparse(self):
        rng = np.random.default_rng(2)
        self._check((rng.random(50_000) < 0.01).astype(np.uint8))

    def test_all_ones_and_all_zeros(self):
        self._check(np.ones(4_100, dtype=np.uint8))
        self._check(np.zeros(4_100, dtype=np.uint8))

    def test_space_bound(self):
        for length in (0, 1, 64, 511, 513, 100_000):
            bv = IndexedBitvector.build(np.ones(length, dtype=np.uint8))
            self.assertLessEqual(bv.space_bits().total, space_bound(length))


@pytest.mark.parametrize("density", [0.5, 0.03])
def test_every_position_of_a_long_vector(density):
    rng = np.random.default_rng(100_003)
    bits = (rng.random(100_000) < density).astype(np.uint8)
    bv = IndexedBitvector.build(bits)

    prefix = np.concatenate([[0], np.cumsum(bits)]).tolist()
    for i in range(len(bits) + 1):
        assert bv.rank(i, 1) == prefix[i]
        assert bv.rank(i, 0) == i - prefix[i]

    assert bv.to_list() == bits.tolist()
    for bit in (0, 1):
        where = (np.flatnonzero(bits == bit) + 1).tolist()
        assert [bv.select(j, bit) for j in range(1, len(where) + 1)] == where
        # select и rank взаимно обратны на позициях со значением bit
        assert all(bv.rank(pos, bit) == j for j, pos in enumerate(where, start=1))


class TestBitvectorLaws:

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 1), max_size=1500))
    def test_matches_naive(self, bits):
        bv = IndexedBitvector.build(bits)
        assert bv.to_list() == bits
        for i in range(0, len(bits) + 1, max(1, len(bits) // 50)):
            assert bv.rank(i, 1) == sum(bits[:i])
        for bit in (0, 1):
            total = bits.count(bit)
            for j in range(1, total + 1, max(1, total // 40)):
                assert bv.select(j, bit) == naive_select(bits, j, bit)

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(0, 1), min_size=1, max_size=800))
    def test_select_inverts_rank(self, bits):
        bv = IndexedBitvector.build(bits)
        for i in range(1, len(bits) + 1):
            b = bv.access(i)
            assert bv.select(bv.rank(i, b), b) == i
