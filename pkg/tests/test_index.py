"""
Тесты сжатого SA на примере "gtaca#gtcca#" и на небольших случайных базах.
"""
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.errors import (
    EmptyDatabase,
    EmptyPattern,
    IndexOutOfRange,
    InvalidPatternCharacter,
    InvalidStride,
    NotGroupStart,
    UniquenessViolation,
)
from app.index import (
    ALL,
    HIGH,
    LOW,
    TERMINAL,
    AccessStats,
    build,
    parse_stride,
    resolve_stride,
)
from app.model import GenotypeMatrix, SsnpSchema, VirtualText
from conftest import GOLDEN_SA, GOLDEN_STARTS, golden_vt, random_instance, with_rows


class TestStride:

    def test_auto(self):
        assert resolve_stride("auto", 5) == 2
        assert resolve_stride("auto", 20_000) == 4
        assert resolve_stride("AUTO", 1) == 1

    def test_explicit(self):
        assert parse_stride("3") == 3
        assert resolve_stride(7, 5) == 7

    @pytest.mark.parametrize("bad", ["0", "-2", "x", 0, True])
    def test_invalid(self, bad):
        with pytest.raises(InvalidStride):
            parse_stride(bad)


class TestGoldenBuild:

    def test_sa_access_all_ranks(self, golden_csa):
        assert [golden_csa.sa_access(i) for i in range(1, 13)] == GOLDEN_SA

    def test_sa_access_stride_one(self):
        csa = build(golden_vt(), stride=1)
        assert csa.sa_range(1, 12) == GOLDEN_SA

    def test_terminal_anchor_and_chain(self, golden_csa):
        assert golden_csa.anchors.positions[TERMINAL].tolist() == [12, 6]
        assert golden_csa.chain.bits[0].to_list() == [1, 0]
        assert golden_csa.chain.zeros == (1,)

    def test_block_starts(self, golden_csa):
        assert golden_csa.directory.starts.to_list() == GOLDEN_STARTS

    def test_block_keys(self, golden_csa):
        keys = [(meta.column, meta.side) for meta in golden_csa.directory.meta]
        assert keys == [
            (6, ALL), (5, ALL), (3, LOW), (4, ALL), (3, HIGH),
            (1, LOW), (1, HIGH), (2, LOW), (2, HIGH),
        ]
        high = golden_csa.directory.meta[4]
        assert (high.site, high.side_offset) == (1, 1)
        assert golden_csa.directory.block_range(4) == (6, 7)

    def test_single_accesses(self, golden_csa):
        assert golden_csa.sa_access(1) == 12
        assert golden_csa.sa_access(7) == 4
        assert golden_csa.sa_access(5) == 3

    def test_rank_out_of_range(self, golden_csa):
        with pytest.raises(IndexOutOfRange):
            golden_csa.sa_access(0)
        with pytest.raises(IndexOutOfRange):
            golden_csa.sa_access(13)

    def test_auto_stride_used(self, golden_csa):
        assert golden_csa.g == 2
        assert golden_csa.anchors.ids == (TERMINAL,)

    def test_stride_one_anchors(self):
        csa = build(golden_vt(), stride=1)
        assert csa.anchors.ids == (1, TERMINAL)
        assert csa.groups == ()


class TestChain:

    def test_sigma_step(self, golden_csa):
        assert golden_csa.sigma_step(1, 1) == 2
        assert golden_csa.sigma_step(1, 2) == 1
        with pytest.raises(IndexOutOfRange):
            golden_csa.sigma_step(2, 1)
        with pytest.raises(IndexOutOfRange):
            golden_csa.sigma_step(1, 3)

    def test_chain_eval_non_anchor(self, golden_csa):
        assert golden_csa.chain_eval(1, 1) == (TERMINAL, 2)

    def test_chain_eval_anchor(self):
        csa = build(golden_vt(), stride=1)
        assert csa.chain_eval(1, 2) == (1, 2)

    def test_packed_forward(self, golden_csa):
        assert golden_csa.groups[0].labels.to_labels() == [1, 0]
        assert golden_csa.packed_forward(1, 1) == 2
        assert golden_csa.packed_forward(1, 2) == 1
        assert golden_csa.packed_inverse(1, 2) == 1

    def test_not_group_start(self):
        vt = random_instance(11, sigma=4, k=6, m=8)
        csa = build(vt, stride=3)
        assert [grp.first_site for grp in csa.groups] == [1, 4]
        with pytest.raises(NotGroupStart):
            csa.packed_forward(2, 1)

    def test_single_row_is_identity(self):
        vt = random_instance(4, sigma=4, k=5, m=1)
        csa = build(vt, stride=2)
        assert all(csa.sigma_step(j, 1) == 1 for j in range(1, 6))

    def test_equal_labels_are_identity(self):
        vt = random_instance(8, sigma=4, k=4, m=6)
        same = with_rows(vt, [vt.matrix.row(1)] * 6)
        csa = build(same, stride=5)
        grp = csa.groups[0]
        assert grp.p == 4
        assert [csa.packed_forward(1, q) for q in range(1, 7)] == list(range(1, 7))

    def test_access_stats(self):
        vt = random_instance(21, sigma=4, k=9, m=12)
        csa = build(vt, stride=4)
        stats = AccessStats()
        for rank in range(1, csa.length + 1):
            csa.sa_access(rank, stats)
        assert stats.accesses == csa.length
        assert stats.max_steps <= csa.g
        assert stats.packed > 0


class TestSearch:

    def test_count_and_locate(self, golden_csa):
        assert golden_csa.count("ca") == 2
        assert golden_csa.locate("ca") == [4, 10]
        assert golden_csa.locate("gt") == [1, 7]

    def test_absent_character(self, golden_csa):
        assert golden_csa.count("zz") == 0
        assert golden_csa.locate("zz") == []

    def test_absent_pattern(self, golden_csa):
        assert golden_csa.count("tt") == 0
        assert golden_csa.locate("acag") == []

    def test_whole_word(self, golden_csa):
        assert golden_csa.locate("gtcca") == [7]
        assert golden_csa.locate_hits("gtcca") == [(7, 2, 1)]

    def test_rejected_patterns(self, golden_csa):
        with pytest.raises(InvalidPatternCharacter):
            golden_csa.count("a#g")
        with pytest.raises(InvalidPatternCharacter):
            golden_csa.count("g?")
        with pytest.raises(EmptyPattern):
            golden_csa.locate("")

    def test_extract(self, golden_csa):
        assert golden_csa.extract(3, 4) == "aca#"
        assert golden_csa.extract(10, 10) == "ca#"


class TestBuildErrors:

    def test_empty_database(self):
        schema = SsnpSchema(n=3, alphabet="ab", sites=(), alleles=(), reference="aba")
        with pytest.raises(EmptyDatabase):
            build(VirtualText(schema, GenotypeMatrix(np.zeros((0, 0), dtype=np.uint8))))

    def test_invalid_database(self):
        schema = SsnpSchema(n=5, alphabet="abc", sites=(3,), alleles=(("a", "c"),), reference="ab?ab")
        with pytest.raises(UniquenessViolation):
            build(VirtualText(schema, GenotypeMatrix.from_rows(["0", "1"])))

    def test_group_too_wide(self):
        vt = random_instance(3, sigma=4, k=10, m=4)
        with pytest.raises(InvalidStride):
            build(vt, stride=20, max_group_bits=8)


class TestSpaceReport:

    def test_anchor_integers(self, golden_csa):
        assert golden_csa.space_report().anchor_ints == 2
        assert build(golden_vt(), stride=1).space_report().anchor_ints == 4

    def test_json_keys(self, golden_csa):
        data = golden_csa.space_report().as_json()
        assert list(data) == [
            "directory_bits", "meta_entries", "anchor_ints", "chain_bits",
            "group_bits", "total_bits", "plain_sa_bits",
        ]
        assert data["meta_entries"] == 9
        assert data["plain_sa_bits"] == 12 * 4

    def test_totals_add_up(self):
        csa = build(random_instance(30, sigma=4, k=7, m=9), stride=3)
        report = csa.space_report()
        assert report.chain_payload == 7 * 9
        assert report.matrix_bits == 7 * 9
        assert report.anchor_ints == 9 * (7 // 3 + 1)
        assert report.total_bits == (
            report.directory_bits + report.meta_bits + report.anchor_bits + report.chain_bits
            + report.group_bits + report.schema_bits + report.matrix_bits
        )


class TestKZero:

    def test_reference_only(self):
        schema = SsnpSchema(n=4, alphabet="abc", sites=(), alleles=(), reference="abca")
        vt = VirtualText(schema, GenotypeMatrix(np.zeros((3, 0), dtype=np.uint8)))
        csa = build(vt)
        # "abca#abca#abca#": все сентинелы, затем блоки колонок по одному на колонку
        assert csa.sa_range(1, 3) == [15, 10, 5]
        assert len(csa.directory) == 5
        assert csa.locate("ca") == [3, 8, 13]
        assert csa.terminal_order_is_decreasing()
