"""
Построение CompressedSA из VirtualText.

Шаги:
  1. SA полного текста через divsufsort (независимо от наивного оракула).
  2. Терминальный порядок: ранги 1..m — позиции сентинелов, E_TERMINAL = SA[1..m].
  3. Для j = k..1: порядок строк на сайте j, B_j над порядком ниже по течению,
     проверка двух серий, E_j для якорных сайтов.
  4. Классификация рангов по ключу (col, side), проверка непрерывности
     блоков и переноса порядка, битвектор starts и meta.
  5. Упакованные группы из битов сайтов.
"""
import logging
import math
import time
from typing import Union

import numpy as np
from pydivsufsort import divsufsort

from app.errors import EmptyDatabase, InvalidStride, SsnpViolation, UniquenessViolation
from app.index.chain import AnchorSet, PermutationChain, make_group, pack_labels
from app.index.csa import CompressedSA
from app.index.directory import ALL, HIGH, LOW, TERMINAL, BlockDirectory, BlockMeta
from app.model.text import VirtualText
from app.model.validate import validate
from app.succinct import IndexedBitvector

logger = logging.getLogger("snpsa.index.builder")

AUTO = "auto"
DEFAULT_MAX_GROUP_BITS = 16


def parse_stride(value) -> Union[int, str]:
    """'auto' | целое >= 1 (строкой или числом)."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text == AUTO:
            return AUTO
        try:
            value = int(text)
        except ValueError:
            raise InvalidStride(f"stride must be an integer or 'auto', got {value!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
        raise InvalidStride(f"stride must be >= 1, got {value!r}")
    return int(value)


def resolve_stride(stride, n: int) -> int:
    """AUTO → max(1, round(sqrt(log2 n)))."""
    stride = parse_stride(stride)
    if stride == AUTO:
        return max(1, round(math.sqrt(math.log2(max(n, 1)))))
    return stride


def _position_dtype(length: int):
    return np.uint32 if length < 1 << 32 else np.uint64


def _site_orders(vt: VirtualText, isa: np.ndarray) -> list[np.ndarray]:
    """Для каждого сайта j — строки (1-based) в порядке суффиксов с колонки c_j."""
    n, m = vt.n, vt.m
    base = np.arange(m, dtype=np.int64) * (n + 1)
    orders = [np.zeros(0, dtype=np.int64)]  # заглушка под индекс 0
    for col in vt.schema.sites:
        ranks = isa[base + col - 1]
        orders.append(np.argsort(ranks, kind="stable") + 1)
    return orders


def _build_chain(vt: VirtualText, site_rows: list, terminal_rows: np.ndarray) -> PermutationChain:
    bits = vt.matrix.bits
    columns = [None] * vt.k
    for j in range(vt.k, 0, -1):
        downstream = site_rows[j + 1] if j < vt.k else terminal_rows
        column = bits[downstream - 1, j - 1]
        # порядок сайта j = строки с битом 0, затем с битом 1, каждая группа в порядке ниже по течению
        expected = np.concatenate([downstream[column == 0], downstream[column == 1]])
        if not np.array_equal(expected, site_rows[j]):
            raise SsnpViolation(f"site {j}: row order is not two incrementing runs of site {j + 1}")
        columns[j - 1] = column
    return PermutationChain(tuple(IndexedBitvector.build(c) for c in columns))


def _build_directory(vt: VirtualText, sa: np.ndarray, site_rows: list,
                     terminal_rows: np.ndarray, zeros: tuple) -> BlockDirectory:
    n, m, schema = vt.n, vt.m, vt.schema

    # next_site[col] — первый сайт с c_j >= col, TERMINAL после c_k
    next_site = np.zeros(n + 2, dtype=np.int64)
    for site, col in reversed(list(enumerate(schema.sites, start=1))):
        next_site[1: col + 1] = site

    rows0, cols0 = np.divmod(sa - 1, n + 1)
    cols = cols0 + 1
    sites = next_site[cols]
    side = np.full(sa.size, ALL, dtype=np.int64)
    has_site = sites > 0
    if has_site.any():
        side[has_site] = vt.matrix.bits[rows0[has_site], sites[has_site] - 1]
    keys = cols * 4 + side

    boundary = np.ones(sa.size, dtype=bool)
    boundary[1:] = keys[1:] != keys[:-1]
    block_starts = np.flatnonzero(boundary)
    if np.unique(keys).size != block_starts.size:
        raise SsnpViolation("a (column, side) key occupies more than one SA interval")

    rows = rows0 + 1
    ends = np.append(block_starts[1:], sa.size)
    meta = []
    for start, end in zip(block_starts.tolist(), ends.tolist()):
        col, site, s = int(cols[start]), int(sites[start]), int(side[start])
        if site == TERMINAL:
            offset, expected = 0, terminal_rows
        elif s == LOW:
            offset, expected = 0, site_rows[site][: zeros[site - 1]]
        else:
            offset, expected = zeros[site - 1], site_rows[site][zeros[site - 1]:]
        if not np.array_equal(rows[start:end], expected):
            raise SsnpViolation(
                f"block (column {col}, site {site}) does not follow its site order"
            )
        meta.append(BlockMeta(col, site, s, offset))

    return BlockDirectory(IndexedBitvector.build(boundary), tuple(meta))


def _build_groups(vt: VirtualText, g: int, site_rows: list, terminal_rows: np.ndarray,
                  max_group_bits: int) -> tuple:
    k = vt.k
    groups = []
    anchors = [(a, a) for a in range(g, k + 1, g)] + [(TERMINAL, k + 1)]
    previous = 0
    for anchor, end in anchors:
        p = end - previous - 1
        if p > 0:
            if p > max_group_bits:
                raise InvalidStride(
                    f"stride {g} leaves {p} sites before an anchor, limit is {max_group_bits}"
                )
            rows = terminal_rows if anchor == TERMINAL else site_rows[anchor]
            first = previous + 1
            labels = pack_labels(vt.matrix.bits, rows, range(first, first + p))
            groups.append(make_group(first, p, anchor, labels))
        previous = end
    return tuple(groups)


def build(
    vt: VirtualText,
    stride="auto",
    max_group_bits: int = DEFAULT_MAX_GROUP_BITS,
    check: bool = True,
) -> CompressedSA:
    """
    Строит сжатый суффиксный массив.

    Args:
        vt:             база (схема + матрица)
        stride:         шаг якорей g или "auto"
        max_group_bits: предел длины упакованной группы
        check:          прогнать validate перед построением

    Raises:
        EmptyDatabase, UniquenessViolation, SsnpViolation, InvalidStride
    """
    started = time.perf_counter()
    n, m, k = vt.n, vt.m, vt.k
    if m == 0:
        raise EmptyDatabase("database has no words")
    g = resolve_stride(stride, n)
    if check:
        report = validate(vt)
        if not report.ok:
            raise UniquenessViolation("database violates the SSNP uniqueness condition", report)

    codes = vt.codes()
    sa = np.asarray(divsufsort(codes), dtype=np.int64) + 1
    isa = np.empty_like(sa)
    isa[sa - 1] = np.arange(1, sa.size + 1)
    logger.debug("Suffix array ready: N=%d", sa.size)

    terminal = sa[:m]
    if np.any(terminal % (n + 1)):
        raise SsnpViolation("first m suffixes are not all sentinel positions")
    terminal_rows = terminal // (n + 1)

    site_rows = _site_orders(vt, isa)
    chain = _build_chain(vt, site_rows, terminal_rows)
    directory = _build_directory(vt, sa, site_rows, terminal_rows, chain.zeros)

    dtype = _position_dtype(sa.size)
    positions = {TERMINAL: terminal.astype(dtype)}
    for a in range(g, k + 1, g):
        col = vt.schema.site_column(a)
        positions[a] = ((site_rows[a] - 1) * (n + 1) + col).astype(dtype)
    anchors = AnchorSet(stride=g, k=k, positions=positions)

    groups = _build_groups(vt, g, site_rows, terminal_rows, max_group_bits)

    csa = CompressedSA(
        schema=vt.schema,
        matrix=vt.matrix,
        directory=directory,
        chain=chain,
        anchors=anchors,
        groups=groups,
    )
    logger.info(
        "Index built: n=%d k=%d m=%d g=%d blocks=%d groups=%d (%.2fs)",
        n, k, m, g, len(directory), len(groups), time.perf_counter() - started,
    )
    return csa
