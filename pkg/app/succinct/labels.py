"""
PackedLabelString: строка над алфавитом {0, …, 2^p − 1} с access,
partial rank и select.

Внутри — wavelet matrix из p уровней IndexedBitvector (старший бит метки
на уровне 0), то есть m·p бит полезной нагрузки плюс директории.
Таблица C[0..2^p] (число меток < ℓ) хранится явно.
"""
import bisect

import numpy as np

from app.errors import IndexOutOfRange, LabelOutOfRange, OrdinalOutOfRange
from app.succinct.bitvector import IndexedBitvector, SpaceBits

CUMULATIVE_WIDTH = 32


class PackedLabelString:
    """Неизменяемая последовательность p-битных меток, позиции 1-based."""

    __slots__ = ("_p", "_length", "_levels", "_zeros", "_cumulative")

    def __init__(self, labels, p: int):
        if p < 1:
            raise LabelOutOfRange(f"label width p must be >= 1, got {p}")
        arr = np.asarray(labels, dtype=np.int64).reshape(-1)
        if arr.size and (int(arr.min()) < 0 or int(arr.max()) >= 1 << p):
            bad = int(arr[(arr < 0) | (arr >= 1 << p)][0])
            raise LabelOutOfRange(f"label {bad} does not fit in {p} bits")

        self._p = p
        self._length = int(arr.size)

        counts = np.bincount(arr, minlength=1 << p) if arr.size else np.zeros(1 << p, dtype=np.int64)
        cumulative = np.zeros((1 << p) + 1, dtype=np.int64)
        np.cumsum(counts, out=cumulative[1:])
        self._cumulative = tuple(cumulative.tolist())

        levels = []
        zeros = []
        current = arr
        for level in range(p):
            bits = (current >> (p - 1 - level)) & 1
            bv = IndexedBitvector.build(bits)
            levels.append(bv)
            zeros.append(bv.zeros)
            # стабильное разбиение: сначала нули, потом единицы
            current = np.concatenate([current[bits == 0], current[bits == 1]])
        self._levels = tuple(levels)
        self._zeros = tuple(zeros)

    # ─── свойства ────────────────────────────────────────────

    def __len__(self) -> int:
        return self._length

    @property
    def p(self) -> int:
        return self._p

    @property
    def cumulative(self) -> tuple:
        return self._cumulative

    def cumulative_at(self, label: int) -> int:
        """C[label]: число меток меньше label."""
        return self._cumulative[label]

    def label_at_rank(self, rank: int) -> int:
        """Метка, в блок которой попадает ранг rank устойчивой сортировки."""
        if not 1 <= rank <= self._length:
            raise IndexOutOfRange(f"rank {rank} outside 1..{self._length}")
        return bisect.bisect_left(self._cumulative, rank) - 1

    def count(self, label: int) -> int:
        self._check_label(label)
        return self._cumulative[label + 1] - self._cumulative[label]

    def to_labels(self) -> list[int]:
        return [self.access(i) for i in range(1, self._length + 1)]

    def _check_label(self, label: int) -> None:
        if not 0 <= label < 1 << self._p:
            raise LabelOutOfRange(f"label {label} does not fit in {self._p} bits")

    # ─── запросы ─────────────────────────────────────────────

    def access(self, i: int) -> int:
        if not 1 <= i <= self._length:
            raise IndexOutOfRange(f"position {i} outside 1..{self._length}")
        pos = i - 1
        label = 0
        for level, bv in enumerate(self._levels):
            bit = bv.access(pos + 1)
            label = (label << 1) | bit
            if bit:
                pos = self._zeros[level] + bv.rank(pos, 1)
            else:
                pos = bv.rank(pos, 0)
        return label

    def partial_rank(self, i: int) -> int:
        """Сколько позиций i' <= i несут ту же метку, что и позиция i."""
        label = self.access(i)
        start, end = 0, i
        for level, bv in enumerate(self._levels):
            if (label >> (self._p - 1 - level)) & 1:
                start = self._zeros[level] + bv.rank(start, 1)
                end = self._zeros[level] + bv.rank(end, 1)
            else:
                start = bv.rank(start, 0)
                end = bv.rank(end, 0)
        return end - start

    def select(self, label: int, j: int) -> int:
        """Позиция j-го вхождения метки label."""
        total = self.count(label)
        if not 1 <= j <= total:
            raise OrdinalOutOfRange(f"select({label}, {j}) but label occurs {total} times")
        start = 0
        for level, bv in enumerate(self._levels):
            if (label >> (self._p - 1 - level)) & 1:
                start = self._zeros[level] + bv.rank(start, 1)
            else:
                start = bv.rank(start, 0)
        pos = start + j
        for level in range(self._p - 1, -1, -1):
            bv = self._levels[level]
            if (label >> (self._p - 1 - level)) & 1:
                pos = bv.select(pos - self._zeros[level], 1)
            else:
                pos = bv.select(pos, 0)
        return pos

    # ─── память ──────────────────────────────────────────────

    def space_bits(self) -> SpaceBits:
        payload = sum(bv.space_bits().payload for bv in self._levels)
        directory = sum(bv.space_bits().directory for bv in self._levels)
        directory += len(self._cumulative) * CUMULATIVE_WIDTH
        return SpaceBits(payload=payload, directory=directory)

    def payload_bits(self) -> int:
        """Чистые m·p бит меток, без выравнивания."""
        return self._length * self._p


def seq_build(labels, p: int) -> PackedLabelString:
    return PackedLabelString(labels, p)


def seq_access(s: PackedLabelString, i: int) -> int:
    return s.access(i)


def seq_select(s: PackedLabelString, label: int, j: int) -> int:
    return s.select(label, j)


def seq_partial_rank(s: PackedLabelString, i: int) -> int:
    return s.partial_rank(i)
