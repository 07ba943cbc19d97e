"""
IndexedBitvector: неизменяемый битовый вектор с access/rank/select.

Раскладка:
  - биты упакованы в 64-битные лимбы, младший бит лимба — первая позиция;
  - суперблок = 8 лимбов (512 бит), абсолютный счёт единиц (u64);
  - блок = 1 лимб, счёт единиц от начала суперблока (u16);
  - select: сэмпл номера лимба для каждого 1024-го вхождения (u32),
    внутри интервала сэмплов — бинарный поиск, внутри лимба — таблица по байтам.

Все позиции 1-based, rank(i) считает позиции 1..i.
Директории на диск не пишутся и строятся заново при загрузке.
"""
from dataclasses import dataclass

import numpy as np

from app.errors import IndexOutOfRange, OrdinalOutOfRange

LIMB_BITS = 64
SUPER_LIMBS = 8
SELECT_SAMPLE = 1024
_SAMPLE_SHIFT = 10
_MASK64 = (1 << 64) - 1

# Ширина элементов директорий в отчёте о памяти
SUPER_WIDTH = 64
BLOCK_WIDTH = 16
SAMPLE_WIDTH = 32

# Проверяемая граница: payload + директории <= 1.5 * N + 4096 бит
SPACE_FACTOR = 1.5
SPACE_SLACK = 4096

# _BYTE_SELECT[b][r] — позиция (r+1)-й единицы в байте b
_BYTE_SELECT = tuple(
    tuple(bit for bit in range(8) if byte >> bit & 1) for byte in range(256)
)


@dataclass(frozen=True)
class SpaceBits:
    payload: int      # сами биты, с выравниванием до 64
    directory: int    # rank/select директории

    @property
    def total(self) -> int:
        return self.payload + self.directory


def pack_bits(bits) -> tuple[np.ndarray, int]:
    """Последовательность 0/1 → (лимбы little-endian u64, длина в битах)."""
    flags = np.asarray(bits).reshape(-1).astype(bool)
    length = int(flags.size)
    nlimbs = (length + LIMB_BITS - 1) // LIMB_BITS
    packed = np.packbits(flags, bitorder="little")
    buf = np.zeros(nlimbs * 8, dtype=np.uint8)
    buf[: packed.size] = packed
    return buf.view("<u8"), length


def _select_in_word(word: int, r: int) -> int:
    """Позиция (0..63) r-й единицы в слове, r >= 1."""
    shift = 0
    while True:
        byte = (word >> shift) & 0xFF
        ones = byte.bit_count()
        if r <= ones:
            return shift + _BYTE_SELECT[byte][r - 1]
        r -= ones
        shift += 8


class IndexedBitvector:
    """Битовый вектор с rank/select; после построения не меняется."""

    __slots__ = (
        "_length", "_limbs", "_words", "_super", "_block",
        "_ones", "_samples0", "_samples1",
    )

    def __init__(self, limbs: np.ndarray, length: int):
        nlimbs = (length + LIMB_BITS - 1) // LIMB_BITS
        limbs = np.asarray(limbs, dtype="<u8").reshape(-1)
        if length < 0 or limbs.size < nlimbs:
            raise ValueError(f"{limbs.size} limbs cannot hold {length} bits")
        limbs = limbs[:nlimbs].copy()
        tail = length % LIMB_BITS
        if tail:
            limbs[-1] &= np.uint64((1 << tail) - 1)
        limbs.setflags(write=False)

        self._length = length
        self._limbs = limbs
        self._words = limbs.tolist()

        counts = (
            np.unpackbits(limbs.view(np.uint8)).reshape(-1, LIMB_BITS).sum(axis=1)
            if nlimbs else np.zeros(0, dtype=np.int64)
        )
        cum = np.zeros(nlimbs + 1, dtype=np.int64)
        np.cumsum(counts, out=cum[1:])
        supers = cum[::SUPER_LIMBS]
        self._super = supers.tolist()
        self._block = (cum - np.repeat(supers, SUPER_LIMBS)[: nlimbs + 1]).tolist()
        self._ones = int(cum[-1])

        # сэмплы: лимб, содержащий (t * SELECT_SAMPLE + 1)-е вхождение
        zcum = np.arange(nlimbs + 1, dtype=np.int64) * LIMB_BITS - cum
        ones_targets = np.arange(1, self._ones + 1, SELECT_SAMPLE)
        zero_targets = np.arange(1, length - self._ones + 1, SELECT_SAMPLE)
        self._samples1 = np.searchsorted(cum[1:], ones_targets, side="left").tolist()
        self._samples0 = np.searchsorted(zcum[1:], zero_targets, side="left").tolist()

    # ─── построение ──────────────────────────────────────────

    @classmethod
    def build(cls, bits) -> "IndexedBitvector":
        limbs, length = pack_bits(bits)
        return cls(limbs, length)

    @classmethod
    def from_limbs(cls, limbs: np.ndarray, length: int) -> "IndexedBitvector":
        return cls(limbs, length)

    # ─── свойства ────────────────────────────────────────────

    def __len__(self) -> int:
        return self._length

    @property
    def length(self) -> int:
        return self._length

    @property
    def ones(self) -> int:
        return self._ones

    @property
    def zeros(self) -> int:
        return self._length - self._ones

    @property
    def limbs(self) -> np.ndarray:
        return self._limbs

    def to_list(self) -> list[int]:
        return [self.access(i) for i in range(1, self._length + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexedBitvector):
            return NotImplemented
        return self._length == other._length and self._words == other._words

    def __repr__(self) -> str:
        return f"IndexedBitvector(length={self._length}, ones={self._ones})"

    # ─── запросы ─────────────────────────────────────────────

    def access(self, i: int) -> int:
        if not 1 <= i <= self._length:
            raise IndexOutOfRange(f"position {i} outside 1..{self._length}")
        i -= 1
        return (self._words[i >> 6] >> (i & 63)) & 1

    def rank(self, i: int, bit: int = 1) -> int:
        """Число позиций 1..i со значением bit."""
        if not 0 <= i <= self._length:
            raise IndexOutOfRange(f"rank prefix {i} outside 0..{self._length}")
        w = i >> 6
        ones = self._super[w >> 3] + self._block[w]
        off = i & 63
        if off:
            ones += (self._words[w] & ((1 << off) - 1)).bit_count()
        return ones if bit else i - ones

    def select(self, j: int, bit: int = 1) -> int:
        """Позиция j-го вхождения bit."""
        total = self._ones if bit else self._length - self._ones
        if not 1 <= j <= total:
            raise OrdinalOutOfRange(f"select({j}, {bit}) but only {total} occurrences")
        samples = self._samples1 if bit else self._samples0
        t = (j - 1) >> _SAMPLE_SHIFT
        lo = samples[t]
        hi = samples[t + 1] if t + 1 < len(samples) else len(self._words) - 1
        # наименьший лимб w, у которого before(w + 1) >= j
        while lo < hi:
            mid = (lo + hi) >> 1
            if self._before(mid + 1, bit) >= j:
                hi = mid
            else:
                lo = mid + 1
        r = j - self._before(lo, bit)
        word = self._words[lo] if bit else ~self._words[lo] & _MASK64
        return (lo << 6) + _select_in_word(word, r) + 1

    def _before(self, w: int, bit: int) -> int:
        ones = self._super[w >> 3] + self._block[w]
        return ones if bit else (w << 6) - ones

    # ─── память ──────────────────────────────────────────────

    def space_bits(self) -> SpaceBits:
        directory = (
            len(self._super) * SUPER_WIDTH
            + len(self._block) * BLOCK_WIDTH
            + (len(self._samples0) + len(self._samples1)) * SAMPLE_WIDTH
        )
        return SpaceBits(payload=len(self._words) * LIMB_BITS, directory=directory)


def space_bound(length: int) -> float:
    return SPACE_FACTOR * length + SPACE_SLACK


def bv_build(bits) -> IndexedBitvector:
    return IndexedBitvector.build(bits)


def bv_access(b: IndexedBitvector, i: int) -> int:
    return b.access(i)


def bv_rank(b: IndexedBitvector, i: int, bit: int = 1) -> int:
    return b.rank(i, bit)


def bv_select(b: IndexedBitvector, j: int, bit: int = 1) -> int:
    return b.select(j, bit)
