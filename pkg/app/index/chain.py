"""
Цепочка перестановок между порядками соседних сайтов и якоря.

B_j индексирован порядком сайта j+1 (или терминальным порядком при j = k):
B_j[i] — аллель сайта j у строки с рангом i ниже по течению. Ранг q на
сайте j переходит в select_0(B_j, q) при q <= n0_j, иначе в
select_1(B_j, q − n0_j).

Якоря: сайты g, 2g, … и TERMINAL; для них хранится E — m позиций в полном
порядке якоря. Серии не-якорных сайтов перед якорем упакованы в
PackedLabelString (p бит на строку, первый сайт — старший бит).
"""
from dataclasses import dataclass, field

import numpy as np

from app.index.directory import TERMINAL
from app.succinct import PackedLabelString


@dataclass
class AccessStats:
    """Счётчик шагов, который передаёт вызывающий; индекс остаётся неизменяемым."""

    accesses: int = 0
    steps: int = 0           # вызовы sigma_step
    packed: int = 0          # переходы через упакованную группу
    max_steps: int = 0       # максимум sigma_step за один sa_access

    @property
    def mean_steps(self) -> float:
        return self.steps / self.accesses if self.accesses else 0.0

    def record(self, steps: int) -> None:
        self.accesses += 1
        self.max_steps = max(self.max_steps, steps)


@dataclass(frozen=True, eq=False)
class PermutationChain:
    bits: tuple                      # B_1..B_k
    zeros: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        lengths = {len(b) for b in self.bits}
        if len(lengths) > 1:
            raise ValueError(f"chain bitvectors differ in length: {sorted(lengths)}")
        object.__setattr__(self, "zeros", tuple(b.zeros for b in self.bits))

    @property
    def k(self) -> int:
        return len(self.bits)

    def step(self, j: int, site_rank: int) -> int:
        """Ранг на сайте j → ранг ниже по течению (без проверок)."""
        n0 = self.zeros[j - 1]
        if site_rank <= n0:
            return self.bits[j - 1].select(site_rank, 0)
        return self.bits[j - 1].select(site_rank - n0, 1)

    def inverse_step(self, j: int, downstream_rank: int) -> int:
        """Ранг ниже по течению → ранг на сайте j."""
        bv = self.bits[j - 1]
        if bv.access(downstream_rank):
            return self.zeros[j - 1] + bv.rank(downstream_rank, 1)
        return bv.rank(downstream_rank, 0)

    def payload_bits(self) -> int:
        return sum(len(b) for b in self.bits)


@dataclass(frozen=True, eq=False)
class AnchorSet:
    stride: int
    k: int
    positions: dict   # id якоря (сайт или TERMINAL) → np.ndarray позиций, 1-based

    @property
    def sites(self) -> tuple:
        return tuple(range(self.stride, self.k + 1, self.stride))

    @property
    def ids(self) -> tuple:
        return self.sites + (TERMINAL,)

    def __len__(self) -> int:
        return len(self.sites) + 1

    def is_anchor(self, j: int) -> bool:
        return j == TERMINAL or j % self.stride == 0

    def anchor_for(self, j: int) -> int:
        """Первый якорный сайт >= j или TERMINAL."""
        a = -(-j // self.stride) * self.stride
        return a if a <= self.k else TERMINAL

    def integer_count(self) -> int:
        return sum(len(e) for e in self.positions.values())


@dataclass(frozen=True, eq=False)
class PackedGroup:
    first_site: int
    p: int
    anchor: int                  # якорь сразу после серии (сайт или TERMINAL)
    labels: PackedLabelString    # индексированы полным порядком якоря

    @property
    def sites(self) -> range:
        return range(self.first_site, self.first_site + self.p)

    def forward(self, rank: int) -> int:
        """Ранг на первом сайте группы → ранг в порядке якоря."""
        label = self.labels.label_at_rank(rank)
        return self.labels.select(label, rank - self.labels.cumulative_at(label))

    def inverse(self, anchor_rank: int) -> int:
        """Ранг в порядке якоря → ранг на первом сайте группы."""
        label = self.labels.access(anchor_rank)
        return self.labels.cumulative_at(label) + self.labels.partial_rank(anchor_rank)


def pack_labels(bits: np.ndarray, anchor_rows: np.ndarray, sites: range) -> np.ndarray:
    """Метки для строк в порядке якоря: биты сайтов sites, первый — старший."""
    labels = np.zeros(len(anchor_rows), dtype=np.int64)
    for j in sites:
        labels = (labels << 1) | bits[anchor_rows - 1, j - 1].astype(np.int64)
    return labels


def make_group(first_site: int, p: int, anchor: int, labels: np.ndarray) -> PackedGroup:
    return PackedGroup(first_site, p, anchor, PackedLabelString(labels, p))
