"""
BlockDirectory: разбиение рангов SA на блоки (col, side).

Блок — все позиции колонки col, у которых на ближайшем сайте c_j >= col
стоит один и тот же аллель (или все строки, если сайтов правее нет).
Такие позиции идут в SA подряд и в порядке строк на сайте j.
"""
from dataclasses import dataclass
from typing import NamedTuple

from app.succinct import IndexedBitvector

TERMINAL = 0

LOW = 0
HIGH = 1
ALL = 2


class BlockMeta(NamedTuple):
    column: int       # 1..n+1
    site: int         # 1..k или TERMINAL
    side: int         # LOW | HIGH | ALL
    side_offset: int  # 0-based начало стороны в полном порядке сайта


@dataclass(frozen=True, eq=False)
class BlockDirectory:
    starts: IndexedBitvector
    meta: tuple

    def __post_init__(self):
        if len(self.meta) != self.starts.ones:
            raise ValueError(
                f"{len(self.meta)} block records for {self.starts.ones} block starts"
            )

    def __len__(self) -> int:
        return len(self.meta)

    def locate(self, rank: int) -> tuple[BlockMeta, int]:
        """Ранг SA → (запись блока, 0-based смещение внутри блока)."""
        block_id = self.starts.rank(rank, 1)
        start = self.starts.select(block_id, 1)
        return self.meta[block_id - 1], rank - start

    def block_range(self, block_id: int) -> tuple[int, int]:
        """Ранги [start, end] блока (1-based, включительно)."""
        start = self.starts.select(block_id, 1)
        if block_id < len(self.meta):
            end = self.starts.select(block_id + 1, 1) - 1
        else:
            end = len(self.starts)
        return start, end
