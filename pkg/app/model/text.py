"""
VirtualText: база D = w_1 # w_2 # … w_m #, не материализованная.

Позиция p = (r − 1)(n + 1) + c, строки и колонки 1-based, колонка n + 1 —
сентинел. Символ по позиции — за O(1) из схемы и матрицы.
"""
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from app.config import SENTINEL
from app.errors import IndexOutOfRange, LengthMismatch
from app.model.matrix import GenotypeMatrix
from app.model.schema import SsnpSchema


def pos_of(row: int, col: int, n: int, m: Optional[int] = None) -> int:
    """(row, col) → линейная позиция 1..m(n+1)."""
    if row < 1 or (m is not None and row > m) or not 1 <= col <= n + 1:
        raise IndexOutOfRange(f"cell ({row}, {col}) outside rows 1..{m} x cols 1..{n + 1}")
    return (row - 1) * (n + 1) + col


def row_col_of(pos: int, n: int, m: Optional[int] = None) -> tuple[int, int]:
    """Линейная позиция → (row, col)."""
    if pos < 1 or (m is not None and pos > m * (n + 1)):
        raise IndexOutOfRange(f"position {pos} outside 1..{'?' if m is None else m * (n + 1)}")
    row, col0 = divmod(pos - 1, n + 1)
    return row + 1, col0 + 1


@dataclass(frozen=True)
class VirtualText:
    schema: SsnpSchema
    matrix: GenotypeMatrix

    def __post_init__(self):
        if self.matrix.k != self.schema.k:
            raise LengthMismatch(
                f"matrix has {self.matrix.k} columns but schema has k={self.schema.k}"
            )

    @property
    def n(self) -> int:
        return self.schema.n

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def k(self) -> int:
        return self.schema.k

    @property
    def length(self) -> int:
        return self.matrix.m * (self.schema.n + 1)

    def __len__(self) -> int:
        return self.length

    def pos_of(self, row: int, col: int) -> int:
        return pos_of(row, col, self.n, self.m)

    def row_col_of(self, pos: int) -> tuple[int, int]:
        return row_col_of(pos, self.n, self.m)

    def char_at(self, pos: int) -> str:
        row, col = self.row_col_of(pos)
        if col == self.n + 1:
            return SENTINEL
        site = self.schema.site_at(col)
        if site:
            low, high = self.schema.alleles[site - 1]
            return high if self.matrix.bits[row - 1, site - 1] else low
        return self.schema.reference[col - 1]

    def code_at(self, pos: int) -> int:
        return self.schema.code(self.char_at(pos))

    def word(self, row: int) -> str:
        return self.schema.realize(self.matrix.row(row))

    def words(self) -> Iterator[str]:
        for row in range(1, self.m + 1):
            yield self.word(row)

    def codes(self) -> np.ndarray:
        """Весь D в ординалах (uint8): сентинел 0, алфавит 1..σ."""
        schema = self.schema
        line = np.zeros(schema.n + 1, dtype=np.uint8)
        for col, ch in enumerate(schema.reference, start=1):
            if not schema.site_at(col):
                line[col - 1] = schema.code(ch)
        grid = np.tile(line, (self.m, 1))
        for j, (col, (low, high)) in enumerate(zip(schema.sites, schema.alleles)):
            grid[:, col - 1] = np.where(
                self.matrix.bits[:, j] == 1, schema.code(high), schema.code(low)
            )
        return grid.reshape(-1)


def text_char(vt: VirtualText, pos: int) -> str:
    return vt.char_at(pos)


def expand(vt: VirtualText) -> str:
    return "".join(word + SENTINEL for word in vt.words())
