"""
GenotypeMatrix: m×k бит, бит 0 выбирает low_j, бит 1 — high_j.

Файл матрицы: m строк по k символов из {0,1}. При k = 0 строки пустые,
и число слов задаётся явно (rows=m, в CLI — --rows).
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.errors import IndexOutOfRange, LengthMismatch, MalformedInput


@dataclass(frozen=True, eq=False)
class GenotypeMatrix:
    bits: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.bits)
        if arr.ndim != 2:
            raise MalformedInput(f"genotype matrix must be 2-dimensional, got shape {arr.shape}")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise MalformedInput("genotype matrix must contain only 0 and 1")
        arr = arr.astype(np.uint8, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "bits", arr)

    @classmethod
    def from_rows(cls, rows, k: Optional[int] = None) -> "GenotypeMatrix":
        """Строки вида "0110" или списки битов."""
        rows = [[int(b) for b in row] for row in rows]
        width = k if k is not None else (len(rows[0]) if rows else 0)
        for r, row in enumerate(rows, start=1):
            if len(row) != width:
                raise LengthMismatch(f"row {r} has {len(row)} bits, expected {width}")
        return cls(np.array(rows, dtype=np.uint8).reshape(len(rows), width))

    @property
    def m(self) -> int:
        return int(self.bits.shape[0])

    @property
    def k(self) -> int:
        return int(self.bits.shape[1])

    def bit(self, row: int, site: int) -> int:
        if not (1 <= row <= self.m and 1 <= site <= self.k):
            raise IndexOutOfRange(f"matrix cell ({row}, {site}) outside {self.m}x{self.k}")
        return int(self.bits[row - 1, site - 1])

    def row(self, row: int) -> list[int]:
        if not 1 <= row <= self.m:
            raise IndexOutOfRange(f"row {row} outside 1..{self.m}")
        return self.bits[row - 1].tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenotypeMatrix):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool(np.array_equal(self.bits, other.bits))

    def __repr__(self) -> str:
        return f"GenotypeMatrix(m={self.m}, k={self.k})"


def format_matrix(matrix: GenotypeMatrix) -> str:
    if matrix.m == 0:
        return ""
    return "".join("".join(str(b) for b in row) + "\n" for row in matrix.bits.tolist())


def parse_matrix(text: str, schema, rows: Optional[int] = None) -> GenotypeMatrix:
    """
    Парсит файл матрицы под схему.

    Args:
        text:   содержимое файла
        schema: SsnpSchema (нужно k)
        rows:   явное число слов; обязательно для k = 0
    """
    k = schema.k
    if k == 0:
        count = rows if rows is not None else 0
        if count < 0:
            raise MalformedInput(f"rows must be >= 0, got {count}")
        return GenotypeMatrix(np.zeros((count, 0), dtype=np.uint8))

    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line]
    parsed = []
    for no, line in lines:
        if len(line) != k:
            raise LengthMismatch(f"matrix line {no}: {len(line)} bits, schema has k={k}")
        if set(line) - {"0", "1"}:
            raise MalformedInput(f"matrix line {no}: only 0 and 1 allowed, got {line!r}")
        parsed.append([1 if ch == "1" else 0 for ch in line])

    if rows is not None and rows != len(parsed):
        raise LengthMismatch(f"--rows={rows} but matrix has {len(parsed)} rows")
    return GenotypeMatrix(np.array(parsed, dtype=np.uint8).reshape(len(parsed), k))
