"""
Ввод выравнивания: чтение (plain / FASTA) и вывод схемы+матрицы из колонок.

Колонка с двумя разными символами — SNP-сайт, low-аллель — меньший символ.
"""
import logging

import numpy as np

from app.config import SENTINEL
from app.errors import (
    LengthMismatch,
    MalformedInput,
    TooManyAllelesInColumn,
    UniquenessViolation,
)
from app.model.matrix import GenotypeMatrix
from app.model.schema import SsnpSchema, check_site_columns
from app.model.text import VirtualText
from app.model.validate import validate

logger = logging.getLogger("snpsa.model.alignment")


def read_alignment(text: str) -> list[str]:
    """
    Plain (одна последовательность на строку) или FASTA:
    строка с '>' открывает запись, строки последовательности склеиваются.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        return []
    if not lines[0].startswith(">"):
        return lines

    records: list[str] = []
    chunks: list[str] = []
    for line in lines:
        if line.startswith(">"):
            if chunks:
                records.append("".join(chunks))
            chunks = []
            continue
        chunks.append(line)
    if chunks:
        records.append("".join(chunks))
    return records


def infer_from_alignment(words: list[str], placeholder: str = "?") -> tuple[SsnpSchema, GenotypeMatrix]:
    """
    Выводит схему и матрицу по равным по длине словам.

    Raises:
        MalformedInput, LengthMismatch, TooManyAllelesInColumn,
        SitePlacementViolation, UniquenessViolation
    """
    if not words:
        raise MalformedInput("alignment is empty")
    n = len(words[0])
    if n == 0:
        raise MalformedInput("alignment words are empty")
    for r, word in enumerate(words, start=1):
        if len(word) != n:
            raise LengthMismatch(f"word {r} has length {len(word)}, expected {n}")
        for bad in (SENTINEL, placeholder):
            if bad in word:
                raise MalformedInput(f"word {r} contains reserved character {bad!r}")

    grid = np.array([list(word) for word in words])
    sites, alleles, reference = [], [], []
    for col in range(1, n + 1):
        distinct = sorted(set(grid[:, col - 1].tolist()))
        if len(distinct) > 2:
            raise TooManyAllelesInColumn(
                f"column {col} has {len(distinct)} distinct characters: {''.join(distinct)}"
            )
        if len(distinct) == 2:
            sites.append(col)
            alleles.append((distinct[0], distinct[1]))
            reference.append(placeholder)
        else:
            reference.append(distinct[0])
    check_site_columns(sites, n)

    alphabet = "".join(sorted(set("".join(words))))
    schema = SsnpSchema(
        n=n,
        alphabet=alphabet,
        sites=tuple(sites),
        alleles=tuple(alleles),
        reference="".join(reference),
        placeholder=placeholder,
    )
    bits = np.zeros((len(words), len(sites)), dtype=np.uint8)
    for j, (col, (_, high)) in enumerate(zip(sites, alleles)):
        bits[:, j] = grid[:, col - 1] == high
    matrix = GenotypeMatrix(bits)

    report = validate(VirtualText(schema, matrix))
    if not report.ok:
        raise UniquenessViolation("alignment violates the SSNP uniqueness condition", report)

    logger.info("Inferred schema: n=%d k=%d m=%d sigma=%d", n, len(sites), len(words), len(alphabet))
    return schema, matrix
