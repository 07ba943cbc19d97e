"""
Общие фикстуры: пример из пяти колонок и генератор случайных экземпляров.

D = "gtaca#gtcca#": n=5, k=1, сайт в колонке 3 (a/c), матрица [[0], [1]].
"""
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.index import build
from app.model import (
    GeneratorParams,
    GenotypeMatrix,
    VirtualText,
    generate,
    parse_matrix,
    parse_schema,
)

GOLDEN_SCHEMA = """\
SSNP 1
n=5 k=1 alphabet=acgt
ref=gt?ca
site 3 a c
"""
GOLDEN_MATRIX = "0\n1\n"
GOLDEN_TEXT = "gtaca#gtcca#"
GOLDEN_SA = [12, 6, 11, 5, 3, 10, 4, 9, 1, 7, 2, 8]
GOLDEN_STARTS = [1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1]

# минимальный шаг между сайтами, при котором α почти наверняка уникальны
MIN_GAP_FOR_SIGMA = {2: 24, 4: 12, 20: 6}
ALPHABETS = {2: "ab", 4: "acgt", 20: "acdefghiklmnpqrstvwy"}


def golden_vt() -> VirtualText:
    schema = parse_schema(GOLDEN_SCHEMA)
    return VirtualText(schema, parse_matrix(GOLDEN_MATRIX, schema))


def random_instance(seed: int, sigma: int = 4, k: int = None, m: int = None,
                    n: int = None, max_n: int = 512) -> VirtualText:
    """Валидный экземпляр, параметры по умолчанию выбираются из seed."""
    rng = np.random.default_rng(seed)
    min_gap = MIN_GAP_FOR_SIGMA[sigma]
    if k is None:
        k = int(rng.integers(0, 17))
    if m is None:
        m = int(rng.integers(1, 33))
    if n is None:
        low = max(8, k * (min_gap + 1) + 2 + 2 * min_gap)
        n = int(rng.integers(low, min(max_n, low + 96) + 1))
    params = GeneratorParams(
        n=n, k=k, m=m, alphabet=ALPHABETS[sigma], min_gap=min_gap, seed=seed,
    )
    schema, matrix = generate(params)
    return VirtualText(schema, matrix)


def with_rows(vt: VirtualText, rows) -> VirtualText:
    return VirtualText(vt.schema, GenotypeMatrix(np.asarray(rows, dtype=np.uint8).reshape(len(rows), vt.k)))


@pytest.fixture
def golden():
    return golden_vt()


@pytest.fixture
def golden_csa():
    return build(golden_vt())


@pytest.fixture
def golden_files(tmp_path):
    schema = tmp_path / "golden.schema"
    matrix = tmp_path / "golden.matrix"
    schema.write_text(GOLDEN_SCHEMA, encoding="utf-8")
    matrix.write_text(GOLDEN_MATRIX, encoding="utf-8")
    return schema, matrix
