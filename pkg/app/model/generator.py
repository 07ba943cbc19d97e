"""
Генератор случайных k-SSNP экземпляров для тестов и бенчмарков.

Детерминирован по seed: одна numpy-последовательность на все попытки.
Экземпляр, не прошедший validate, пересэмплируется (до max_retries раз).
"""
import logging
from dataclasses import dataclass

import numpy as np

from app.errors import GenerationFailed, InvalidParameters, UniquenessViolation
from app.model.matrix import GenotypeMatrix
from app.model.schema import SsnpSchema
from app.model.text import VirtualText
from app.model.validate import validate
from app.utils.retry import retry

logger = logging.getLogger("snpsa.model.generator")


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    k: int
    m: int
    alphabet: str = "acgt"
    min_gap: int = 2
    seed: int = 0
    max_retries: int = 64
    placeholder: str = "?"


def _check(params: GeneratorParams) -> str:
    alphabet = "".join(sorted(set(params.alphabet)))
    if len(alphabet) < 2:
        raise InvalidParameters("alphabet needs at least 2 distinct characters")
    if params.min_gap < 2:
        raise InvalidParameters(f"min_gap must be >= 2, got {params.min_gap}")
    if params.k < 0 or params.m < 0 or params.n < 1:
        raise InvalidParameters("n must be >= 1 and k, m >= 0")
    if params.k and params.n < params.k * (params.min_gap + 1) + 2:
        raise InvalidParameters(
            f"n={params.n} too short for k={params.k} sites with min_gap={params.min_gap}"
        )
    if params.max_retries < 1:
        raise InvalidParameters("max_retries must be >= 1")
    return alphabet


def _site_columns(rng: np.random.Generator, n: int, k: int, min_gap: int) -> list[int]:
    """
    k колонок с шагом >= min_gap; крайние α_1 и α_{k+1} получают не меньше
    min(min_gap − 1, половины запаса) символов.
    """
    if k == 0:
        return []
    core = (k - 1) * min_gap + 1
    edge = max(1, min(min_gap - 1, (n - core) // 2))
    slack = n - core - 2 * edge
    # звёзды и черточки: k неубывающих сдвигов из [0, slack]
    picks = np.sort(rng.choice(slack + k, size=k, replace=False))
    shifts = picks - np.arange(k)
    return [int(edge + 1 + shifts[j] + j * min_gap) for j in range(k)]


def _sample(rng: np.random.Generator, params: GeneratorParams, alphabet: str) -> tuple[SsnpSchema, GenotypeMatrix]:
    sites = _site_columns(rng, params.n, params.k, params.min_gap)
    chars = np.array(list(alphabet))
    reference = chars[rng.integers(0, len(alphabet), size=params.n)].tolist()
    alleles = []
    for col in sites:
        reference[col - 1] = params.placeholder
        low, high = sorted(rng.choice(chars, size=2, replace=False).tolist())
        alleles.append((low, high))
    schema = SsnpSchema(
        n=params.n,
        alphabet=alphabet,
        sites=tuple(sites),
        alleles=tuple(alleles),
        reference="".join(reference),
        placeholder=params.placeholder,
    )
    matrix = GenotypeMatrix(rng.integers(0, 2, size=(params.m, params.k), dtype=np.uint8))
    return schema, matrix


def generate(params: GeneratorParams) -> tuple[SsnpSchema, GenotypeMatrix]:
    """
    Случайный валидный экземпляр.

    Raises:
        InvalidParameters: нарушены предусловия
        GenerationFailed:  все max_retries попыток дали повторы α
    """
    alphabet = _check(params)
    rng = np.random.default_rng(params.seed)

    @retry(
        max_attempts=params.max_retries,
        exceptions=(UniquenessViolation,),
        give_up=GenerationFailed,
    )
    def attempt() -> tuple[SsnpSchema, GenotypeMatrix]:
        schema, matrix = _sample(rng, params, alphabet)
        report = validate(VirtualText(schema, matrix))
        if not report.ok:
            raise UniquenessViolation(f"{len(report.violations)} repeated substrings", report)
        return schema, matrix

    schema, matrix = attempt()
    logger.debug(
        "Generated instance n=%d k=%d m=%d sigma=%d seed=%d",
        params.n, params.k, params.m, len(alphabet), params.seed,
    )
    return schema, matrix
