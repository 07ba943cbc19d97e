"""
Иерархия исключений SnpSA.

Все доменные ошибки наследуются от SnpsaError: CLI превращает их в exit code 2,
а OSError — в exit code 1.
"""
from typing import Optional


class SnpsaError(Exception):
    """Базовая доменная ошибка."""


# ─── succinct / общие проверки диапазонов ───────────────────────

class IndexOutOfRange(SnpsaError, IndexError):
    """Позиция, ранг или номер строки вне допустимого диапазона."""


class OrdinalOutOfRange(SnpsaError, IndexError):
    """select(j, ·) для j больше числа вхождений."""


class LabelOutOfRange(SnpsaError, ValueError):
    """Метка не помещается в p бит."""


# ─── model ──────────────────────────────────────────────────────

class ModelError(SnpsaError, ValueError):
    """Ошибка схемы, матрицы или входного выравнивания."""


class MalformedInput(ModelError):
    pass


class LengthMismatch(ModelError):
    pass


class TooManyAllelesInColumn(ModelError):
    pass


class SitePlacementViolation(ModelError):
    pass


class UniquenessViolation(ModelError):
    """Некоторая α_i встречается в слове не ровно один раз. Отчёт в .report."""

    def __init__(self, message: str, report: Optional[object] = None):
        super().__init__(message)
        self.report = report


class TooManySites(ModelError):
    pass


class InvalidParameters(ModelError):
    pass


class GenerationFailed(ModelError):
    pass


# ─── index ──────────────────────────────────────────────────────

class IndexBuildError(SnpsaError):
    """Построение индекса невозможно."""


class EmptyDatabase(IndexBuildError):
    pass


class SsnpViolation(IndexBuildError):
    """Суффиксный массив противоречит SSNP-предпосылкам (блоки или две серии)."""


class InvalidStride(IndexBuildError, ValueError):
    pass


class QueryError(SnpsaError, ValueError):
    """Некорректный запрос к индексу."""


class NotGroupStart(QueryError):
    pass


class InvalidPatternCharacter(QueryError):
    pass


class EmptyPattern(QueryError):
    pass


# ─── формат файла индекса ───────────────────────────────────────

class IndexFormatError(SnpsaError):
    """Файл индекса повреждён или имеет чужой формат."""


class BadMagic(IndexFormatError):
    pass


class VersionMismatch(IndexFormatError):
    pass


class ChecksumMismatch(IndexFormatError):
    pass


class Truncated(IndexFormatError):
    pass


# ─── oracle ─────────────────────────────────────────────────────

class OracleTooLarge(SnpsaError):
    """Текст длиннее предела наивного оракула."""
