"""
Поиск образца двумя бинарными поисками по SA.

Сравнения идут по ординалам символов (сентинел 0, алфавит 1..σ), символ
текста читается из схемы и матрицы, SA[i] — через sa_access.
"""
from typing import Optional

from app.config import SENTINEL
from app.errors import EmptyPattern, InvalidPatternCharacter


def pattern_codes(schema, pattern: str) -> Optional[list[int]]:
    """
    Ординалы образца; None, если в нём есть символ вне алфавита
    (такой образец в D не встречается).
    """
    if not pattern:
        raise EmptyPattern("pattern must be non-empty")
    codes = []
    missing = False
    for ch in pattern:
        if ch in (SENTINEL, schema.placeholder):
            raise InvalidPatternCharacter(f"pattern must not contain {ch!r}")
        if not schema.has_char(ch):
            missing = True
            continue
        codes.append(schema.code(ch))
    return None if missing else codes


def _compare(csa, rank: int, codes: list[int]) -> int:
    """Знак сравнения префикса суффикса SA[rank] длины |codes| с образцом."""
    pos = csa.sa_access(rank)
    text = csa.text
    for offset, code in enumerate(codes):
        p = pos + offset
        if p > csa.length:
            return -1
        c = text.code_at(p)
        if c != code:
            return -1 if c < code else 1
    return 0


def sa_interval(csa, pattern: str) -> tuple[int, int]:
    """Полуинтервал рангов [lo, hi) суффиксов, начинающихся с pattern."""
    codes = pattern_codes(csa.schema, pattern)
    if codes is None:
        return 1, 1

    lo, hi = 1, csa.length + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare(csa, mid, codes) < 0:
            lo = mid + 1
        else:
            hi = mid
    first = lo

    hi = csa.length + 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _compare(csa, mid, codes) <= 0:
            lo = mid + 1
        else:
            hi = mid
    return first, lo
