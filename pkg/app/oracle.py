"""
Наивный оракул: SA сортировкой сравнением, поиск скользящим окном,
сверка индекса с оракулом на всех рангах.

Оракул не разделяет код с builder: суффиксы сравниваются как строки,
сентинел заменяется на '\\x00', чтобы быть меньше любого символа.
"""
import functools
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from tqdm import tqdm

from app.config import SENTINEL
from app.errors import EmptyPattern, OracleTooLarge
from app.index import AccessStats, CompressedSA, build
from app.model.text import VirtualText, expand

logger = logging.getLogger("snpsa.oracle")

DEFAULT_MAX_LENGTH = 1 << 20
_FIRST_CHUNK = 64


@dataclass(frozen=True)
class NaiveSA:
    text: str
    sa: list[int]      # 1-based позиции

    def __len__(self) -> int:
        return len(self.sa)

    def is_strictly_sorted(self) -> bool:
        key = self.text.replace(SENTINEL, "\x00")
        return all(key[a - 1:] < key[b - 1:] for a, b in zip(self.sa, self.sa[1:]))


def _suffix_cmp(text: str, a: int, b: int) -> int:
    """Сравнение суффиксов с 0-based начал a и b кусками удваивающейся длины."""
    size = _FIRST_CHUNK
    while True:
        left, right = text[a: a + size], text[b: b + size]
        if left != right:
            return -1 if left < right else 1
        if a + size >= len(text) or b + size >= len(text):
            return (b > a) - (b < a)
        a += size
        b += size
        size *= 2


def naive_sa(text: str, max_length: int = DEFAULT_MAX_LENGTH) -> NaiveSA:
    """SA сортировкой сравнением всех суффиксов."""
    if len(text) > max_length:
        raise OracleTooLarge(f"text length {len(text)} exceeds oracle limit {max_length}")
    key = text.replace(SENTINEL, "\x00")
    order = sorted(
        range(len(key)),
        key=functools.cmp_to_key(lambda a, b: _suffix_cmp(key, a, b)),
    )
    return NaiveSA(text=text, sa=[i + 1 for i in order])


def naive_locate(text: str, pattern: str) -> list[int]:
    """Все 1-based позиции вхождений, включая перекрывающиеся."""
    if not pattern:
        raise EmptyPattern("pattern must be non-empty")
    found = []
    start = text.find(pattern)
    while start != -1:
        found.append(start + 1)
        start = text.find(pattern, start + 1)
    return found


def naive_count(text: str, pattern: str) -> int:
    return len(naive_locate(text, pattern))


# ─── сверка индекса ──────────────────────────────────────────

@dataclass
class CompareReport:
    length: int = 0
    ranks_checked: int = 0
    divergence: Optional[tuple] = None        # (rank, ожидалось, получено)
    patterns_checked: int = 0
    pattern_failures: list = field(default_factory=list)
    stats: AccessStats = field(default_factory=AccessStats)
    build_sec: float = 0.0
    oracle_sec: float = 0.0
    compare_sec: float = 0.0

    @property
    def ok(self) -> bool:
        return self.divergence is None and not self.pattern_failures

    def render(self) -> list[str]:
        lines = []
        if self.divergence is None:
            lines.append(f"ranks: {self.ranks_checked}/{self.length} equal")
        else:
            rank, expected, got = self.divergence
            lines.append(f"ranks: divergence at rank {rank}: expected {expected}, got {got}")
        lines.append(
            f"patterns: {self.patterns_checked - len(self.pattern_failures)}/{self.patterns_checked} equal"
        )
        for pattern, expected, got in self.pattern_failures:
            lines.append(f"  pattern {pattern!r}: expected {expected}, got {got}")
        lines.append(
            f"steps: mean {self.stats.mean_steps:.3f}, max {self.stats.max_steps}, "
            f"packed {self.stats.packed}"
        )
        lines.append(
            f"time: build {self.build_sec:.3f}s, oracle {self.oracle_sec:.3f}s, "
            f"compare {self.compare_sec:.3f}s"
        )
        lines.append("OK" if self.ok else "DIVERGED")
        return lines

    def as_json(self) -> dict:
        return {
            "ok": self.ok,
            "length": self.length,
            "ranks_checked": self.ranks_checked,
            "divergence": list(self.divergence) if self.divergence else None,
            "patterns_checked": self.patterns_checked,
            "pattern_failures": [list(f) for f in self.pattern_failures],
            "mean_steps": self.stats.mean_steps,
            "max_steps": self.stats.max_steps,
            "build_sec": round(self.build_sec, 6),
            "oracle_sec": round(self.oracle_sec, 6),
            "compare_sec": round(self.compare_sec, 6),
        }


def sample_patterns(vt: VirtualText, count: int, seed: int = 0, max_length: int = 8) -> list[str]:
    """
    Образцы для проверки: в основном подстроки слов (встречаются),
    каждый четвёртый — случайная строка над алфавитом.
    """
    rng = np.random.default_rng(seed)
    alphabet = vt.schema.alphabet
    patterns = []
    for i in range(count):
        length = int(rng.integers(1, max_length + 1))
        if i % 4 == 3:
            patterns.append("".join(alphabet[int(c)] for c in rng.integers(0, len(alphabet), size=length)))
            continue
        word = vt.word(int(rng.integers(1, vt.m + 1)))
        start = int(rng.integers(0, vt.n))
        patterns.append(word[start: start + length])
    return patterns


def full_compare(
    vt: VirtualText,
    stride="auto",
    csa: Optional[CompressedSA] = None,
    patterns: int = 20,
    seed: int = 0,
    max_length: int = DEFAULT_MAX_LENGTH,
    max_group_bits: int = 16,
    show_progress: bool = False,
) -> CompareReport:
    """
    Строит индекс (если не передан) и сверяет его с оракулом:
    sa_access на всех рангах, затем count/locate на выборке образцов.
    """
    report = CompareReport(length=vt.length)

    if csa is None:
        started = time.perf_counter()
        csa = build(vt, stride=stride, max_group_bits=max_group_bits)
        report.build_sec = time.perf_counter() - started

    started = time.perf_counter()
    text = expand(vt)
    oracle = naive_sa(text, max_length=max_length)
    report.oracle_sec = time.perf_counter() - started

    started = time.perf_counter()
    ranks = tqdm(
        range(1, len(oracle) + 1),
        desc="ranks",
        unit="rank",
        disable=not show_progress,
        leave=False,
    )
    for rank in ranks:
        got = csa.sa_access(rank, report.stats)
        expected = oracle.sa[rank - 1]
        report.ranks_checked += 1
        if got != expected:
            report.divergence = (rank, expected, got)
            break

    for pattern in tqdm(sample_patterns(vt, patterns, seed), desc="patterns", disable=not show_progress, leave=False):
        expected = naive_locate(text, pattern)
        got = csa.locate(pattern)
        report.patterns_checked += 1
        if got != expected or csa.count(pattern) != len(expected):
            report.pattern_failures.append((pattern, expected, got))
    report.compare_sec = time.perf_counter() - started

    if report.ok:
        logger.info(
            "Oracle check passed: %d ranks, %d patterns, mean steps %.3f",
            report.ranks_checked, report.patterns_checked, report.stats.mean_steps,
        )
    else:
        logger.warning("Oracle check failed: %s", report.render()[0])
    return report
