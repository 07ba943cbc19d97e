"""
Проверка k-SSNP условия: каждая α_i встречается в слове ровно один раз.

validate проверяет m сохранённых слов — этого достаточно для блоков
суффиксного массива. language_check_exhaustive перебирает все 2^k слов языка.
"""
import itertools
import logging
from dataclasses import dataclass, field

from app.errors import TooManySites
from app.model.schema import SsnpSchema
from app.model.text import VirtualText

logger = logging.getLogger("snpsa.model.validate")

DEFAULT_MAX_K = 16
DUPLICATE = "duplicate_alpha"


@dataclass(frozen=True)
class Violation:
    kind: str
    word: int            # 1-based номер слова (или реализации при переборе)
    alpha: int           # 1..k+1
    positions: tuple     # все 1-based колонки вхождений α в слове


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> list[str]:
        if self.ok:
            return ["ok"]
        lines = [f"{len(self.violations)} uniqueness violation(s):"]
        for v in self.violations:
            cols = ", ".join(str(p) for p in v.positions)
            lines.append(f"  word {v.word}: alpha_{v.alpha} occurs {len(v.positions)} times at columns {cols}")
        return lines


def _occurrences(word: str, text: str) -> list[int]:
    found = []
    start = word.find(text)
    while start != -1:
        found.append(start + 1)
        start = word.find(text, start + 1)
    return found


def _word_violations(schema: SsnpSchema, word: str, word_no: int) -> list[Violation]:
    out = []
    for alpha in schema.alphas():
        first = word.find(alpha.text)
        # быстрый путь: первое вхождение каноническое и второго нет
        if first == alpha.start - 1 and word.find(alpha.text, first + 1) == -1:
            continue
        out.append(Violation(DUPLICATE, word_no, alpha.index, tuple(_occurrences(word, alpha.text))))
    return out


def validate(vt: VirtualText) -> ValidationReport:
    report = ValidationReport()
    seen: dict[str, list[Violation]] = {}
    for row, word in enumerate(vt.words(), start=1):
        if word not in seen:
            seen[word] = _word_violations(vt.schema, word, row)
            report.violations.extend(seen[word])
        else:
            report.violations.extend(
                Violation(v.kind, row, v.alpha, v.positions) for v in seen[word]
            )
    if not report.ok:
        logger.warning("SSNP validation failed: %d violation(s)", len(report.violations))
    return report


def language_check_exhaustive(schema: SsnpSchema, max_k: int = DEFAULT_MAX_K) -> ValidationReport:
    """Проверяет все 2^k реализаций схемы (бит сайта 1 — старший в нумерации)."""
    if schema.k > max_k:
        raise TooManySites(f"k={schema.k} exceeds exhaustive limit {max_k} (2^k words)")
    report = ValidationReport()
    for number, bits in enumerate(itertools.product((0, 1), repeat=schema.k), start=1):
        report.violations.extend(_word_violations(schema, schema.realize(bits), number))
    return report
