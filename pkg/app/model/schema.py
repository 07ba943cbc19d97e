"""
SsnpSchema: референс, колонки SNP-сайтов и пары аллелей.

Формат файла схемы (UTF-8, строки с '#' в начале — комментарии):
  SSNP 1
  n=<int> k=<int> alphabet=<символы в порядке сортировки>
  ref=<n символов, '?' на месте каждого сайта>
  site <col> <low> <high>        (k строк)

Колонки 1-based. Сентинел '#' не входит в алфавит и меньше любого символа.
"""
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from app.config import SENTINEL
from app.errors import LengthMismatch, MalformedInput, SitePlacementViolation

SCHEMA_HEADER = "SSNP 1"
MAX_ALPHABET = 255  # коды 1..255, 0 — сентинел


class Alpha(NamedTuple):
    index: int    # 1..k+1
    start: int    # каноническая колонка первого символа
    text: str


def check_site_columns(sites, n: int) -> None:
    """c_1 >= 2, c_k <= n-1, c_{j+1} - c_j >= 2."""
    previous = None
    for col in sites:
        if col < 2 or col > n - 1:
            raise SitePlacementViolation(
                f"site column {col} outside 2..{n - 1} (substrings around sites must be non-empty)"
            )
        if previous is not None and col - previous < 2:
            raise SitePlacementViolation(
                f"site columns {previous} and {col} are adjacent (gap must be >= 2)"
            )
        previous = col


@dataclass(frozen=True)
class SsnpSchema:
    n: int
    alphabet: str
    sites: tuple
    alleles: tuple
    reference: str
    placeholder: str = "?"
    _site_of_col: dict = field(init=False, repr=False, compare=False)
    _codes: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sites", tuple(int(c) for c in self.sites))
        object.__setattr__(self, "alleles", tuple((str(lo), str(hi)) for lo, hi in self.alleles))

        if self.n < 1:
            raise MalformedInput(f"word length n must be >= 1, got {self.n}")
        if len(self.reference) != self.n:
            raise LengthMismatch(f"reference has {len(self.reference)} characters, n={self.n}")
        if len(self.placeholder) != 1 or self.placeholder == SENTINEL:
            raise MalformedInput(f"bad placeholder {self.placeholder!r}")

        chars = list(self.alphabet)
        if len(set(chars)) != len(chars) or chars != sorted(chars):
            raise MalformedInput(f"alphabet {self.alphabet!r} must be unique and sorted")
        if not 1 <= len(chars) <= MAX_ALPHABET:
            raise MalformedInput(f"alphabet size must be in 1..{MAX_ALPHABET}")
        for bad in (SENTINEL, self.placeholder):
            if bad in self.alphabet:
                raise MalformedInput(f"alphabet must not contain {bad!r}")
        if any(ch.isspace() for ch in chars):
            raise MalformedInput("alphabet must not contain whitespace")

        if len(self.sites) != len(self.alleles):
            raise MalformedInput(f"{len(self.sites)} sites but {len(self.alleles)} allele pairs")
        check_site_columns(self.sites, self.n)

        for col, (low, high) in zip(self.sites, self.alleles):
            if len(low) != 1 or len(high) != 1:
                raise MalformedInput(f"site {col}: alleles must be single characters")
            if low not in self.alphabet or high not in self.alphabet:
                raise MalformedInput(f"site {col}: alleles {low!r}/{high!r} not in alphabet")
            if not low < high:
                raise MalformedInput(f"site {col}: alleles must satisfy low < high, got {low!r} {high!r}")

        site_of_col = {col: j for j, col in enumerate(self.sites, start=1)}
        for col, ch in enumerate(self.reference, start=1):
            if col in site_of_col:
                if ch != self.placeholder:
                    raise MalformedInput(f"reference column {col} is a site but holds {ch!r}")
            elif ch not in self.alphabet:
                raise MalformedInput(f"reference column {col}: {ch!r} not in alphabet")

        object.__setattr__(self, "_site_of_col", site_of_col)
        object.__setattr__(self, "_codes", {ch: code for code, ch in enumerate(chars, start=1)})

    # ─── производные ─────────────────────────────────────────

    @property
    def k(self) -> int:
        return len(self.sites)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    def site_at(self, col: int) -> int:
        """Номер сайта в колонке col или 0."""
        return self._site_of_col.get(col, 0)

    def site_column(self, j: int) -> int:
        return self.sites[j - 1]

    def code(self, ch: str) -> int:
        """Ординал символа: сентинел 0, алфавит 1..σ. KeyError для чужих."""
        if ch == SENTINEL:
            return 0
        return self._codes[ch]

    def has_char(self, ch: str) -> bool:
        return ch in self._codes

    def char_of(self, code: int) -> str:
        return SENTINEL if code == 0 else self.alphabet[code - 1]

    def alphas(self) -> list[Alpha]:
        """Фиксированные подстроки α_1..α_{k+1} с каноническими колонками."""
        bounds = [0, *self.sites, self.n + 1]
        return [
            Alpha(i, bounds[i - 1] + 1, self.reference[bounds[i - 1]: bounds[i] - 1])
            for i in range(1, len(bounds))
        ]

    def realize(self, bits) -> str:
        """Слово для набора аллельных битов (по одному на сайт)."""
        word = list(self.reference)
        for col, (low, high), bit in zip(self.sites, self.alleles, bits):
            word[col - 1] = high if bit else low
        return "".join(word)


def format_schema(schema: SsnpSchema) -> str:
    lines = [
        SCHEMA_HEADER,
        f"n={schema.n} k={schema.k} alphabet={schema.alphabet}",
        f"ref={schema.reference}",
    ]
    for col, (low, high) in zip(schema.sites, schema.alleles):
        lines.append(f"site {col} {low} {high}")
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(SENTINEL):
            continue
        out.append((number, line))
    return out


def _parse_int(value: str, what: str, line_no: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise MalformedInput(f"line {line_no}: {what} must be an integer, got {value!r}")


def parse_schema(text: str, placeholder: Optional[str] = "?") -> SsnpSchema:
    """
    Парсит файл схемы → SsnpSchema.

    placeholder=None — взять символ из ref= в колонке первого сайта.

    Raises:
        MalformedInput / SitePlacementViolation / LengthMismatch
    """
    lines = _content_lines(text)
    if len(lines) < 3:
        raise MalformedInput("schema needs a header, a parameter line and a ref= line")

    line_no, header = lines[0]
    if header != SCHEMA_HEADER:
        raise MalformedInput(f"line {line_no}: expected {SCHEMA_HEADER!r}, got {header!r}")

    line_no, params_line = lines[1]
    params = {}
    for token in params_line.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise MalformedInput(f"line {line_no}: expected key=value, got {token!r}")
        params[key] = value
    missing = {"n", "k", "alphabet"} - params.keys()
    if missing:
        raise MalformedInput(f"line {line_no}: missing {', '.join(sorted(missing))}")
    n = _parse_int(params["n"], "n", line_no)
    k = _parse_int(params["k"], "k", line_no)
    alphabet = "".join(sorted(set(params["alphabet"])))

    line_no, ref_line = lines[2]
    if not ref_line.startswith("ref="):
        raise MalformedInput(f"line {line_no}: expected ref=..., got {ref_line[:20]!r}")
    reference = ref_line[len("ref="):]

    site_lines = lines[3:]
    if len(site_lines) != k:
        raise MalformedInput(f"k={k} but {len(site_lines)} site lines")
    sites, alleles = [], []
    for line_no, line in site_lines:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "site":
            raise MalformedInput(f"line {line_no}: expected 'site <col> <low> <high>', got {line!r}")
        sites.append(_parse_int(parts[1], "site column", line_no))
        alleles.append((parts[2], parts[3]))

    if placeholder is None:
        placeholder = reference[sites[0] - 1] if sites and 1 <= sites[0] <= len(reference) else "?"

    return SsnpSchema(
        n=n,
        alphabet=alphabet,
        sites=tuple(sites),
        alleles=tuple(alleles),
        reference=reference,
        placeholder=placeholder,
    )
