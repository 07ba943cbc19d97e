"""
Точный учёт памяти индекса в битах.

Полезная нагрузка считается в ширинах ⌈log2 N⌉, а не в ширинах файла,
чтобы оценку O(n + km/√log n) можно было проверить напрямую.
"""
from dataclasses import asdict, dataclass

from app.model.schema import format_schema


def width(count: int) -> int:
    """⌈log2 count⌉, минимум 1 бит."""
    return max(1, (count - 1).bit_length())


@dataclass(frozen=True)
class SpaceReport:
    n: int
    k: int
    m: int
    g: int
    length: int               # N = m(n+1)
    directory_bits: int       # starts + rank/select директории
    meta_entries: int
    meta_width: int
    anchors: int              # число якорей, включая TERMINAL
    anchor_ints: int
    anchor_width: int
    chain_payload: int        # ровно k·m
    chain_bits: int           # вместе с директориями
    groups: int
    group_payload: int
    group_bits: int
    schema_bits: int
    matrix_bits: int

    @property
    def meta_bits(self) -> int:
        return self.meta_entries * self.meta_width

    @property
    def anchor_bits(self) -> int:
        return self.anchor_ints * self.anchor_width

    @property
    def total_bits(self) -> int:
        return (
            self.directory_bits + self.meta_bits + self.anchor_bits + self.chain_bits
            + self.group_bits + self.schema_bits + self.matrix_bits
        )

    @property
    def plain_sa_bits(self) -> int:
        return self.length * width(self.length)

    def as_json(self) -> dict:
        """Стабильный набор ключей для `stats --json`."""
        return {
            "directory_bits": self.directory_bits,
            "meta_entries": self.meta_entries,
            "anchor_ints": self.anchor_ints,
            "chain_bits": self.chain_bits,
            "group_bits": self.group_bits,
            "total_bits": self.total_bits,
            "plain_sa_bits": self.plain_sa_bits,
        }

    def rows(self) -> list[tuple[str, int]]:
        """Строки таблицы для текстового вывода."""
        data = asdict(self)
        data.update(
            meta_bits=self.meta_bits,
            anchor_bits=self.anchor_bits,
            total_bits=self.total_bits,
            plain_sa_bits=self.plain_sa_bits,
        )
        return list(data.items())


def meta_width(n: int, k: int, m: int) -> int:
    """Колонка, сайт, сторона (2 бита) и смещение стороны."""
    return (n + 1).bit_length() + max(1, k.bit_length()) + 2 + m.bit_length()


def build_space_report(csa) -> SpaceReport:
    n, k, m = csa.n, csa.k, csa.m
    length = csa.length
    anchor_ints = csa.anchors.integer_count()
    return SpaceReport(
        n=n,
        k=k,
        m=m,
        g=csa.g,
        length=length,
        directory_bits=csa.directory.starts.space_bits().total,
        meta_entries=len(csa.directory),
        meta_width=meta_width(n, k, m),
        anchors=len(csa.anchors.positions),
        anchor_ints=anchor_ints,
        anchor_width=width(length),
        chain_payload=csa.chain.payload_bits(),
        chain_bits=sum(bv.space_bits().total for bv in csa.chain.bits),
        groups=len(csa.groups),
        group_payload=sum(grp.labels.payload_bits() for grp in csa.groups),
        group_bits=sum(grp.labels.space_bits().total for grp in csa.groups),
        schema_bits=8 * len(format_schema(csa.schema).encode("utf-8")),
        matrix_bits=m * k,
    )
