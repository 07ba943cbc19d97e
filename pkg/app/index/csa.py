"""
CompressedSA: доступ к SA[i] через блок, цепочку перестановок и якорь.

SA[i] = E_anchor[anchorRank] − (anchorColumn − c), где (c, site, side)
берутся из BlockDirectory, а anchorRank — из chain_eval.
После build/load объект не меняется, читать можно из любых потоков.
"""
from dataclasses import dataclass, field
from typing import Optional

from app.errors import IndexOutOfRange, NotGroupStart
from app.index.chain import AccessStats, AnchorSet, PackedGroup, PermutationChain
from app.index.directory import TERMINAL, BlockDirectory
from app.index.search import sa_interval
from app.index.space import SpaceReport, build_space_report
from app.model.matrix import GenotypeMatrix
from app.model.schema import SsnpSchema
from app.model.text import VirtualText


@dataclass(frozen=True, eq=False)
class CompressedSA:
    schema: SsnpSchema
    matrix: GenotypeMatrix
    directory: BlockDirectory
    chain: PermutationChain
    anchors: AnchorSet
    groups: tuple
    text: VirtualText = field(init=False, repr=False)
    _group_at: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "text", VirtualText(self.schema, self.matrix))
        object.__setattr__(self, "_group_at", {grp.first_site: grp for grp in self.groups})

    # ─── размеры ─────────────────────────────────────────────

    @property
    def n(self) -> int:
        return self.schema.n

    @property
    def m(self) -> int:
        return self.matrix.m

    @property
    def k(self) -> int:
        return self.schema.k

    @property
    def g(self) -> int:
        return self.anchors.stride

    @property
    def length(self) -> int:
        return self.m * (self.n + 1)

    def __len__(self) -> int:
        return self.length

    # ─── цепочка ─────────────────────────────────────────────

    def _check_site_rank(self, j: int, site_rank: int) -> None:
        if not 1 <= j <= self.k:
            raise IndexOutOfRange(f"site {j} outside 1..{self.k}")
        if not 1 <= site_rank <= self.m:
            raise IndexOutOfRange(f"rank {site_rank} outside 1..{self.m}")

    def sigma_step(self, j: int, site_rank: int) -> int:
        """Ранг на сайте j → ранг в порядке сайта j+1 (или терминальном)."""
        self._check_site_rank(j, site_rank)
        return self.chain.step(j, site_rank)

    def anchor_column(self, anchor: int) -> int:
        return self.n + 1 if anchor == TERMINAL else self.schema.site_column(anchor)

    def group(self, first_site: int) -> PackedGroup:
        try:
            return self._group_at[first_site]
        except KeyError:
            raise NotGroupStart(f"site {first_site} does not start a packed group") from None

    def _resolve(self, j: int, site_rank: int, stats: Optional[AccessStats]) -> tuple[int, int, int]:
        """(якорь, ранг у якоря, число sigma_step)."""
        if self.anchors.is_anchor(j):
            return j, site_rank, 0
        grp = self._group_at.get(j)
        if grp is not None:
            if stats is not None:
                stats.packed += 1
            return grp.anchor, grp.forward(site_rank), 0
        anchor = self.anchors.anchor_for(j)
        end = self.k + 1 if anchor == TERMINAL else anchor
        rank = site_rank
        for site in range(j, end):
            rank = self.chain.step(site, rank)
        steps = end - j
        if stats is not None:
            stats.steps += steps
        return anchor, rank, steps

    def chain_eval(self, j: int, site_rank: int, stats: Optional[AccessStats] = None) -> tuple[int, int]:
        """Ранг на сайте j → (ближайший якорь >= j, ранг в его порядке)."""
        self._check_site_rank(j, site_rank)
        anchor, rank, _ = self._resolve(j, site_rank, stats)
        return anchor, rank

    def packed_forward(self, first_site: int, site_rank: int) -> int:
        grp = self.group(first_site)
        self._check_site_rank(first_site, site_rank)
        return grp.forward(site_rank)

    def packed_inverse(self, first_site: int, anchor_rank: int) -> int:
        grp = self.group(first_site)
        if not 1 <= anchor_rank <= self.m:
            raise IndexOutOfRange(f"rank {anchor_rank} outside 1..{self.m}")
        return grp.inverse(anchor_rank)

    # ─── SA ──────────────────────────────────────────────────

    def sa_access(self, rank: int, stats: Optional[AccessStats] = None) -> int:
        if not 1 <= rank <= self.length:
            raise IndexOutOfRange(f"rank {rank} outside 1..{self.length}")
        meta, offset = self.directory.locate(rank)
        site_rank = meta.side_offset + offset + 1
        if meta.site == TERMINAL:
            anchor, anchor_rank, steps = TERMINAL, site_rank, 0
        else:
            anchor, anchor_rank, steps = self._resolve(meta.site, site_rank, stats)
        if stats is not None:
            stats.record(steps)
        value = self.anchors.positions[anchor][anchor_rank - 1]
        return int(value) - (self.anchor_column(anchor) - meta.column)

    def sa_range(self, first: int, last: int, stats: Optional[AccessStats] = None) -> list[int]:
        """SA[first..last] включительно."""
        if first > last:
            raise IndexOutOfRange(f"empty rank range {first}:{last}")
        return [self.sa_access(rank, stats) for rank in range(first, last + 1)]

    def terminal_order_is_decreasing(self) -> bool:
        """SA[1..m] = [m(n+1), (m−1)(n+1), …, n+1]?"""
        step = self.n + 1
        expected = range(self.m * step, 0, -step)
        return [int(p) for p in self.anchors.positions[TERMINAL]] == list(expected)

    # ─── текст и поиск ───────────────────────────────────────

    def extract(self, pos: int, length: int) -> str:
        """Подстрока D с позиции pos, обрезается по концу текста."""
        if not 1 <= pos <= self.length:
            raise IndexOutOfRange(f"position {pos} outside 1..{self.length}")
        if length < 0:
            raise IndexOutOfRange(f"negative length {length}")
        last = min(pos + length - 1, self.length)
        return "".join(self.text.char_at(p) for p in range(pos, last + 1))

    def count(self, pattern: str) -> int:
        lo, hi = sa_interval(self, pattern)
        return hi - lo

    def locate(self, pattern: str) -> list[int]:
        lo, hi = sa_interval(self, pattern)
        return sorted(self.sa_access(rank) for rank in range(lo, hi))

    def locate_hits(self, pattern: str) -> list[tuple[int, int, int]]:
        """(позиция, строка, колонка) для каждого вхождения."""
        return [(pos, *self.text.row_col_of(pos)) for pos in self.locate(pattern)]

    def space_report(self) -> SpaceReport:
        return build_space_report(self)
