"""Compressed suffix array over a k-SSNP database: build, access, search, space, storage."""
from app.index.builder import AUTO, build, parse_stride, resolve_stride
from app.index.chain import AccessStats, AnchorSet, PackedGroup, PermutationChain
from app.index.csa import CompressedSA
from app.index.directory import ALL, HIGH, LOW, TERMINAL, BlockDirectory, BlockMeta
from app.index.search import sa_interval
from app.index.space import SpaceReport, build_space_report, width
from app.index.storage import dumps, load, loads, save

__all__ = [
    "ALL",
    "AUTO",
    "AccessStats",
    "AnchorSet",
    "BlockDirectory",
    "BlockMeta",
    "CompressedSA",
    "HIGH",
    "LOW",
    "PackedGroup",
    "PermutationChain",
    "SpaceReport",
    "TERMINAL",
    "build",
    "build_space_report",
    "dumps",
    "load",
    "loads",
    "parse_stride",
    "resolve_stride",
    "sa_interval",
    "save",
    "width",
]
