"""Succinct building blocks: rank/select bitvectors and small-alphabet label strings."""
from app.succinct.bitvector import (
    IndexedBitvector,
    SpaceBits,
    bv_access,
    bv_build,
    bv_rank,
    bv_select,
    pack_bits,
)
from app.succinct.labels import (
    PackedLabelString,
    seq_access,
    seq_build,
    seq_partial_rank,
    seq_select,
)

__all__ = [
    "IndexedBitvector",
    "PackedLabelString",
    "SpaceBits",
    "bv_access",
    "bv_build",
    "bv_rank",
    "bv_select",
    "pack_bits",
    "seq_access",
    "seq_build",
    "seq_partial_rank",
    "seq_select",
]
