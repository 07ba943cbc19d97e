"""
Бинарный файл индекса (little-endian).

  "SSNPSA01" | u32 version | u64 n, k, m, g
  schema:  u64 длина + UTF-8 текст схемы
  matrix:  m·k бит построчно, упакованы до байта
  starts:  u64 длина в битах + 64-битные лимбы
  meta:    u64 count + count × (u32 column, u32 site, u8 side, u32 sideOffset)
  chain:   k битвекторов длины m, только лимбы
  anchors: u64 count + count × (u32 site, m × u64 позиций)
  groups:  u64 count + count × (u32 firstSite, u32 p, m·p бит меток, младший бит первым)
  u32 CRC-32C всех предыдущих байт

Директории rank/select не хранятся и строятся при загрузке.
"""
import io
import logging
import struct
from pathlib import Path
from typing import BinaryIO, Union

import numpy as np
from crc32c import crc32c

from app.errors import (
    BadMagic,
    ChecksumMismatch,
    IndexFormatError,
    Truncated,
    VersionMismatch,
)
from app.index.chain import AnchorSet, PermutationChain, make_group
from app.index.csa import CompressedSA
from app.index.directory import BlockDirectory, BlockMeta
from app.model.matrix import GenotypeMatrix
from app.model.schema import format_schema, parse_schema
from app.succinct import IndexedBitvector

logger = logging.getLogger("snpsa.index.storage")

MAGIC = b"SSNPSA01"
VERSION = 1

_HEADER = struct.Struct("<8sIQQQQ")
_CRC = struct.Struct("<I")
_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")
_GROUP = struct.Struct("<II")

META_DTYPE = np.dtype([
    ("column", "<u4"),
    ("site", "<u4"),
    ("side", "u1"),
    ("side_offset", "<u4"),
])

PathOrFile = Union[str, Path, BinaryIO]


def _nlimbs(bits: int) -> int:
    return (bits + 63) // 64


def _pack_labels(labels: list[int], p: int) -> bytes:
    """Метки по p бит подряд, младший бит метки первым."""
    arr = np.asarray(labels, dtype=np.int64)
    shifts = np.arange(p, dtype=np.int64)
    bits = ((arr[:, None] >> shifts) & 1).astype(np.uint8).reshape(-1)
    return np.packbits(bits, bitorder="little").tobytes()


def _unpack_labels(data: bytes, m: int, p: int) -> np.ndarray:
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8), bitorder="little")[: m * p]
    weights = np.int64(1) << np.arange(p, dtype=np.int64)
    return (bits.reshape(m, p).astype(np.int64) * weights).sum(axis=1)


# ─── запись ──────────────────────────────────────────────────

def dumps(csa: CompressedSA) -> bytes:
    """Индекс → байты файла."""
    n, k, m = csa.n, csa.k, csa.m
    out = io.BytesIO()
    out.write(_HEADER.pack(MAGIC, VERSION, n, k, m, csa.g))

    schema_bytes = format_schema(csa.schema).encode("utf-8")
    out.write(_U64.pack(len(schema_bytes)))
    out.write(schema_bytes)

    out.write(np.packbits(csa.matrix.bits.reshape(-1), bitorder="little").tobytes())

    starts = csa.directory.starts
    out.write(_U64.pack(len(starts)))
    out.write(starts.limbs.astype("<u8").tobytes())

    meta = np.array([tuple(rec) for rec in csa.directory.meta], dtype=META_DTYPE)
    out.write(_U64.pack(len(meta)))
    out.write(meta.tobytes())

    for bv in csa.chain.bits:
        out.write(bv.limbs.astype("<u8").tobytes())

    positions = csa.anchors.positions
    out.write(_U64.pack(len(positions)))
    for anchor in csa.anchors.ids:
        out.write(_U32.pack(anchor))
        out.write(np.asarray(positions[anchor], dtype="<u8").tobytes())

    out.write(_U64.pack(len(csa.groups)))
    for grp in csa.groups:
        out.write(_GROUP.pack(grp.first_site, grp.p))
        out.write(_pack_labels(grp.labels.to_labels(), grp.p))

    body = out.getvalue()
    return body + _CRC.pack(crc32c(body))


def save(csa: CompressedSA, sink: PathOrFile) -> int:
    """Пишет индекс в путь или бинарный поток. Возвращает число байт."""
    data = dumps(csa)
    if isinstance(sink, (str, Path)):
        Path(sink).write_bytes(data)
    else:
        sink.write(data)
    logger.info("Index saved: %d bytes (n=%d k=%d m=%d g=%d)", len(data), csa.n, csa.k, csa.m, csa.g)
    return len(data)


# ─── чтение ──────────────────────────────────────────────────

class _Reader:
    def __init__(self, data: bytes):
        self._data = data
        self._pos = 0

    def read(self, size: int) -> bytes:
        end = self._pos + size
        if size < 0 or end > len(self._data):
            raise Truncated(f"unexpected end of index data at byte {self._pos} (need {size})")
        chunk = self._data[self._pos: end]
        self._pos = end
        return chunk

    def unpack(self, fmt: struct.Struct) -> tuple:
        return fmt.unpack(self.read(fmt.size))

    def u32(self) -> int:
        return self.unpack(_U32)[0]

    def u64(self) -> int:
        return self.unpack(_U64)[0]

    def limbs(self, bits: int) -> np.ndarray:
        return np.frombuffer(self.read(8 * _nlimbs(bits)), dtype="<u8")

    @property
    def remaining(self) -> int:
        return len(self._data) - self._pos


def loads(data: bytes) -> CompressedSA:
    """
    Байты файла → индекс.

    Raises:
        Truncated, ChecksumMismatch, BadMagic, VersionMismatch, IndexFormatError
    """
    if len(data) < _HEADER.size + _CRC.size:
        raise Truncated(f"index data has {len(data)} bytes, header alone needs {_HEADER.size + _CRC.size}")
    body, (stored,) = data[:-_CRC.size], _CRC.unpack(data[-_CRC.size:])
    if crc32c(body) != stored:
        raise ChecksumMismatch("index checksum does not match its contents")

    reader = _Reader(body)
    magic, version, n, k, m, g = reader.unpack(_HEADER)
    if magic != MAGIC:
        raise BadMagic(f"not an index file (magic {magic!r})")
    if version != VERSION:
        raise VersionMismatch(f"index format version {version}, expected {VERSION}")
    if g < 1:
        raise IndexFormatError(f"stride must be >= 1, got {g}")

    try:
        schema = parse_schema(reader.read(reader.u64()).decode("utf-8"), placeholder=None)
    except UnicodeDecodeError as exc:
        raise IndexFormatError(f"schema section is not UTF-8: {exc}") from exc
    if (schema.n, schema.k) != (n, k):
        raise IndexFormatError(f"schema says n={schema.n} k={schema.k}, header says n={n} k={k}")

    matrix_bits = np.unpackbits(
        np.frombuffer(reader.read((m * k + 7) // 8), dtype=np.uint8), bitorder="little"
    )[: m * k]
    matrix = GenotypeMatrix(matrix_bits.reshape(m, k))

    length = reader.u64()
    if length != m * (n + 1):
        raise IndexFormatError(f"starts bitvector has {length} bits, expected {m * (n + 1)}")
    starts = IndexedBitvector.from_limbs(reader.limbs(length), length)

    count = reader.u64()
    raw = np.frombuffer(reader.read(count * META_DTYPE.itemsize), dtype=META_DTYPE)
    meta = tuple(
        BlockMeta(int(r["column"]), int(r["site"]), int(r["side"]), int(r["side_offset"]))
        for r in raw
    )
    try:
        directory = BlockDirectory(starts, meta)
    except ValueError as exc:
        raise IndexFormatError(str(exc)) from exc

    chain = PermutationChain(tuple(
        IndexedBitvector.from_limbs(reader.limbs(m), m) for _ in range(k)
    ))

    positions = {}
    for _ in range(reader.u64()):
        anchor = reader.u32()
        positions[anchor] = np.frombuffer(reader.read(8 * m), dtype="<u8").copy()
    anchors = AnchorSet(stride=g, k=k, positions=positions)
    if set(positions) != set(anchors.ids):
        raise IndexFormatError(f"anchor ids {sorted(positions)} do not match stride {g}")

    groups = []
    for _ in range(reader.u64()):
        first, p = reader.unpack(_GROUP)
        if not (1 <= first <= k and 1 <= p <= k):
            raise IndexFormatError(f"bad group header: first site {first}, p={p}")
        labels = _unpack_labels(reader.read((m * p + 7) // 8), m, p)
        groups.append(make_group(first, p, anchors.anchor_for(first), labels))

    if reader.remaining:
        raise IndexFormatError(f"{reader.remaining} unexpected bytes before the checksum")

    return CompressedSA(
        schema=schema,
        matrix=matrix,
        directory=directory,
        chain=chain,
        anchors=anchors,
        groups=tuple(groups),
    )


def load(source: PathOrFile) -> CompressedSA:
    """Читает индекс из пути или бинарного потока."""
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    else:
        data = source.read()
    csa = loads(data)
    logger.info("Index loaded: %d bytes (n=%d k=%d m=%d g=%d)", len(data), csa.n, csa.k, csa.m, csa.g)
    return csa
