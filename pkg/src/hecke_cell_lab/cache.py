"""On-disk cache for Kazhdan-Lusztig tables.

File layout (little-endian)::

    magic  b"HCLK"
    u16    format version
    record*  u32 payload length | u32 crc32(payload) | payload

A KL payload is ``u8 rank | y | u | u16 ncoeffs | i64 * ncoeffs`` where each
group element is ``i32 * rank`` (translation) followed by ``u16`` (index of
the finite part in W_0).  Records failing the checksum are skipped; a file
with the wrong magic or version is ignored entirely.  Either way the values
are recomputed, so the cache never changes results.
"""

from __future__ import annotations

import os
import struct
import tempfile
import zlib
from pathlib import Path

MAGIC = b"HCLK"
VERSION = 1
ENV_VAR = "HECKE_CELL_LAB_CACHE"

_HEADER = struct.Struct("<4sH")
_FRAME = struct.Struct("<II")


class CacheIOError(OSError):
    pass


def default_cache_dir():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "hecke-cell-lab"


def _pack_elt(u):
    return struct.pack("<%diH" % len(u.x), *u.x, u.w.index)


def encode_kl(y, u, poly):
    n = len(y.x)
    return (struct.pack("<B", n) + _pack_elt(y) + _pack_elt(u)
            + struct.pack("<H%dq" % len(poly), len(poly), *poly))


def decode_kl(payload, datum):
    from .weyl_affine import ExtAffineElt
    (n,) = struct.unpack_from("<B", payload, 0)
    if n != datum.rank:
        raise ValueError("rank mismatch")
    fmt = "<%diH" % n
    size = struct.calcsize(fmt)
    off = 1
    elts = []
    for _ in range(2):
        vals = struct.unpack_from(fmt, payload, off)
        off += size
        elts.append(ExtAffineElt(tuple(vals[:n]), datum.W0[vals[n]]))
    (k,) = struct.unpack_from("<H", payload, off)
    off += 2
    poly = struct.unpack_from("<%dq" % k, payload, off)
    if off + 8 * k != len(payload):
        raise ValueError("trailing bytes")
    return elts[0], elts[1], tuple(poly)


def write_records(path, payloads):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=".tmp-")
        with os.fdopen(fd, "wb") as fh:
            fh.write(_HEADER.pack(MAGIC, VERSION))
            for p in payloads:
                fh.write(_FRAME.pack(len(p), zlib.crc32(p)))
                fh.write(p)
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheIOError("cannot write cache file %s: %s" % (path, exc)) from exc


def read_records(path):
    """(payloads, rejected_count); missing or foreign files give ([], 0)."""
    path = Path(path)
    if not path.exists():
        return [], 0
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CacheIOError("cannot read cache file %s: %s" % (path, exc)) from exc
    if len(data) < _HEADER.size:
        return [], 1
    magic, version = _HEADER.unpack_from(data, 0)
    if magic != MAGIC or version != VERSION:
        return [], 1
    out = []
    bad = 0
    off = _HEADER.size
    while off + _FRAME.size <= len(data):
        length, crc = _FRAME.unpack_from(data, off)
        off += _FRAME.size
        payload = data[off:off + length]
        off += length
        if len(payload) != length:  # truncated final record
            bad += 1
            return out, bad
        if zlib.crc32(payload) != crc:
            bad += 1
            continue
        out.append(payload)
    if off != len(data):
        bad += 1
    return out, bad


class KLCache:
    """Load/store KL tables per root-system type."""

    def __init__(self, directory=None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.stats = {"loaded": 0, "rejected": 0, "stored": 0}

    def path(self, label):
        return self.directory / ("kl_%s.bin" % label)

    def load(self, datum):
        payloads, bad = read_records(self.path(datum.type_label))
        out = {}
        for p in payloads:
            try:
                y, u, poly = decode_kl(p, datum)
            except (struct.error, ValueError, IndexError):
                bad += 1
                continue
            out[(y, u)] = poly
        self.stats["loaded"] += len(out)
        self.stats["rejected"] += bad
        return out

    def store(self, datum, table):
        items = sorted(table.items(), key=lambda kv: (kv[0][1].sort_key(), kv[0][0].sort_key()))
        write_records(self.path(datum.type_label), [encode_kl(y, u, p) for (y, u), p in items])
        self.stats["stored"] += len(items)
