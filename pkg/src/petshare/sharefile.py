"""Bit-exact share file format, version 1.

Layout (integers little-endian)::

    offset  size  field
         0     4  magic "PET1"
         4     1  version (1)
         5     1  scheme id      (1 shamir, 2 ssms, 3 pets)
         6     1  field id       (1 GF(4), 2 GF(256))
         7     1  cipher id      (0 none, 1 toy-otp, 2 test-keystream, 3 stream256)
         8     1  t
         9     1  n
        10     1  index
        11    16  nonce (reserved, zero)
        27     8  orig_len       secret length in bytes
        35     4  plain_pad      symbols
        39     4  tail_pad       symbols
        43     4  poly_part_len  symbols
        47     4  frag_part_len  symbols
        51     *  payload: poly part then fragment part, packed together

The payload is ``ceil((poly_part_len + frag_part_len) * m / 8)`` bytes.
"""

from __future__ import annotations

import struct

from .cipher import suite_by_id
from .errors import ShareFormatError
from .gf import field_by_id, unpack_symbols
from .poly import SymbolVector
from .share import NO_CIPHER, Scheme, Share

__all__ = ["MAGIC", "VERSION", "HEADER", "dumps", "loads", "parse_header"]

MAGIC = b"PET1"
VERSION = 1
HEADER = struct.Struct("<4sBBBBBBB16sQIIII")


def dumps(share: Share) -> bytes:
    if share.field.wire_id is None:
        raise ValueError(f"{share.field} has no wire id and cannot be serialized")
    payload = SymbolVector.concat([share.poly_part, share.frag_part], share.field).to_bytes()
    header = HEADER.pack(
        MAGIC, VERSION, int(share.scheme), share.field.wire_id, share.suite_id,
        share.t, share.n, share.index, share.nonce, share.orig_len,
        share.plain_pad, share.tail_pad, len(share.poly_part), len(share.frag_part),
    )
    return header + payload


def parse_header(data: bytes) -> dict:
    if len(data) < HEADER.size:
        raise ShareFormatError(f"file too short for a header ({len(data)} < {HEADER.size} bytes)")
    (magic, version, scheme, field_id, suite_id, t, n, index, nonce, orig_len,
     plain_pad, tail_pad, poly_len, frag_len) = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ShareFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise ShareFormatError(f"unsupported share version {version}")
    try:
        scheme = Scheme(scheme)
        spec = field_by_id(field_id)
        if suite_id != NO_CIPHER:
            suite_by_id(suite_id)
    except ValueError as exc:
        raise ShareFormatError(str(exc)) from None
    return dict(
        version=version, scheme=scheme, field=spec, suite_id=suite_id, t=t, n=n,
        index=index, nonce=nonce, orig_len=orig_len, plain_pad=plain_pad,
        tail_pad=tail_pad, poly_part_len=poly_len, frag_part_len=frag_len,
    )


def loads(data: bytes) -> Share:
    h = parse_header(data)
    spec = h["field"]
    count = h["poly_part_len"] + h["frag_part_len"]
    expected = -(-count * spec.m // 8)
    body = data[HEADER.size :]
    if len(body) != expected:
        raise ShareFormatError(f"payload is {len(body)} bytes, header implies {expected}")
    sym = unpack_symbols(body, spec, count)
    poly = SymbolVector._wrap(sym[: h["poly_part_len"]], spec)
    frag = SymbolVector._wrap(sym[h["poly_part_len"] :], spec)
    try:
        return Share(
            h["scheme"], spec, h["suite_id"], h["t"], h["n"], h["index"], h["orig_len"],
            h["plain_pad"], h["tail_pad"], poly, frag, h["nonce"],
        )
    except ValueError as exc:
        raise ShareFormatError(str(exc)) from None
