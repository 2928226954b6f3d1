"""The per-participant share bundle common to every scheme."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from enum import IntEnum
from typing import Optional, Sequence

from .errors import DuplicateIndexError, IncompatibleShares, InsufficientShares
from .gf import FieldSpec
from .poly import SymbolVector

NONCE_LEN = 16
NO_CIPHER = 0x00


class Scheme(IntEnum):
    SHAMIR = 0x01
    SSMS = 0x02
    PETS = 0x03

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, value: "str | int | Scheme") -> "Scheme":
        if isinstance(value, str):
            try:
                return cls[value.upper()]
            except KeyError:
                raise ValueError(f"unknown scheme {value!r}") from None
        return cls(value)


@dataclass(frozen=True)
class Share:
    """One participant's bundle.

    ``poly_part`` is the evaluation of the sharing polynomial at the
    participant's point; ``frag_part`` is their IDA fragment (empty for
    Shamir). Padding counts are in symbols, ``orig_len`` in bytes.
    """

    scheme: Scheme
    field: FieldSpec
    suite_id: int
    t: int
    n: int
    index: int
    orig_len: int
    plain_pad: int
    tail_pad: int
    poly_part: SymbolVector
    frag_part: SymbolVector
    nonce: bytes = dc_field(default=bytes(NONCE_LEN))

    def __post_init__(self) -> None:
        if not 1 <= self.t <= self.n:
            raise ValueError(f"need 1 <= t <= n, got t={self.t}, n={self.n}")
        if not 1 <= self.index <= self.n:
            raise ValueError(f"index {self.index} outside [1, {self.n}]")
        if len(self.nonce) != NONCE_LEN:
            raise ValueError("nonce must be 16 bytes")

    @property
    def payload_symbols(self) -> int:
        return len(self.poly_part) + len(self.frag_part)

    def header_key(self) -> tuple:
        """Every header field that all shares of one sharing must agree on."""
        return (
            self.scheme,
            self.field,
            self.suite_id,
            self.t,
            self.n,
            self.orig_len,
            self.plain_pad,
            self.tail_pad,
            len(self.poly_part),
            len(self.frag_part),
            self.nonce,
        )


def select_shares(
    shares: Sequence[Share], scheme: Scheme, t: Optional[int] = None
) -> list[Share]:
    """Validate a share set and return exactly ``t`` of them, lowest index first."""
    if not shares:
        raise InsufficientShares(t if t is not None else 1, 0)
    first = shares[0]
    if first.scheme != scheme:
        raise IncompatibleShares(f"expected {scheme.label} shares, got {first.scheme.label}")
    key = first.header_key()
    for s in shares[1:]:
        if s.header_key() != key:
            raise IncompatibleShares(f"share {s.index} header disagrees with share {first.index}")
    if t is not None and t != first.t:
        raise IncompatibleShares(f"caller threshold {t} != header threshold {first.t}")
    indices = [s.index for s in shares]
    if len(set(indices)) != len(indices):
        raise DuplicateIndexError(f"duplicate share indices in {sorted(indices)}")
    if len(shares) < first.t:
        raise InsufficientShares(first.t, len(shares))
    return sorted(shares, key=lambda s: s.index)[: first.t]
