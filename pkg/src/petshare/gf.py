"""Arithmetic in binary extension fields GF(2^m) for m dividing 8.

Elements are stored as integers in ``[0, 2^m)`` whose bits are the
coefficients of a polynomial over GF(2). Addition is XOR; multiplication
is carry-less multiplication reduced modulo an irreducible polynomial.

Vector work goes through numpy lookup tables (``FieldSpec.mul_table``)
that are built once per field from :func:`clmul_reduce`, which stays
importable as the ground truth for oracle tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np

from .errors import EvaluationPointsExhausted, FieldMismatchError

__all__ = [
    "FieldSpec",
    "FieldElement",
    "GF4",
    "GF16",
    "GF256",
    "add",
    "mul",
    "inv",
    "element_from_index",
    "field_by_id",
    "field_by_name",
    "clmul_reduce",
    "is_irreducible",
    "pack_symbols",
    "unpack_symbols",
    "symbols_per_byte",
]


def clmul_reduce(a, b, poly: int, m: int):
    """Reference shift-and-add multiplication in GF(2^m).

    Works on Python ints and on numpy integer arrays alike, which is how
    the lookup tables are derived from it.
    """
    r = a ^ a  # zero of the right type/shape
    for _ in range(m):
        r = r ^ (a * (b & 1))
        b = b >> 1
        a = a << 1
        a = a ^ (poly * (a >> m))
    return r


def _poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Exhaustive trial division by every GF(2) polynomial of degree <= deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if _poly_mod(poly, d) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) with a fixed reduction polynomial.

    ``wire_id`` is the byte written into share headers; fields without one
    are usable in the library but cannot be serialized.
    """

    m: int
    reduction_poly: int
    name: str
    wire_id: Optional[int] = None
    mul_table: np.ndarray = dc_field(init=False, repr=False, compare=False)
    inv_table: np.ndarray = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.m not in (1, 2, 4, 8):
            raise ValueError(f"unsupported symbol width m={self.m}; must divide 8")
        if self.reduction_poly.bit_length() - 1 != self.m:
            raise ValueError("reduction polynomial must have degree m")
        if not is_irreducible(self.reduction_poly):
            raise ValueError(f"{self.reduction_poly:#x} is reducible")
        q = self.order
        idx = np.arange(q, dtype=np.int64)
        table = clmul_reduce(idx[:, None], idx[None, :], self.reduction_poly, self.m)
        table = table.astype(np.uint8)
        table.setflags(write=False)
        inv = np.zeros(q, dtype=np.uint8)
        inv[1:] = np.argmax(table[1:] == 1, axis=1)
        inv.setflags(write=False)
        object.__setattr__(self, "mul_table", table)
        object.__setattr__(self, "inv_table", inv)

    @property
    def order(self) -> int:
        return 1 << self.m

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(v, self) for v in range(self.order)]

    def __str__(self) -> str:
        return self.name


GF4 = FieldSpec(2, 0b111, "gf4", wire_id=0x01)
GF256 = FieldSpec(8, 0x11B, "gf256", wire_id=0x02)
GF16 = FieldSpec(4, 0b10011, "gf16")

_BY_ID = {f.wire_id: f for f in (GF4, GF256)}
_BY_NAME = {f.name: f for f in (GF4, GF16, GF256)}


def field_by_id(wire_id: int) -> FieldSpec:
    try:
        return _BY_ID[wire_id]
    except KeyError:
        raise ValueError(f"unknown field id {wire_id:#04x}") from None


def field_by_name(name: str) -> FieldSpec:
    try:
        return _BY_NAME[name.lower()]
    except KeyError:
        raise ValueError(f"unknown field {name!r}") from None


@dataclass(frozen=True)
class FieldElement:
    value: int
    spec: FieldSpec

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.spec.order:
            raise ValueError(f"{self.value} is not an element of {self.spec}")

    def _check(self, other: "FieldElement") -> None:
        if other.spec != self.spec:
            raise FieldMismatchError(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.value ^ other.value, self.spec)

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(int(self.spec.mul_table[self.value, other.value]), self.spec)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElement(int(self.spec.inv_table[self.value]), self.spec)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** -e
        out = self.spec.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.spec.name}({self.value:#x})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def element_from_index(i: int, spec: FieldSpec) -> FieldElement:
    """The evaluation point assigned to participant ``i`` (value ``i``)."""
    if not 1 <= i < spec.order:
        raise EvaluationPointsExhausted(
            f"participant index {i} outside [1, {spec.order - 1}] for {spec}"
        )
    return FieldElement(i, spec)


# -- bit packing --------------------------------------------------------------


def symbols_per_byte(spec: FieldSpec) -> int:
    return 8 // spec.m


def unpack_symbols(data: bytes, spec: FieldSpec, count: Optional[int] = None) -> np.ndarray:
    """Split bytes into m-bit symbols, most-significant bits first."""
    raw = np.frombuffer(bytes(data), dtype=np.uint8)
    if spec.m == 8:
        out = raw.copy()
    else:
        bits = np.unpackbits(raw).reshape(-1, spec.m)
        weights = (1 << np.arange(spec.m - 1, -1, -1)).astype(np.uint8)
        out = (bits * weights).sum(axis=1).astype(np.uint8)
    if count is not None:
        if count > out.size:
            raise ValueError(f"{len(data)} bytes hold fewer than {count} symbols")
        out = out[:count]
    return out


def pack_symbols(symbols: np.ndarray, spec: FieldSpec) -> bytes:
    """Inverse of :func:`unpack_symbols`; the final byte is zero-filled."""
    sym = np.asarray(symbols, dtype=np.uint8)
    if spec.m == 8:
        return sym.tobytes()
    shifts = np.arange(spec.m - 1, -1, -1, dtype=np.uint8)
    bits = ((sym[:, None] >> shifts) & 1).astype(np.uint8).reshape(-1)
    return np.packbits(bits).tobytes()
