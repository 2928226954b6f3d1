"""Vector-coefficient polynomials over GF(2^m).

A polynomial whose coefficients are length-L symbol vectors is L scalar
polynomials evaluated side by side, one per symbol position. Everything
here works on whole numpy rows at once so the per-position loop never
runs in Python.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DuplicateIndexError, FieldMismatchError
from .gf import FieldElement, FieldSpec, pack_symbols, unpack_symbols

__all__ = [
    "SymbolVector",
    "VectorPolynomial",
    "eval_poly",
    "interpolate",
    "interpolate_constant",
    "lagrange_weights",
    "random_symbols",
]

Scalar = Union[FieldElement, int]


def _scalar(c: Scalar, spec: FieldSpec) -> int:
    if isinstance(c, FieldElement):
        if c.spec != spec:
            raise FieldMismatchError(f"{c.spec} vs {spec}")
        return c.value
    if not 0 <= c < spec.order:
        raise ValueError(f"{c} is not an element of {spec}")
    return int(c)


def random_symbols(spec: FieldSpec, count: int, rng) -> np.ndarray:
    """``count`` uniform symbols drawn from ``rng.bytes``."""
    nbytes = -(-count * spec.m // 8)
    return unpack_symbols(rng.bytes(nbytes), spec, count)


class SymbolVector:
    """Immutable fixed-length sequence of elements of one field."""

    __slots__ = ("spec", "_sym")

    def __init__(self, symbols: Union[np.ndarray, Iterable[int]], spec: FieldSpec) -> None:
        arr = np.array(symbols, dtype=np.int64).reshape(-1)
        if arr.size and (arr.min() < 0 or arr.max() >= spec.order):
            raise ValueError(f"symbol out of range for {spec}")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self.spec = spec
        self._sym = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray, spec: FieldSpec) -> "SymbolVector":
        obj = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.uint8)
        arr.setflags(write=False)
        obj.spec = spec
        obj._sym = arr
        return obj

    @classmethod
    def zeros(cls, length: int, spec: FieldSpec) -> "SymbolVector":
        return cls._wrap(np.zeros(length, dtype=np.uint8), spec)

    @classmethod
    def from_bytes(cls, data: bytes, spec: FieldSpec) -> "SymbolVector":
        return cls._wrap(unpack_symbols(data, spec), spec)

    @classmethod
    def random(cls, length: int, spec: FieldSpec, rng) -> "SymbolVector":
        return cls._wrap(random_symbols(spec, length, rng), spec)

    @classmethod
    def concat(cls, parts: Sequence["SymbolVector"], spec: FieldSpec) -> "SymbolVector":
        for p in parts:
            if p.spec != spec:
                raise FieldMismatchError(f"{p.spec} vs {spec}")
        if not parts:
            return cls.zeros(0, spec)
        return cls._wrap(np.concatenate([p._sym for p in parts]), spec)

    @property
    def symbols(self) -> np.ndarray:
        return self._sym

    def to_bytes(self) -> bytes:
        return pack_symbols(self._sym, self.spec)

    def __len__(self) -> int:
        return int(self._sym.size)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return SymbolVector._wrap(self._sym[key], self.spec)
        return FieldElement(int(self._sym[key]), self.spec)

    def __iter__(self):
        return (FieldElement(int(v), self.spec) for v in self._sym)

    def _check(self, other: "SymbolVector") -> None:
        if other.spec != self.spec:
            raise FieldMismatchError(f"{self.spec} vs {other.spec}")
        if len(other) != len(self):
            raise ValueError(f"length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other: "SymbolVector") -> "SymbolVector":
        self._check(other)
        return SymbolVector._wrap(self._sym ^ other._sym, self.spec)

    __sub__ = __add__

    def scale(self, c: Scalar) -> "SymbolVector":
        return SymbolVector._wrap(self.spec.mul_table[_scalar(c, self.spec)][self._sym], self.spec)

    __rmul__ = scale

    def padded(self, length: int) -> "SymbolVector":
        if length < len(self):
            raise ValueError("cannot pad to a shorter length")
        out = np.zeros(length, dtype=np.uint8)
        out[: len(self)] = self._sym
        return SymbolVector._wrap(out, self.spec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolVector):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self._sym, other._sym)

    def __hash__(self) -> int:
        return hash((self.spec, self._sym.tobytes()))

    def __repr__(self) -> str:
        head = " ".join(f"{v:x}" for v in self._sym[:8])
        more = " ..." if len(self) > 8 else ""
        return f"SymbolVector[{self.spec.name}, {len(self)}]({head}{more})"


class VectorPolynomial:
    """``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` with SymbolVector coefficients."""

    __slots__ = ("spec", "_coef")

    def __init__(self, coefficients: Sequence[SymbolVector]) -> None:
        if not coefficients:
            raise ValueError("a polynomial needs at least one coefficient")
        spec = coefficients[0].spec
        length = len(coefficients[0])
        for c in coefficients:
            if c.spec != spec:
                raise FieldMismatchError(f"{c.spec} vs {spec}")
            if len(c) != length:
                raise ValueError("coefficients must have equal length")
        self.spec = spec
        self._coef = np.stack([c.symbols for c in coefficients]) if length else np.zeros(
            (len(coefficients), 0), dtype=np.uint8
        )
        self._coef.setflags(write=False)

    @classmethod
    def _from_matrix(cls, matrix: np.ndarray, spec: FieldSpec) -> "VectorPolynomial":
        obj = cls.__new__(cls)
        obj.spec = spec
        obj._coef = np.ascontiguousarray(matrix, dtype=np.uint8)
        obj._coef.setflags(write=False)
        return obj

    @property
    def coefficients(self) -> list[SymbolVector]:
        return [SymbolVector._wrap(row, self.spec) for row in self._coef]

    @property
    def degree_bound(self) -> int:
        return self._coef.shape[0] - 1

    @property
    def length(self) -> int:
        return self._coef.shape[1]

    def __call__(self, x: Scalar) -> SymbolVector:
        return eval_poly(self, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorPolynomial):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self._coef, other._coef)

    def __repr__(self) -> str:
        return f"VectorPolynomial[{self.spec.name}, terms={self._coef.shape[0]}, len={self.length}]"


def eval_poly(p: VectorPolynomial, x: Scalar) -> SymbolVector:
    """Horner evaluation at ``x``, component-wise."""
    xv = _scalar(x, p.spec)
    row = p.spec.mul_table[xv]
    acc = p._coef[-1].copy()
    for c in p._coef[-2::-1]:
        acc = row[acc] ^ c
    return SymbolVector._wrap(acc, p.spec)


def _check_points(points) -> tuple[FieldSpec, list[int], np.ndarray]:
    if not points:
        raise ValueError("interpolation needs at least one point")
    spec = points[0][1].spec
    xs: list[int] = []
    for x, y in points:
        if y.spec != spec:
            raise FieldMismatchError(f"{y.spec} vs {spec}")
        xs.append(_scalar(x, spec))
    if len(set(xs)) != len(xs):
        raise DuplicateIndexError(f"duplicate evaluation points in {xs}")
    length = len(points[0][1])
    if any(len(y) != length for _, y in points):
        raise ValueError("all point values must have equal length")
    ys = np.stack([y.symbols for _, y in points]) if length else np.zeros((len(points), 0), np.uint8)
    return spec, xs, ys


def lagrange_weights(xs: Sequence[Scalar], spec: FieldSpec, at: Scalar = 0) -> list[int]:
    """Weights w_i with f(at) = sum w_i f(x_i) for deg f < len(xs)."""
    mt, it = spec.mul_table, spec.inv_table
    xv = [_scalar(x, spec) for x in xs]
    if len(set(xv)) != len(xv):
        raise DuplicateIndexError(f"duplicate evaluation points in {xv}")
    a = _scalar(at, spec)
    weights = []
    for i, xi in enumerate(xv):
        num, den = 1, 1
        for j, xj in enumerate(xv):
            if j != i:
                num = int(mt[num, a ^ xj])
                den = int(mt[den, xi ^ xj])
        weights.append(int(mt[num, it[den]]))
    return weights


def _combine(weights: Sequence[int], ys: np.ndarray, spec: FieldSpec) -> np.ndarray:
    out = np.zeros(ys.shape[1], dtype=np.uint8)
    for w, y in zip(weights, ys):
        if w:
            out ^= spec.mul_table[w][y]
    return out


def interpolate_constant(points: Sequence[tuple[Scalar, SymbolVector]]) -> SymbolVector:
    """f(0) of the unique polynomial of degree < len(points) through ``points``."""
    spec, xs, ys = _check_points(points)
    return SymbolVector._wrap(_combine(lagrange_weights(xs, spec), ys, spec), spec)


def _basis_coefficients(xs: Sequence[int], spec: FieldSpec) -> np.ndarray:
    """Row i holds the monomial coefficients of the i-th Lagrange basis polynomial."""
    mt, it = spec.mul_table, spec.inv_table
    k = len(xs)
    basis = np.zeros((k, k), dtype=np.uint8)
    for i, xi in enumerate(xs):
        num = [1]
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # num *= (x + xj); char 2 so minus is plus
            nxt = [0] * (len(num) + 1)
            for d, c in enumerate(num):
                nxt[d] ^= int(mt[c, xj])
                nxt[d + 1] ^= c
            num = nxt
            den = int(mt[den, xi ^ xj])
        scale = int(it[den])
        basis[i] = [mt[c, scale] for c in num]
    return basis


def interpolate(points: Sequence[tuple[Scalar, SymbolVector]]) -> VectorPolynomial:
    """The unique polynomial of degree < len(points) through ``points``.

    Callers pass exactly the points they want used; surplus points are not
    treated as a consistency check.
    """
    spec, xs, ys = _check_points(points)
    basis = _basis_coefficients(xs, spec)
    coef = np.stack([_combine(basis[:, d], ys, spec) for d in range(len(xs))])
    return VectorPolynomial._from_matrix(coef, spec)
