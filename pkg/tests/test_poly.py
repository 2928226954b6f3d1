import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from petshare.errors import DuplicateIndexError, FieldMismatchError
from petshare.gf import GF4, GF256, element_from_index
from petshare.poly import (
    SymbolVector,
    VectorPolynomial,
    eval_poly,
    interpolate,
    interpolate_constant,
    lagrange_weights,
)

ALPHA = GF4(2)


def sv(values, spec=GF4):
    return SymbolVector(values, spec)


def test_eval_at_one_sums_coefficients():
    k, e = sv([1, 2, 3, 0]), sv([3, 3, 1, 2])
    assert eval_poly(VectorPolynomial([k, e]), GF4.one) == k + e


def test_eval_at_zero_is_constant_term(rng):
    coeffs = [SymbolVector.random(20, GF256, rng) for _ in range(4)]
    assert eval_poly(VectorPolynomial(coeffs), 0) == coeffs[0]


def test_eval_scalar_hand_reduction():
    # S = 1, R = alpha: 1 + alpha*alpha = 1 + alpha + 1 = alpha
    p = VectorPolynomial([sv([1]), sv([2])])
    assert eval_poly(p, ALPHA) == sv([2])


def test_eval_field_mismatch():
    p = VectorPolynomial([sv([1])])
    with pytest.raises(FieldMismatchError):
        eval_poly(p, GF256(1))


def test_gf4_two_point_recovery_exhaustive():
    for s, r in itertools.product(range(4), repeat=2):
        S, R = sv([s]), sv([r])
        pts = [(GF4(1), S + R), (ALPHA, S + R.scale(ALPHA))]
        assert interpolate_constant(pts) == S
        assert interpolate(pts).coefficients == [S, R]


def test_gf4_two_point_weights():
    # (alpha+1) S_1 + alpha S_2
    assert lagrange_weights([1, 2], GF4) == [3, 2]


def test_single_point():
    v = sv([3, 1, 0])
    p = interpolate([(GF4(3), v)])
    assert p.degree_bound == 0 and p.coefficients == [v]


def test_duplicate_points():
    v = sv([1])
    with pytest.raises(DuplicateIndexError):
        interpolate([(GF4(1), v), (GF4(1), v)])


def test_mismatched_lengths():
    with pytest.raises(ValueError):
        interpolate([(GF4(1), sv([1])), (GF4(2), sv([1, 2]))])


@settings(max_examples=60, deadline=None)
@given(t=st.integers(1, 8), length=st.integers(0, 40), seed=st.integers(0, 2**32 - 1), data=st.data())
def test_round_trip_gf256(t, length, seed, data):
    rng = np.random.default_rng(seed)
    coeffs = [SymbolVector.random(length, GF256, rng) for _ in range(t)]
    p = VectorPolynomial(coeffs)
    xs = data.draw(st.lists(st.integers(1, 255), min_size=t, max_size=t, unique=True))
    pts = [(GF256(x), eval_poly(p, x)) for x in xs]
    assert interpolate(pts) == p
    assert interpolate_constant(pts) == coeffs[0]


@given(st.lists(st.integers(1, 255), min_size=1, max_size=12, unique=True))
def test_lagrange_weights_sum_to_one(xs):
    total = 0
    for w in lagrange_weights(xs, GF256):
        total ^= w
    assert total == 1


def test_determinism(rng):
    coeffs = [SymbolVector.random(16, GF256, rng) for _ in range(3)]
    p = VectorPolynomial(coeffs)
    pts = [(element_from_index(i, GF256), eval_poly(p, i)) for i in (2, 5, 9)]
    assert interpolate(pts) == interpolate(list(pts))


def test_symbol_vector_basics(rng):
    v = SymbolVector.random(10, GF256, rng)
    assert len(v + v) == 10 and (v + v) == SymbolVector.zeros(10, GF256)
    assert len(v.scale(GF256(7))) == 10
    assert SymbolVector.from_bytes(v.to_bytes(), GF256) == v
    with pytest.raises(ValueError):
        sv([4])
    with pytest.raises(ValueError):
        v + SymbolVector.zeros(3, GF256)
    assert not v.symbols.flags.writeable


def test_polynomial_rejects_ragged():
    with pytest.raises(ValueError):
        VectorPolynomial([sv([1]), sv([1, 2])])
