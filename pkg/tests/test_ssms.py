import itertools

import numpy as np
import pytest

from petshare.cipher import STREAM256, TEST_KEYSTREAM, TOY_OTP, SecretKey
from petshare.errors import EvaluationPointsExhausted, IncompatibleShares, InsufficientShares
from petshare.gf import GF4, GF256
from petshare.pets import pets_geometry
from petshare.poly import SymbolVector
from petshare.shamir import shamir_leakage_census
from petshare.ssms import ssms_geometry, ssms_plan, ssms_reconstruct, ssms_split


def test_worked_example_geometry_384():
    assert ssms_plan(128, 2, 3, STREAM256, GF4).payload == 384


def test_worked_example_share_structure(rng):
    secret = rng.bytes(128)
    shares = ssms_split(secret, 2, 3, STREAM256, GF4, rng)
    assert [s.payload_symbols for s in shares] == [384] * 3
    assert [(len(s.poly_part), len(s.frag_part)) for s in shares] == [(128, 256)] * 3
    # recover K, then check S_i = (K + a_i R, E_1 + a_i E_2)
    key_part = [s.poly_part for s in shares]
    r = key_part[0] + key_part[1]  # (K + R) + (K + aR) = (1 + a) R
    r = r.scale(GF4(3).inverse())
    k = key_part[0] + r
    c = SymbolVector.from_bytes(STREAM256.enc(SecretKey(k.to_bytes()), secret), GF4)
    e1, e2 = c[:256], c[256:]
    for s in shares:
        assert s.poly_part == k + r.scale(s.index)
        assert s.frag_part == e1 + e2.scale(s.index)
    for pair in itertools.combinations(shares, 2):
        assert ssms_reconstruct(list(pair)) == secret


def test_t1_carries_key_and_ciphertext(rng):
    secret = rng.bytes(50)
    (share,) = ssms_split(secret, 1, 1, TEST_KEYSTREAM, GF256, rng)
    assert share.payload_symbols == 16 + 50
    assert ssms_reconstruct([share]) == secret


def test_size_oracle_3_5():
    g = ssms_geometry(300, 32, 3, 5)
    assert g.payload == 132 and g.frag_len == 100 and g.tail_pad == 0


def test_round_trip_sweep(rng):
    for _ in range(12):
        n = int(rng.integers(1, 7))
        t = int(rng.integers(1, min(n, 5) + 1))
        secret = rng.bytes(1000)
        suite = [TOY_OTP, TEST_KEYSTREAM, STREAM256][int(rng.integers(3))]
        shares = ssms_split(secret, t, n, suite, GF256, rng)
        assert all(s.payload_symbols == suite.key_len + -(-1000 // t) for s in shares)
        for subset in itertools.combinations(shares, t):
            assert ssms_reconstruct(list(subset)) == secret
        assert ssms_reconstruct(shares) == secret


def test_payload_law_sweep():
    for sym_s in range(0, 40):
        for sym_k in (1, 4, 16):
            for n in range(1, 7):
                for t in range(1, n + 1):
                    assert ssms_geometry(sym_s, sym_k, t, n).payload == sym_k + -(-sym_s // t)


def test_pets_never_larger():
    for sym_s in range(0, 80):
        for sym_k in (1, 2, 5, 16):
            for n in range(2, 7):
                for t in range(2, n + 1):
                    p = pets_geometry(sym_s, sym_k, t, n).payload
                    s = ssms_geometry(sym_s, sym_k, t, n).payload
                    assert p <= s
                    if sym_k > -(-sym_k // t) and sym_s > 0:
                        assert p < s


def test_key_part_census():
    # the key polynomial is plain Shamir: t-1 key shares are uniform
    for t, n in [(2, 2), (2, 3), (3, 3)]:
        census = shamir_leakage_census(t, n, GF4)
        assert census.perfect and census.uniform


def test_failures(rng):
    secret = rng.bytes(20)
    shares = ssms_split(secret, 3, 4, TEST_KEYSTREAM, GF256, rng)
    with pytest.raises(InsufficientShares):
        ssms_reconstruct(shares[:2])
    other = ssms_split(secret, 2, 4, TEST_KEYSTREAM, GF256, rng)
    with pytest.raises(IncompatibleShares):
        ssms_reconstruct([shares[0], shares[1], other[2]])
    with pytest.raises(IncompatibleShares):
        ssms_reconstruct(shares, t=2)
    with pytest.raises(EvaluationPointsExhausted):
        ssms_split(secret, 2, 4, TEST_KEYSTREAM, GF4, rng)
