"""Pseudorandom Encryption Threshold Sharing.

The dealer encrypts the secret, cuts the ciphertext into ``t - 1``
key-sized blocks plus a tail, and uses the key and the blocks as the
coefficients of one polynomial::

    f(x) = K + E_1 x + ... + E_{t-1} x^{t-1}

The pseudorandom blocks play the role Shamir's random coefficients
play, so no fresh randomness is spent beyond the key. The tail goes
through the IDA. Participant ``i`` holds ``(f(a_i), X_i)``, which is
``|K| + ceil(tail/t)`` symbols, i.e. ``(|S| + |K|) / t`` when ``t``
divides evenly.

Scheme 2 needs ``|S| >= (t - 1)|K|``. Shorter plaintexts are
zero-padded *before* encryption so every block stays pseudorandom; the
original length travels in the header.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from . import ida
from .cipher import CipherSuite, SecretKey, suite_by_id
from .errors import SpaceTooLarge
from .gf import GF4, FieldSpec, element_from_index
from .poly import SymbolVector, VectorPolynomial, eval_poly, interpolate
from .shamir import evaluation_census
from .share import Scheme, Share, select_shares

__all__ = [
    "PetsGeometry",
    "pets_geometry",
    "pets_plan",
    "pets_split",
    "pets_reconstruct",
    "pets_uniformity_census",
]


@dataclass(frozen=True)
class PetsGeometry:
    """Block layout of one PETS sharing, all lengths in symbols."""

    t: int
    n: int
    orig_syms: int
    sym_k: int
    plain_pad: int
    tail_pad: int
    m: Optional[int] = None

    @property
    def sym_s(self) -> int:
        """Plaintext length after padding (= ciphertext length)."""
        return self.orig_syms + self.plain_pad

    @property
    def head_blocks(self) -> int:
        return self.t - 1

    @property
    def head_len(self) -> int:
        return (self.t - 1) * self.sym_k

    @property
    def tail_len(self) -> int:
        return self.sym_s - self.head_len

    @property
    def frag_len(self) -> int:
        return (self.tail_len + self.tail_pad) // self.t

    @property
    def payload(self) -> int:
        return self.sym_k + self.frag_len

    @property
    def orig_len(self) -> Optional[int]:
        """Secret length in bytes, when the symbol width is known."""
        if self.m is None:
            return None
        return self.orig_syms * self.m // 8

    @property
    def pad_free(self) -> bool:
        return self.plain_pad == 0 and self.tail_pad == 0


def pets_geometry(sym_s: int, sym_k: int, t: int, n: int, m: Optional[int] = None) -> PetsGeometry:
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if sym_s < 0 or sym_k < 0:
        raise ValueError("sizes must be non-negative")
    plain_pad = max(0, (t - 1) * sym_k - sym_s)
    tail_len = sym_s + plain_pad - (t - 1) * sym_k
    tail_pad = -tail_len % t
    return PetsGeometry(t, n, sym_s, sym_k, plain_pad, tail_pad, m)


def pets_plan(secret_len: int, t: int, n: int, suite: CipherSuite, spec: FieldSpec) -> PetsGeometry:
    """Geometry for a ``secret_len``-byte secret.

    The plaintext pad is always a whole number of bytes because the key,
    and so ``(t - 1)|K|``, is.
    """
    ida.check_params(t, n, spec)
    return pets_geometry(secret_len * 8 // spec.m, suite.key_symbols(spec), t, n, spec.m)


def pets_split(
    secret: bytes, t: int, n: int, suite: CipherSuite, spec: FieldSpec, rng
) -> list[Share]:
    geom = pets_plan(len(secret), t, n, suite, spec)
    key = suite.keygen(rng)
    pad_bytes = geom.plain_pad * spec.m // 8
    ciphertext = SymbolVector.from_bytes(suite.enc(key, bytes(secret) + bytes(pad_bytes)), spec)

    k = geom.sym_k
    blocks = [ciphertext[j * k : (j + 1) * k] for j in range(t - 1)]
    tail = ciphertext[geom.head_len :]
    f = VectorPolynomial([key.symbols(spec), *blocks])
    frags, pad = ida.disperse(tail, t, n)
    assert pad == geom.tail_pad

    shares = []
    for fr in frags:
        alpha = element_from_index(fr.index, spec)
        shares.append(
            Share(
                Scheme.PETS, spec, suite.id, t, n, fr.index, len(secret),
                geom.plain_pad, geom.tail_pad, eval_poly(f, alpha), fr.data,
            )
        )
    return shares


def pets_reconstruct(shares: Sequence[Share], t: Optional[int] = None) -> bytes:
    use = select_shares(shares, Scheme.PETS, t)
    head = use[0]
    spec = head.field
    suite = suite_by_id(head.suite_id)

    tail = ida.reconstruct([ida.Fragment(s.index, s.frag_part) for s in use], head.t, head.tail_pad)
    poly = interpolate([(element_from_index(s.index, spec), s.poly_part) for s in use])
    key_vec, *blocks = poly.coefficients
    ciphertext = SymbolVector.concat([*blocks, tail], spec).to_bytes()
    plain = suite.dec(SecretKey.from_symbols(key_vec), ciphertext)
    return plain[: head.orig_len]


def pets_uniformity_census(t: int, n: int, spec: FieldSpec = GF4) -> bool:
    """Ideal-cipher check with a one-symbol key.

    With E_1..E_{t-1} replaced by truly uniform symbols, every (t-1)
    participants must see exactly uniform polynomial values for every
    fixed key. Vacuously true for ``t = 1``.
    """
    ida.check_params(t, n, spec)
    if t > 3 or n > 3 or spec.order > 16:
        raise SpaceTooLarge(f"census limited to t, n <= 3 over small fields (got t={t}, n={n}, {spec})")
    if t == 1:
        return True
    q = spec.order
    for subset in itertools.combinations(range(1, n + 1), t - 1):
        for key in range(q):
            seen = evaluation_census(spec, t, subset, key)
            if len(seen) != q ** (t - 1) or set(seen.values()) != {1}:
                return False
    return True
