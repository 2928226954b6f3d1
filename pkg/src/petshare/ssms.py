"""Secret Sharing Made Short: Shamir on the key, IDA on the whole ciphertext."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import ida
from .cipher import CipherSuite, SecretKey, suite_by_id
from .gf import FieldSpec
from .poly import SymbolVector
from .shamir import ShamirShare, shamir_reconstruct, shamir_share
from .share import Scheme, Share, select_shares

__all__ = ["SsmsGeometry", "ssms_geometry", "ssms_plan", "ssms_split", "ssms_reconstruct"]


@dataclass(frozen=True)
class SsmsGeometry:
    t: int
    n: int
    sym_s: int
    sym_k: int

    @property
    def frag_len(self) -> int:
        return ida.fragment_length(self.sym_s, self.t)

    @property
    def tail_pad(self) -> int:
        return self.frag_len * self.t - self.sym_s

    @property
    def payload(self) -> int:
        return self.sym_k + self.frag_len


def ssms_geometry(sym_s: int, sym_k: int, t: int, n: int) -> SsmsGeometry:
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if sym_s < 0 or sym_k < 0:
        raise ValueError("sizes must be non-negative")
    return SsmsGeometry(t, n, sym_s, sym_k)


def ssms_plan(secret_len: int, t: int, n: int, suite: CipherSuite, spec: FieldSpec) -> SsmsGeometry:
    ida.check_params(t, n, spec)
    return ssms_geometry(secret_len * 8 // spec.m, suite.key_symbols(spec), t, n)


def ssms_split(
    secret: bytes, t: int, n: int, suite: CipherSuite, spec: FieldSpec, rng
) -> list[Share]:
    geom = ssms_plan(len(secret), t, n, suite, spec)
    key = suite.keygen(rng)
    ciphertext = SymbolVector.from_bytes(suite.enc(key, secret), spec)
    key_shares = shamir_share(key.symbols(spec), t, n, rng)
    frags, pad = ida.disperse(ciphertext, t, n)
    assert pad == geom.tail_pad
    return [
        Share(Scheme.SSMS, spec, suite.id, t, n, ks.index, len(secret), 0, pad, ks.value, fr.data)
        for ks, fr in zip(key_shares, frags)
    ]


def ssms_reconstruct(shares: Sequence[Share], t: Optional[int] = None) -> bytes:
    use = select_shares(shares, Scheme.SSMS, t)
    head = use[0]
    suite = suite_by_id(head.suite_id)
    key_vec = shamir_reconstruct([ShamirShare(s.index, s.poly_part) for s in use], head.t)
    frags = [ida.Fragment(s.index, s.frag_part) for s in use]
    ciphertext = ida.reconstruct(frags, head.t, head.tail_pad).to_bytes()
    plain = suite.dec(SecretKey.from_symbols(key_vec), ciphertext)
    return plain[: head.orig_len]
