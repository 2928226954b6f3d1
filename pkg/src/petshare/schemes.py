"""Scheme-agnostic split/join entry points."""

from __future__ import annotations

from typing import Optional, Sequence, Union

from .cipher import CipherSuite
from .errors import InsufficientShares
from .gf import FieldSpec
from .pets import pets_reconstruct, pets_split
from .shamir import shamir_join, shamir_split
from .share import Scheme, Share
from .ssms import ssms_reconstruct, ssms_split


def split(
    scheme: Union[Scheme, str],
    secret: bytes,
    t: int,
    n: int,
    suite: Optional[CipherSuite],
    spec: FieldSpec,
    rng,
) -> list[Share]:
    scheme = Scheme.parse(scheme)
    if scheme is Scheme.SHAMIR:
        return shamir_split(secret, t, n, spec, rng)
    if suite is None:
        raise ValueError(f"{scheme.label} needs a cipher suite")
    if scheme is Scheme.SSMS:
        return ssms_split(secret, t, n, suite, spec, rng)
    return pets_split(secret, t, n, suite, spec, rng)


def join(shares: Sequence[Share], t: Optional[int] = None) -> bytes:
    if not shares:
        raise InsufficientShares(t or 1, 0)
    scheme = shares[0].scheme
    if scheme is Scheme.SHAMIR:
        return shamir_join(shares, t)
    if scheme is Scheme.SSMS:
        return ssms_reconstruct(shares, t)
    return pets_reconstruct(shares, t)
