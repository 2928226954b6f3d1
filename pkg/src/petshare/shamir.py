"""Shamir's (t, n) threshold sharing on symbol vectors.

A vector secret is shared as independent scalar instances, one per
symbol position: the random coefficients are drawn fresh for every
position.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DuplicateIndexError, InsufficientShares, SpaceTooLarge
from .gf import FieldSpec, element_from_index
from .ida import check_params
from .poly import SymbolVector, VectorPolynomial, eval_poly, interpolate_constant
from .share import NO_CIPHER, Scheme, Share, select_shares

__all__ = [
    "ShamirShare",
    "shamir_share",
    "shamir_reconstruct",
    "shamir_payload",
    "shamir_split",
    "shamir_join",
    "LeakageCensus",
    "evaluation_census",
    "shamir_leakage_census",
]

CENSUS_LIMIT = 1 << 16


@dataclass(frozen=True)
class ShamirShare:
    index: int
    value: SymbolVector


def shamir_share(secret: SymbolVector, t: int, n: int, rng) -> list[ShamirShare]:
    spec = secret.spec
    check_params(t, n, spec)
    coeffs = [secret] + [SymbolVector.random(len(secret), spec, rng) for _ in range(t - 1)]
    f = VectorPolynomial(coeffs)
    return [ShamirShare(i, eval_poly(f, element_from_index(i, spec))) for i in range(1, n + 1)]


def shamir_reconstruct(shares: Sequence[ShamirShare], t: int) -> SymbolVector:
    """f(0) from the first ``t`` shares (by index); fewer than ``t`` is a failure."""
    indices = [s.index for s in shares]
    if len(set(indices)) != len(indices):
        raise DuplicateIndexError(f"duplicate share indices in {sorted(indices)}")
    if len(shares) < t:
        raise InsufficientShares(t, len(shares))
    use = sorted(shares, key=lambda s: s.index)[:t]
    spec = use[0].value.spec
    return interpolate_constant([(element_from_index(s.index, spec), s.value) for s in use])


def shamir_payload(sym_s: int, t: int, n: int) -> int:
    """Per-share payload in symbols: always the secret length."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    return sym_s


def shamir_split(secret: bytes, t: int, n: int, spec: FieldSpec, rng) -> list[Share]:
    """Byte-level wrapper producing serializable shares."""
    vec = SymbolVector.from_bytes(secret, spec)
    empty = SymbolVector.zeros(0, spec)
    return [
        Share(Scheme.SHAMIR, spec, NO_CIPHER, t, n, s.index, len(secret), 0, 0, s.value, empty)
        for s in shamir_share(vec, t, n, rng)
    ]


def shamir_join(shares: Sequence[Share], t: Optional[int] = None) -> bytes:
    use = select_shares(shares, Scheme.SHAMIR, t)
    secret = shamir_reconstruct([ShamirShare(s.index, s.poly_part) for s in use], use[0].t)
    return secret.to_bytes()[: use[0].orig_len]


# -- exhaustive security census --------------------------------------------


def evaluation_census(
    spec: FieldSpec, t: int, indices: Sequence[int], constant: int
) -> Counter:
    """Distribution of (f(a_i))_{i in indices} over all choices of f's upper coefficients.

    ``f(x) = constant + c_1 x + ... + c_{t-1} x^{t-1}`` with each c_j
    ranging over the whole field.
    """
    q = spec.order
    if q ** (t - 1) > CENSUS_LIMIT:
        raise SpaceTooLarge(f"{q}^{t - 1} coefficient choices")
    mt = spec.mul_table
    points = [element_from_index(i, spec).value for i in indices]
    seen: Counter = Counter()
    for upper in itertools.product(range(q), repeat=t - 1):
        coeffs = (constant, *upper)
        obs = []
        for x in points:
            acc = 0
            for c in reversed(coeffs):
                acc = int(mt[acc, x]) ^ c
            obs.append(acc)
        seen[tuple(obs)] += 1
    return seen


@dataclass
class LeakageCensus:
    """For each unauthorized subset, P(observed shares | secret) as counts."""

    t: int
    n: int
    spec: FieldSpec
    distributions: dict[tuple[int, ...], dict[int, Counter]]

    @property
    def perfect(self) -> bool:
        """All conditionals identical for every subset: I(S; shares) = 0."""
        for per_secret in self.distributions.values():
            dists = list(per_secret.values())
            if any(d != dists[0] for d in dists[1:]):
                return False
        return True

    @property
    def uniform(self) -> bool:
        """Each conditional is exactly uniform over its observation space."""
        q = self.spec.order
        for subset, per_secret in self.distributions.items():
            space = q ** len(subset)
            for d in per_secret.values():
                if len(d) != space or len(set(d.values())) != 1:
                    return False
        return True


def shamir_leakage_census(t: int, n: int, spec: FieldSpec) -> LeakageCensus:
    """Enumerate every scalar secret and coefficient choice for each (t-1)-subset."""
    check_params(t, n, spec)
    if spec.order * spec.order ** (t - 1) * n ** max(t - 1, 0) > CENSUS_LIMIT * 16:
        raise SpaceTooLarge(f"census over {spec} with t={t}, n={n}")
    table: dict[tuple[int, ...], dict[int, Counter]] = {}
    if t > 1:
        for subset in itertools.combinations(range(1, n + 1), t - 1):
            table[subset] = {
                s: evaluation_census(spec, t, subset, s) for s in range(spec.order)
            }
    return LeakageCensus(t, n, spec, table)
