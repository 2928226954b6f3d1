"""Reed-Solomon information dispersal.

The message is zero-padded to a multiple of ``t`` and cut row-major into
``t`` chunks; the chunks are the coefficients of a vector polynomial and
fragment ``i`` is its value at the participant's point. Any ``t``
fragments determine the polynomial and therefore the message. Nothing
about the message is hidden.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DuplicateIndexError, InsufficientShares
from .gf import FieldSpec, element_from_index
from .poly import SymbolVector, VectorPolynomial, eval_poly, interpolate

__all__ = ["Fragment", "disperse", "reconstruct", "fragment_length", "check_params"]


@dataclass(frozen=True)
class Fragment:
    index: int
    data: SymbolVector


def fragment_length(msg_len: int, t: int) -> int:
    return -(-msg_len // t)


def check_params(t: int, n: int, spec: FieldSpec) -> None:
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    # raises EvaluationPointsExhausted when n >= q
    element_from_index(n, spec)


def disperse(message: SymbolVector, t: int, n: int) -> tuple[list[Fragment], int]:
    """Split ``message`` into ``n`` fragments; returns them with the pad length."""
    spec = message.spec
    check_params(t, n, spec)
    flen = fragment_length(len(message), t)
    pad_len = flen * t - len(message)
    padded = message.padded(flen * t)
    poly = VectorPolynomial([padded[j * flen : (j + 1) * flen] for j in range(t)])
    frags = [Fragment(i, eval_poly(poly, element_from_index(i, spec))) for i in range(1, n + 1)]
    return frags, pad_len


def reconstruct(fragments: Sequence[Fragment], t: int, pad_len: int) -> SymbolVector:
    """Rebuild the message from at least ``t`` fragments.

    Raises :class:`InsufficientShares` (the failure symbol) below threshold.
    """
    indices = [f.index for f in fragments]
    if len(set(indices)) != len(indices):
        raise DuplicateIndexError(f"duplicate fragment indices in {sorted(indices)}")
    if len(fragments) < t:
        raise InsufficientShares(t, len(fragments))
    use = sorted(fragments, key=lambda f: f.index)[:t]
    spec = use[0].data.spec
    poly = interpolate([(element_from_index(f.index, spec), f.data) for f in use])
    full = SymbolVector.concat(poly.coefficients, spec)
    if pad_len > len(full):
        raise ValueError(f"pad length {pad_len} exceeds dispersed length {len(full)}")
    return full[: len(full) - pad_len]
