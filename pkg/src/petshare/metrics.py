"""Share-size accounting and information rates.

Payloads always come from the schemes' own geometry functions. Header
bytes are not counted: a rate is secret symbols over payload symbols
summed across all ``n`` shares, kept as an exact :class:`Fraction`.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .pets import pets_geometry
from .shamir import shamir_payload
from .share import Scheme
from .ssms import ssms_geometry

__all__ = [
    "RateReport",
    "rate_of",
    "rate_asymptotic_pets",
    "scheme_sweep",
    "paper_examples",
    "to_csv",
    "to_text",
]

COLUMNS = ("scheme", "t", "n", "sym_s", "sym_k", "per_share", "total", "rate", "pad_free")


@dataclass(frozen=True)
class RateReport:
    scheme: Scheme
    t: int
    n: int
    sym_s: int
    sym_k: int
    per_share_payload: int
    total_payload: int
    pad_free: bool

    @property
    def rate(self) -> Fraction:
        return Fraction(self.sym_s, self.total_payload)

    def row(self) -> tuple:
        return (
            self.scheme.label, self.t, self.n, self.sym_s, self.sym_k,
            self.per_share_payload, self.total_payload, str(self.rate), self.pad_free,
        )


def rate_of(scheme: Union[Scheme, str, int], sym_s: int, sym_k: int, t: int, n: int) -> RateReport:
    scheme = Scheme.parse(scheme)
    if sym_s <= 0:
        raise ValueError("secret size must be positive to define a rate")
    if scheme is Scheme.SHAMIR:
        payload = shamir_payload(sym_s, t, n)
        pad_free = True
    elif scheme is Scheme.SSMS:
        g = ssms_geometry(sym_s, sym_k, t, n)
        payload, pad_free = g.payload, g.tail_pad == 0
    else:
        g = pets_geometry(sym_s, sym_k, t, n)
        payload, pad_free = g.payload, g.pad_free
    return RateReport(scheme, t, n, sym_s, sym_k, payload, n * payload, pad_free)


def rate_asymptotic_pets(delta: Union[Fraction, str, float], sym_s: int, sym_k: int) -> Fraction:
    """delta * |S| / (|S| + |K|) for a PETS family with t = delta * n."""
    delta = Fraction(delta)
    if not 0 < delta <= 1:
        raise ValueError(f"delta must lie in (0, 1], got {delta}")
    return delta * Fraction(sym_s, sym_s + sym_k)


def scheme_sweep(
    max_n: int,
    geometries: Iterable[tuple[int, int]],
    deltas: Sequence[Union[Fraction, str]] = (1,),
    ns: Iterable[int] | None = None,
) -> list[RateReport]:
    """Reports for every scheme, geometry, n and t = delta * n (integral only)."""
    ns = list(ns) if ns is not None else list(range(1, max_n + 1))
    rows = []
    for sym_s, sym_k in geometries:
        for n in ns:
            for d in deltas:
                t = Fraction(d) * n
                if t.denominator != 1 or t < 1:
                    continue
                for scheme in Scheme:
                    rows.append(rate_of(scheme, sym_s, sym_k, int(t), n))
    return rows


def paper_examples() -> list[RateReport]:
    """The (2,3) trio over GF(4): a 1024-bit secret and a 256-bit key."""
    return [rate_of(s, 512, 128, 2, 3) for s in Scheme]


def to_csv(reports: Iterable[RateReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in reports:
        w.writerow(r.row())
    return buf.getvalue()


def to_text(reports: Iterable[RateReport]) -> str:
    rows = [tuple(map(str, COLUMNS))] + [tuple(map(str, r.row())) for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(len(COLUMNS))]
    return "\n".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in rows
    ) + "\n"
