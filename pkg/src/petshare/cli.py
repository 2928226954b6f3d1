"""``petshare`` command line: split, join, inspect, rates.

Exit codes: 0 ok, 2 invalid parameters, 3 I/O error, 4 seed policy
violation, 5 insufficient shares, 6 header mismatch, 7 malformed share.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import metrics, sharefile
from .cipher import TEST_KEYSTREAM, TOY_OTP, SystemRandomSource, suite_by_id, suite_by_name
from .errors import (
    EvaluationPointsExhausted,
    IncompatibleShares,
    InsufficientShares,
    ReconstructionFailure,
    ShareFormatError,
)
from .gf import field_by_name
from .schemes import join, split
from .share import NO_CIPHER, Scheme

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_IO = 3
EXIT_SEED = 4
EXIT_INSUFFICIENT = 5
EXIT_MISMATCH = 6
EXIT_FORMAT = 7

SEEDABLE_SUITES = {TOY_OTP.name, TEST_KEYSTREAM.name}


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _read_input(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        return Path(path).read_bytes()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_split(args: argparse.Namespace) -> int:
    scheme = Scheme.parse(args.scheme)
    spec = field_by_name(args.field)
    suite = suite_by_name(args.cipher)
    if not 1 <= args.t <= args.n:
        raise CliError(EXIT_PARAMS, f"need 1 <= t <= n (got t={args.t}, n={args.n})")
    if args.n >= spec.order:
        raise CliError(EXIT_PARAMS, f"n exceeds field capacity: {spec} supports at most {spec.order - 1} participants")

    if args.seed is not None:
        if scheme is not Scheme.SHAMIR and suite.name not in SEEDABLE_SUITES:
            raise CliError(
                EXIT_SEED,
                f"--seed is test-only and refused for the {suite.name} suite; "
                f"use one of {sorted(SEEDABLE_SUITES)}",
            )
        print(
            f"WARNING: deterministic mode (--seed {args.seed}). These shares are NOT secret; test use only.",
            file=sys.stderr,
        )
        rng = np.random.default_rng(args.seed)
    else:
        rng = SystemRandomSource()

    secret = _read_input(args.secret)
    try:
        shares = split(scheme, secret, args.t, args.n, suite, spec, rng)
    except EvaluationPointsExhausted as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None

    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for s in shares:
            path = out / f"share_{s.index}.pet"
            path.write_bytes(sharefile.dumps(s))
            print(path)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write shares to {out}: {exc.strerror or exc}") from None
    return EXIT_OK


def _load_share(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        return sharefile.loads(data)
    except ShareFormatError as exc:
        raise CliError(EXIT_FORMAT, f"{path}: {exc}") from None


def cmd_join(args: argparse.Namespace) -> int:
    shares = [_load_share(p) for p in args.shares]
    try:
        secret = join(shares)
    except InsufficientShares as exc:
        raise CliError(EXIT_INSUFFICIENT, f"insufficient shares: {exc.required} required, {exc.supplied} given") from None
    except (IncompatibleShares, ReconstructionFailure) as exc:
        raise CliError(EXIT_MISMATCH, f"shares do not belong together: {exc}") from None
    try:
        if args.out == "-":
            sys.stdout.buffer.write(secret)
            sys.stdout.buffer.flush()
        else:
            Path(args.out).write_bytes(secret)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {args.out}: {exc.strerror or exc}") from None
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    try:
        data = Path(args.share).read_bytes()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {args.share}: {exc.strerror or exc}") from None
    try:
        share = sharefile.loads(data)
    except ShareFormatError as exc:
        raise CliError(EXIT_FORMAT, f"{args.share}: {exc}") from None
    suite = "none" if share.suite_id == NO_CIPHER else suite_by_id(share.suite_id).name
    fields = [
        ("version", sharefile.VERSION),
        ("scheme", share.scheme.label),
        ("field", share.field.name),
        ("cipher", suite),
        ("t", share.t),
        ("n", share.n),
        ("index", share.index),
        ("nonce", share.nonce.hex()),
        ("orig_len", share.orig_len),
        ("plain_pad", share.plain_pad),
        ("tail_pad", share.tail_pad),
        ("poly_part_len", len(share.poly_part)),
        ("frag_part_len", len(share.frag_part)),
        ("payload_symbols", share.payload_symbols),
        ("payload_bytes", len(data) - sharefile.HEADER.size),
    ]
    for key, value in fields:
        print(f"{key}: {value}")
    return EXIT_OK


def cmd_rates(args: argparse.Namespace) -> int:
    fmt = metrics.to_csv if args.format == "csv" else metrics.to_text
    if args.paper_examples:
        sys.stdout.write(fmt(metrics.paper_examples()))
        return EXIT_OK
    if args.sym_s is None or args.sym_k is None:
        raise CliError(EXIT_PARAMS, "give --sym-s and --sym-k, or --paper-examples")
    if args.sym_s <= 0 or args.sym_k < 0:
        raise CliError(EXIT_PARAMS, "need --sym-s > 0 and --sym-k >= 0")

    if args.max_n is not None:
        deltas = [args.delta] if args.delta else [1]
        try:
            reports = metrics.scheme_sweep(args.max_n, [(args.sym_s, args.sym_k)], deltas)
        except ValueError as exc:
            raise CliError(EXIT_PARAMS, str(exc)) from None
        if args.scheme:
            reports = [r for r in reports if r.scheme is Scheme.parse(args.scheme)]
        sys.stdout.write(fmt(reports))
        return EXIT_OK

    if args.n is None:
        raise CliError(EXIT_PARAMS, "give -n (or --max-n for a sweep)")
    t = args.t
    if args.delta is not None:
        try:
            tt = Fraction(args.delta) * args.n
        except (ValueError, ZeroDivisionError):
            raise CliError(EXIT_PARAMS, f"bad --delta {args.delta!r}") from None
        if tt.denominator != 1:
            raise CliError(EXIT_PARAMS, f"delta * n = {tt} is not an integer")
        t = int(tt)
    if t is None:
        t = args.n
    schemes = [Scheme.parse(args.scheme)] if args.scheme else list(Scheme)
    try:
        reports = [metrics.rate_of(s, args.sym_s, args.sym_k, t, args.n) for s in schemes]
        sys.stdout.write(fmt(reports))
        if args.delta is not None and Scheme.PETS in schemes:
            limit = metrics.rate_asymptotic_pets(args.delta, args.sym_s, args.sym_k)
            print(f"pets closed form delta*S/(S+K) = {limit}")
    except ValueError as exc:
        raise CliError(EXIT_PARAMS, str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="petshare", description="Threshold secret sharing with optimal share size.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("split", help="split a secret into n share files")
    p.add_argument("secret", nargs="?", default="-", help="secret file, or - for stdin (default)")
    p.add_argument("--scheme", choices=[s.label for s in Scheme], default="pets")
    p.add_argument("-t", "--t", type=int, required=True, help="reconstruction threshold")
    p.add_argument("-n", "--n", type=int, required=True, help="number of shares")
    p.add_argument("--cipher", choices=["toy-otp", "test-keystream", "stream256"], default="stream256")
    p.add_argument("--field", choices=["gf4", "gf256"], default="gf256")
    p.add_argument("-o", "--out", default=".", help="output directory")
    p.add_argument("--seed", type=int, help="deterministic mode, for tests only")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("join", help="reconstruct a secret from share files")
    p.add_argument("shares", nargs="+")
    p.add_argument("-o", "--out", default="-", help="output file, or - for stdout (default)")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("inspect", help="print a share file's header")
    p.add_argument("share")
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("rates", help="share sizes and information rates")
    p.add_argument("--paper-examples", action="store_true", help="the (2,3) example over GF(4), 512/128 symbols")
    p.add_argument("--scheme", choices=[s.label for s in Scheme])
    p.add_argument("-t", "--t", type=int)
    p.add_argument("-n", "--n", type=int)
    p.add_argument("--delta", help="threshold fraction t/n, e.g. 1/2")
    p.add_argument("--sym-s", type=int, help="secret size in symbols")
    p.add_argument("--sym-k", type=int, help="key size in symbols")
    p.add_argument("--max-n", type=int, help="sweep n = 1..MAX_N")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_rates)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"petshare: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
