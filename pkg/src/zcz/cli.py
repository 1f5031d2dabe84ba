"""``zcz`` command-line tool.

Exit codes: 0 ok, 1 usage or parse error, 2 construction hypothesis
violated, 3 verified set does not meet its claim.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

import numpy as np

from . import construct
from .catalog import catalog_rows, check_witness
from .construct import HypothesisError
from .correlate import cross_correlation, verify
from .generators import (builtin_perfect, chu_perfect, fourier_set, hadamard, hadamard12_paper,
                         orthogonal_set, paley, paley2, sylvester)
from .seqcore import Sequence, SequenceSet
from .setfile import SetFormatError, dumps, read_set

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_CLAIM = 3

LARGE_N = 65536
DEFAULT_SAMPLED_PAIRS = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _split(spec: str, what: str) -> tuple:
    kind, sep, rest = spec.partition(":")
    if not sep and kind not in ("paper12",):
        raise UsageError(f"bad {what} source {spec!r}")
    return kind, rest


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def perfect_source(spec: str) -> Sequence:
    """``builtin:NAME``, ``chu:N[,u]``, ``seq:P:DIGITS``, ``seq:ternary:+-0...``
    or ``file:PATH`` (first member of a set file)."""
    kind, rest = _split(spec, "perfect")
    try:
        if kind == "builtin":
            return builtin_perfect(rest)
        if kind == "chu":
            parts = rest.split(",")
            N = _int(parts[0], "chu length")
            u = _int(parts[1], "chu u") if len(parts) > 1 else 1
            return chu_perfect(N, u)
        if kind == "seq":
            p, sep, digits = rest.partition(":")
            if not sep:
                raise UsageError("seq source needs seq:P:DIGITS")
            return Sequence.from_string(digits, None if p == "ternary" else _int(p, "phase count"))
        if kind == "file":
            return read_set(rest)[0]
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from None
    raise UsageError(f"unknown perfect source {kind!r}")


def hadamard_source(spec: str) -> SequenceSet:
    """``sylvester:T``, ``paley:Q``, ``paley2:Q``, ``paper12``,
    ``hadamard:N``, ``fourier:N`` or ``file:PATH``."""
    kind, rest = _split(spec, "hadamard")
    try:
        if kind == "sylvester":
            return orthogonal_set(sylvester(_int(rest, "sylvester exponent")))
        if kind == "paley":
            return orthogonal_set(paley(_int(rest, "paley q")))
        if kind == "paley2":
            return orthogonal_set(paley2(_int(rest, "paley2 q")))
        if kind == "paper12":
            return orthogonal_set(hadamard12_paper())
        if kind == "hadamard":
            return orthogonal_set(hadamard(_int(rest, "hadamard order")))
        if kind == "fourier":
            return fourier_set(_int(rest, "fourier order"))
        if kind == "file":
            return read_set(rest).with_claim(None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown hadamard source {kind!r}")


def _shift_list(text: str) -> list:
    return [_int(x, "shift entry") for x in text.split(",") if x.strip()]


def _write(S: SequenceSet, path: Optional[str]) -> None:
    text = dumps(S)
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_generate(args) -> int:
    B = hadamard_source(args.hadamard)
    which = args.theorem
    if which in ("t1", "t2", "t5"):
        if args.perfect is None:
            raise UsageError(f"{which} needs --perfect")
        a = perfect_source(args.perfect)
        m, n = a.length, B.M
    else:
        if args.input is None:
            raise UsageError(f"{which} needs --input")
        try:
            C = read_set(args.input)
        except SetFormatError as exc:
            raise UsageError(str(exc)) from None
    try:
        if which == "t1":
            if args.shift:
                e = _shift_list(args.shift)
            else:
                e = construct.t1_canonical_shift(m, n, args.variant, args.i)
            S, claim = construct.theorem1_build(a, B, e)
        elif which == "t2":
            S, claim = construct.theorem2_build(a, B)
        elif which == "t3":
            if args.d is None:
                raise UsageError("t3 needs --d")
            S, claim = construct.theorem3_build(C, B, args.d, trust_claim=args.trust_claim)
        elif which == "t4":
            S, claim = construct.theorem4_build(C, B, trust_claim=args.trust_claim)
        else:
            if args.shift:
                e = _shift_list(args.shift)
            else:
                e = construct.search_shift_sequence(m, n, args.search)
            S, claim = construct.theorem5_build(a, B, e)
    except HypothesisError:
        raise
    except ValueError as exc:
        raise HypothesisError(str(exc)) from None
    _write(S, args.output)
    print(f"{claim.which}: N={S.N} M={S.M} claim={S.claim}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        S = read_set(args.path)
    except SetFormatError as exc:
        raise UsageError(str(exc)) from None
    method = "fft" if args.fft else "direct" if args.direct else "auto"
    pairs = args.pairs
    if pairs is None and not args.exhaustive and S.N >= LARGE_N:
        pairs = DEFAULT_SAMPLED_PAIRS
    if args.exhaustive:
        pairs = None
    try:
        report = verify(S, method=method, pairs=pairs, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(report)
    if args.against_claim:
        if report.claim is None:
            raise UsageError(f"{args.path} carries no claim")
        if not report.claim_satisfied:
            print("claim violated", file=sys.stderr)
            return EXIT_CLAIM
    return EXIT_OK


def format_magnitudes(mags: np.ndarray) -> str:
    return ", ".join(f"{v:.2f}" for v in mags)


def cmd_correlate(args) -> int:
    try:
        S = read_set(args.path)
    except SetFormatError as exc:
        raise UsageError(str(exc)) from None
    for idx in (args.h, args.k):
        if not 0 <= idx < S.M:
            raise UsageError(f"index {idx} outside [0, {S.M})")
    prof = cross_correlation(S[args.h], S[args.k])
    label = f"s{args.h}" if args.h == args.k else f"s{args.h},s{args.k}"
    print(f"|R_{{{label}}}(tau)| = ({format_magnitudes(prof.magnitudes)})")
    return EXIT_OK


def cmd_catalog(args) -> int:
    head = f"{'table':<6}{'N/M':>5}{'M':>5}{'Zcz':>6}{'N':>6}  construction"
    if args.witness:
        head += "  | witness"
    print(head)
    for row in catalog_rows():
        mark = "^D" if row.only_here else "  "
        line = f"{row.table:<6}{row.ratio:>5}{row.M:>5}{row.zcz:>4}{mark}{row.N:>6}  {row.method}"
        if args.witness:
            ok, msg = check_witness(row)
            line += f"  | {'ok' if ok else 'FAIL'} {msg}"
        print(line)
    print("^D: reached by these constructions only")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zcz", description="Build and check ZCZ sequence sets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="construct a set by theorem")
    g.add_argument("theorem", choices=["t1", "t2", "t3", "t4", "t5"])
    g.add_argument("--perfect", help="builtin:NAME | chu:N[,u] | seq:P:DIGITS | file:PATH")
    g.add_argument("--hadamard", required=True,
                   help="sylvester:T | paley:Q | paley2:Q | paper12 | hadamard:N | fourier:N | file:PATH")
    g.add_argument("--shift", help="comma-separated shift sequence")
    g.add_argument("--input", help="set file for t3/t4")
    g.add_argument("--d", type=int)
    g.add_argument("--variant", choices=["case1", "case2"], default="case1")
    g.add_argument("--i", type=int, default=0)
    g.add_argument("--search", choices=["eq25", "eq26"], default="eq25",
                   help="shift search condition for t5 without --shift")
    g.add_argument("--trust-claim", action="store_true",
                   help="take the input claim as given instead of measuring it")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="measure a set file")
    v.add_argument("path")
    v.add_argument("--against-claim", action="store_true")
    how = v.add_mutually_exclusive_group()
    how.add_argument("--fft", action="store_true")
    how.add_argument("--direct", action="store_true")
    v.add_argument("--pairs", type=int, help="sample this many cross pairs")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--exhaustive", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("correlate", help="print |R(tau)| for one pair")
    c.add_argument("path")
    c.add_argument("h", type=int)
    c.add_argument("k", type=int)
    c.set_defaults(func=cmd_correlate)

    k = sub.add_parser("catalog", help="list known quadriphase parameters")
    k.add_argument("--witness", action="store_true")
    k.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zcz: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"zcz: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    sys.exit(main())
