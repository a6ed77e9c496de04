"""Command line: ``qcong verify``, ``qcong check``, ``qcong eval``.

Exit status is 0 when every emitted verdict holds, 1 when any fails and 2 on
usage, parse or evaluation errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from .adhoc import CheckSpec, run_check
from .expr import EvalError, ParseError, evaluate, parse
from .poly import format_ratfun
from .report import format_json, format_table, render_figure
from .statements import StatementId, run_suite

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")
_KNOWN_PARAMS = {"a", "b"}


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise UsageError(f"malformed range {text!r}; expected A..B")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def parse_params(text: str | None) -> dict:
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or key not in _KNOWN_PARAMS:
            raise UsageError(f"bad parameter {item!r}; known keys: {', '.join(sorted(_KNOWN_PARAMS))}")
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key} needs an integer, got {val!r}") from None
    return out


def _build_parser() -> argparse.ArgumentParser:
    p = _ArgParser(prog="qcong", description="Exact verification of q-congruences.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run named statements over a parameter range")
    v.add_argument("statement", help="statement id or 'all': " + ", ".join(s.value for s in StatementId))
    v.add_argument("--range", required=True, dest="range_", metavar="A..B")
    v.add_argument("--params", default=None, help="extra parameters, e.g. a=3,b=1")
    v.add_argument("--jobs", type=int, default=1)

    c = sub.add_parser("check", help="ad-hoc congruence lhs == rhs mod (mod)^pow")
    c.add_argument("--lhs", required=True)
    c.add_argument("--rhs", required=True)
    c.add_argument("--mod", required=True)
    c.add_argument("--pow", type=int, default=1)
    c.add_argument("--range", required=True, dest="range_", metavar="A..B")

    for sp in (v, c):
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--verbose", action="store_true", help="include full residual polynomials")
        sp.add_argument("--figure", default=None, metavar="PATH", help="also write a timing figure")

    e = sub.add_parser("eval", help="evaluate an expression at one n")
    e.add_argument("expression")
    e.add_argument("--n", type=int, default=0)
    return p


def _emit(reports, args, out, err) -> int:
    text = format_json(reports, args.verbose) if args.json else format_table(reports, args.verbose)
    print(text, file=out)
    held = sum(r.holds for r in reports)
    print(f"{held}/{len(reports)} verdicts hold", file=err)
    if args.figure:
        render_figure(reports, args.figure)
    return 0 if held == len(reports) else 1


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return 2
    try:
        if args.command == "verify":
            lo, hi = parse_range(args.range_)
            params = parse_params(args.params)
            if args.statement == "all":
                ids = list(StatementId)
            else:
                try:
                    ids = [StatementId(args.statement)]
                except ValueError:
                    raise UsageError(f"unknown statement {args.statement!r}") from None
            reports = run_suite(ids, (lo, hi), params, jobs=args.jobs)
            return _emit(reports, args, out, err)
        if args.command == "check":
            lo, hi = parse_range(args.range_)
            if args.pow < 1:
                raise UsageError("--pow must be >= 1")
            spec = CheckSpec.from_text(args.lhs, args.rhs, args.mod, args.pow, lo, hi)
            return _emit(run_check(spec), args, out, err)
        value = evaluate(parse(args.expression), args.n)
        print(format_ratfun(value), file=out)
        return 0
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return 2
    except (UsageError, EvalError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 2


def run() -> None:
    sys.exit(main())


cli_main = main
