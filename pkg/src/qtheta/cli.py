"""Command-line front end: expand expressions, verify identities, run
the self-test suite.

Exit codes are a contract: 0 equal/pass, 1 mismatch, 2 usage or parse
error, 3 genericity or precision error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .identities import Identity, builtin_registry, lookup, verify, verify_all
from .parser import EvalError, ExprSyntaxError, evaluate, parse
from .series import EvalContext, QSeriesError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_GENERICITY = 3

DEFAULT_ORDER = 100


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qtheta",
        description="Exact q-series engine and identity verifier.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an expression to a coefficient list")
    p.add_argument("expr")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("verify", help="verify a registry identity or an inline lhs = rhs pair")
    p.add_argument("target", nargs="?", help='inline identity "<lhs> = <rhs>"')
    p.add_argument("--id", dest="ident", help="registry identity name")
    p.add_argument("--all", action="store_true", help="verify every registry entry")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=("plain", "json"), default="plain")

    p = sub.add_parser("selftest", help="run the full property suite")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)

    sub.add_parser("list", help="list registry identity names and sources")
    return ap


def _err(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _genericity_exit(exc: Exception) -> int:
    _err(str(exc))
    return EXIT_GENERICITY


def _cmd_expand(args: argparse.Namespace) -> int:
    if args.order < 1:
        _err("--order must be >= 1")
        return EXIT_USAGE
    try:
        series = evaluate(args.expr, EvalContext(args.order))
    except ExprSyntaxError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except EvalError as exc:
        return _genericity_exit(exc)
    except QSeriesError as exc:
        return _genericity_exit(exc)
    hi = min(args.order, series.valid_to)
    if args.format == "json":
        payload = {
            "lo": series.lo,
            "valid_to": series.valid_to,
            "coefficients": [[e, str(c)] for e, c in series.nonzero_terms() if e < hi],
        }
        print(json.dumps(payload))
    else:
        for e, c in series.nonzero_terms():
            if e < hi:
                print(f"{e}: {c}")
    return EXIT_OK


def _print_report_plain(report) -> None:
    line = (
        f"{report.name}: {report.status}"
        f" (order {report.order_requested}, effective {report.order_effective})"
    )
    if report.order_effective < report.order_requested and report.status != "error":
        line += "  [validity loss: compared below the requested order]"
    if report.status == "mismatch":
        e, a, b = report.mismatch
        line += f"  first mismatch at q^{e}: lhs {a}, rhs {b}"
    if report.status == "error":
        line += f"  {report.detail}"
    line += f"  [{report.millis:.1f} ms]"
    print(line)


def _reports_exit(reports) -> int:
    if any(r.status == "error" for r in reports):
        return EXIT_GENERICITY
    if any(r.status == "mismatch" for r in reports):
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.order < 1:
        _err("--order must be >= 1")
        return EXIT_USAGE
    selected = [bool(args.ident), args.all, bool(args.target)]
    if sum(selected) != 1:
        _err("choose exactly one of --id, --all, or an inline identity")
        return EXIT_USAGE
    ctx = EvalContext(args.order)
    try:
        if args.all:
            reports = verify_all(ctx)
        elif args.ident:
            ident = lookup(args.ident)
            if ident is None:
                _err(f"unknown identity {args.ident!r}")
                return EXIT_USAGE
            reports = [verify(ident, ctx)]
        else:
            parts = args.target.split("=")
            if len(parts) != 2:
                _err('inline identity must contain exactly one "="')
                return EXIT_USAGE
            parse(parts[0])
            parse(parts[1])
            inline = Identity("inline", parts[0], parts[1], 1, "command line")
            reports = [verify(inline, ctx)]
    except ExprSyntaxError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        for r in reports:
            _print_report_plain(r)
    return _reports_exit(reports)


def _cmd_selftest(args: argparse.Namespace) -> int:
    if args.order < 40:
        _err("selftest needs --order >= 40")
        return EXIT_USAGE
    from .selftest import run_selftest

    results = run_selftest(args.order)
    failures = [(name, detail) for name, ok, detail in results if not ok]
    for name, detail in failures:
        print(f"FAIL {name}  {detail}")
    print(f"{len(results) - len(failures)} passed, {len(failures)} failed (order {args.order})")
    return EXIT_OK if not failures else EXIT_MISMATCH


def _cmd_list() -> int:
    for ident in builtin_registry():
        print(f"{ident.name:16s} min_order={ident.min_order:<3d} {ident.source}")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "expand":
        return _cmd_expand(args)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "selftest":
        return _cmd_selftest(args)
    return _cmd_list()


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
