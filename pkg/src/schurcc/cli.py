"""Command-line front end: single-code analysis, invariant-code enumeration,
and the batch dimension-sequence experiment runner.

Exit codes: 0 on success, 1 on domain errors (bad generator, non-divisor,
unreadable input), 2 on usage errors (bad flags, malformed config). Reports
go to standard output (JSON unless ``--format text``); diagnostics go to
standard error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys

from .analysis import analyze_code, enumerate_invariant_cyclic
from .code import code_from_generator
from .errors import ConfigError, NotADivisor, SchurError
from .experiment import emit_reports, load_config, run_experiment
from .gf import FieldSpec
from .polyring import RingSpec, parse_poly

log = logging.getLogger("schurcc")


def _print_report(report: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            inner = ", ".join(f"{k}={json.dumps(v)}" for k, v in value.items())
            print(f"{key}: {inner}")
        elif isinstance(value, list):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key}: {value}")


def cmd_analyze(args) -> int:
    field = FieldSpec(args.q)
    ring = RingSpec(field, args.n, args.a)
    try:
        g = parse_poly(args.g, field)
    except ValueError as exc:
        print(f"bad generator: {exc}", file=sys.stderr)
        return 1
    code = code_from_generator(ring, g)
    report = {"schema": 1, **analyze_code(code, max_power=args.max_power)}
    _print_report(report, args.format)
    return 0


def cmd_invariant_codes(args) -> int:
    field = FieldSpec(args.q)
    codes = enumerate_invariant_cyclic(field, args.n)
    report = {
        "schema": 1,
        "q": args.q,
        "n": args.n,
        "codes": [{"k": k, "g": g.coeff_list()} for k, g in codes],
    }
    _print_report(report, args.format)
    return 0


def cmd_experiment(args) -> int:
    cfg = load_config(args.config)
    if args.seed is not None:
        cfg = dataclasses.replace(cfg, seed=args.seed)
    if args.truncate:
        cfg = dataclasses.replace(cfg, truncate=True)
    result = run_experiment(cfg)
    paths = emit_reports(result, args.out)
    figures = []
    if not args.no_plot:
        from .report import render_histogram_figures

        figures = render_histogram_figures(result, args.out)
    summary = {
        "schema": 1,
        "seed": cfg.seed,
        "rings": [
            {
                "q": ring.q,
                "n": ring.n,
                "a": ring.a,
                "mode": ring.mode,
                "skipped_reason": ring.skipped_reason,
                "eligible_count": ring.eligible_count,
                "analyzed_count": ring.analyzed_count,
                "over_cap": ring.over_cap,
                "truncated": ring.truncated,
                "sequences": len(ring.histogram),
            }
            for ring in result.rings
        ],
        "files": [str(p) for p in paths.values()] + [str(p) for p in figures],
    }
    if args.format == "json":
        print(json.dumps(summary, indent=2))
    else:
        for ring in summary["rings"]:
            status = (
                f"skipped ({ring['skipped_reason']})"
                if ring["skipped_reason"]
                else f"analyzed {ring['analyzed_count']}/{ring['eligible_count']}"
                + (" [over cap]" if ring["over_cap"] else "")
            )
            print(
                f"q={ring['q']} n={ring['n']} a={ring['a']} ({ring['mode']}): {status}, "
                f"{ring['sequences']} distinct sequences"
            )
        for path in summary["files"]:
            print(f"wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurcc",
        description="Dimension growth of constacyclic codes under Schur products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full report for one generator polynomial")
    p_an.add_argument("--q", type=int, required=True, help="prime field modulus")
    p_an.add_argument("--n", type=int, required=True, help="block length")
    p_an.add_argument("--a", type=int, required=True, help="constacyclic constant")
    p_an.add_argument(
        "--g",
        required=True,
        help="generator: text like 'x^3+2*x^2+4*x+3' or a coefficient list '[3,4,2,1]'",
    )
    p_an.add_argument("--max-power", type=int, default=None)
    p_an.add_argument("--format", choices=("json", "text"), default="json")
    p_an.set_defaults(func=cmd_analyze)

    p_inv = sub.add_parser(
        "invariant-codes", help="cyclic codes of length n with C^(2) = C"
    )
    p_inv.add_argument("--q", type=int, required=True)
    p_inv.add_argument("--n", type=int, required=True)
    p_inv.add_argument("--format", choices=("json", "text"), default="json")
    p_inv.set_defaults(func=cmd_invariant_codes)

    p_exp = sub.add_parser(
        "experiment",
        help="batch dimension-sequence experiment",
        epilog="Set SCHUR_THREADS to cap worker parallelism (default 1).",
    )
    p_exp.add_argument("--config", required=True, help="config file (JSON or key=value)")
    p_exp.add_argument("--out", required=True, help="output directory")
    p_exp.add_argument("--seed", type=int, default=None, help="override config seed")
    p_exp.add_argument(
        "--truncate",
        action="store_true",
        help="analyze the first generator_cap generators of over-cap rings",
    )
    p_exp.add_argument(
        "--no-plot", action="store_true", help="skip rendering PNG figures"
    )
    p_exp.add_argument("--format", choices=("json", "text"), default="json")
    p_exp.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotADivisor:
        print("generator does not divide x^n - a", file=sys.stderr)
        return 1
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"schurcc: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SchurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
