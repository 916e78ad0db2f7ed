"""Command-line interface.

Exit codes: 0 valid/found, 1 invalid/not found, 2 infeasible instance,
3 parameter error, 4 search cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import classify, infeasibility_clause
from .errors import CapExceeded, InfeasibleInstance, ParameterError, PicodError, Unsupported
from .instance import Instance, build_nth, find_one_factor
from .kernels import BACKEND
from .oracle import PROOF_MAX_M, SEARCH_BUDGET, optimal_linear_length
from .schemes import Scheme, construct
from .sweep import parse_range, rows_to_csv, rows_to_json, sweep
from .validator import (
    entropy_report_csv,
    privacy_entropy_report,
    truth_table,
    validate_exhaustive,
    validate_linear,
)

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE, EXIT_PARAM, EXIT_CAP = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _emit(obj, out: str | None = None) -> None:
    text = json.dumps(obj, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _instance(args) -> Instance:
    return Instance(args.m, args.s, args.h)


def cmd_construct(args) -> int:
    inst = _instance(args)
    scheme = construct(inst)
    verdict = validate_linear(scheme.generator, inst)
    _emit(scheme.to_dict(), args.out)
    print(f"verdict: {verdict.status.value} (ell={scheme.ell}, {scheme.case_tag})", file=sys.stderr)
    return EXIT_OK if verdict.valid else EXIT_INVALID


def _load_scheme(path: str) -> Scheme:
    try:
        return Scheme.from_dict(json.loads(Path(path).read_text()))
    except (KeyError, TypeError, json.JSONDecodeError) as e:
        raise ParameterError(f"cannot read scheme from {path}: {e}") from e


def cmd_validate(args) -> int:
    scheme = _load_scheme(args.scheme)
    inst = scheme.instance
    if args.exhaustive:
        verdict = validate_exhaustive(truth_table(scheme.generator), inst, strict=not args.lenient)
    else:
        verdict = validate_linear(scheme.generator, inst)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_entropy(args) -> int:
    scheme = _load_scheme(args.scheme)
    report = privacy_entropy_report(truth_table(scheme.generator), scheme.instance)
    sys.stdout.write(entropy_report_csv(report))
    return EXIT_OK


def cmd_optimal(args) -> int:
    inst = _instance(args)
    ell_max = args.ell_max
    if ell_max is None:
        ell_max = inst.m if inst.m <= PROOF_MAX_M else min(3, inst.m)
    result = optimal_linear_length(inst, ell_max, workers=args.workers)
    _emit(result.to_dict())
    return EXIT_OK if result.found else EXIT_INVALID


def cmd_sweep(args) -> int:
    ms, ss, hs = parse_range(args.m_range), parse_range(args.s_range), parse_range(args.h_range)
    if args.oracle_cap is not None and args.oracle_cap < 1:
        raise ParameterError("--oracle-cap must be positive")
    rows = sweep(ms, ss, hs, args.oracle_cap, args.workers)
    if args.format == "csv":
        text = rows_to_csv(rows)
    else:
        text = json.dumps(rows_to_json(rows), indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_factor(args) -> int:
    inst = _instance(args)
    factor = find_one_factor(build_nth(inst))
    _emit({**inst.to_dict(), "exists": factor is not None, "witness": sorted(factor) if factor else None})
    return EXIT_OK if factor is not None else EXIT_INVALID


def cmd_bounds(args) -> int:
    inst = _instance(args)
    factor = find_one_factor(build_nth(inst))
    report = classify(inst, factor is not None)
    _emit({**inst.to_dict(), "g": inst.g, "n": inst.n, "one_factor": factor is not None,
           "infeasible_clause": infeasibility_clause(inst), **report.to_dict()})
    return EXIT_INFEASIBLE if infeasibility_clause(inst) else EXIT_OK


def _add_instance_args(p):
    p.add_argument("m", type=int, help="number of messages")
    p.add_argument("s", type=int, help="side-information size")
    p.add_argument("h", type=int, nargs="?", default=1, help="shift step (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ppicod", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build and certify a scheme")
    _add_instance_args(p)
    p.add_argument("--out", help="write scheme JSON here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="check a scheme JSON file")
    p.add_argument("scheme")
    p.add_argument("--exhaustive", action="store_true", help="judge the truth table instead of the span")
    p.add_argument("--lenient", action="store_true",
                   help="with --exhaustive, tolerate partial leakage that decodes nothing")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("entropy", help="per-user conditional entropy CSV for a scheme")
    p.add_argument("scheme")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("optimal", help="exhaustive shortest linear code")
    _add_instance_args(p)
    p.add_argument("--ell-max", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_optimal)

    p = sub.add_parser("sweep", help="tabulate a parameter grid")
    p.add_argument("--m-range", required=True, help="e.g. 4..12, 5..9:2 or 6,8,10")
    p.add_argument("--s-range", required=True)
    p.add_argument("--h-range", default="1")
    p.add_argument("--oracle-cap", type=int, default=None,
                   help=f"also run the oracle up to this dimension (budget {SEARCH_BUDGET} subspaces)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("factor", help="find a 1-factor of the hypergraph")
    _add_instance_args(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("bounds", help="closed-form case and bounds")
    _add_instance_args(p)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleInstance as e:
        print(str(e), file=sys.stderr)
        return EXIT_INFEASIBLE
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ParameterError, Unsupported, ValueError) as e:
        print(f"parameter error: {e}", file=sys.stderr)
        return EXIT_PARAM
    except PicodError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
