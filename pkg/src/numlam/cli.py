"""Command-line front door.

Commands: eval, numeral, check, head, eq, definable.  Results go to stdout,
diagnostics to stderr.  Exit codes: 0 success/pass, 1 failure or bad input,
2 out of fuel, 3 inconclusive (fuel ran out inside a check, or the requested
combinator is absent).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .numerals import SYSTEM_NAMES, UnknownSystemError, builtin_system
from .parser import (
    DuplicateNameError,
    ParseError,
    Program,
    parse_program,
    parse_term,
    pretty,
)
from .reduction import Fuel, Normal, beta_eta_eq, beta_eta_normalize, head_reduce
from .report import REPORT_FORMAT
from .terms import F, I, T

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_FUEL = 2
EXIT_INCONCLUSIVE = 3


def prelude() -> Program:
    """Named combinators usable in terms given on the command line."""
    defs = [("I", I), ("T", T), ("F", F)]
    for name in SYSTEM_NAMES:
        system = builtin_system(name)
        for prefix, term in (
            ("S", system.successor),
            ("P", system.predecessor),
            ("Z", system.zero_test),
        ):
            if term is not None:
                defs.append((f"{prefix}_{name}", term))
    return Program(tuple(defs))


def _environment(args) -> Program:
    base = prelude() if args.prelude else None
    if args.defs:
        with open(args.defs, encoding="utf-8") as handle:
            return parse_program(handle.read(), base)
    return base or Program()


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _report_payload(reports: list[dict], extra: dict) -> dict:
    payload = {"format": REPORT_FORMAT}
    payload.update(extra)
    payload["reports"] = reports
    return payload


def cmd_eval(args) -> int:
    term = parse_term(args.term, _environment(args))
    out = beta_eta_normalize(term, Fuel(args.fuel))
    if isinstance(out, Normal):
        payload = {
            "format": REPORT_FORMAT,
            "status": "normal",
            "term": pretty(out.term),
            "steps": out.steps,
            "eta_steps": out.eta_steps,
        }
        _emit(args, payload, [pretty(out.term), f"steps: {out.steps} beta, {out.eta_steps} eta"])
        return EXIT_PASS
    payload = {
        "format": REPORT_FORMAT,
        "status": "out_of_fuel",
        "term": pretty(out.term),
        "steps": out.steps,
    }
    _emit(args, payload, [f"out of fuel after {out.steps} steps"])
    return EXIT_FUEL


def cmd_numeral(args) -> int:
    system = builtin_system(args.system)
    term = system.numeral(args.n)
    payload = {
        "format": REPORT_FORMAT,
        "system": args.system,
        "n": args.n,
        "term": pretty(term),
    }
    _emit(args, payload, [pretty(term)])
    return EXIT_PASS


_CHECKS = ("succ", "pred", "zero")


def cmd_check(args) -> int:
    system = builtin_system(args.system)
    fuel = Fuel(args.fuel)
    wanted = _CHECKS if args.which == "all" else (args.which,)
    combinators = {
        "succ": system.successor,
        "pred": system.predecessor,
        "zero": system.zero_test,
    }
    runners = {
        "succ": harness.check_successor,
        "pred": harness.check_predecessor,
        "zero": harness.check_zero_test,
    }
    reports = []
    lines = []
    any_fail = False
    any_inconclusive = False
    for which in wanted:
        term = combinators[which]
        if term is None:
            reports.append({"which": which, "absent": True})
            lines.append(f"{which}: absent")
            any_inconclusive = True
            continue
        report = runners[which](system, term, args.upto, fuel)
        reports.append({"which": which, **report.to_dict()})
        lines.append(f"{which}: {report.overall} ({report.passed} passed, "
                     f"{report.failed} failed, {report.unknown} unknown)")
        for case in report.cases:
            if not case.ok:
                detail = f"  {case.label}: {case.verdict_text()}"
                if case.witness:
                    detail += f" [{case.witness}]"
                lines.append(detail)
        if report.overall == "fail":
            any_fail = True
        elif report.overall == "inconclusive":
            any_inconclusive = True
    payload = _report_payload(reports, {"system": args.system, "upto": args.upto})
    _emit(args, payload, lines)
    if any_fail:
        return EXIT_FAIL
    if any_inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def cmd_head(args) -> int:
    term = parse_term(args.term, _environment(args))
    result = head_reduce(term, Fuel(args.fuel))
    trace = result.trace
    lines = []
    if args.trace:
        lines.extend(pretty(state) for state in trace.states)
    else:
        lines.append(pretty(trace.final))
    payload = {
        "format": REPORT_FORMAT,
        "status": "hnf" if result.reached_hnf else "out_of_fuel",
        "h": trace.length,
        "final": pretty(trace.final),
    }
    if args.trace:
        payload["states"] = [pretty(state) for state in trace.states]
    if result.reached_hnf:
        lines.append(f"h = {trace.length}")
        _emit(args, payload, lines)
        return EXIT_PASS
    lines.append(f"out of fuel after {trace.length} head steps")
    _emit(args, payload, lines)
    return EXIT_FUEL


def cmd_eq(args) -> int:
    env = _environment(args)
    left = parse_term(args.left, env)
    right = parse_term(args.right, env)
    verdict = beta_eta_eq(left, right, Fuel(args.fuel))
    payload = {
        "format": REPORT_FORMAT,
        "verdict": verdict.kind,
        "reason": verdict.reason,
    }
    _emit(args, payload, [str(verdict)])
    if verdict.is_equal:
        return EXIT_PASS
    if verdict.is_distinct:
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE


_FUNCTIONS = {
    "id": (harness.NumericFunction(1, lambda n: n), 50),
    "succ": (harness.NumericFunction(1, lambda n: n + 1), 50),
    "step01": (harness.NumericFunction(1, lambda n: 0 if n == 0 else 1), 50),
    "k": (harness.k_function(), 11),  # binary: the grid grows quadratically
}


def cmd_definable(args) -> int:
    system = builtin_system(args.system)
    term = parse_term(args.term, _environment(args))
    fn, default_upto = _FUNCTIONS[args.fn]
    upto = args.upto if args.upto is not None else default_upto
    if fn.arity == 1:
        points = [(n,) for n in range(upto)]
    else:
        points = [(n, m) for n in range(upto) for m in range(upto)]
    report = harness.check_definable(system, term, fn, points, Fuel(args.fuel))
    lines = [f"{args.fn} on {args.system}: {report.overall} "
             f"({report.passed} passed, {report.failed} failed, {report.unknown} unknown)"]
    for case in report.cases:
        if not case.ok:
            detail = f"  {case.label}: {case.verdict_text()}"
            if case.witness:
                detail += f" [{case.witness}]"
            lines.append(detail)
    payload = _report_payload(
        [report.to_dict()], {"system": args.system, "fn": args.fn, "upto": upto}
    )
    _emit(args, payload, lines)
    if report.overall == "fail":
        return EXIT_FAIL
    if report.overall == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=1_000_000,
                        help="maximum beta steps per reduction (default 1000000)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    terms = argparse.ArgumentParser(add_help=False)
    terms.add_argument("--defs", metavar="PATH",
                       help="definition file whose names are inlined into terms")
    terms.add_argument("--prelude", action="store_true",
                       help="preload I, T, F and the built-in S/P/Z combinators")

    parser = argparse.ArgumentParser(
        prog="numlam",
        description="Workbench for numeral systems in the untyped lambda calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common, terms],
                       help="beta-eta-normalize a term")
    p.add_argument("term")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("numeral", parents=[common],
                       help="print the n-th numeral of a system")
    p.add_argument("system", metavar="{" + ",".join(SYSTEM_NAMES) + "}")
    p.add_argument("n", type=int)
    p.set_defaults(run=cmd_numeral)

    p = sub.add_parser("check", parents=[common],
                       help="run the combinator contracts of a built-in system")
    p.add_argument("system", metavar="{" + ",".join(SYSTEM_NAMES) + "}")
    p.add_argument("which", choices=("all",) + _CHECKS)
    p.add_argument("--upto", type=int, default=50,
                   help="check indices below this bound (default 50)")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("head", parents=[common, terms],
                       help="head-reduce a term and report the length")
    p.add_argument("term")
    p.add_argument("--trace", action="store_true",
                   help="print every intermediate state")
    p.set_defaults(run=cmd_head)

    p = sub.add_parser("eq", parents=[common, terms],
                       help="decide beta-eta-equality of two terms (with fuel)")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(run=cmd_eq)

    p = sub.add_parser("definable", parents=[common, terms],
                       help="check that a term defines a named numeric function")
    p.add_argument("system", metavar="{" + ",".join(SYSTEM_NAMES) + "}")
    p.add_argument("term")
    p.add_argument("--fn", choices=sorted(_FUNCTIONS), required=True,
                   help="function to check against")
    p.add_argument("--upto", type=int, default=None,
                   help="bound for the point grid (default 50, or 11 for k)")
    p.set_defaults(run=cmd_definable)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.fuel < 1:
        print("fuel must be at least 1", file=sys.stderr)
        return EXIT_FAIL
    try:
        return args.run(args)
    except ParseError as err:
        print(f"syntax error: {err}", file=sys.stderr)
        return EXIT_FAIL
    except DuplicateNameError as err:
        print(f"definition error: {err}", file=sys.stderr)
        return EXIT_FAIL
    except UnknownSystemError as err:
        print(str(err), file=sys.stderr)
        return EXIT_FAIL
    except OSError as err:
        print(str(err), file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
