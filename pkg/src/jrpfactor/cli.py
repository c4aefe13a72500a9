"""Command-line front end.

Subcommands: factor, solve, build, range, partition, curve.  Exit codes:
0 success, 1 input or runtime error, 2 oracle disagreement.  Big
integers cross the boundary as decimal strings, rationals as num/den.
The cell budget for solves defaults to JRP_CELL_BUDGET from the
environment (else 10**7).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from functools import partial
from pathlib import Path

from . import oracle
from .errors import BudgetExceeded, InvalidSource, SamplingFailure
from .model import JrpInstance, Variant
from .reductions import (RangeDivisorInstance, build_aperiodic_instance,
                         build_periodic_instance, build_rangedivisor_jrp,
                         factor, pad_partition, partition_to_rangedivisor)
from .report import RunReport, curve_rows, render_curve_figure, write_curve_csv
from .solver import DEFAULT_CELL_BUDGET, solve_exact

ENV_BUDGET = "JRP_CELL_BUDGET"


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    return int(os.environ.get(ENV_BUDGET, DEFAULT_CELL_BUDGET))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _ratio_pair(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_ratio(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def _emit(args, report: RunReport, text_lines: list[str]) -> None:
    if args.json:
        if getattr(args, "timings", False):
            report.wall_ms = int((time.monotonic() - args._t0) * 1000)
        print(report.to_json())
    else:
        for line in text_lines:
            print(line)


def cmd_factor(args) -> int:
    M = int(args.M)
    variant = Variant(args.variant)
    solver = partial(solve_exact, budget=_budget(args))
    factors = factor(M, variant, solver=solver)
    text = (f"{M} is prime" if factors == [M]
            else f"{M} = {' * '.join(str(p) for p in factors)}")
    agreement = None
    if args.oracle:
        agreement = "AGREE" if oracle.trial_division_factor(M) == factors else "DISAGREE"
    report = RunReport(
        "factor",
        inputs={"M": str(M), "variant": variant.value},
        outputs={"factors": [str(p) for p in factors], "text": text},
        oracle=agreement)
    lines = [text] + ([f"oracle: {agreement}"] if agreement else [])
    _emit(args, report, lines)
    return 2 if agreement == "DISAGREE" else 0


def cmd_solve(args) -> int:
    doc = json.loads(Path(args.instance).read_text(encoding="utf-8"))
    inst = JrpInstance.from_document(doc)
    sol = solve_exact(inst, budget=_budget(args))
    lines = [f"q1={sol.q1} q2={sol.q2} cost={_fmt(sol.cost)}"]
    outputs = {"q1": str(sol.q1), "q2": str(sol.q2),
               "cost": _ratio_pair(sol.cost),
               "bound1": str(sol.bound1), "bound2": str(sol.bound2)}
    if args.z is not None:
        z = _parse_ratio(args.z)
        verdict = "YES" if sol.cost <= z else "NO"
        lines.append(verdict)
        outputs["decision"] = verdict
        outputs["z"] = _ratio_pair(z)
    report = RunReport("solve", inputs={"instance": doc}, outputs=outputs)
    _emit(args, report, lines)
    return 0


def cmd_build(args) -> int:
    M = int(args.M)
    build = build_aperiodic_instance if args.lemma == 1 else build_periodic_instance
    artifact = build(M)
    print(json.dumps(artifact.to_document(), sort_keys=True))
    return 0


def cmd_range(args) -> int:
    rd = RangeDivisorInstance(M=int(args.M), L=int(args.L), U=int(args.U))
    artifact = build_rangedivisor_jrp(rd)
    sol = solve_exact(artifact.instance, budget=_budget(args))
    answer = sol.cost <= artifact.threshold
    verdict = "YES" if answer else "NO"
    agreement = None
    if args.oracle:
        direct = oracle.has_divisor_in_range(rd.M, rd.L, rd.U)
        agreement = "AGREE" if direct == answer else "DISAGREE"
    report = RunReport(
        "range",
        inputs=rd.to_document(),
        outputs={"decision": verdict, "artifact": artifact.to_document(),
                 "optimal_cost": _ratio_pair(sol.cost)},
        oracle=agreement)
    lines = [verdict] + ([f"oracle: {agreement}"] if agreement else [])
    _emit(args, report, lines)
    return 2 if agreement == "DISAGREE" else 0


def cmd_partition(args) -> int:
    items = [int(tok) for tok in args.items.split(",") if tok.strip()]
    padded = pad_partition(items)
    rd = partition_to_rangedivisor(padded, seed=args.seed,
                                   guard_bits=args.guard_bits)
    direct = oracle.subset_sum_exists(list(padded.items), padded.half_total)
    oracle_verdict = "YES" if direct else "NO"
    artifact = build_rangedivisor_jrp(rd)
    try:
        sol = solve_exact(artifact.instance, budget=_budget(args))
        answer = sol.cost <= artifact.threshold
        decision = "YES" if answer else "NO"
    except BudgetExceeded:
        answer = None
        decision = "UNDECIDED(cell budget exceeded)"
    report = RunReport(
        "partition",
        inputs={"items": [str(a) for a in items], "seed": str(args.seed),
                "guard_bits": str(args.guard_bits)},
        outputs={"padded": [str(a) for a in padded.items],
                 "range_divisor": rd.to_document(),
                 "decision": decision},
        oracle=oracle_verdict)
    lines = [json.dumps(rd.to_document(), sort_keys=True),
             f"decision={decision} oracle={oracle_verdict}"]
    _emit(args, report, lines)
    if answer is not None and answer != direct:
        return 2
    return 0


def cmd_curve(args) -> int:
    M = int(args.M)
    L = int(args.L) if args.L is not None else None
    U = int(args.U) if args.U is not None else None
    rows = curve_rows(M, args.variant, args.q_from, args.q_to, L=L, U=U)
    out = Path(args.out)
    write_curve_csv(out, rows)
    written = [str(out)]
    if not args.no_plot:
        fig_path = out.with_suffix(".png")
        render_curve_figure(fig_path, rows,
                            title=f"{args.variant} objective, M={M}")
        written.append(str(fig_path))
    for path in written:
        print(f"wrote {path}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jrpfactor",
        description="Exact two-item joint replenishment and the questions "
                    "it can answer: factoring, divisor ranges, partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, oracle_flag=True):
        p.add_argument("--json", action="store_true",
                       help="machine-readable report on stdout")
        p.add_argument("--timings", action="store_true",
                       help="include wall time in the JSON report "
                            "(breaks byte-reproducibility)")
        p.add_argument("--budget", type=int, default=None,
                       help=f"solver cell budget (default ${ENV_BUDGET} or "
                            f"{DEFAULT_CELL_BUDGET})")
        if oracle_flag:
            p.add_argument("--oracle", action="store_true",
                           help="cross-check with the brute-force oracle")

    p = sub.add_parser("factor", help="prime factorization via instance solves")
    p.add_argument("M")
    p.add_argument("--variant", choices=[v.value for v in Variant],
                   default=Variant.PERIODIC.value)
    common(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("solve", help="solve an instance document exactly")
    p.add_argument("instance", help="path to an instance JSON document")
    p.add_argument("--z", default=None,
                   help="threshold num[/den]; prints YES/NO for cost <= z")
    common(p, oracle_flag=False)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("build", help="emit a construction artifact as JSON")
    p.add_argument("M")
    p.add_argument("--lemma", type=int, choices=(1, 2), required=True,
                   help="1 = aperiodic construction, 2 = periodic")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("range", help="divisor-in-[L,U] decision via a solve")
    p.add_argument("M")
    p.add_argument("L")
    p.add_argument("U")
    common(p)
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("partition",
                       help="equal-split question via prime sampling and a "
                            "divisor-range instance")
    p.add_argument("items", help="comma-separated positive integers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--guard-bits", type=int, default=16, dest="guard_bits")
    common(p, oracle_flag=False)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("curve", help="export objective-vs-baseline rows as "
                                     "CSV (and a rendered figure)")
    p.add_argument("M")
    p.add_argument("--variant",
                   choices=("aperiodic", "periodic", "rangedivisor"),
                   default="aperiodic")
    p.add_argument("--from", dest="q_from", type=int, required=True)
    p.add_argument("--to", dest="q_to", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--no-plot", action="store_true",
                   help="skip the PNG next to the CSV")
    p.add_argument("--L", default=None, help="lower endpoint (rangedivisor)")
    p.add_argument("--U", default=None, help="upper endpoint (rangedivisor)")
    p.set_defaults(func=cmd_curve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    args._t0 = time.monotonic()
    try:
        return args.func(args)
    except (ValueError, InvalidSource, SamplingFailure, BudgetExceeded,
            OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
