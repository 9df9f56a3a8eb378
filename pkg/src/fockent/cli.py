"""Command-line front end.

    fockent analyze "(|0,1>+|1,0>)^2" --stats boson
    fockent table1 [--expected FILE]
    fockent scan --max-n 256
    fockent superadd "|0,1>+|1,0>" "|0,1>+|1,0>"
    fockent superadd --pairs 200 --seed 2003

Exit codes: 0 success, 1 mismatch or failed check, 2 parse error,
3 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import __version__
from .asymptotics import (
    EQUALITY_TOL,
    check_superadditivity,
    delta,
    ep_split_singles_asymptote,
    ep_split_singles_exact,
)
from .errors import FockError, StateSyntaxError
from .fock import Statistics
from .measures import full_report
from .parser import format_state, parse_state
from .sampling import RandomStateConfig, random_state
from .table1 import COLUMNS, run_table1

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3
DASH = "−"


def _plain(obj):
    # full-precision floats; -0.0 and non-finite values are normalized
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return None
        return float(obj) + 0.0
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def render_json(doc: dict) -> str:
    return json.dumps(_plain(doc), sort_keys=True, indent=2) + "\n"


def document(command: str, inputs: dict, results, seed: Optional[int] = None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, "command": command, "input": inputs, "results": results}
    if seed is not None:
        doc["seed"] = seed
    return doc


def fmt(x: Optional[float]) -> str:
    """Small rationals as fractions, other values to 6 decimals, None as a dash."""
    if x is None:
        return DASH
    frac = Fraction(x).limit_denominator(16)
    if abs(float(frac) - x) <= 1e-9:
        return str(frac)
    return f"{x:.6f}"


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _analyze_text(expr: str, stats: Statistics, rep) -> str:
    label = "S_b" if stats is Statistics.BOSON else "S_f"
    lines = [
        f"state    {expr}",
        f"stats    {stats.value}   N={rep.total_particles}   modes={rep.alice_modes}+{rep.mode_count - rep.alice_modes}",
        f"E_M      {fmt(rep.e_m)}",
        f"E_P      {fmt(rep.e_p)}",
        f"{label:<8} {fmt(rep.s_single)}",
        f"QC       {fmt(rep.qc_fermion)}",
        f"V_alice  {fmt(rep.variance_alice)}",
        "sectors  n   P_n        E_M(n)",
    ]
    for n, prob, e in rep.sectors:
        lines.append(f"         {n:<3} {fmt(prob):<10} {fmt(e)}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    stats = Statistics.parse(args.stats)
    state, part = parse_state(args.state, stats)
    rep = full_report(state, part)
    if args.json:
        inputs = {"state": args.state, "stats": stats.value, "canonical": format_state(state, part)}
        _emit(args, render_json(document("analyze", inputs, rep.to_dict())))
    else:
        _emit(args, _analyze_text(args.state, stats, rep))
    return EXIT_OK


def cmd_table1(args) -> int:
    rows = run_table1(args.expected)
    ok = all(r.passed for r in rows)
    if args.json:
        results = {"rows": [r.to_dict() for r in rows], "pass": ok}
        _emit(args, render_json(document("table1", {"expected": args.expected}, results)))
    else:
        head = f"{'state':<30}" + "".join(f"{c:>14}" for c in COLUMNS) + "  result"
        lines = [head, "-" * len(head)]
        for r in rows:
            cells = "".join(f"{fmt(r.computed[c]) + ' (' + fmt(r.expected[c]) + ')':>14}" for c in COLUMNS)
            verdict = "PASS" if r.passed else "FAIL " + ",".join(r.mismatches)
            lines.append(f"{r.state:<30}{cells}  {verdict}")
        lines.append("computed (expected); fermion column skipped where occupancy exceeds 1")
        lines.append("ALL PASS" if ok else "MISMATCH")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def doubling_grid(max_n: int) -> List[int]:
    grid = []
    n = 1
    while n <= max_n:
        grid.append(n)
        n *= 2
    if grid[-1] != max_n:
        grid.append(max_n)
    return grid


def cmd_scan(args) -> int:
    if args.max_n < 1:
        raise FockError("--max-n must be at least 1")
    rows = []
    for n in doubling_grid(args.max_n):
        exact = ep_split_singles_exact(n)
        asym = ep_split_singles_asymptote(n)
        rows.append({"N": n, "exact": exact, "asymptote": asym, "difference": exact - asym, "ratio": exact / n})
    if args.json:
        results = {"delta": delta(), "rows": rows}
        _emit(args, render_json(document("scan", {"max_n": args.max_n}, results)))
    else:
        lines = [f"delta = {delta():.9f}", f"{'N':>6} {'exact':>14} {'asymptote':>14} {'difference':>12} {'exact/N':>10}"]
        for r in rows:
            lines.append(
                f"{r['N']:>6} {r['exact']:>14.6f} {r['asymptote']:>14.6f} {r['difference']:>12.3e} {r['ratio']:>10.6f}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_superadd(args) -> int:
    stats = Statistics.parse(args.stats)
    if (args.psi is None) != (args.phi is None):
        raise StateSyntaxError("give both PSI and PHI, or neither for a random survey", 0)
    seed = None
    if args.psi is not None:
        x, px = parse_state(args.psi, stats)
        y, py = parse_state(args.phi, stats)
        reports = [check_superadditivity(x, y, px, py)]
        inputs = {"psi": args.psi, "phi": args.phi, "stats": stats.value}
    else:
        seed = args.seed
        rng = np.random.default_rng(seed)
        cfg = RandomStateConfig(seed=seed)
        reports = []
        for _ in range(args.pairs):
            x, px = random_state(rng, stats, cfg)
            y, py = random_state(rng, stats, cfg)
            reports.append(check_superadditivity(x, y, px, py))
        inputs = {"pairs": args.pairs, "stats": stats.value}
    ok = all(r.gap >= -EQUALITY_TOL for r in reports)
    if args.json:
        results = reports[0].to_dict() if args.psi is not None else {
            "reports": [r.to_dict() for r in reports],
            "min_gap": min(r.gap for r in reports),
            "pass": ok,
        }
        _emit(args, render_json(document("superadd", inputs, results, seed)))
    else:
        if args.psi is not None:
            r = reports[0]
            lines = [
                f"lhs  E_P(psi x phi)      {fmt(r.lhs)}",
                f"rhs  E_P(psi)+E_P(phi)   {fmt(r.rhs)}",
                f"gap                      {fmt(r.gap)}",
                f"V_psi, V_phi             {fmt(r.v_psi)}, {fmt(r.v_phi)}",
                f"equality_predicted       {str(r.equality_predicted).lower()}",
                f"sum_injective            {str(r.sum_injective).lower()}",
            ]
        else:
            zero = [r for r in reports if abs(r.gap) <= EQUALITY_TOL]
            lines = [
                f"pairs {len(reports)}  seed {seed}  min gap {min(r.gap for r in reports):.3e}",
                f"zero-gap pairs {len(zero)}, of which zero-variance "
                f"{sum(r.equality_predicted for r in zero)}",
            ]
        lines.append("PASS" if ok else "FAIL: negative gap")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--output", metavar="PATH", help="write the report here instead of stdout")

    stats = argparse.ArgumentParser(add_help=False)
    stats.add_argument("--stats", choices=["boson", "fermion"], default="boson")

    parser = argparse.ArgumentParser(prog="fockent", description="Entanglement of indistinguishable particles.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common, stats], help="measures for one state")
    p.add_argument("state", help='ket expression, e.g. "(|0,1>+|1,0>)^2"')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table1", parents=[common], help="reproduce the reference table")
    p.add_argument("--expected", metavar="PATH", help="JSON file of expected rows (default: bundled)")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("scan", parents=[common], help="split-single family, exact vs asymptote")
    p.add_argument("--max-n", type=int, default=256)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("superadd", parents=[common, stats], help="check super-additivity")
    p.add_argument("psi", nargs="?")
    p.add_argument("phi", nargs="?")
    p.add_argument("--pairs", type=int, default=200, help="random pairs when no states are given")
    p.add_argument("--seed", type=int, default=RandomStateConfig().seed)
    p.set_defaults(func=cmd_superadd)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StateSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        if exc.text:
            print(f"  {exc.text}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_PARSE
    except FockError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
