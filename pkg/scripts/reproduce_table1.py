"""Recompute the seven reference rows and print them next to the expected values."""

import argparse
import sys

from fockent.cli import fmt
from fockent.table1 import run_table1

KEYS = ("E_M", "S_b", "S_f", "E_P")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--expected", help="alternative expected-values JSON")
    args = ap.parse_args()
    rows = run_table1(args.expected)
    print(f"{'state':<28}" + "".join(f"{k:>10}" for k in KEYS) + "  status")
    for row in rows:
        cells = "".join(f"{fmt(row.computed[k]):>10}" for k in KEYS)
        print(f"{row.state:<28}{cells}  {'ok' if row.passed else 'MISMATCH ' + ', '.join(row.mismatches)}")
    return 0 if all(r.passed for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
