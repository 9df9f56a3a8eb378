"""Random survey of E_P(x (x) y) - E_P(x) - E_P(y).

Tabulates how often the gap vanishes and whether that coincides with a
zero Alice-number variance or with an injective sum of Alice numbers.
"""

import argparse
from collections import Counter

import numpy as np

from fockent.asymptotics import check_superadditivity
from fockent.sampling import RandomStateConfig, random_state


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=2003)
    ap.add_argument("--max-modes", type=int, default=4)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    cfg = RandomStateConfig(max_modes=args.max_modes, max_terms=4, max_particles=3)
    tally = Counter()
    min_gap = np.inf
    for i in range(args.pairs):
        stats = ("boson", "fermion")[i % 2]
        x, px = random_state(rng, stats, cfg)
        y, py = random_state(rng, stats, cfg)
        r = check_superadditivity(x, y, px, py)
        min_gap = min(min_gap, r.gap)
        tally[(r.gap <= 1e-9, r.equality_predicted, r.sum_injective)] += 1
    print(f"pairs {args.pairs}, seed {args.seed}, smallest gap {min_gap:.3e}")
    print(f"{'zero gap':>9} {'zero var':>9} {'injective':>10} {'count':>7}")
    for (zg, zv, inj), count in sorted(tally.items()):
        print(f"{zg!s:>9} {zv!s:>9} {inj!s:>10} {count:>7}")


if __name__ == "__main__":
    main()
