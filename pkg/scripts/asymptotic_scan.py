"""Exact E_P of N split singles against N - log2(N)/2 - delta over a doubling grid."""

import argparse

from fockent.asymptotics import delta, ep_split_singles_asymptote, ep_split_singles_exact


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-exp", type=int, default=14, help="largest N is 2**max_exp")
    args = ap.parse_args()
    print(f"delta = {delta():.12f}")
    print(f"{'N':>7} {'exact':>16} {'asymptote':>16} {'difference':>12} {'exact/N':>10}")
    for k in range(args.max_exp + 1):
        n = 2**k
        exact, approx = ep_split_singles_exact(n), ep_split_singles_asymptote(n)
        print(f"{n:>7} {exact:>16.10f} {approx:>16.10f} {exact - approx:>12.3e} {exact / n:>10.6f}")


if __name__ == "__main__":
    main()
