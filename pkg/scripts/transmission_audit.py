#!/usr/bin/env python3
"""Compare the published transmission formulas for H_n and the kite with BFS.

Prints one row per (n, vertex role); rows where the formula disagrees are
marked with '!'.
"""
import argparse
import sys

from dlspec.lemmas import transmission_table


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="6..12", help="range a..b")
    args = ap.parse_args(argv)
    lo, _, hi = args.n.partition("..")
    bad = 0
    print(f"{'n':>3} {'role':<14} {'formula':>8} {'bfs':>6}")
    for n in range(int(lo), int(hi or lo) + 1):
        for key, (printed, computed) in transmission_table(n).items():
            flag = "" if printed == computed else "  !"
            bad += printed != computed
            print(f"{n:>3} {key:<14} {printed:>8} {computed:>6}{flag}")
    print(f"{bad} mismatching rows")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
