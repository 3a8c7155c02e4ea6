#!/usr/bin/env python3
"""Exhaustive check that the kite is the unique unicyclic maximizer, n = 3..N.

Writes one JSON certificate per order (argmax, top three radii, runner-up gap,
class count) and prints a short table.
"""
import argparse
import json
import sys
import time

from dlspec.lemmas import extremal_search


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--out", default=None, help="JSON lines file for the certificates")
    args = ap.parse_args(argv)

    ok = True
    sink = open(args.out, "w") if args.out else None
    try:
        print(f"{'n':>3} {'classes':>8} {'gap':>12} {'seconds':>8}  status")
        for n in range(3, args.max_n + 1):
            t0 = time.perf_counter()
            verdict, cert = extremal_search(n)
            dt = time.perf_counter() - t0
            ok &= verdict.passed and verdict.details["argmax_is_kite"]
            print(f"{n:>3} {cert.classes:>8} {cert.gap:>12.6g} {dt:>8.2f}  {verdict.status.value}")
            if sink:
                sink.write(json.dumps(cert.to_json()) + "\n")
    finally:
        if sink:
            sink.close()
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
