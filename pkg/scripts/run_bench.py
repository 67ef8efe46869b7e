#!/usr/bin/env python3
"""Sweep the closed-form solver against Gaussian elimination.

Prints a per-size table of exact operation counts and median wall-clock
times, plus the fitted log-log slopes of the counts.  Op counts are
deterministic; timings are advisory.

Example:
    python scripts/run_bench.py --sizes 256,512,1024,2048 --reps 3 --json out.json
"""

import argparse
import json
import sys

from vandersolve.bench import BenchConfig, run_benchmark


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="256,512,1024",
                        help="comma-separated, strictly increasing (default 256,512,1024)")
    parser.add_argument("--reps", type=int, default=5,
                        help="timing repetitions per size (default 5)")
    parser.add_argument("--json", help="also write the raw report to this file")
    args = parser.parse_args(argv)

    sizes = tuple(int(s) for s in args.sizes.split(","))
    reports = run_benchmark(BenchConfig(sizes=sizes, repetitions=args.reps))
    closed, gauss = reports["closed_form"], reports["gaussian"]

    header = f"{'p':>8}  {'closed ops':>14}  {'closed s':>10}  {'gauss ops':>14}  {'gauss s':>10}"
    print(header)
    print("-" * len(header))
    for i, p in enumerate(sizes):
        print(f"{p:>8}  {closed.op_counts[i]:>14}  {closed.times[i]:>10.4f}"
              f"  {gauss.op_counts[i]:>14}  {gauss.times[i]:>10.4f}")
    print(f"\nlog-log op-count slopes: closed form {closed.fit:.4f}, "
          f"gaussian {gauss.fit:.4f}")

    if args.json:
        payload = {
            name: {
                "sizes": list(rep.sizes),
                "times": list(rep.times),
                "op_counts": list(rep.op_counts),
                "fit": rep.fit,
            }
            for name, rep in reports.items()
        }
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
        print(f"raw report written to {args.json}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
