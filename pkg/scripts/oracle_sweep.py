#!/usr/bin/env python3
"""Solver-vs-oracle sweep over random spiders, with a summary.

Thin wrapper over the `mcs verify-suite` subcommand; keeps the seed
derivation (seed * 1_000_003 + instance index) in one place.
"""

import argparse
import json
import sys

from consistent_subset.cli import main as cli_main


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=1000)
    parser.add_argument("--legs", type=int, default=5)
    parser.add_argument("--colors", type=int, default=4)
    parser.add_argument("--max-leg-len", type=int, default=3)
    parser.add_argument("--output", default="oracle_sweep.jsonl")
    args = parser.parse_args()

    code = cli_main(
        [
            "verify-suite",
            "--seed", str(args.seed),
            "--count", str(args.count),
            "--legs", str(args.legs),
            "--colors", str(args.colors),
            "--max-leg-len", str(args.max_leg_len),
            "--output", args.output,
        ]
    )
    if code != 0:
        return code

    by_case: dict[str, list[int]] = {}
    with open(args.output, "r", encoding="utf-8") as fh:
        for line in fh:
            record = json.loads(line)
            by_case.setdefault(record["case"], []).append(int(record["match"]))
    for case in sorted(by_case):
        matches = by_case[case]
        print(f"{case:12s}  {sum(matches):5d}/{len(matches):5d} exact")
    return 0


if __name__ == "__main__":
    sys.exit(main())
