#!/usr/bin/env python3
"""Wall-time scaling of the spider solver at fixed colour count.

Builds seeded random spiders with 5 legs and roughly equal leg lengths,
then reports solve time per size and doubling ratios.
"""

import argparse
import random
import time

from consistent_subset import Spider, solve_spider


def timing_spider(rng: random.Random, n: int, colours: int, legs: int) -> Spider:
    lengths = [(n - 1) // legs] * legs
    for i in range((n - 1) % legs):
        lengths[i] += 1
    return Spider(
        centre_colour=rng.randrange(colours),
        legs=tuple(tuple(rng.randrange(colours) for _ in range(L)) for L in lengths),
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000, 4000])
    parser.add_argument("--colors", type=int, default=3)
    parser.add_argument("--legs", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    previous = None
    for n in args.sizes:
        rng = random.Random(args.seed * 1_000_003 + n)
        spider = timing_spider(rng, n, args.colors, args.legs)
        best = float("inf")
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            solution = solve_spider(spider)
            best = min(best, time.perf_counter() - t0)
        ratio = "" if previous is None else f"  ratio {best / max(previous, 1e-9):.2f}"
        print(f"n={n:6d}  case={solution.case.value:12s}  size={solution.size:5d}  {best:.4f}s{ratio}")
        previous = best


if __name__ == "__main__":
    main()
