#!/usr/bin/env python3
"""Differential sweep over random graphs.

Draws seeded random weighted graphs, runs the label-propagation algorithm
against the brute-force trail search, and checks the two floor-form lower
bounds on every instance.  Exits non-zero on the first discrepancy, so the
script doubles as a quick confidence check after changes.

Usage:
    python scripts/verify_random_graphs.py [--count 2000] [--max-n 8] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass

from monotrails import brute_force_longest, random_graph, run_labeling_sorted


@dataclass
class SweepConfig:
    count: int = 2000
    max_n: int = 8
    seed: int = 0


def parse_config(argv=None) -> SweepConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    return SweepConfig(count=args.count, max_n=args.max_n, seed=args.seed)


def main(argv=None) -> int:
    cfg = parse_config(argv)
    rng = random.Random(cfg.seed)
    t0 = time.perf_counter()
    nodes_total = 0
    tight_b = 0
    for i in range(cfg.count):
        n = rng.randint(1, cfg.max_n)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_graph(n, m, rng.randrange(2**32))
        labels = run_labeling_sorted(g).labels
        result = brute_force_longest(g)
        if result.per_vertex != labels:
            print(f"MISMATCH at instance {i}: n={n} m={m}", file=sys.stderr)
            print(f"  algorithm: {labels}", file=sys.stderr)
            print(f"  oracle:    {result.per_vertex}", file=sys.stderr)
            return 1
        p_d = max(labels)
        bound_a = 2 * (g.q // g.n)
        bound_b = (2 * g.q) // g.n
        if p_d < bound_a or p_d < bound_b:
            print(f"BOUND VIOLATION at instance {i}: n={n} m={m} p_d={p_d}", file=sys.stderr)
            return 1
        nodes_total += result.nodes_explored
        if p_d == bound_b:
            tight_b += 1
    elapsed = time.perf_counter() - t0
    print(f"checked {cfg.count} random graphs (n <= {cfg.max_n}) in {elapsed:.1f}s")
    print(f"oracle nodes explored: {nodes_total}")
    print(f"instances where floor(2q/n) is tight: {tight_b}")
    print("all instances agree with the oracle; both lower bounds hold")
    return 0


if __name__ == "__main__":
    sys.exit(main())
