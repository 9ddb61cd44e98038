#!/usr/bin/env python3
"""Benchmark the pure-Python cover kernel against the compiled one.

Builds the same weighted set-cover instances the domination solvers build
(closed neighborhoods for dominating, open for total), feeds the identical
instances to both kernels, checks they agree bit for bit, and reports
per-size timings. Run from the repository root:

    python3 benchmarks/bench_cover.py
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import lcm

from fuzzydom import _cover_py
from fuzzydom.core import FuzzyGraph, _effective_adjacency, _index_map
from fuzzydom.harness import GenParams, gen_random

try:
    from fuzzydom import _cover_cy
except ImportError:
    _cover_cy = None

F = Fraction

INSTANCES_PER_SIZE = 8
REPEATS = 5


def cover_instance(g: FuzzyGraph, kind: str) -> tuple[list[int], list[int], int]:
    """The exact instance domination._solve would hand to the kernel."""
    n = len(g.vertices)
    adj = _effective_adjacency(g)
    idx = _index_map(g)
    masks = []
    for i in range(n):
        m = 1 << i if kind == "dominating" else 0
        for nbr in adj[i]:
            m |= 1 << idx[nbr]
        masks.append(m)
    scale = lcm(*(s.denominator for s in g.sigma)) if n else 1
    weights = [int(s * scale) for s in g.sigma]
    return masks, weights, (1 << n) - 1


def instances_for(n: int) -> list[tuple[list[int], list[int], int]]:
    out = []
    for k in range(INSTANCES_PER_SIZE):
        g = gen_random(GenParams(
            vertex_count=n,
            edge_probability=F(1, 2),
            effective_probability=F(3, 4),
            sigma_grid=20,
            seed=1000 * n + k,
        ))
        out.append(cover_instance(g, "dominating"))
        out.append(cover_instance(g, "total"))
    return out


def time_kernel(solve, batch) -> float:
    best = float("inf")
    for _ in range(REPEATS):
        start = time.perf_counter()
        for masks, weights, required in batch:
            solve(list(masks), list(weights), required)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    if _cover_cy is None:
        print("compiled kernel not built; nothing to compare "
              "(pip install -e . builds it)")
        return 1
    print(f"{'n':>4} {'instances':>9} {'pure ms':>10} {'compiled ms':>12} "
          f"{'speedup':>8}")
    for n in (12, 16, 20, 24):
        batch = instances_for(n)
        for masks, weights, required in batch:
            assert (_cover_py.solve_min_cover(masks, weights, required)
                    == _cover_cy.solve_min_cover(list(masks), list(weights),
                                                 required)), "kernel mismatch"
        pure = time_kernel(_cover_py.solve_min_cover, batch)
        compiled = time_kernel(_cover_cy.solve_min_cover, batch)
        print(f"{n:>4} {len(batch):>9} {pure * 1000:>10.2f} "
              f"{compiled * 1000:>12.2f} {pure / compiled:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
