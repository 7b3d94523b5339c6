"""Timing comparison of the compiled and pure enumeration kernels.

Run as a script; builds a few representative graphs and reports the
best-of-N wall time per backend and the speedup.  Results must be
identical between backends, and that is asserted on every row.
"""

from __future__ import annotations

import random
import time

from hopfdg import _kernels_py as pure

try:
    from hopfdg import _kernels as compiled
except ImportError:
    compiled = None


def tournament(nv: int) -> tuple[int, list[int], list[int]]:
    tails = []
    heads = []
    for i in range(nv):
        for j in range(i + 1, nv):
            tails.append(i)
            heads.append(j)
    return nv, tails, heads


def sparse(nv: int, m: int, seed: int) -> tuple[int, list[int], list[int]]:
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(nv) for j in range(nv) if i != j]
    chosen = rng.sample(pairs, m)
    return nv, [t for t, _ in chosen], [h for _, h in chosen]


def best_of(fn, args, repeats: int = 3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


CASES = [
    ("lower_half_masks, 18 vertices sparse", "lower_half_masks",
     sparse(18, 30, 1), 3),
    ("chain_stats, 11-vertex tournament", "chain_stats",
     tournament(11), 3),
    ("chain_stats, 13 vertices sparse", "chain_stats",
     sparse(13, 24, 2), 3),
    ("takeuchi_terms, 9-vertex tournament", "takeuchi_terms",
     tournament(9), 3),
    ("surjection_stats, 8-vertex tournament", "surjection_stats",
     tournament(8), 3),
    ("surjection_stats, 9 vertices sparse", "surjection_stats",
     sparse(9, 14, 3), 3),
    ("count_strict_colorings, 8 vertices, n=14", "count_strict_colorings",
     (*sparse(8, 12, 4), 14), 3),
    ("count_dilation_points, 7 vertices, d=12", "count_dilation_points",
     (*sparse(7, 10, 5), 12, False), 3),
]


def main() -> None:
    if compiled is None:
        print("compiled kernels unavailable; timing the pure backend only")
    name_w = max(len(name) for name, *_ in CASES)
    header = f"{'case':<{name_w}}  {'pure':>9}  {'compiled':>9}  {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for name, fn_name, args, repeats in CASES:
        t_pure, r_pure = best_of(getattr(pure, fn_name), args, repeats)
        if compiled is None:
            print(f"{name:<{name_w}}  {t_pure * 1e3:8.1f}ms {'':>9}  {'':>7}")
            continue
        t_comp, r_comp = best_of(getattr(compiled, fn_name), args, repeats)
        assert r_pure == r_comp, f"backend mismatch on {name}"
        print(f"{name:<{name_w}}  {t_pure * 1e3:8.1f}ms {t_comp * 1e3:8.1f}ms "
              f"{t_pure / t_comp:6.1f}x")


if __name__ == "__main__":
    main()
