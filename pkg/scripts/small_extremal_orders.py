"""Brute-force n(k, d) at desk scale, pruned vs unpruned.

Usage:
    python scripts/small_extremal_orders.py
"""

import time

from ddcert import bounds, search


def timed(**kw):
    t0 = time.perf_counter()
    res = search.max_order_search(**kw)
    return res, time.perf_counter() - t0


def main():
    print(f"{'k':>2} {'d':>2} {'cap':>4} {'M':>4} {'best':>5} {'exh':>5} {'nodes':>9} {'sec':>7}  mode")
    cases = [(2, d) for d in range(1, 6)] + [(3, 2), (3, 3)]
    for k, d in cases:
        m = bounds.moore_bound(k, d)
        cap = min(m + 1, search.MAX_N_CAP)
        modes = [True] + ([False] if k == 2 and d <= 3 else [])
        for prune in modes:
            res, dt = timed(k=k, d=d, n_cap=cap, prune=prune)
            print(
                f"{k:>2} {d:>2} {cap:>4} {m:>4} {res.best_order:>5} {str(res.exhaustive):>5} "
                f"{res.nodes_explored:>9} {dt:>7.3f}  {'pruned' if prune else 'plain'}"
            )


if __name__ == "__main__":
    main()
