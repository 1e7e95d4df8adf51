"""Tabulate the double-root defect bounds and the certified diameters.

Usage:
    python scripts/defect_bounds_table.py [--max-k 10] [--max-d 16]
"""

import argparse

from ddcert import bounds, theorem
from ddcert.gpoly import special_value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=10)
    ap.add_argument("--max-d", type=int, default=16)
    args = ap.parse_args()

    print(f"{'k':>3} {'d':>3} {'G(+2r)':>22} {'G(-2r)':>22} {'k(k-1)^(d-1)':>16} {'(k-1)^d':>14}")
    for k in range(3, args.max_k + 1):
        for d in range(2, args.max_d + 1, 2):
            plus, minus = special_value(k, d, "+"), special_value(k, d, "-")
            print(
                f"{k:>3} {d:>3} {plus.decimal(12):>22} {minus.decimal(12):>22} "
                f"{theorem.remark_defect_upper_bound(k, d):>16} {bounds.moore_bound(k, d) - bounds.bipartite_moore_bound(k, d):>14}"
            )

    print()
    print("smallest even d > max(6, k) with every case bound > c")
    header = "k\\c " + " ".join(f"{c:>4}" for c in range(1, args.max_k))
    print(header)
    for k in range(3, args.max_k + 1):
        row = [f"{theorem.min_even_diameter(k, c)[0]:>4}" if c < k else "   -" for c in range(1, args.max_k)]
        print(f"{k:>3} " + " ".join(row))


if __name__ == "__main__":
    main()
