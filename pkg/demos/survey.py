#!/usr/bin/env python3
"""Survey tables: worst-case cover sizes, pattern counts, sphere covers.

Prints three small tables that summarize what the library computes:
  1. ec(n, k) = worst case over all avoided sets of size k (exhaustive, up
     to cube symmetry) for n <= 4
  2. the number of hyperplane intersection patterns per dimension
  3. Hamming-sphere covers of the full cube vs the greedy dominating set
"""

import argparse

from hypercover.catalog import count_patterns
from hypercover.constructions import greedy_total_dominating_set, hamming_sphere_cover
from hypercover.cube import PointSet
from hypercover.solver import ec_n_k


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=6)
    args = ap.parse_args()

    print("worst-case exact cover size ec(n, k), exhaustive up to symmetry")
    ks = list(range(0, args.max_k + 1))
    print("  n\\k " + "".join(f"{k:>4}" for k in ks))
    for n in (2, 3, 4):
        row = []
        for k in ks:
            if k > (1 << n):
                row.append("   -")
                continue
            row.append(f"{ec_n_k(n, k):>4}")
        print(f"  {n}   " + "".join(row))
    print()

    print("hyperplane intersection patterns (nonempty proper trace sets)")
    for n in range(1, 6):
        c = count_patterns(n)
        print(f"  n={n}: {c:>6}   (bound 2^(n^2) = {2 ** (n * n)})")
    print()

    print("sphere covers of the whole cube")
    for n in range(3, 9):
        D = greedy_total_dominating_set(n)
        cert = hamming_sphere_cover(PointSet(n, (1 << (1 << n)) - 1))
        assert cert.verified
        print(
            f"  n={n}: cover size {cert.size:>3}, greedy dominating set {len(D):>3}, "
            f"reference 2^(n+1)/n = {2 ** (n + 1) / n:.1f}"
        )


if __name__ == "__main__":
    main()
