#!/usr/bin/env python3
"""An 8-point avoided set in {0,1}^4 that costs more than the generic bound.

For |S| = 2^m the counting bound says ec >= n - m, which is 1 here
(n = 4, |S| = 8).  The set below actually needs 3.  Appending free
coordinates then gives larger instances whose cost barely moves:
S x {0,1}^2 in {0,1}^6 still admits a 4-cover, found by the budgeted
search.
"""

import time

from hypercover.cube import PointSet
from hypercover.experiments import WAGNER_S4_STRINGS, wagner_check
from hypercover.solver import af_lower_bound, min_exact_cover


def main():
    S = PointSet.from_strings(4, WAGNER_S4_STRINGS)
    print(f"S = {S.to_strings()}")
    print(f"counting lower bound: {af_lower_bound(S)}")
    t0 = time.time()
    res = min_exact_cover(S)
    print(f"certified minimum: {res.size}  ({time.time() - t0:.1f}s)")
    assert res.certificate.verified

    print()
    print("product instance at n=6 (append two free coordinates):")
    t0 = time.time()
    rep = wagner_check()
    print(f"  budget = e4 + 1 = {rep.budget6}")
    if rep.n6_result is None:
        print(f"  search exhausted without a cover ({time.time() - t0:.1f}s)")
    else:
        cert = rep.n6_result.certificate
        print(f"  found a verified cover of size {rep.n6_result.size} ({time.time() - t0:.1f}s)")
        for h in cert.hyperplanes:
            print(f"    coeffs {[str(c) for c in h.coeffs]} offset {h.offset}")
    print()
    print("json report:")
    import json

    print(json.dumps(rep.to_json(), indent=2)[:800], "...")


if __name__ == "__main__":
    main()
