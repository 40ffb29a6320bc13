"""Randomized and exhaustive experiments around the covering bounds:
random hitting sets, the missing-vertex property, axis-aligned subcube
transversals, and the n=6 product-set counterexample instance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .catalog import PatternCatalog
from .cube import PointSet, check_dim, iter_bits, weight
from .solver import SolveResult, find_cover_within_budget, min_exact_cover

CATALOG_MAX_DIM = 5
SAMPLE_MAX_DIM = 4


@dataclass(frozen=True)
class HittingExperimentReport:
    n: int
    threshold: int
    trials: int
    successes: int
    witness: Optional[dict]  # {"S": [...], "lower_bound": int} for first success

    @property
    def success_rate(self) -> Fraction:
        return Fraction(self.successes, self.trials) if self.trials else Fraction(0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "threshold": self.threshold,
            "trials": self.trials,
            "successes": self.successes,
            "success_rate": f"{self.success_rate.numerator}/{self.success_rate.denominator}",
            "witness": self.witness,
        }


def hitting_lower_bound(n: int, S: PointSet, threshold: int) -> int:
    """If every pattern with >= threshold points meets S, any exact cover of
    cube ∖ S uses only patterns of < threshold points, so it needs at least
    ⌈|B|/(threshold−1)⌉ hyperplanes."""
    b = (1 << n) - len(S)
    if b == 0:
        return 0
    if threshold < 2:
        raise ValueError("threshold must be >= 2 for a nonempty complement")
    return -(-b // (threshold - 1))


def hits_all_large_patterns(S: PointSet, threshold: int, catalog: PatternCatalog) -> bool:
    """True iff no pattern of size >= threshold avoids S entirely."""
    for m in catalog.masks:
        if bin(m).count("1") >= threshold and m & S.mask == 0:
            return False
    return True


def random_hitting_experiment(
    n: int, threshold: int, trials: int, seed: int
) -> HittingExperimentReport:
    """Sample S by taking each vertex independently with probability 1/2 and
    test whether S meets every pattern of size >= threshold."""
    n = check_dim(n)
    if n > CATALOG_MAX_DIM:
        raise ValueError(f"experiment needs the full catalog, so n <= {CATALOG_MAX_DIM}")
    catalog = PatternCatalog.get(n)
    rng = random.Random(seed)
    successes = 0
    witness = None
    for _ in range(trials):
        S = PointSet(n, rng.getrandbits(1 << n))
        if hits_all_large_patterns(S, threshold, catalog):
            successes += 1
            if witness is None:
                witness = {
                    "S": S.to_strings(),
                    "lower_bound": hitting_lower_bound(n, S, threshold)
                    if (1 << n) > len(S)
                    else 0,
                }
    return HittingExperimentReport(
        n=n, threshold=threshold, trials=trials, successes=successes, witness=witness
    )


@dataclass(frozen=True)
class MissingPropertyReport:
    n: int
    m: int
    samples: int
    unions_with_misses: int
    violations: int
    first_violation: Optional[dict]

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "samples": self.samples,
            "unions_with_misses": self.unions_with_misses,
            "violations": self.violations,
            "passed": self.passed,
            "first_violation": self.first_violation,
        }


def af_missing_property_test(n: int, m: int, samples: int, seed: int) -> MissingPropertyReport:
    """Draw random m-subsets of the pattern catalog (each pattern being a
    hyperplane trace); whenever their union misses any vertex at all, it
    must miss at least 2^(n−m) of them."""
    n = check_dim(n)
    if n > SAMPLE_MAX_DIM:
        raise ValueError(f"sampling test is limited to n <= {SAMPLE_MAX_DIM}")
    if m < 1:
        raise ValueError("need at least one hyperplane")
    catalog = PatternCatalog.get(n)
    rng = random.Random(seed)
    N = 1 << n
    need = 1 << max(n - m, 0)
    with_misses = 0
    violations = 0
    first = None
    for _ in range(samples):
        chosen = rng.sample(catalog.masks, m)
        union = 0
        for mk in chosen:
            union |= mk
        missed = N - bin(union).count("1")
        if missed == 0:
            continue
        with_misses += 1
        if missed < need:
            violations += 1
            if first is None:
                first = {
                    "patterns": [PointSet(n, mk).to_strings() for mk in chosen],
                    "missed": missed,
                    "required": need,
                }
    return MissingPropertyReport(
        n=n,
        m=m,
        samples=samples,
        unions_with_misses=with_misses,
        violations=violations,
        first_violation=first,
    )


# ---------------------------------------------------------------------------
# axis-aligned subcube transversals


def axis_subcubes(n: int, d: int) -> List[int]:
    """Vertex-set masks of all C(n,d)·2^(n−d) axis-aligned d-subcubes."""
    check_dim(n)
    if not 0 <= d <= n:
        raise ValueError("subcube dimension out of range")
    out = []
    for free in itertools.combinations(range(n), d):
        fixed = [i for i in range(n) if i not in free]
        for bits in range(1 << (n - d)):
            base = 0
            for pos, i in enumerate(fixed):
                base |= ((bits >> pos) & 1) << i
            mask = 0
            for alpha in range(1 << d):
                p = base
                for pos, i in enumerate(free):
                    p |= ((alpha >> pos) & 1) << i
                mask |= 1 << p
            out.append(mask)
    return out


def every_other_layer(n: int) -> PointSet:
    """The even-weight vertices: 2^(n−1) points meeting every subcube of
    dimension >= 1 (any such subcube has points of two consecutive weights)."""
    return PointSet.from_points(n, (p for p in range(1 << n) if weight(p) % 2 == 0))


@dataclass(frozen=True)
class SubcubeHittingResult:
    n: int
    d: int
    g_value: int
    witness: PointSet
    baseline_size: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "g": self.g_value,
            "witness": self.witness.to_strings(),
            "baseline_size": self.baseline_size,
        }


def _disjoint_lower_bound(unhit: List[int]) -> int:
    used = 0
    count = 0
    for m in unhit:
        if m & used == 0:
            used |= m
            count += 1
    return count


def g_axis_aligned(n: int, d: int) -> SubcubeHittingResult:
    """Exact minimum size of a vertex set meeting every axis-aligned
    d-subcube, by branch-and-bound with a disjoint-subcube lower bound."""
    n = check_dim(n)
    if n > CATALOG_MAX_DIM:
        raise ValueError(f"exact transversal search is limited to n <= {CATALOG_MAX_DIM}")
    if not 0 <= d <= n:
        raise ValueError("subcube dimension out of range")
    N = 1 << n
    baseline = 1 << (n - 1)
    if d == 0:
        return SubcubeHittingResult(n, d, N, PointSet.full_cube(n), baseline)
    if d == n:
        return SubcubeHittingResult(n, d, 1, PointSet(n, 1), baseline)
    cubes = axis_subcubes(n, d)

    # greedy incumbent: repeatedly take the vertex hitting the most
    # still-unhit subcubes (smallest index on ties)
    unhit = list(cubes)
    incumbent = 0
    while unhit:
        best_v, best_gain = 0, -1
        for v in range(N):
            gain = sum(1 for m in unhit if (m >> v) & 1)
            if gain > best_gain:
                best_v, best_gain = v, gain
        incumbent |= 1 << best_v
        unhit = [m for m in unhit if not (m >> best_v) & 1]
    best = [incumbent, bin(incumbent).count("1")]

    def rec(chosen: int, size: int, unhit: List[int]):
        if not unhit:
            if size < best[1]:
                best[0], best[1] = chosen, size
            return
        if size + _disjoint_lower_bound(unhit) >= best[1]:
            return
        target = unhit[0]
        for v in iter_bits(target):
            rec(
                chosen | (1 << v),
                size + 1,
                [m for m in unhit if not (m >> v) & 1],
            )

    rec(0, 0, cubes)
    return SubcubeHittingResult(n, d, best[1], PointSet(n, best[0]), baseline)


def general_subcubes(n: int, d: int) -> List[int]:
    """Vertex-set masks of all d-dimensional generalized subcubes
    {u + α₁w₁ + … + α_d w_d : α ∈ {0,1}^d} with 2^d distinct points.

    Built recursively: a d-subcube is a (d−1)-subcube united with a disjoint
    translate of itself by an integer vector keeping all points in the cube.
    Small n only (this is a validity-checking utility, not an optimizer)."""
    check_dim(n)
    if n > SAMPLE_MAX_DIM:
        raise ValueError(f"general subcube enumeration is limited to n <= {SAMPLE_MAX_DIM}")
    if not 0 <= d <= n:
        raise ValueError("subcube dimension out of range")
    level = {1 << p for p in range(1 << n)}
    for _ in range(d):
        nxt = set()
        for mask in level:
            pts = [tuple((p >> i) & 1 for i in range(n)) for p in iter_bits(mask)]
            for w in itertools.product((-1, 0, 1), repeat=n):
                if all(v == 0 for v in w):
                    continue
                shifted = []
                ok = True
                for pt in pts:
                    q = tuple(a + b for a, b in zip(pt, w))
                    if any(v not in (0, 1) for v in q):
                        ok = False
                        break
                    shifted.append(q)
                if not ok:
                    continue
                m2 = 0
                for q in shifted:
                    m2 |= 1 << sum(b << i for i, b in enumerate(q))
                if m2 & mask == 0:
                    nxt.add(mask | m2)
        level = nxt
    return sorted(level)


def meets_all_general_subcubes(X: PointSet, d: int) -> bool:
    """Validity checker: does X intersect every generalized d-subcube?"""
    return all(m & X.mask for m in general_subcubes(X.n, d))


# ---------------------------------------------------------------------------
# the n=6 product-set instance


WAGNER_S4_STRINGS = ("1000", "1111", "1001", "1011", "0110", "0001", "0010", "0111")


@dataclass(frozen=True)
class WagnerReport:
    s4: PointSet
    e4_result: SolveResult
    budget6: int
    n6_result: Optional[SolveResult]

    @property
    def e4(self) -> int:
        return self.e4_result.size

    @property
    def counterexample_found(self) -> bool:
        """True when the n=6 cover beats the additive e4 + 2 prediction."""
        return self.n6_result is not None and self.n6_result.size < self.e4 + 2

    def to_json(self) -> dict:
        out = {
            "S4": self.s4.to_strings(),
            "e4": self.e4,
            "e4_certified": self.e4_result.optimal
            and self.e4_result.certificate.verified,
            "budget6": self.budget6,
            "n6_found": self.n6_result is not None,
            "counterexample_found": self.counterexample_found,
        }
        if self.n6_result is not None:
            out["n6_size"] = self.n6_result.size
            out["n6_verified"] = self.n6_result.certificate.verified
            out["n6_hyperplanes"] = [
                h.to_json() for h in self.n6_result.certificate.hyperplanes
            ]
        return out


def wagner_check(node_limit: int = 10_000_000) -> WagnerReport:
    """Certified ec for the 8-point set at n=4, then a budgeted attempt to
    cover the n=6 instance S×{00} with fewer than e4 + 2 hyperplanes.

    A search failure at n=6 is reported honestly; it is not a proof that the
    additive prediction holds."""
    S4 = PointSet.from_strings(4, WAGNER_S4_STRINGS)
    e4_result = min_exact_cover(S4)
    S6 = PointSet.from_strings(6, (s + "00" for s in WAGNER_S4_STRINGS))
    budget = e4_result.size + 1
    n6 = find_cover_within_budget(S6, budget, node_limit=node_limit)
    return WagnerReport(s4=S4, e4_result=e4_result, budget6=budget, n6_result=n6)
