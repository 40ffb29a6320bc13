"""Exact-cover verification, lower bounds, and branch-and-bound solvers.

An exact cover of B = cube ∖ S is a set of hyperplanes whose traces are all
inside B and whose union is all of B.  Since traces inside B may overlap,
finding a minimum exact cover is a set-cover search over intersection
patterns; restricting to inclusion-maximal patterns preserves the optimum
(any used pattern can be enlarged to a maximal one without leaving B).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .affine import Span, hyperplane_trace, realize_hyperplane
from .catalog import maximal_patterns_within
from .cube import PointSet, canonical_form, check_dim, iter_bits

CERTIFIED_MAX_DIM = 5
BUDGET_MAX_DIM = 10
EXHAUSTIVE_ECK_MAX_DIM = 4
DEFAULT_NODE_LIMIT = 10_000_000


@dataclass(frozen=True)
class CoverCertificate:
    n: int
    avoided: PointSet  # S
    hyperplanes: tuple
    verified: bool
    covered_but_avoided: PointSet
    uncovered: PointSet

    @property
    def size(self) -> int:
        return len(self.hyperplanes)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "S": self.avoided.to_strings(),
            "size": self.size,
            "verified": self.verified,
            "hyperplanes": [h.to_json() for h in self.hyperplanes],
        }


@dataclass(frozen=True)
class SolveResult:
    certificate: CoverCertificate
    size: int
    optimal: bool
    lower_bound_used: int

    def to_json(self) -> dict:
        return {
            "n": self.certificate.n,
            "S": self.certificate.avoided.to_strings(),
            "size": self.size,
            "optimal": self.optimal,
            "lower_bound": self.lower_bound_used,
            "hyperplanes": [h.to_json() for h in self.certificate.hyperplanes],
        }


def verify_exact_cover(hs, S: PointSet) -> CoverCertificate:
    """Check that the union of traces is exactly cube ∖ S."""
    n = S.n
    for h in hs:
        if h.n != n:
            raise ValueError(f"hyperplane dimension {h.n} does not match n={n}")
    union = 0
    for h in hs:
        union |= hyperplane_trace(h).mask
    B = S.complement()
    bad = PointSet(n, union & S.mask)
    missing = PointSet(n, B.mask & ~union)
    return CoverCertificate(
        n=n,
        avoided=S,
        hyperplanes=tuple(hs),
        verified=(bad.mask == 0 and missing.mask == 0),
        covered_but_avoided=bad,
        uncovered=missing,
    )


def af_lower_bound(S: PointSet) -> int:
    """⌈n − log2 |S|⌉: any union of hyperplane traces that misses S misses at
    least 2^(n−m) vertices, so m hyperplanes can avoid S only if |S| ≥ 2^(n−m)."""
    if S.mask == 0:
        raise ValueError("lower bound requires a nonempty avoided set")
    # ceil(n - log2 s) == n - floor(log2 s) for every integer s >= 1
    return S.n - (len(S).bit_length() - 1)


def _exact_cover_dfs(target: int, masks: List[int], depth: int) -> Optional[List[int]]:
    """Find <= depth masks from `masks` whose union covers `target`, or None.

    Complete search at the given depth.  Branches on the uncovered point
    contained in fewest candidates; candidates tried largest-gain first.
    """
    if target == 0:
        return []
    if not masks:
        return None
    point_cands = {}
    for b in iter_bits(target):
        point_cands[b] = [m for m in masks if (m >> b) & 1]
        if not point_cands[b]:
            return None
    max_size = max(bin(m).count("1") for m in masks)

    def rec(uncov: int, d: int) -> Optional[List[int]]:
        if uncov == 0:
            return []
        if d == 0 or max_size * d < bin(uncov).count("1"):
            return None
        b = min(iter_bits(uncov), key=lambda p: len(point_cands[p]))
        cands = sorted(
            point_cands[b], key=lambda m: -bin(m & uncov).count("1")
        )
        for m in cands:
            sub = rec(uncov & ~m, d - 1)
            if sub is not None:
                return [m] + sub
        return None

    return rec(target, depth)


def _result_from_masks(S: PointSet, masks, optimal: bool, lb: int) -> SolveResult:
    hs = [realize_hyperplane(PointSet(S.n, m)) for m in masks]
    cert = verify_exact_cover(hs, S)
    if not cert.verified:
        raise AssertionError("internal error: solver produced an invalid cover")
    return SolveResult(certificate=cert, size=len(hs), optimal=optimal, lower_bound_used=lb)


def min_exact_cover(S: PointSet) -> SolveResult:
    """Certified minimum exact cover of cube ∖ S (n ≤ 5).

    Candidates are the inclusion-maximal patterns inside B; iterative
    deepening from max(af_lower_bound, coverage bound) guarantees the first
    solution found is optimal.  Deterministic given the catalog order.
    """
    n = check_dim(S.n)
    if n > CERTIFIED_MAX_DIM:
        raise ValueError(
            f"certified solving is limited to n <= {CERTIFIED_MAX_DIM}; "
            "use find_cover_within_budget for larger n"
        )
    B = S.complement()
    lb = 0 if S.mask == 0 else af_lower_bound(S)
    if B.mask == 0:
        cert = verify_exact_cover([], S)
        return SolveResult(certificate=cert, size=0, optimal=True, lower_bound_used=0)
    cands = [P.mask for P in maximal_patterns_within(B)]
    max_size = max(bin(m).count("1") for m in cands)
    need = len(B)
    start = max(lb, -(-need // max_size), 1)
    for k in range(start, need + 1):
        sol = _exact_cover_dfs(B.mask, cands, k)
        if sol is not None:
            return _result_from_masks(S, sol, optimal=True, lb=start)
    raise AssertionError("unreachable: B is always coverable by maximal patterns")


# ---------------------------------------------------------------------------
# budgeted mode (n <= 10): upper bounds only, never an optimality claim


def _box_sweep_traces(B: PointSet, radius: int) -> set:
    """Trace masks of all integer hyperplanes with coefficients in [-R, R]
    that avoid S = cube ∖ B entirely.  Coefficient vectors are deduplicated
    up to sign.  Always contains every singleton {b}, b in B."""
    n = B.n
    N = 1 << n
    V = ((np.arange(N)[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int64)
    S_bool = np.zeros(N, dtype=bool)
    for s in iter_bits(((1 << N) - 1) & ~B.mask):
        S_bool[s] = True
    traces = set()
    vecs = []
    for c in itertools.product(range(-radius, radius + 1), repeat=n):
        nz = next((x for x in c if x != 0), 0)
        if nz <= 0:  # skip zero vector and one representative per sign pair
            continue
        vecs.append(c)
    step = 2048
    for lo in range(0, len(vecs), step):
        C = np.array(vecs[lo : lo + step], dtype=np.int64)
        M = V @ C.T
        for j in range(M.shape[1]):
            col = M[:, j]
            for a in np.unique(col):
                tr = col == a
                if tr[S_bool].any():
                    continue
                traces.add(
                    int.from_bytes(np.packbits(tr, bitorder="little").tobytes(), "little")
                )
    traces.discard(0)
    return traces


def _grown_traces(B: PointSet, seed: int, per_point: int = 16) -> set:
    """Maximal patterns inside B found by greedy span growth: for each point,
    a few exclusion-branch restarts plus seeded random growth orders."""
    n = B.n
    full = (1 << (1 << n)) - 1
    rng = random.Random(seed)
    out = set()
    points = list(B.points())

    def grow(start: int, region: int, order) -> int:
        sp = Span.point(n, start)
        for v in order:
            if not ((region >> v) & 1) or sp.contains(v):
                continue
            cand = sp.add(v)
            if cand.members & ~region == 0 and cand.members != full:
                sp = cand
        # one more ascending pass so the result is maximal within region
        changed = True
        while changed:
            changed = False
            for v in iter_bits(region & ~sp.members):
                cand = sp.add(v)
                if cand.members & ~region == 0 and cand.members != full:
                    sp = cand
                    changed = True
        return sp.members

    for b in points:
        seen = 0
        nodes = 0
        tried = {0}
        stack = [0]
        while stack and seen < per_point and nodes < 4 * per_point:
            X = stack.pop()
            nodes += 1
            region = B.mask & ~X
            if not ((region >> b) & 1):
                continue
            m = grow(b, region, iter_bits(region))
            m = grow(b, B.mask, iter_bits(m))  # extend to B-maximal
            if m not in out:
                out.add(m)
                seen += 1
                # branch only below fresh patterns; this is a bounded
                # heuristic pool, not the complete enumeration
                for v in iter_bits(m & ~(1 << b)):
                    X2 = X | (1 << v)
                    if X2 not in tried:
                        tried.add(X2)
                        stack.append(X2)
        for _ in range(2):
            order = points[:]
            rng.shuffle(order)
            out.add(grow(b, B.mask, order))
    out.discard(0)
    return out


def _candidate_pool(B: PointSet, seed: int) -> List[int]:
    radius = 2 if B.n <= 7 else 1
    pool = _box_sweep_traces(B, radius) | _grown_traces(B, seed)
    masks = sorted(pool, key=lambda m: (-bin(m).count("1"), m))
    if len(masks) <= 20000:
        keep = []
        for m in masks:
            if not any(m & k == m for k in keep):
                keep.append(m)
        masks = keep
    return masks


def find_cover_within_budget(
    S: PointSet,
    budget: int,
    node_limit: int = DEFAULT_NODE_LIMIT,
    seed: int = 0,
) -> Optional[SolveResult]:
    """A verified exact cover of cube ∖ S with at most `budget` hyperplanes,
    or None when the search exhausts its candidates or its node limit.
    Failure is not a proof that no such cover exists."""
    n = check_dim(S.n)
    if n > BUDGET_MAX_DIM:
        raise ValueError(f"budgeted solving is limited to n <= {BUDGET_MAX_DIM}")
    if budget < 0:
        raise ValueError("budget must be non-negative")
    B = S.complement()
    lb = 0 if S.mask == 0 else af_lower_bound(S)
    if B.mask == 0:
        cert = verify_exact_cover([], S)
        return SolveResult(certificate=cert, size=0, optimal=False, lower_bound_used=0)
    if budget == 0:
        return None
    masks = _candidate_pool(B, seed)
    # per-point candidate lists keep the pool's size-descending order, so
    # large traces are tried first without any per-node re-sorting
    point_cands = {}
    for b in B.points():
        point_cands[b] = [m for m in masks if (m >> b) & 1]
        if not point_cands[b]:
            return None  # cannot happen: singletons are always in the pool
    max_size = max(bin(m).count("1") for m in masks)
    nodes = 0
    failed = set()  # (uncov, d) states proven hopeless

    def rec(uncov: int, d: int) -> Optional[List[int]]:
        nonlocal nodes
        nodes += 1
        if uncov == 0:
            return []
        if d == 0 or nodes >= node_limit:
            return None
        if max_size * d < bin(uncov).count("1"):
            return None
        key = (uncov, d)
        if key in failed:
            return None
        b = min(iter_bits(uncov), key=lambda p: len(point_cands[p]))
        if d == 1:
            for m in point_cands[b]:
                if uncov & ~m == 0:
                    return [m]
        else:
            for m in point_cands[b]:
                sub = rec(uncov & ~m, d - 1)
                if sub is not None:
                    return [m] + sub
        if len(failed) < 4_000_000:
            failed.add(key)
        return None

    sol = rec(B.mask, budget)
    if sol is None:
        return None
    return _result_from_masks(S, sol, optimal=False, lb=lb)


# ---------------------------------------------------------------------------
# four-point structure predicates


def three_covered_one_missed(S: PointSet) -> bool:
    """True iff some hyperplane covers exactly three points of the 4-set S,
    i.e. some point of S lies outside the affine hull of the other three."""
    if len(S) != 4:
        raise ValueError("predicate requires exactly 4 points")
    pts = list(S.points())
    for d in pts:
        rest = [p for p in pts if p != d]
        sp = Span.point(S.n, rest[0])
        sp = sp.add(rest[1]).add(rest[2])
        if not sp.contains(d):
            return True
    return False


def is_two_dim_subcube(S: PointSet) -> bool:
    """True iff the 4-set S is a 2-dimensional (generalized) subcube, i.e.
    {p, p+w1, p+w2, p+w1+w2} for some real vectors — equivalently some
    pairing of the points has equal coordinatewise sums."""
    if len(S) != 4:
        raise ValueError("predicate requires exactly 4 points")
    a, b, c, d = list(S.points())
    n = S.n

    def vec_sum(p, q):
        return tuple(((p >> i) & 1) + ((q >> i) & 1) for i in range(n))

    return (
        vec_sum(a, b) == vec_sum(c, d)
        or vec_sum(a, c) == vec_sum(b, d)
        or vec_sum(a, d) == vec_sum(b, c)
    )


# ---------------------------------------------------------------------------
# worst case over all k-subsets, up to cube symmetry


def ec_n_k_detail(n: int, k: int):
    """Per-orbit minimum cover sizes for all |S| = k at n ≤ 4.

    Returns a list of dicts {"S": [...], "size": s, "orbit": count} sorted by
    descending size, one entry per canonical class.
    """
    check_dim(n)
    if n > EXHAUSTIVE_ECK_MAX_DIM:
        raise ValueError(f"exhaustive mode is limited to n <= {EXHAUSTIVE_ECK_MAX_DIM}")
    if not 0 <= k <= (1 << n):
        raise ValueError("k out of range")
    orbits = {}
    for combo in itertools.combinations(range(1 << n), k):
        mask = 0
        for p in combo:
            mask |= 1 << p
        canon = canonical_form(PointSet(n, mask))
        orbits[canon.mask] = orbits.get(canon.mask, 0) + 1
    detail = []
    for cmask, count in sorted(orbits.items()):
        S = PointSet(n, cmask)
        res = min_exact_cover(S)
        detail.append({"S": S.to_strings(), "size": res.size, "orbit": count})
    detail.sort(key=lambda d: (-d["size"], d["S"]))
    return detail


def ec_n_k(n: int, k: int) -> int:
    """max over |S| = k of ec(cube ∖ S), computed exhaustively up to symmetry."""
    return max(d["size"] for d in ec_n_k_detail(n, k))
