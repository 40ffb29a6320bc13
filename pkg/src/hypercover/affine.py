"""Exact rational affine geometry over the hypercube.

Everything here is exact: hyperplanes carry Fraction coefficients, affine
closures are computed by fraction-free integer elimination, and every
realization is verified by a full trace before it is returned.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .cube import PointSet, check_dim, check_point, iter_bits

_INT64_SAFE = 1 << 60  # keep integer work comfortably inside int64
_V_CACHE = {}
_V_TABLE_MAX = 16  # full vertex tables up to 2^16 x 16; chunk beyond that


def _vertices(n: int) -> np.ndarray:
    """2^n x n 0/1 matrix of all vertices (row index = point index)."""
    if n not in _V_CACHE:
        N = 1 << n
        _V_CACHE[n] = ((np.arange(N)[:, None] >> np.arange(n)[None, :]) & 1).astype(
            np.int64
        )
    return _V_CACHE[n]


def _mask_from_bool(b: np.ndarray) -> int:
    return int.from_bytes(np.packbits(b, bitorder="little").tobytes(), "little")


def rational_str(x: Fraction) -> str:
    """Canonical "p/q" form; the denominator is always written."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    s = str(s).strip()
    try:
        if "/" in s:
            p, q = s.split("/", 1)
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ZeroDivisionError, ValueError):
        raise ValueError(f"not a rational: {s!r}") from None


class Hyperplane:
    """{x in R^n : <coeffs, x> = offset} with exact rational entries."""

    __slots__ = ("n", "coeffs", "offset")

    def __init__(self, n: int, coeffs, offset):
        n = check_dim(n)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(coeffs)}")
        if all(c == 0 for c in coeffs):
            raise ValueError("hyperplane coefficients must not all be zero")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "offset", Fraction(offset))

    def __setattr__(self, *a):
        raise AttributeError("Hyperplane is immutable")

    def evaluate(self, p: int) -> Fraction:
        check_point(p, self.n)
        return sum(
            (c for i, c in enumerate(self.coeffs) if (p >> i) & 1),
            start=Fraction(0),
        )

    def scaled_integer(self):
        """(int coeffs, int offset) after clearing denominators (same trace)."""
        denom = lcm(
            self.offset.denominator, *(c.denominator for c in self.coeffs)
        )
        c = [int(x * denom) for x in self.coeffs]
        g = gcd(*(abs(v) for v in c), abs(int(self.offset * denom)))
        if g > 1:
            return [v // g for v in c], int(self.offset * denom) // g
        return c, int(self.offset * denom)

    def to_json(self) -> dict:
        return {
            "coeffs": [rational_str(c) for c in self.coeffs],
            "offset": rational_str(self.offset),
        }

    @classmethod
    def from_json(cls, n: int, obj: dict) -> "Hyperplane":
        return cls(n, [parse_rational(c) for c in obj["coeffs"]], parse_rational(obj["offset"]))

    def __eq__(self, other):
        return (
            isinstance(other, Hyperplane)
            and (self.n, self.coeffs, self.offset) == (other.n, other.coeffs, other.offset)
        )

    def __hash__(self):
        return hash((self.n, self.coeffs, self.offset))

    def __repr__(self):
        terms = " + ".join(f"{c}*x{i + 1}" for i, c in enumerate(self.coeffs) if c)
        return f"Hyperplane({terms} = {self.offset})"


def hyperplane_trace(H: Hyperplane) -> PointSet:
    """H ∩ {0,1}^n by exact integer evaluation; may be empty."""
    c, alpha = H.scaled_integer()
    n = H.n
    bound = sum(abs(v) for v in c)
    if max(bound, abs(alpha)) < _INT64_SAFE:
        cv = np.array(c, dtype=np.int64)
        if n <= _V_TABLE_MAX:
            vals = _vertices(n) @ cv
            return PointSet(n, _mask_from_bool(vals == alpha))
        mask = 0
        N, step = 1 << n, 1 << 16
        for lo in range(0, N, step):
            idx = np.arange(lo, min(lo + step, N))
            bits = ((idx[:, None] >> np.arange(n)) & 1).astype(np.int64)
            mask |= _mask_from_bool(bits @ cv == alpha) << lo
        return PointSet(n, mask)
    # coefficients too large for int64: exact Python fallback
    m = 0
    for p in range(1 << n):
        if sum(c[i] for i in iter_bits(p)) == alpha:
            m |= 1 << p
    return PointSet(n, m)


def transform_hyperplane(aut, H: Hyperplane) -> Hyperplane:
    """Hyperplane H' with trace(H') = aut(trace(H)).

    Coefficients are permuted; each flipped coordinate negates its
    coefficient and subtracts the original one from the offset.
    """
    if aut.n != H.n:
        raise ValueError("dimension mismatch")
    coeffs = []
    offset = H.offset
    for i in range(H.n):
        c = H.coeffs[aut.perm[i]]
        if (aut.flips >> i) & 1:
            coeffs.append(-c)
            offset -= c
        else:
            coeffs.append(c)
    return Hyperplane(H.n, coeffs, offset)


# ---------------------------------------------------------------------------
# affine spans with exact fraction-free elimination


def _reduce_vector(rows, w):
    """Reduce integer vector w (list) by echelon rows [(pivot, row), ...]."""
    for c, r in rows:
        if w[c]:
            rc, wc = r[c], w[c]
            w = [rc * wi - wc * ri for wi, ri in zip(w, r)]
    return w


def _normalize_row(w):
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    piv = next(i for i, x in enumerate(w) if x)
    if w[piv] < 0:
        g = -g
    return piv, tuple(x // g for x in w)


class Span:
    """Affine span of a growing point set, with fast membership over the cube.

    Carries the reduced difference matrix W for every cube vertex so that
    adding a point and recomputing the membership mask is one vector update.
    The matrix lives in int64 while safe and escalates to exact object
    arithmetic on potential overflow (never wraps).
    """

    __slots__ = ("n", "p0", "rows", "_W", "members")

    def __init__(self, n, p0, rows, W, members):
        self.n = n
        self.p0 = p0
        self.rows = rows
        self._W = W
        self.members = members

    @classmethod
    def point(cls, n: int, p0: int) -> "Span":
        check_point(p0, n)
        if n <= _V_TABLE_MAX:
            W = _vertices(n) - _vertices(n)[p0]
            members = _mask_from_bool((W == 0).all(axis=1))
        else:
            W, members = None, 1 << p0
        return cls(n, p0, (), W, members)

    def _vec(self, v: int):
        return [((v >> i) & 1) - ((self.p0 >> i) & 1) for i in range(self.n)]

    def contains(self, v: int) -> bool:
        return bool((self.members >> v) & 1)

    def add(self, v: int) -> "Span":
        """Span of self ∪ {v}; returns self when v is already in the span."""
        if self.contains(v):
            return self
        w = _reduce_vector(self.rows, self._vec(v))
        piv, row = _normalize_row(w)
        rows = self.rows + ((piv, row),)
        if self._W is not None:
            W2 = self._update_table(self._W, piv, row)
            members = _mask_from_bool((W2 == 0).all(axis=1).astype(bool))
            return Span(self.n, self.p0, rows, W2, members)
        return Span(self.n, self.p0, rows, None, _chunked_members(self.n, self.p0, rows))

    @staticmethod
    def _update_table(W, piv, row):
        rv = np.array(row, dtype=object if max(abs(x) for x in row) >= _INT64_SAFE else np.int64)
        if W.dtype != object and rv.dtype != object:
            wmax = int(np.abs(W).max())
            rmax = max(abs(x) for x in row)
            if abs(row[piv]) * wmax + wmax * rmax < _INT64_SAFE:
                W2 = row[piv] * W - np.outer(W[:, piv], rv)
                if np.abs(W2).max() > (1 << 40):
                    g = np.gcd.reduce(np.abs(W2), axis=1)
                    g[g == 0] = 1
                    W2 = W2 // g[:, None]
                return W2
        Wo = W.astype(object)
        W2 = row[piv] * Wo - np.outer(Wo[:, piv], np.array(row, dtype=object))
        return W2

    def members_set(self) -> PointSet:
        return PointSet(self.n, self.members)


def _chunked_members(n: int, p0: int, rows) -> int:
    """Membership mask for large n, evaluated in 2^16-vertex chunks."""
    mask = 0
    N, step = 1 << n, 1 << 16
    base = np.array([(p0 >> i) & 1 for i in range(n)], dtype=np.int64)
    for lo in range(0, N, step):
        idx = np.arange(lo, min(lo + step, N))
        W = ((idx[:, None] >> np.arange(n)) & 1).astype(np.int64) - base
        # reduce in the same fraction-free way, escalating when needed
        for piv, row in rows:
            rv = np.array(row, dtype=np.int64)
            wmax = int(np.abs(W).max()) if W.dtype != object else None
            if W.dtype != object and abs(row[piv]) * wmax + wmax * max(
                abs(x) for x in row
            ) < _INT64_SAFE:
                W = row[piv] * W - np.outer(W[:, piv], rv)
            else:
                Wo = W.astype(object)
                W = row[piv] * Wo - np.outer(Wo[:, piv], np.array(row, dtype=object))
        mask |= _mask_from_bool((W == 0).all(axis=1).astype(bool)) << lo
    return mask


def span_of(P: PointSet) -> Span:
    it = P.points()
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("affine closure of the empty set is undefined") from None
    sp = Span.point(P.n, first)
    for v in it:
        sp = sp.add(v)
    return sp


def affine_closure(P: PointSet) -> PointSet:
    """aff(P) ∩ {0,1}^n. Extensive, monotone, idempotent."""
    return span_of(P).members_set()


def is_pattern(P: PointSet) -> bool:
    """True iff P is a hyperplane intersection pattern: nonempty, affinely
    closed, and a proper subset of the cube."""
    if P.mask == 0 or P == PointSet.full_cube(P.n):
        return False
    return affine_closure(P) == P


# ---------------------------------------------------------------------------
# realization: pattern -> explicit hyperplane


def _rref_fractions(mat):
    """Reduced row echelon form over Fraction; returns (rows, pivot_cols)."""
    rows = [list(map(Fraction, r)) for r in mat]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def hull_equations(P: PointSet):
    """Integer equation system of aff(P): list of (coeffs, beta) with
    <coeffs, p> = beta for every p in P, spanning the annihilator."""
    pts = list(P.points())
    if not pts:
        raise ValueError("empty point set")
    n = P.n
    p0 = pts[0]
    diffs = [
        [((p >> i) & 1) - ((p0 >> i) & 1) for i in range(n)] for p in pts[1:]
    ]
    rows, pivots = _rref_fractions(diffs) if diffs else ([], [])
    free = [c for c in range(n) if c not in pivots]
    eqs = []
    for f in free:
        w = [Fraction(0)] * n
        w[f] = Fraction(1)
        for r, c in zip(rows, pivots):
            w[c] = -r[f]
        denom = lcm(*(x.denominator for x in w))
        wi = [int(x * denom) for x in w]
        g = gcd(*(abs(x) for x in wi))
        wi = [x // g for x in wi]
        beta = sum(wi[i] for i in iter_bits(p0))
        eqs.append((wi, beta))
    return eqs


def realize_hyperplane(P: PointSet) -> Hyperplane:
    """An explicit hyperplane whose trace is exactly P (verified).

    The affine-hull equation system is combined with weights (1, t, t^2, ...)
    for t = 1, 2, 3, ... until the combined hyperplane traces to P; a
    Vandermonde argument guarantees termination.
    """
    if not is_pattern(P):
        raise ValueError("point set is not an intersection pattern")
    eqs = hull_equations(P)
    d = len(eqs)
    if d == 1:
        H = Hyperplane(P.n, eqs[0][0], eqs[0][1])
        if hyperplane_trace(H) != P:  # cannot happen: hull is the hyperplane
            raise AssertionError("realization failed verification")
        return H
    n = P.n
    for t in range(1, (1 << n) * n + 2):
        coeffs = [0] * n
        alpha = 0
        tt = 1
        for w, beta in eqs:
            for i in range(n):
                coeffs[i] += tt * w[i]
            alpha += tt * beta
            tt *= t
        if all(c == 0 for c in coeffs):
            continue
        H = Hyperplane(n, coeffs, alpha)
        if hyperplane_trace(H) == P:
            return H
    raise AssertionError("realization search exhausted (unreachable)")
