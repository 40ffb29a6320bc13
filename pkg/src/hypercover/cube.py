"""Vertices of {0,1}^n as bit-indices, vertex sets as bitmasks, and the
signed-permutation symmetry group.

Conventions used across the package:
  * a point of {0,1}^n is an integer index p with 0 <= p < 2^n; bit i of p
    is coordinate x_{i+1},
  * the string form writes coordinate 1 leftmost, so index 1 in n=4 prints
    as "1000",
  * a PointSet stores its members as one arbitrary-size int with 2^n bits.
"""

from __future__ import annotations

import itertools

import numpy as np

MAX_DIM = 24  # 2^24-bit membership masks are ~2 MiB; larger sets are out of scope
CANON_MAX_DIM = 6  # canonical_form enumerates the full 2^n * n! group


def check_dim(n: int) -> int:
    n = int(n)
    if not 1 <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {n}")
    return n


def check_point(p: int, n: int) -> int:
    p = int(p)
    if not 0 <= p < (1 << n):
        raise ValueError(f"point index {p} out of range for n={n}")
    return p


def point_str(p: int, n: int) -> str:
    """Binary string with coordinate 1 leftmost ('1000' is index 1 at n=4)."""
    return "".join("1" if (p >> i) & 1 else "0" for i in range(n))


def parse_point(s: str, n: int = None) -> int:
    s = s.strip()
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"not a binary point string: {s!r}")
    if n is not None and len(s) != n:
        raise ValueError(f"point string {s!r} has {len(s)} coordinates, expected {n}")
    return sum(1 << i for i, c in enumerate(s) if c == "1")


def weight(p: int) -> int:
    """Hamming weight (number of 1 coordinates)."""
    return int(p).bit_count()


def hamming_distance(p: int, q: int, n: int = None) -> int:
    if n is not None:
        check_point(p, n)
        check_point(q, n)
    return (p ^ q).bit_count()


def iter_bits(mask: int):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class PointSet:
    """Immutable subset of {0,1}^n backed by a 2^n-bit membership mask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        n = check_dim(n)
        mask = int(mask)
        if mask < 0 or mask >> (1 << n):
            raise ValueError("membership mask has bits outside the cube")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, *a):
        raise AttributeError("PointSet is immutable")

    @classmethod
    def from_points(cls, n: int, points) -> "PointSet":
        m = 0
        for p in points:
            m |= 1 << check_point(p, n)
        return cls(n, m)

    @classmethod
    def from_strings(cls, n: int, strings) -> "PointSet":
        return cls.from_points(n, (parse_point(s, n) for s in strings))

    @classmethod
    def full_cube(cls, n: int) -> "PointSet":
        n = check_dim(n)
        return cls(n, (1 << (1 << n)) - 1)

    def points(self):
        return iter_bits(self.mask)

    def to_strings(self):
        """Members as binary strings, lexicographically sorted (JSON form)."""
        return sorted(point_str(p, self.n) for p in self.points())

    def complement(self) -> "PointSet":
        return PointSet(self.n, ((1 << (1 << self.n)) - 1) ^ self.mask)

    def __contains__(self, p: int) -> bool:
        return 0 <= p < (1 << self.n) and (self.mask >> p) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.n, self.mask))

    def __le__(self, other: "PointSet") -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def union(self, other: "PointSet") -> "PointSet":
        self._check_same(other)
        return PointSet(self.n, self.mask | other.mask)

    def intersection(self, other: "PointSet") -> "PointSet":
        self._check_same(other)
        return PointSet(self.n, self.mask & other.mask)

    def difference(self, other: "PointSet") -> "PointSet":
        self._check_same(other)
        return PointSet(self.n, self.mask & ~other.mask)

    def _check_same(self, other: "PointSet"):
        if not isinstance(other, PointSet) or other.n != self.n:
            raise ValueError("dimension mismatch between point sets")

    def __repr__(self):
        pts = ",".join(point_str(p, self.n) for p in self.points())
        return f"PointSet(n={self.n}, {{{pts}}})"


def sphere(center: int, n: int) -> PointSet:
    """Hamming sphere of radius 1: the n neighbours of center."""
    check_point(center, n)
    return PointSet.from_points(n, (center ^ (1 << i) for i in range(n)))


# ---------------------------------------------------------------------------
# signed-permutation automorphisms


class CubeAutomorphism:
    """Coordinate permutation followed by coordinate flips.

    apply(p) computes y with y_i = x_{perm[i]}, then flips the coordinates
    whose bits are set in ``flips`` (an n-bit mask).
    """

    __slots__ = ("n", "perm", "flips")

    def __init__(self, n: int, perm, flips: int = 0):
        n = check_dim(n)
        perm = tuple(int(i) for i in perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"perm must be a permutation of 0..{n - 1}")
        flips = int(flips)
        if flips < 0 or flips >> n:
            raise ValueError("flips mask out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "flips", flips)

    def __setattr__(self, *a):
        raise AttributeError("CubeAutomorphism is immutable")

    @classmethod
    def identity(cls, n: int) -> "CubeAutomorphism":
        return cls(n, range(n), 0)

    @classmethod
    def translation(cls, n: int, t: int) -> "CubeAutomorphism":
        """XOR-translation p -> p ^ t (flips only)."""
        check_point(t, n)
        return cls(n, range(n), t)

    def apply(self, p: int) -> int:
        check_point(p, self.n)
        q = 0
        for i, src in enumerate(self.perm):
            q |= ((p >> src) & 1) << i
        return q ^ self.flips

    def apply_set(self, S: PointSet) -> PointSet:
        if S.n != self.n:
            raise ValueError("dimension mismatch")
        return PointSet.from_points(self.n, (self.apply(p) for p in S.points()))

    def compose(self, other: "CubeAutomorphism") -> "CubeAutomorphism":
        """Automorphism acting as self after other: (self @ other)(p) = self(other(p))."""
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        # self(other(p))_i = other(p)_{self.perm[i]} ^ self.flip_i
        #                  = p_{other.perm[self.perm[i]]} ^ other.flip_{self.perm[i]} ^ self.flip_i
        perm = tuple(other.perm[self.perm[i]] for i in range(self.n))
        flips = self.flips
        for i in range(self.n):
            flips ^= ((other.flips >> self.perm[i]) & 1) << i
        return CubeAutomorphism(self.n, perm, flips)

    def inverse(self) -> "CubeAutomorphism":
        inv = [0] * self.n
        for i, src in enumerate(self.perm):
            inv[src] = i
        flips = 0
        for i in range(self.n):
            flips ^= ((self.flips >> i) & 1) << self.perm[i]
        return CubeAutomorphism(self.n, inv, flips)

    def __eq__(self, other):
        return (
            isinstance(other, CubeAutomorphism)
            and (self.n, self.perm, self.flips) == (other.n, other.perm, other.flips)
        )

    def __hash__(self):
        return hash((self.n, self.perm, self.flips))

    def __repr__(self):
        return f"CubeAutomorphism(n={self.n}, perm={self.perm}, flips={self.flips:0{self.n}b})"


def all_automorphisms(n: int):
    """The full signed-permutation group, deterministic order (2^n * n! elements)."""
    n = check_dim(n)
    for perm in itertools.permutations(range(n)):
        for flips in range(1 << n):
            yield CubeAutomorphism(n, perm, flips)


_vertex_map_cache = {}


def _vertex_maps(n: int) -> np.ndarray:
    """Array of shape (|G|, 2^n): row g maps vertex index -> image index."""
    if n in _vertex_map_cache:
        return _vertex_map_cache[n]
    N = 1 << n
    idx = np.arange(N, dtype=np.int64)
    bits = (idx[:, None] >> np.arange(n)) & 1  # N x n
    rows = []
    for perm in itertools.permutations(range(n)):
        permuted = bits[:, list(perm)]  # y_i = x_{perm[i]}
        base = permuted @ (1 << np.arange(n, dtype=np.int64))
        for flips in range(1 << n):
            rows.append(base ^ flips)
    table = np.array(rows, dtype=np.int64)
    _vertex_map_cache[n] = table
    return table


def canonical_form(S: PointSet) -> PointSet:
    """Lexicographically minimal image of S under the signed-permutation group.

    Minimality is over the membership-mask integer, so the result is a
    canonical orbit representative: canonical_form(a(S)) == canonical_form(S)
    for every automorphism a.
    """
    if S.n > CANON_MAX_DIM:
        raise ValueError(f"canonical_form capped at n <= {CANON_MAX_DIM}")
    if S.mask == 0:
        return S
    pts = np.fromiter(S.points(), dtype=np.int64)
    images = _vertex_maps(S.n)[:, pts]  # |G| x k
    if S.n <= 5:  # 2^n <= 32 bits: masks fit comfortably in int64
        masks = np.bitwise_or.reduce(1 << images.astype(np.int64), axis=1)
        best = int(masks.min())
    else:
        masks = np.bitwise_or.reduce(
            np.uint64(1) << images.astype(np.uint64), axis=1
        )
        best = int(masks.min())
    return PointSet(S.n, best)
