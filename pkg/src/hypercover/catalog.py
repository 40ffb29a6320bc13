"""Catalogs of hyperplane intersection patterns.

A pattern is a nonempty, affinely closed, proper subset of the cube's
vertices.  For small n we enumerate all of them once with Ganter's
next-closure algorithm and cache the result on disk; larger dimensions use
targeted maximal-pattern search instead of full enumeration.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterator, Optional

from .affine import Span
from .cube import PointSet, check_dim, iter_bits

ENUM_MAX_DIM = 5  # full enumeration supported up to here
MAXIMAL_MAX_DIM = 10
CACHE_ENV = "HYPERCOVER_CACHE_DIR"
_HEADER_PREFIX = "hypercover-patterns v1"


def cache_dir() -> Path:
    root = os.environ.get(CACHE_ENV)
    if root:
        return Path(root)
    return Path.home() / ".cache" / "hypercover"


def closure_mask(n: int, mask: int) -> int:
    """Affine closure of a vertex-set mask, as a mask.  closure(0) = 0."""
    if mask == 0:
        return 0
    bits = iter_bits(mask)
    sp = Span.point(n, next(bits))
    for v in bits:
        sp = sp.add(v)
    return sp.members


def _next_closure(n: int, A: int) -> Optional[int]:
    """Lectic successor of the closed set A (Ganter's algorithm).

    Ground set is the 2^n vertices ordered by index; A < B lectically when
    the smallest vertex where they differ belongs to B.
    """
    N = 1 << n
    for i in range(N - 1, -1, -1):
        if (A >> i) & 1:
            continue
        low = A & ((1 << i) - 1)
        B = closure_mask(n, low | (1 << i))
        if (B & ((1 << i) - 1)) == low:
            return B
    return None


def iter_closed_sets(n: int) -> Iterator[int]:
    """All affinely closed vertex sets (including empty and full) in lectic
    order, each exactly once."""
    check_dim(n)
    full = (1 << (1 << n)) - 1
    A = 0
    while A is not None:
        yield A
        if A == full:
            return
        A = _next_closure(n, A)


def enumerate_patterns(n: int) -> Iterator[PointSet]:
    """All intersection patterns of {0,1}^n in lectic order (n <= 5)."""
    if n > ENUM_MAX_DIM:
        raise ValueError(f"full pattern enumeration is limited to n <= {ENUM_MAX_DIM}")
    full = (1 << (1 << n)) - 1
    for m in iter_closed_sets(n):
        if m != 0 and m != full:
            yield PointSet(n, m)


class PatternCatalog:
    """The complete pattern list for one dimension, with fast membership."""

    __slots__ = ("n", "masks", "_memberset")

    def __init__(self, n: int, masks):
        self.n = n
        self.masks = list(masks)
        self._memberset = frozenset(self.masks)

    def __len__(self):
        return len(self.masks)

    def __contains__(self, P) -> bool:
        m = P.mask if isinstance(P, PointSet) else int(P)
        return m in self._memberset

    def __iter__(self) -> Iterator[PointSet]:
        return (PointSet(self.n, m) for m in self.masks)

    @classmethod
    def build(cls, n: int) -> "PatternCatalog":
        return cls(n, (P.mask for P in enumerate_patterns(n)))

    def save(self, path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(path.suffix + ".tmp")
        with open(tmp, "w") as fh:
            fh.write(f"{_HEADER_PREFIX} n={self.n} count={len(self.masks)}\n")
            for m in self.masks:
                fh.write(f"{m:x}\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path) -> "PatternCatalog":
        with open(path) as fh:
            header = fh.readline().strip()
            parts = header.split()
            if (
                len(parts) != 4
                or " ".join(parts[:2]) != _HEADER_PREFIX
                or not parts[2].startswith("n=")
                or not parts[3].startswith("count=")
            ):
                raise ValueError(f"not a pattern catalog file: {path}")
            n = int(parts[2][2:])
            count = int(parts[3][6:])
            masks = [int(line, 16) for line in fh if line.strip()]
        if len(masks) != count:
            raise ValueError(
                f"catalog {path} is corrupt: header says {count} patterns, "
                f"file has {len(masks)}"
            )
        return cls(n, masks)

    @classmethod
    def get(cls, n: int) -> "PatternCatalog":
        """Load from the cache directory, building (and saving) on a miss."""
        path = cache_dir() / f"patterns-n{n}.txt"
        if path.exists():
            try:
                cat = cls.load(path)
                if cat.n == n:
                    return cat
            except (ValueError, OSError):
                pass  # fall through and rebuild

        cat = cls.build(n)
        try:
            cat.save(path)
        except OSError:
            pass  # cache is best-effort
        return cat


def count_patterns(n: int) -> int:
    if n > ENUM_MAX_DIM:
        raise ValueError(f"pattern counting is limited to n <= {ENUM_MAX_DIM}")
    return len(PatternCatalog.get(n))


# ---------------------------------------------------------------------------
# maximal patterns inside a region


def _grow_maximal(n: int, start: Span, region: int, full: int) -> Span:
    """Greedily extend a span inside `region` until no vertex fits.

    Vertices are tried in ascending index order, so the result is
    deterministic.  The span is never allowed to reach the full cube.
    """
    sp = start
    progress = True
    while progress:
        progress = False
        todo = region & ~sp.members
        for v in iter_bits(todo):
            if sp.contains(v):
                continue
            cand = sp.add(v)
            if cand.members & ~region == 0 and cand.members != full:
                sp = cand
                progress = True
    return sp


def maximal_patterns_within(B: PointSet, catalog: Optional[PatternCatalog] = None):
    """All patterns P ⊆ B that are maximal under inclusion among such P.

    For n <= 5 this filters the full catalog.  For 6 <= n <= 10 it runs a
    complete exclusion-branching search: grow a maximal pattern greedily,
    then branch on forbidding each of its members in turn.  Results are
    returned as a list of PointSets sorted by (size desc, mask).
    """
    n = B.n
    full = (1 << (1 << n)) - 1
    if B.mask == 0:
        return []
    if n <= ENUM_MAX_DIM:
        cat = catalog if catalog is not None else PatternCatalog.get(n)
        inside = [m for m in cat.masks if m & ~B.mask == 0]
        inside.sort(key=lambda m: -bin(m).count("1"))
        keep = []
        for m in inside:
            if not any(m & k == m for k in keep):
                keep.append(m)
        keep.sort(key=lambda m: (-bin(m).count("1"), m))
        return [PointSet(n, m) for m in keep]
    if n > MAXIMAL_MAX_DIM:
        raise ValueError(f"maximal pattern search is limited to n <= {MAXIMAL_MAX_DIM}")
    out = set()
    seen_region = set()
    stack = [0]  # masks of excluded vertices
    while stack:
        X = stack.pop()
        region = B.mask & ~X
        if region == 0 or region in seen_region:
            continue
        seen_region.add(region)
        p = (region & -region).bit_length() - 1
        G = _grow_maximal(n, Span.point(n, p), region, full)
        G2 = _grow_maximal(n, G, B.mask, full)
        out.add(G2.members)
        for v in iter_bits(G.members):
            stack.append(X | (1 << v))
    result = sorted(out, key=lambda m: (-bin(m).count("1"), m))
    return [PointSet(n, m) for m in result]
