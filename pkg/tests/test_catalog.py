import itertools
import random
from fractions import Fraction

import pytest

from hypercover.catalog import (
    ENUM_MAX_DIM,
    PatternCatalog,
    closure_mask,
    count_patterns,
    enumerate_patterns,
    iter_closed_sets,
    maximal_patterns_within,
)
from hypercover.cube import PointSet

# frozen counts, independently derived before any of this code existed
PATTERN_COUNTS = {1: 2, 2: 10, 3: 56, 4: 536, 5: 12362}


# ---------------------------------------------------------------------------
# independent oracle: closedness by Fraction rank comparison (no shared code)


def _rank(rows):
    rows = [r[:] for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _oracle_closure_mask(n, pts):
    p0 = pts[0]
    diffs = [
        [Fraction(((p >> i) & 1) - ((p0 >> i) & 1)) for i in range(n)] for p in pts[1:]
    ]
    r = _rank(diffs)
    mask = 0
    for v in range(1 << n):
        d = [Fraction(((v >> i) & 1) - ((p0 >> i) & 1)) for i in range(n)]
        if _rank(diffs + [d]) == r:
            mask |= 1 << v
    return mask


def oracle_patterns(n):
    # Every nonempty proper closed set has affine dimension <= n-1, hence is
    # the closure of at most n affinely independent vertices; so the closures
    # of all vertex subsets of size <= n (minus the full cube) are exactly
    # the intersection patterns.
    full = (1 << (1 << n)) - 1
    out = set()
    for k in range(1, n + 1):
        for pts in itertools.combinations(range(1 << n), k):
            m = _oracle_closure_mask(n, pts)
            if m != full:
                out.add(m)
    return sorted(out)


# ---------------------------------------------------------------------------


def test_counts_small():
    for n in (1, 2, 3, 4):
        assert count_patterns(n) == PATTERN_COUNTS[n]


def test_counts_n5_and_lemma_bound():
    for n in range(1, 6):
        c = count_patterns(n)
        assert c == PATTERN_COUNTS[n]
        assert c <= 2 ** (n * n)


def test_oracle_set_for_set_n1_n2_n3():
    for n in (1, 2, 3):
        cat = sorted(m for m in PatternCatalog.build(n).masks)
        assert cat == oracle_patterns(n)


def test_oracle_set_for_set_n4():
    cat = sorted(PatternCatalog.build(4).masks)
    assert cat == oracle_patterns(4)


def test_closure_mask():
    # three corners of a face close to the whole face
    assert closure_mask(2, 0b0111) == 0b1111
    assert closure_mask(3, 0) == 0
    # closure is idempotent and extensive
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(1, 4)
        m = rng.getrandbits(1 << n)
        c = closure_mask(n, m)
        assert c & m == m
        assert closure_mask(n, c) == c


def test_iter_closed_sets_lectic_strictly_increasing():
    # next-closure emits each closed set exactly once, in lectic order; we
    # check a total-order proxy: no duplicates and correct membership
    seen = set()
    for m in iter_closed_sets(3):
        assert m not in seen
        seen.add(m)
        assert closure_mask(3, m) == m
    assert len(seen) == PATTERN_COUNTS[3] + 2  # plus empty and full


def test_enumerate_patterns_returns_pointsets():
    pats = list(enumerate_patterns(2))
    assert len(pats) == 10
    assert all(isinstance(P, PointSet) for P in pats)
    full = PointSet.full_cube(2)
    assert all(0 < len(P) < 4 for P in pats)
    with pytest.raises(ValueError):
        list(enumerate_patterns(ENUM_MAX_DIM + 1))


def test_catalog_save_load_round_trip(tmp_path):
    cat = PatternCatalog.build(3)
    path = tmp_path / "patterns-n3.txt"
    cat.save(path)
    text = path.read_text()
    assert text.startswith("hypercover-patterns v1 n=3 count=56")
    loaded = PatternCatalog.load(path)
    assert loaded.masks == cat.masks


def test_catalog_load_rejects_corruption(tmp_path):
    cat = PatternCatalog.build(2)
    path = tmp_path / "patterns-n2.txt"
    cat.save(path)
    good = path.read_text().splitlines()
    bad = "\n".join(good[:-1])  # drop one entry: count mismatch
    path.write_text(bad + "\n")
    with pytest.raises(ValueError):
        PatternCatalog.load(path)


def test_catalog_get_uses_cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("HYPERCOVER_CACHE_DIR", str(tmp_path))
    cat = PatternCatalog.get(3)
    assert len(cat.masks) == 56
    files = list(tmp_path.glob("patterns-n3.txt"))
    assert len(files) == 1
    # corrupt it; get() must rebuild rather than fail
    files[0].write_text("garbage\n")
    cat2 = PatternCatalog.get(3)
    assert cat2.masks == cat.masks


def test_maximal_patterns_within_small():
    # B = cube minus one point at n=3: maximal patterns are the facet-like
    # traces inside B; every returned set is a pattern, inside B, and maximal
    B = PointSet.from_points(3, range(1, 8))
    pats = maximal_patterns_within(B)
    masks = [P.mask for P in pats]
    assert all(m & ~B.mask == 0 for m in masks)
    for m in masks:
        others = [k for k in masks if k != m]
        assert not any(m & k == m for k in others)  # pairwise incomparable
    # they cover B (singletons would be included if nothing else were)
    union = 0
    for m in masks:
        union |= m
    assert union == B.mask


def test_maximal_patterns_within_matches_catalog_filter():
    from hypercover.affine import is_pattern

    rng = random.Random(1)
    for n in (2, 3, 4):
        full = (1 << (1 << n)) - 1
        cat = PatternCatalog.get(n)
        for _ in range(20):
            Bmask = rng.getrandbits(1 << n)
            if Bmask == 0:
                continue
            B = PointSet(n, Bmask)
            got = {P.mask for P in maximal_patterns_within(B, cat)}
            inside = [m for m in cat.masks if m & ~Bmask == 0]
            want = {
                m
                for m in inside
                if not any(k != m and k & m == m for k in inside)
            }
            assert got == want


def test_maximal_patterns_branching_agrees_at_n6():
    # at n=6 the catalog is unavailable; the branching path must still return
    # inclusion-maximal patterns covering B
    from hypercover.affine import affine_closure

    rng = random.Random(2)
    # keep B small: the branching enumeration is exponential in |B|
    pts = rng.sample(range(64), 14)
    B = PointSet.from_points(6, pts)
    pats = maximal_patterns_within(B)
    masks = [P.mask for P in pats]
    union = 0
    for P in pats:
        assert affine_closure(P) == P  # closed
        assert P.mask & ~B.mask == 0
        union |= P.mask
    assert union == B.mask
    for m in masks:
        assert not any(k != m and m & k == m for k in masks)
