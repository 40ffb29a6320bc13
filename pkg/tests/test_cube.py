import itertools
import random

import pytest

from hypercover.cube import (
    CubeAutomorphism,
    PointSet,
    all_automorphisms,
    canonical_form,
    check_dim,
    hamming_distance,
    parse_point,
    point_str,
    sphere,
    weight,
)


def test_point_string_round_trip():
    assert point_str(0b101, 4) == "1010"  # coordinate 1 is leftmost
    assert parse_point("1010", 4) == 0b101
    assert parse_point("0001") == 0b1000
    for n in range(1, 7):
        for p in range(1 << n):
            assert parse_point(point_str(p, n), n) == p
    with pytest.raises(ValueError):
        parse_point("012")
    with pytest.raises(ValueError):
        parse_point("01", 3)


def test_check_dim():
    assert check_dim(1) == 1
    with pytest.raises(ValueError):
        check_dim(0)
    with pytest.raises(ValueError):
        check_dim(25)


def test_weight_and_distance():
    assert weight(0) == 0 and weight(0b1011) == 3
    assert hamming_distance(0b1100, 0b1010) == 2
    assert hamming_distance(5, 5) == 0


def test_pointset_ops():
    A = PointSet.from_points(3, [0, 1, 7])
    B = PointSet.from_strings(3, ["000", "010"])
    assert len(A) == 3 and 7 in A and 2 not in A
    assert A.union(B).mask == A.mask | B.mask
    assert A.intersection(B) == PointSet.from_points(3, [0])
    assert A.difference(B) == PointSet.from_points(3, [1, 7])
    assert A.complement().mask == ((1 << 8) - 1) & ~A.mask
    assert PointSet.from_points(3, [0]) <= A
    assert not (A <= B)
    assert A.to_strings() == sorted(A.to_strings())
    assert PointSet.full_cube(2).mask == 0b1111
    with pytest.raises(ValueError):
        PointSet.from_points(2, [4])


def test_sphere():
    assert sorted(sphere(0, 3).points()) == [1, 2, 4]
    assert sorted(sphere(0b111, 3).points()) == [0b011, 0b101, 0b110]
    for n in (2, 4):
        for c in range(1 << n):
            assert len(sphere(c, n)) == n
            assert all(hamming_distance(c, q) == 1 for q in sphere(c, n).points())


def test_automorphism_identity_translation():
    ident = CubeAutomorphism.identity(3)
    t = CubeAutomorphism.translation(3, 0b101)
    for p in range(8):
        assert ident.apply(p) == p
        assert t.apply(p) == p ^ 0b101
    assert t.apply(t.apply(3)) == 3  # translations are involutions


def test_automorphism_compose_and_inverse():
    rng = random.Random(0)
    auts = list(all_automorphisms(3))
    assert len(auts) == 6 * 8  # n! * 2^n
    for _ in range(60):
        f, g = rng.choice(auts), rng.choice(auts)
        fg = f.compose(g)
        for p in range(8):
            assert fg.apply(p) == f.apply(g.apply(p))
        inv = f.inverse()
        for p in range(8):
            assert inv.apply(f.apply(p)) == p
            assert f.apply(inv.apply(p)) == p


def test_apply_set_is_bijection():
    rng = random.Random(1)
    auts = list(all_automorphisms(4))
    for _ in range(30):
        aut = rng.choice(auts)
        mask = rng.getrandbits(16)
        S = PointSet(4, mask)
        T = aut.apply_set(S)
        assert len(T) == len(S)
        assert sorted(T.points()) == sorted(aut.apply(p) for p in S.points())


def test_canonical_form_invariance():
    rng = random.Random(2)
    for n in (2, 3, 4):
        auts = list(all_automorphisms(n))
        for _ in range(25):
            S = PointSet(n, rng.getrandbits(1 << n))
            c = canonical_form(S)
            for _ in range(5):
                aut = rng.choice(auts)
                assert canonical_form(aut.apply_set(S)) == c
            # the canonical form is itself reachable
            assert any(aut.apply_set(S).mask == c.mask for aut in auts)


def test_canonical_form_distinguishes_orbits():
    # a pair at distance 1 and a pair at distance 2 are inequivalent
    a = PointSet.from_points(3, [0, 1])
    b = PointSet.from_points(3, [0, 3])
    assert canonical_form(a) != canonical_form(b)
