"""End-to-end acceptance checks, one test per numbered criterion.

Each test prints a single PASS line (straight to the terminal, bypassing
capture) so a log scan shows every criterion's outcome; a FAIL shows up as
an ordinary pytest failure for that criterion's test.
"""

import itertools
import math
import random
import time

import pytest

from hypercover.catalog import PatternCatalog, count_patterns
from hypercover.constructions import (
    VENN_TYPES,
    cover_minus_one,
    cover_minus_two,
    cover_minus_three,
    cover_minus_four,
    greedy_total_dominating_set,
    hamming_sphere_cover,
    layer_cover,
    layer_embedding,
    layer_points,
    layer_pullback,
    reduce_fixed_k,
    solve_venn_base,
    venn_normal_instance,
)
from hypercover.cube import PointSet
from hypercover.experiments import (
    af_missing_property_test,
    axis_subcubes,
    g_axis_aligned,
    hits_all_large_patterns,
    hitting_lower_bound,
    random_hitting_experiment,
    wagner_check,
)
from hypercover.solver import (
    ec_n_k_detail,
    is_two_dim_subcube,
    min_exact_cover,
    three_covered_one_missed,
    verify_exact_cover,
)

from test_catalog import oracle_patterns


@pytest.fixture
def note(capsys):
    def _note(line: str) -> None:
        with capsys.disabled():
            print(line, flush=True)

    return _note


def test_criterion_01_singleton_baseline(note):
    t0 = time.time()
    for n in range(2, 6):
        # all singletons are equivalent under translation; solve one orbit rep
        res = min_exact_cover(PointSet(n, 1))
        assert res.size == n and res.optimal and res.certificate.verified
        for p in (0, (1 << n) - 1, 5 % (1 << n)):
            cert = cover_minus_one(PointSet(n, 1 << p))
            assert cert.verified and cert.size == n
    dt = time.time() - t0
    assert dt < 60
    note(f"criterion 1 PASS: singleton ec = n for n=2..5, construction size n ({dt:.1f}s)")


def test_criterion_02_sizes_two_three(note):
    t0 = time.time()
    for n in (3, 4):
        for k in (2, 3):
            detail = ec_n_k_detail(n, k)
            assert all(row["size"] == n - 1 for row in detail)
            assert sum(row["orbit"] for row in detail) == math.comb(1 << n, k)
    rng = random.Random(20)
    for n in range(2, 13):
        for _ in range(200):
            S2 = PointSet.from_points(n, rng.sample(range(1 << n), 2))
            c2 = cover_minus_two(S2)
            assert c2.verified and c2.size == n - 1
            S3 = PointSet.from_points(n, rng.sample(range(1 << n), 3))
            c3 = cover_minus_three(S3)
            assert c3.verified and c3.size == n - 1
    dt = time.time() - t0
    assert dt < 300
    note(f"criterion 2 PASS: ec = n-1 for |S| in 2,3; 200 random certs per n <= 12 ({dt:.1f}s)")


def test_criterion_03_size_four_dichotomy(note):
    t0 = time.time()
    for n in (3, 4):
        for combo in itertools.combinations(range(1 << n), 4):
            S = PointSet.from_points(n, combo)
            size = min_exact_cover(S).size
            sub = is_two_dim_subcube(S)
            assert sub == (not three_covered_one_missed(S))
            assert (size == n - 2) == sub
            assert size == (n - 2 if sub else n - 1)
    rng = random.Random(30)
    for n in range(5, 13):
        for _ in range(200):
            S = PointSet.from_points(n, rng.sample(range(1 << n), 4))
            cert = cover_minus_four(S)
            assert cert.verified
            assert cert.size == (n - 2 if is_two_dim_subcube(S) else n - 1)
    dt = time.time() - t0
    assert dt < 600
    note(f"criterion 3 PASS: size-4 dichotomy exhaustive at n=3,4; random certs to n=12 ({dt:.1f}s)")


def test_criterion_04_base_case_sweep(note):
    t0 = time.time()
    solved = degenerate = 0
    for bits in range(1 << len(VENN_TYPES)):
        key = tuple((bits >> i) & 1 for i in range(len(VENN_TYPES)))
        S = venn_normal_instance(key)
        if S is None:
            degenerate += 1
            continue
        hs = solve_venn_base(key)
        assert verify_exact_cover(hs, S).verified
        budget = S.n - 2 if not three_covered_one_missed(S) else S.n - 1
        assert len(hs) <= budget
        solved += 1
    assert solved + degenerate == 1 << len(VENN_TYPES)
    assert solved == 96
    dt = time.time() - t0
    assert dt < 1800
    note(f"criterion 4 PASS: {solved} base instances covered within budget, {degenerate} degenerate ({dt:.1f}s)")


def test_criterion_05_layer_covers(note):
    t0 = time.time()
    for n in range(2, 6):
        for i in range(n + 1):
            for b in layer_points(n, i).points():
                cert = layer_cover(n, i, b)
                assert cert.verified and cert.size == min(i, n - i)
            if 1 <= i and 2 * i <= n:
                emb = layer_embedding(i, n)
                cert = layer_cover(n, i, emb[0])
                pulled = [layer_pullback(h, i) for h in cert.hyperplanes]
                inner = verify_exact_cover(pulled, PointSet(i, 1))
                assert inner.verified and len(pulled) == cert.size == i
    dt = time.time() - t0
    assert dt < 60
    note(f"criterion 5 PASS: layer covers exact min(i, n-i) for n <= 5, pullbacks verified ({dt:.1f}s)")


def test_criterion_06_missing_count_property(note):
    t0 = time.time()
    total = 0
    for n in (3, 4):
        for m in range(1, n + 1):
            rep = af_missing_property_test(n, m, samples=10_000, seed=600 + 10 * n + m)
            assert rep.passed, rep.first_violation
            total += rep.samples
    dt = time.time() - t0
    note(f"criterion 6 PASS: {total} sampled unions, zero sub-2^(n-m) misses ({dt:.1f}s)")


def test_criterion_07_pattern_counts(note):
    t0 = time.time()
    for n in range(1, 6):
        assert count_patterns(n) <= 2 ** (n * n)
    assert count_patterns(1) == len(oracle_patterns(1)) == 2
    assert count_patterns(2) == len(oracle_patterns(2)) == 10
    for n in (3, 4):
        assert sorted(PatternCatalog.get(n).masks) == oracle_patterns(n)
    dt = time.time() - t0
    note(f"criterion 7 PASS: counts within 2^(n^2), n=3,4 catalogs match the oracle set-for-set ({dt:.1f}s)")


def test_criterion_08_sphere_cover_scale(note):
    t0 = time.time()
    rng = random.Random(80)
    worst = {}
    for n in range(6, 11):
        D = greedy_total_dominating_set(n)
        assert len(D) <= 2 ** (n + 2) / n
        for _ in range(50):
            mask = rng.getrandbits(1 << n)
            if mask == 0:
                mask = 1
            cert = hamming_sphere_cover(PointSet(n, mask))
            assert cert.verified
            assert cert.size <= len(D)
        worst[n] = (len(D), 2 ** (n + 1) / n)
    dt = time.time() - t0
    assert dt < 300
    ratio = ", ".join(f"n={n}: |D|={d} vs {b:.0f}" for n, (d, b) in worst.items())
    note(f"criterion 8 PASS: 250 verified sphere covers; dominating sizes {ratio} ({dt:.1f}s)")


def test_criterion_09_hitting_lower_bound(note):
    t0 = time.time()
    successes = 0
    for n, thresholds, trials in ((4, (5, 8, 9), 200), (5, (9, 16, 17), 100)):
        catalog = PatternCatalog.get(n)
        for t in thresholds:
            rep = random_hitting_experiment(n, t, trials=trials, seed=900 + t)
            assert 0 <= rep.successes <= rep.trials
            if rep.witness is not None:
                successes += 1
                S = PointSet.from_strings(n, rep.witness["S"])
                assert hits_all_large_patterns(S, t, catalog)
                want = hitting_lower_bound(n, S, t)
                assert rep.witness["lower_bound"] == want
                assert want == -(-((1 << n) - len(S)) // (t - 1))
    assert successes > 0  # the top thresholds are satisfiable, so this must trip
    dt = time.time() - t0
    note(f"criterion 9 PASS: witness lower bounds re-derived from catalog scans ({dt:.1f}s)")


def test_criterion_10_fixed_k_reduction(note):
    t0 = time.time()
    rng = random.Random(100)
    for k in (1, 2, 3, 4):
        for n in range(2, 11):
            if (1 << n) < k:
                continue
            for _ in range(5):
                S = PointSet.from_points(n, rng.sample(range(1 << n), k))
                cert = reduce_fixed_k(S)
                assert cert.verified
                assert cert.size <= n
                assert cert.size >= n - math.log2(k) - 1e-9
    dt = time.time() - t0
    note(f"criterion 10 PASS: reductions verified with n - log2(k) <= size <= n ({dt:.1f}s)")


def test_criterion_11_wagner_instance(note):
    t0 = time.time()
    rep = wagner_check()
    assert rep.e4_result.optimal
    assert rep.e4_result.certificate.verified
    assert rep.e4 == 3
    dt = time.time() - t0
    if rep.n6_result is not None:
        assert rep.n6_result.certificate.verified
        assert rep.n6_result.size <= rep.e4 + 1
        outcome = f"n=6 cover of size {rep.n6_result.size} found within budget {rep.budget6}"
    else:
        outcome = f"n=6 search exhausted its budget {rep.budget6} without a cover (recorded outcome)"
    note(f"criterion 11 PASS: certified e4 = 3 with verified certificate; {outcome} ({dt:.1f}s)")


def test_criterion_12_subcube_transversals(note):
    t0 = time.time()
    known = {(3, 1): 4, (3, 2): 2, (4, 1): 8, (4, 2): 5, (4, 3): 2}
    report = []
    for (n, d), g in sorted(known.items()):
        res = g_axis_aligned(n, d)
        assert res.g_value == g
        assert len(res.witness) == g
        assert all(m & res.witness.mask for m in axis_subcubes(n, d))
        lo = math.log2(d) / 2 ** (d + 2) if d >= 1 else 0.0
        hi = 1 / (d + 1)
        report.append(f"g({n},{d})={g} ratio {g / 2**n:.3f} vs [{lo:.3f},{hi:.3f}]")
    for n in (3, 4):
        assert g_axis_aligned(n, 0).g_value == 1 << n
        assert g_axis_aligned(n, n).g_value == 1
    dt = time.time() - t0
    note(f"criterion 12 PASS: exact transversal numbers with validated witnesses; {'; '.join(report)} ({dt:.1f}s)")
