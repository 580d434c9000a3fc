import json
from pathlib import Path

import numpy as np
import pytest

from humbertkit.counting.base import BudgetExceededError, CountRecord
from humbertkit.counting.cache import CountCache
from humbertkit.counting.charsum import CharSumCounter, GaussAccumulator
from humbertkit.counting.factory import AutoCounter, add_counter, get_counter, make_counter, show_counter_names
from humbertkit.counting.naive import NaiveCounter, count_system_naive, point_count, projective_chunks
from humbertkit.counting.singular import find_singular_points, is_degenerate
from humbertkit.counting.tables import field_for
from humbertkit.counting.trace import fixed_locus_count, trace
from humbertkit.curves.curve import CurveMatrix, validate_curve, vanishing_minor
from humbertkit.curves.group import SubsetMask
from humbertkit.curves.invariants import fixed_point_degree
from humbertkit.curves.sampling import random_smooth_curve
from humbertkit.utils.rng import make_rng

ORACLE_FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (13, 1), (5, 2), (7, 2), (11, 2), (13, 2)]


def type_three_curves(p, count):
    if p == 3:
        # F_3 has fewer accepted matrices than requested: take every canonical one
        candidates = [[[1, 0, a, b], [0, 1, c, d]] for a in (1, 2) for b in (1, 2) for c in (1, 2) for d in (1, 2)]
        return [validate_curve(3, 3, rows) for rows in candidates if vanishing_minor(3, 3, rows) is None]
    return [random_smooth_curve(3, p, seed) for seed in range(count)]


def conics(p):
    return [validate_curve(2, p, [[1, b, c]]) for b in range(1, p) for c in range(1, p)]


def test_projective_chunks_cover_every_point():
    q, nvars = 5, 3
    total = sum(stop - start for _, start, stop in projective_chunks(nvars, q, chunk=7))
    assert total == (q**nvars - 1) // (q - 1)
    assert count_system_naive([], field_for(5, 1), nvars=3) == 31


@pytest.mark.parametrize('p,k,expected', [(5, 1, 6), (3, 1, 4), (5, 2, 26), (3, 3, 28)])
def test_conic_counts(p, k, expected):
    curve = validate_curve(2, p, [[1, 1, 1]])
    field = field_for(p, k)
    assert NaiveCounter().count(curve, field) == expected
    assert CharSumCounter().count(curve, field) == expected


@pytest.mark.parametrize('p,k', ORACLE_FIELDS)
def test_oracle_equivalence_on_conics(p, k):
    field = field_for(p, k)
    naive, charsum = NaiveCounter(), CharSumCounter()
    for curve in conics(p)[:20]:
        assert naive.count(curve, field) == charsum.count(curve, field) == field.order + 1, curve.rows


@pytest.mark.parametrize('p,k', ORACLE_FIELDS)
def test_oracle_equivalence_on_plane_cubics(p, k):
    field = field_for(p, k)
    naive, charsum = NaiveCounter(), CharSumCounter()
    for curve in type_three_curves(p, 20):
        n_naive = naive.count(curve, field)
        assert n_naive == charsum.count(curve, field), f'counters disagree on {curve.rows} over F_{p}^{k}'
        assert CountRecord('', (), p, k, 3, n_naive, 'naive').weil_ok


def test_charsum_is_independent_of_chunking_and_workers(quartic_f7):
    field = field_for(7, 2)
    reference = CharSumCounter().count(quartic_f7, field)
    assert CharSumCounter(chunk=97).count(quartic_f7, field) == reference
    assert CharSumCounter(workers=2, chunk=512).count(quartic_f7, field) == reference


def test_charsum_matches_naive_on_type_four(quartic_f7):
    field = field_for(7, 1)
    assert CharSumCounter().count(quartic_f7, field) == NaiveCounter().count(quartic_f7, field)


def test_gauss_accumulator_powers():
    acc = GaussAccumulator(1, 0).add_power(3, 2, -1, 7)
    assert acc == GaussAccumulator(1 - 21, 0)
    acc = acc.add_power(2, 3, 1, 5)
    assert acc == GaussAccumulator(-20, 10)
    assert acc + GaussAccumulator(20, -10) == GaussAccumulator(0, 0)


def test_budgets_are_enforced(cubic_f5):
    field = field_for(5, 2)
    with pytest.raises(BudgetExceededError):
        NaiveCounter(budget=1000).count(cubic_f5, field)
    with pytest.raises(BudgetExceededError):
        CharSumCounter(budget=10).count(cubic_f5, field)
    assert not NaiveCounter(budget=1000).fits(cubic_f5, field)
    assert CharSumCounter().fits(cubic_f5, field)


def test_charsum_budget_counts_lines(cubic_f5):
    # a plane cubic over F_25 sums over the 26 lines of F_25^2
    field = field_for(5, 2)
    assert point_count(2, 25) == 26
    assert CharSumCounter(budget=26).fits(cubic_f5, field)
    assert not CharSumCounter(budget=25).fits(cubic_f5, field)
    assert CharSumCounter(budget=26).count(cubic_f5, field) == NaiveCounter().count(cubic_f5, field)


def test_default_budgets_cover_quartics_over_f1331():
    curve = random_smooth_curve(4, 11, 0)
    field = field_for(11, 3)
    assert point_count(3, 1331) < 10**9 < 1331**3
    assert CharSumCounter().fits(curve, field)
    assert AutoCounter().fits(curve, field)


def test_row_scaling_leaves_counts_unchanged(quartic_f7):
    f7, f49 = field_for(7, 1), field_for(7, 2)
    naive, charsum = NaiveCounter(), CharSumCounter()
    reference, reference49 = naive.count(quartic_f7, f7), charsum.count(quartic_f7, f49)
    for j in range(3):
        for c in (2, 3, 6):
            scaled = quartic_f7.scale_row(j, c)
            assert scaled.rows != quartic_f7.rows
            assert naive.count(scaled, f7) == charsum.count(scaled, f7) == reference
            assert charsum.count(scaled, f49) == reference49


def test_counter_registry():
    assert {'naive', 'charsum', 'auto'} <= set(show_counter_names())
    assert get_counter('naive') is NaiveCounter
    with pytest.raises(KeyError):
        get_counter('no_such_counter')
    counter = make_counter({'name': 'charsum', 'workers': 3, 'threshold': 5})
    assert isinstance(counter, CharSumCounter) and counter.workers == 3
    add_counter('naive', CharSumCounter)
    assert get_counter('naive') is NaiveCounter


def test_auto_counter_selection(cubic_f5):
    auto = AutoCounter(threshold=10**4)
    assert auto.select(cubic_f5, field_for(5, 1)) is auto.naive
    assert auto.select(cubic_f5, field_for(5, 2)) is auto.charsum
    assert auto.count(cubic_f5, field_for(5, 2)) == NaiveCounter().count(cubic_f5, field_for(5, 2))


def test_trace_record(cubic_f5):
    rec = trace(cubic_f5, SubsetMask.empty(4), 5, 1, 'naive')
    assert rec.q == 5 and rec.a == 6 - rec.N and rec.genus == 1
    assert rec.weil_ok
    conic = trace(cubic_f5, SubsetMask.from_indices([2], 4), 5, 2, 'charsum')
    assert conic.N == 26 and conic.a == 0
    with pytest.raises(ValueError):
        trace(cubic_f5, SubsetMask.empty(4), 7, 1)
    with pytest.raises(ValueError):
        trace(cubic_f5, SubsetMask.from_indices([0, 1], 4), 5, 1)


def test_trace_uses_cache(tmp_path, cubic_f5):
    path = str(tmp_path / 'counts.jsonl')
    cache = CountCache(path)
    first = trace(cubic_f5, SubsetMask.empty(4), 5, 2, 'naive', cache)
    second = trace(cubic_f5, SubsetMask.empty(4), 5, 2, 'naive', cache)
    assert second.method == 'cache' and second.N == first.N
    assert cache.stats() == {'entries': 1, 'hits': 1, 'misses': 1}

    reopened = CountCache(path)
    assert reopened.get(cubic_f5.curve_hash(), (), 5, 2) == first.N


def test_cache_skips_corrupt_lines_and_duplicates(tmp_path):
    path = tmp_path / 'counts.jsonl'
    good = {'curve_hash': 'abc', 'T': [1, 0], 'p': 5, 'k': 1, 'N': 4}
    path.write_text(json.dumps(good) + '\n{"curve_hash": \n')
    cache = CountCache(str(path))
    assert len(cache) == 1
    assert cache.get('abc', [0, 1], 5, 1) == 4
    cache.put('abc', (0, 1), 5, 1, 4)
    cache.put('abc', (2,), 5, 1, 6)
    assert len(path.read_text().strip().splitlines()) == 3


@pytest.mark.parametrize('n,p', [(3, 5), (3, 7), (4, 7), (4, 11), (5, 7), (5, 11)])
def test_fixed_locus_over_quadratic_extension(n, p):
    for seed in range(3):
        curve = random_smooth_curve(n, p, seed)
        for i in range(n + 1):
            assert fixed_locus_count(curve, i) == fixed_point_degree(n), f'sigma_{i} on seed {seed}'


def test_fixed_locus_over_base_field_is_bounded(cubic_f5):
    for i in range(4):
        count = fixed_locus_count(cubic_f5, i, field_for(5, 1))
        assert 0 <= count <= 4 and count % 2 == 0


def test_fixed_locus_matches_enumeration(cubic_f5):
    field = field_for(5, 2)
    for i in range(4):
        reduced = [[x for c, x in enumerate(row) if c != i] for row in cubic_f5.rows]
        assert fixed_locus_count(cubic_f5, i, field) == count_system_naive(reduced, field)


def rejected_matrices(n, p, count):
    rng = make_rng(17, p)
    found = []
    while len(found) < count:
        rows = rng.integers(0, p, size=(n - 1, n + 1)).tolist()
        if vanishing_minor(n, p, rows) is not None:
            found.append(rows)
    return found


def _cross_check_smoothness(p, seeds):
    field = field_for(p, 2)
    for seed in range(seeds):
        curve = random_smooth_curve(3, p, seed)
        assert find_singular_points(curve.rows, p, field) == [], f'accepted curve {curve.rows} is singular'
    for rows in rejected_matrices(3, p, seeds):
        assert is_degenerate(rows, p) or find_singular_points(rows, p, field), f'rejected {rows} looks smooth'


def test_smoothness_criterion_f5():
    _cross_check_smoothness(5, 10)


@pytest.mark.slow
def test_smoothness_criterion_f7():
    _cross_check_smoothness(7, 10)


def test_singular_example():
    rows = [[1, 1, 1, 0], [0, 1, 1, 1]]
    assert not is_degenerate(rows, 5)
    points = find_singular_points(rows, 5, field_for(5, 1))
    assert points and all(pt[0] == 0 and pt[3] == 0 for pt in points)


def test_accepted_matrix_is_a_curve_matrix():
    assert isinstance(random_smooth_curve(3, 5, 0), CurveMatrix)
    assert np.array(random_smooth_curve(4, 7, 0).rows).shape == (3, 5)


def test_custom_counter_module_is_registered_on_lookup(monkeypatch, cubic_f5):
    monkeypatch.syspath_prepend(str(Path(__file__).parents[1] / 'templates'))
    counter = make_counter({'name': 'my_counters.kernel_sum', 'workers': 4})
    for k in (1, 2):
        field = field_for(5, k)
        assert counter.count(cubic_f5, field) == NaiveCounter().count(cubic_f5, field)
    assert 'my_counters.kernel_sum' in show_counter_names()
