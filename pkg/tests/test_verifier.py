import pytest

from humbertkit.counting.cache import CountCache
from humbertkit.counting.charsum import CharSumCounter
from humbertkit.counting.naive import NaiveCounter
from humbertkit.curves.group import SubsetMask
from humbertkit.curves.sampling import random_smooth_curve
from humbertkit.verifier.engine import full_verify, run_trials, verify_table
from humbertkit.verifier.lattice import (audit_uncovered, lattice_shape, perturb, solve_new_traces,
                                         uncovered_subsets)
from humbertkit.verifier.table import TraceTableBuilder, build_trace_table, spot_check_cells


def assert_passes(report):
    assert report.passed, f'n={report.n} p={report.p}: {report.failures()}'
    assert all(r.value == 0 for r in report.residuals)


@pytest.mark.parametrize('n', range(3, 12))
def test_lattice_shape_is_consistent(n):
    shape = lattice_shape(n)
    assert shape.consistent, shape


def test_uncovered_subsets_by_parity():
    assert uncovered_subsets(5, list(build_trace_table(random_smooth_curve(5, 7, 0), kmax=1).subsets())) == \
        [SubsetMask.empty(6)]
    table4 = build_trace_table(random_smooth_curve(4, 5, 0), kmax=1)
    assert uncovered_subsets(4, table4.subsets()) == []


def test_table_layout(quartic_f7):
    table = build_trace_table(quartic_f7, kmax=2)
    assert len(table.entries) == (1 + 5 + 10) * 2
    assert all(rec.a == 0 for (t, _), rec in table.entries.items() if len(t) == 2)
    assert table.spot_checks and all(s.passed for s in table.spot_checks)
    frame = table.to_frame()
    assert list(frame.columns) == ['T', 'type', 'k', 'N', 'a', 'method']
    assert len(frame) == len(table.entries)


def test_spot_check_sample_is_seeded(quartic_f7):
    cells = spot_check_cells(quartic_f7, 3, seed=4)
    assert len(cells) == 3
    assert cells == spot_check_cells(quartic_f7, 3, seed=4)
    assert all(len(t) == 2 for t, _ in cells)


@pytest.mark.parametrize('p', [5, 7, 11])
@pytest.mark.parametrize('seed', range(5))
def test_quartic_residuals_vanish(p, seed):
    report = full_verify(random_smooth_curve(4, p, seed), kmax=3, seed=seed)
    assert_passes(report)
    assert sorted(r.k for r in report.residuals) == [1, 2, 3]
    assert report.fixed_locus == {i: 8 for i in range(5)}


def test_quartic_top_trace_is_sum_of_elliptic_traces(quartic_f7):
    table = build_trace_table(quartic_f7, kmax=2)
    for k in (1, 2):
        top = table.a(SubsetMask.empty(5), k)
        assert top == sum(table.a(SubsetMask.from_indices([i], 5), k) for i in range(5))


def test_quintic_passes(quintic_f5):
    naive, charsum = NaiveCounter(budget=10**6), CharSumCounter(budget=1000)
    report = full_verify(quintic_f5, kmax=2, audit=False)
    assert_passes(report)
    new = solve_new_traces(report.table, 1)
    assert len(new) == 1 + 15
    audits = audit_uncovered(report.table, naive=naive, charsum=charsum)
    assert [a.k for a in audits] == [1, 2]
    assert audits[0].agrees and audits[0].method == 'charsum'
    assert audits[1].skipped


@pytest.mark.parametrize('seed', range(3))
def test_quintic_trials_over_f5(seed):
    report = full_verify(random_smooth_curve(5, 5, seed), kmax=2, seed=seed, audit=False)
    assert_passes(report)
    assert not report.weil_violations
    for k in (1, 2):
        assert {r.subset for r in report.residuals if r.k == k} == {s for s in report.table.subsets() if len(s) == 1}


def test_perturbed_elliptic_trace_is_caught(quartic_f7):
    table = build_trace_table(quartic_f7, kmax=1)
    bad = verify_table(perturb(table, SubsetMask.from_indices([3], 5), 1, 1))
    assert not bad.passed
    assert [r.value for r in bad.residuals] == [-1]


def test_perturbed_top_trace_is_caught(quartic_f7):
    table = build_trace_table(quartic_f7, kmax=1)
    bad = verify_table(perturb(table, SubsetMask.empty(5), 1, 2))
    assert [r.value for r in bad.residuals] == [2]
    assert bad.verdict == 'fail'


def test_perturbed_uncovered_cell_is_caught_by_audit():
    curve = random_smooth_curve(5, 7, 1)
    table = build_trace_table(curve, kmax=1)
    bad = verify_table(perturb(table, SubsetMask.empty(6), 1, 1))
    assert all(r.value == 0 for r in bad.residuals)
    assert any(not a.agrees for a in bad.audits)
    assert not bad.passed


def test_perturbed_type_three_cell_breaks_checks():
    curve = random_smooth_curve(5, 7, 2)
    table = build_trace_table(curve, kmax=1)
    t = SubsetMask.from_indices([0, 1], 6)
    bad = verify_table(perturb(table, t, 1, 1), audit=False)
    nonzero = {r.subset for r in bad.residuals if r.value}
    assert nonzero == {SubsetMask.from_indices([0], 6), SubsetMask.from_indices([1], 6)}


def test_large_perturbation_violates_weil(quartic_f7):
    table = build_trace_table(quartic_f7, kmax=1)
    bad = verify_table(perturb(table, SubsetMask.from_indices([0], 5), 1, 50), audit=False)
    assert any(v.kind == 'table' for v in bad.weil_violations)


def test_cache_reuse_gives_identical_reports(tmp_path, quartic_f7):
    cache = CountCache(str(tmp_path / 'counts.jsonl'))
    first = full_verify(quartic_f7, kmax=2, cache=cache, seed=5)
    second = full_verify(quartic_f7, kmax=2, cache=cache, seed=5)
    assert cache.hits > 0
    strip = lambda d: {k: v for k, v in d.items() if k != 'counts'}
    assert strip(first.to_dict(deterministic=True)) == strip(second.to_dict(deterministic=True))
    assert [c['N'] for c in first.to_dict(True)['counts']] == [c['N'] for c in second.to_dict(True)['counts']]


def test_parallel_table_matches_serial(quartic_f7):
    serial = TraceTableBuilder(workers=1, seed=3).build(quartic_f7, 2)
    parallel = TraceTableBuilder(workers=2, seed=3).build(quartic_f7, 2)
    assert serial.to_dict() == parallel.to_dict()


def test_report_serialization(quartic_f7):
    report = full_verify(quartic_f7, kmax=1)
    d = report.to_dict(deterministic=True)
    assert 'timestamp' not in d and 'timestamp' in report.to_dict()
    assert d['verdict'] == 'pass'
    assert list(report.residual_frame()['residual']) == [0]


def test_run_trials_aggregates():
    result = run_trials(4, [5, 7], range(2), kmax=1)
    assert result.passed
    assert len(result.frame) == 4
    assert set(result.frame['verdict']) == {'pass'}


def test_table_needs_type_three(cubic_f5):
    with pytest.raises(ValueError):
        build_trace_table(random_smooth_curve(2, 5, 0), kmax=1)
    assert_passes(full_verify(cubic_f5, kmax=2))


@pytest.mark.slow
@pytest.mark.parametrize('p', [7, 11])
def test_sextic_top_residual_vanishes(p):
    report = full_verify(random_smooth_curve(6, p, 0), kmax=1)
    assert_passes(report)
    assert any(r.subset == SubsetMask.empty(7) for r in report.residuals)


def test_nested_worker_pools_are_rejected(quartic_f7):
    with pytest.raises(ValueError):
        TraceTableBuilder(CharSumCounter(workers=2), workers=2)
    with pytest.raises(ValueError):
        full_verify(quartic_f7, kmax=1, method=CharSumCounter(workers=2), workers=2)
    table = TraceTableBuilder(CharSumCounter(workers=2), workers=1).build(quartic_f7, 1)
    assert table.to_dict() == TraceTableBuilder(CharSumCounter(), workers=2).build(quartic_f7, 1).to_dict()
