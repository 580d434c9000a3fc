"""This module provides the verification engine.

:func:`full_verify` builds the trace table of a curve, solves for the new traces level by level, computes the residuals of all check equations, checks the Weil bounds, audits the cells outside every check equation and counts the fixed locus of every involution over F_{p^2}. The result is a :class:`VerificationReport` whose verdict is ``pass`` exactly when every one of these checks succeeds. :func:`run_trials` repeats this over several curves and primes.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from collections.abc import Iterable
import logging

import pandas as pd

from humbertkit.counting.base import PointCounter
from humbertkit.counting.cache import CountCache
from humbertkit.counting.factory import make_counter
from humbertkit.counting.trace import fixed_locus_count
from humbertkit.curves.curve import CurveMatrix
from humbertkit.curves.group import SubsetMask
from humbertkit.curves.invariants import fixed_point_degree
from humbertkit.curves.sampling import random_smooth_curve
from humbertkit.verifier.lattice import (Residual, WeilViolation, AuditResult, solve_new_traces, check_consistency,
                                         weil_violations, audit_uncovered)
from humbertkit.verifier.table import TraceTable, build_trace_table

_logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    """The outcome of verifying the decomposition on one curve.

    Parameters
    ----------
    curve : CurveMatrix
        The verified curve
    kmax : int
        The largest extension degree
    method : str
        The counting method of the table
    table : TraceTable
        The trace table
    new_traces : dict[tuple[SubsetMask, int], int]
        The solved ``t_k(T)``
    residuals : list[Residual]
        One residual per even-type subset and level
    weil_violations : list[WeilViolation]
        Table entries and new traces outside their Weil bounds
    fixed_locus : dict[int, int]
        Number of fixed points of each sigma_i over F_{p^2}
    audits : list[AuditResult]
        Recounts of cells that enter no check equation
    """
    curve: CurveMatrix
    kmax: int
    method: str
    table: TraceTable = field(repr=False)
    new_traces: dict[tuple[SubsetMask, int], int]
    residuals: list[Residual]
    weil_violations: list[WeilViolation]
    fixed_locus: dict[int, int]
    audits: list[AuditResult]

    @property
    def p(self) -> int:
        return self.curve.p

    @property
    def n(self) -> int:
        return self.curve.n

    @property
    def expected_fixed_points(self) -> int:
        return fixed_point_degree(self.n)

    def failures(self) -> list[str]:
        """Human-readable reasons for a failing verdict (empty on pass)."""
        out = [f'residual {r.value} at T={r.subset}, k={r.k}' for r in self.residuals if r.value]
        out += [f'Weil bound ({v.kind}) at T={v.subset}, k={v.k}: trace {v.value}' for v in self.weil_violations]
        out += [f'sigma_{i} has {c} fixed points over F_{self.p}^2, expected {self.expected_fixed_points}'
                for i, c in self.fixed_locus.items() if c != self.expected_fixed_points]
        out += [f'recount of T={a.subset}, k={a.k} by {a.method}: {a.recount} != {a.recorded}'
                for a in self.audits if not a.agrees]
        out += [f'conic spot check at T={s.subset}, k={s.k}: N={s.N} != {s.expected}'
                for s in self.table.spot_checks if not s.passed]
        return out

    @property
    def passed(self) -> bool:
        return not self.failures()

    @property
    def verdict(self) -> str:
        return 'pass' if self.passed else 'fail'

    def residual_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in self.residuals], columns=['T', 'k', 'residual'])

    def to_dict(self, deterministic: bool = False) -> dict:
        """Structured serialization with a fixed key order; the timestamp is left out when ``deterministic``."""
        new = sorted(self.new_traces.items(), key=lambda kv: (*kv[0][0].sort_key(), kv[0][1]))
        d = {'curve': self.curve.to_dict(),
             'curve_hash': self.curve.curve_hash(),
             'p': self.p,
             'kmax': self.kmax,
             'method': self.method,
             'counts': self.table.to_dict(),
             'spot_checks': [s.to_dict() for s in self.table.spot_checks],
             'new_traces': [{'T': list(t.indices()), 'k': k, 't': v} for (t, k), v in new],
             'residuals': [r.to_dict() for r in self.residuals],
             'weil_violations': [v.to_dict() for v in self.weil_violations],
             'fixed_locus': {str(i): c for i, c in sorted(self.fixed_locus.items())},
             'audits': [a.to_dict() for a in self.audits],
             'verdict': self.verdict}
        if not deterministic:
            d['timestamp'] = datetime.now(timezone.utc).isoformat()
        return d


def verify_table(table: TraceTable, fixed_locus: dict[int, int] | None = None, audit: bool = True,
                 method: str = 'auto', seed: int = 0) -> VerificationReport:
    """Runs the lattice solve and all checks on an existing table.

    Parameters
    ----------
    table : TraceTable
        The trace table (possibly perturbed)
    fixed_locus : dict[int, int] | None, optional
        Precomputed fixed-locus counts, by default None (not checked)
    audit : bool, optional
        Whether to recount the cells outside every check equation, by default True
    method : str, optional
        The name recorded in the report, by default 'auto'
    seed : int, optional
        Seed of the field construction for audits, by default 0

    Returns
    -------
    VerificationReport
        The report
    """
    new_traces: dict[tuple[SubsetMask, int], int] = {}
    residuals: list[Residual] = []
    violations: list[WeilViolation] = []
    for k in range(1, table.kmax + 1):
        new = solve_new_traces(table, k)
        new_traces.update({(t, k): v for t, v in new.items()})
        residuals += check_consistency(table, new, k)
        violations += weil_violations(table, new, k)

    audits = audit_uncovered(table, seed=seed) if audit else []
    return VerificationReport(table.curve, table.kmax, method, table, new_traces, residuals, violations,
                              dict(fixed_locus or {}), audits)


def full_verify(curve: CurveMatrix, kmax: int = 3, method: str | PointCounter = 'auto', workers: int = 1,
                cache: CountCache | None = None, seed: int = 0, audit: bool = True) -> VerificationReport:
    """Verifies the decomposition of JX_n numerically on one curve.

    Parameters
    ----------
    curve : CurveMatrix
        An accepted curve of type ``n >= 3``
    kmax : int, optional
        The largest extension degree, by default 3
    method : str | PointCounter, optional
        The counter, by default 'auto'
    workers : int, optional
        Worker processes for the table, by default 1
    cache : CountCache | None, optional
        The count cache, by default None
    seed : int, optional
        Seed of spot checks and field construction, by default 0
    audit : bool, optional
        Whether to recount uncovered cells, by default True

    Returns
    -------
    VerificationReport
        The report; ``verdict`` is ``pass`` iff every check succeeds

    Raises
    ------
    BudgetExceededError
        if a cell does not fit the counting budget
    """
    counter = method if isinstance(method, PointCounter) else make_counter({'name': method})
    table = build_trace_table(curve, kmax, counter, workers, cache, seed)

    expected = fixed_point_degree(curve.n)
    fixed = {}
    for i in range(curve.n + 1):
        fixed[i] = fixed_locus_count(curve, i)
        if fixed[i] != expected:
            _logger.warning(f' sigma_{i} has {fixed[i]} fixed points over F_{curve.p}^2, expected {expected}')

    report = verify_table(table, fixed, audit, counter.name, seed)
    _logger.info(f' Verified n={curve.n}, p={curve.p}, kmax={kmax}: {report.verdict}')
    return report


@dataclass
class TrialsResult:
    """Aggregated verification trials."""
    frame: pd.DataFrame
    reports: list[VerificationReport] = field(repr=False)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def run_trials(n: int, primes: Iterable[int], seeds: Iterable[int], kmax: int = 3,
               method: str | PointCounter = 'auto', workers: int = 1, cache: CountCache | None = None) -> TrialsResult:
    """Verifies independent seeded curves over several primes.

    Parameters
    ----------
    n : int
        The type
    primes : Iterable[int]
        The characteristics
    seeds : Iterable[int]
        One curve per seed and prime (:func:`~humbertkit.curves.sampling.random_smooth_curve`)
    kmax : int, optional
        The largest extension degree, by default 3
    method : str | PointCounter, optional
        The counter, by default 'auto'
    workers : int, optional
        Worker processes, by default 1
    cache : CountCache | None, optional
        The count cache, by default None

    Returns
    -------
    TrialsResult
        One row per trial (n, p, seed, curve hash, residual count, violations, verdict) and the reports
    """
    rows, reports = [], []
    seeds = list(seeds)
    for p in primes:
        for seed in seeds:
            curve = random_smooth_curve(n, p, seed)
            report = full_verify(curve, kmax, method, workers, cache, seed)
            reports.append(report)
            rows.append({'n': n, 'p': p, 'seed': seed, 'curve_hash': curve.curve_hash()[:12],
                         'residuals': len(report.residuals),
                         'nonzero_residuals': sum(1 for r in report.residuals if r.value),
                         'weil_violations': len(report.weil_violations),
                         'verdict': report.verdict})
            _logger.info(f' Trial n={n}, p={p}, seed={seed}: {report.verdict}')
    frame = pd.DataFrame(rows, columns=['n', 'p', 'seed', 'curve_hash', 'residuals', 'nonzero_residuals',
                                        'weil_violations', 'verdict'])
    return TrialsResult(frame, reports)
