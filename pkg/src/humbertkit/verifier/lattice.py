"""This module provides the triangular solve on the subset lattice and the consistency checks.

Traces add across an isogeny decomposition, so applying the decomposition to every quotient gives

    a_k(X_T) = sum_{T' >= T, n - |T'| odd >= 3} t_k(T')

where ``t_k(T')`` is the trace of the new part JX_T'^-. Subsets of odd type define the unknowns ``t_k`` and are solved downward from ``|T| = n - 3``; subsets of even type ``>= 4`` give the check equations, whose residuals must vanish exactly.
"""

from dataclasses import dataclass, replace
from math import comb
import logging

from humbertkit.counting.base import CountRecord, PointCounter, BudgetExceededError
from humbertkit.counting.charsum import CharSumCounter
from humbertkit.counting.naive import NaiveCounter
from humbertkit.counting.tables import field_for
from humbertkit.counting.trace import trace
from humbertkit.curves.curve import quotient
from humbertkit.curves.group import SubsetMask, proper_supersets, subsets_up_to
from humbertkit.decomp.report import prym_dimension
from humbertkit.verifier.table import TraceTable

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Residual:
    """The residual of the check equation at an even-type subset."""
    subset: SubsetMask
    k: int
    value: int

    def to_dict(self) -> dict:
        return {'T': list(self.subset.indices()), 'k': self.k, 'residual': self.value}


@dataclass(frozen=True)
class WeilViolation:
    """A trace outside its Weil bound: ``value**2 > 4 g**2 q``.

    ``kind`` is ``table`` for a counted quotient (genus of X_T) and ``new`` for a solved new trace (genus ``m`` of the new part).
    """
    kind: str
    subset: SubsetMask
    k: int
    value: int
    genus: int

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'T': list(self.subset.indices()), 'k': self.k, 'value': self.value,
                'genus': self.genus}


@dataclass(frozen=True)
class AuditResult:
    """A recount of a cell that enters no check equation, by a second method."""
    subset: SubsetMask
    k: int
    recorded: int
    recount: int | None
    method: str | None

    @property
    def skipped(self) -> bool:
        return self.recount is None

    @property
    def agrees(self) -> bool:
        return self.skipped or self.recorded == self.recount

    def to_dict(self) -> dict:
        return {'T': list(self.subset.indices()), 'k': self.k, 'recorded': self.recorded, 'recount': self.recount,
                'method': self.method}


@dataclass(frozen=True)
class LatticeShape:
    """Sizes of the triangular system per level ``k``, enumerated and from the closed forms."""
    n: int
    unknowns: int
    checks: int
    unknowns_closed: int
    checks_closed: int

    @property
    def consistent(self) -> bool:
        return self.unknowns == self.unknowns_closed and self.checks == self.checks_closed


def is_unknown(n: int, subset: SubsetMask) -> bool:
    nu = n - len(subset)
    return nu >= 3 and nu % 2 == 1


def is_check(n: int, subset: SubsetMask) -> bool:
    nu = n - len(subset)
    return nu >= 4 and nu % 2 == 0


def _odd_supersets_sum(n: int, subset: SubsetMask, new: dict[SubsetMask, int]) -> int:
    return sum(new[s] for s in proper_supersets(subset, n - 3) if is_unknown(n, s))


def solve_new_traces(table: TraceTable, k: int) -> dict[SubsetMask, int]:
    """Solves for the new traces ``t_k(T)`` at level ``k``.

    Type-3 subsets take ``t_k(T) = a_k(X_T)``; higher odd types subtract the new traces of all odd-type strict supersets, processed in decreasing ``|T|``.

    Parameters
    ----------
    table : TraceTable
        A table complete at level ``k``
    k : int
        The extension degree

    Returns
    -------
    dict[SubsetMask, int]
        ``t_k(T)`` for every subset of odd type ``>= 3``
    """
    n = table.n
    new: dict[SubsetMask, int] = {}
    for subset in sorted(table.subsets(), key=lambda s: (-len(s), s.bits)):
        if is_unknown(n, subset):
            new[subset] = table.a(subset, k) - _odd_supersets_sum(n, subset, new)
    return new


def check_consistency(table: TraceTable, new: dict[SubsetMask, int], k: int) -> list[Residual]:
    """Residuals ``a_k(X_T) - sum_{T' > T, odd type} t_k(T')`` for every subset of even type ``>= 4``.

    For even ``n`` the list includes ``T = {}``, the statement for X_n itself. Nonzero residuals are logged as warnings.
    """
    n = table.n
    residuals = []
    for subset in table.subsets():
        if is_check(n, subset):
            r = Residual(subset, k, table.a(subset, k) - _odd_supersets_sum(n, subset, new))
            if r.value:
                _logger.warning(f' Nonzero residual {r.value} at T={subset}, k={k}')
            residuals.append(r)
    return residuals


def weil_violations(table: TraceTable, new: dict[SubsetMask, int], k: int) -> list[WeilViolation]:
    """Weil-bound violations at level ``k``, for the table entries and the solved new traces.

    A type-2 entry with nonzero trace is a violation of the genus-0 bound.
    """
    n, q = table.n, table.p ** k
    found = []
    for subset in table.subsets():
        rec = table.record(subset, k)
        if not rec.weil_ok:
            found.append(WeilViolation('table', subset, k, rec.a, rec.genus))
    for subset, t in new.items():
        m = prym_dimension(n, len(subset))
        if t * t > 4 * m * m * q:
            found.append(WeilViolation('new', subset, k, t, m))
    for v in found:
        _logger.warning(f' Weil bound violated ({v.kind}) at T={v.subset}, k={k}: trace {v.value}, genus {v.genus}')
    return found


def lattice_shape(n: int) -> LatticeShape:
    """Counts unknowns and check equations per level for type ``n``, by enumeration and in closed form."""
    subsets = list(subsets_up_to(n + 1, n - 2))
    unknowns = sum(1 for s in subsets if is_unknown(n, s))
    checks = sum(1 for s in subsets if is_check(n, s))
    unknowns_closed = sum(comb(n + 1, n - nu) for nu in range(3, n + 1, 2))
    checks_closed = sum(comb(n + 1, n - nu) for nu in range(4, n + 1, 2))
    return LatticeShape(n, unknowns, checks, unknowns_closed, checks_closed)


def uncovered_subsets(n: int, subsets: list[SubsetMask]) -> list[SubsetMask]:
    """Odd-type subsets that contain no even-type check subset, i.e. whose counts enter no check equation.

    This is ``[{}]`` for odd ``n`` and empty for even ``n``.
    """
    checks = [s for s in subsets if is_check(n, s)]
    return [s for s in subsets if is_unknown(n, s) and not any(c.issubset(s) for c in checks)]


def perturb(table: TraceTable, subset: SubsetMask, k: int, delta: int) -> TraceTable:
    """A copy of ``table`` whose trace at ``(T, k)`` is shifted by ``delta`` (the count by ``-delta``)."""
    entries = dict(table.entries)
    rec = entries[(subset, k)]
    entries[(subset, k)] = replace(rec, N=rec.N - delta, method='perturbed')
    return TraceTable(table.curve, table.kmax, entries, list(table.spot_checks))


def _second_counter(rec: CountRecord, naive: PointCounter, charsum: PointCounter) -> list[PointCounter]:
    if rec.method == 'naive':
        return [charsum]
    if rec.method == 'charsum':
        return [naive]
    return [naive, charsum]


def audit_uncovered(table: TraceTable, naive: PointCounter | None = None,
                    charsum: PointCounter | None = None, seed: int = 0) -> list[AuditResult]:
    """Recounts the cells that enter no check equation with a second method when it fits its budget.

    Parameters
    ----------
    table : TraceTable
        The table to audit
    naive : PointCounter | None, optional
        The naive counter, by default ``NaiveCounter()``
    charsum : PointCounter | None, optional
        The character-sum counter, by default ``CharSumCounter()``
    seed : int, optional
        Seed of the field construction, by default 0

    Returns
    -------
    list[AuditResult]
        One result per audited cell; skipped when no second method fits
    """
    naive = naive or NaiveCounter()
    charsum = charsum or CharSumCounter()
    results = []
    for subset in uncovered_subsets(table.n, table.subsets()):
        quot = quotient(table.curve, subset)
        for k in range(1, table.kmax + 1):
            rec = table.record(subset, k)
            field = field_for(table.p, k, seed)
            counter = next((c for c in _second_counter(rec, naive, charsum) if c.fits(quot, field)), None)
            if counter is None:
                results.append(AuditResult(subset, k, rec.N, None, None))
                continue
            try:
                recount = trace(table.curve, subset, table.p, k, counter, seed=seed).N
            except BudgetExceededError:
                results.append(AuditResult(subset, k, rec.N, None, None))
                continue
            result = AuditResult(subset, k, rec.N, recount, counter.name)
            if not result.agrees:
                _logger.warning(f' Audit mismatch at T={subset}, k={k}: recorded {rec.N}, {counter.name} gives {recount}')
            results.append(result)
    return results
