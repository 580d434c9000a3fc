"""This module provides the TraceTable and its parallel construction.

The table holds the point count of every quotient X_T of type ``>= 2`` over F_{p^k}, ``1 <= k <= kmax``. Quotients of type ``>= 3`` are counted; type-2 quotients are smooth conics with ``q^k + 1`` points and are filled in without counting, except for a seeded sample of about 10% of their cells, which is counted as a spot check. Counting cells are independent and are distributed over a process pool.
"""

from dataclasses import dataclass, field
from multiprocessing import Pool
from fractions import Fraction
import logging
import math

import pandas as pd

from humbertkit.counting.base import CountRecord, PointCounter, BudgetExceededError
from humbertkit.counting.cache import CountCache
from humbertkit.counting.tables import field_for
from humbertkit.counting.trace import trace, resolve_counter
from humbertkit.curves.curve import CurveMatrix, quotient
from humbertkit.curves.group import SubsetMask, subsets_up_to
from humbertkit.utils.rng import make_rng, SPOT_CHECK_STREAM

SPOT_CHECK_FRACTION = 0.1

Cell = tuple[SubsetMask, int]


@dataclass(frozen=True)
class SpotCheck:
    """A counted type-2 cell compared with the conic law ``N = q + 1``."""
    subset: SubsetMask
    k: int
    N: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.N == self.expected

    def to_dict(self) -> dict:
        return {'T': list(self.subset.indices()), 'k': self.k, 'N': self.N, 'expected': self.expected}


@dataclass
class TraceTable:
    """Counts and traces of the quotient tower of one curve.

    Parameters
    ----------
    curve : CurveMatrix
        The base curve X_n
    kmax : int
        The largest extension degree
    entries : dict[Cell, CountRecord]
        One record per ``(T, k)`` with type ``n - |T| >= 2``
    spot_checks : list[SpotCheck]
        The counted type-2 cells
    """
    curve: CurveMatrix
    kmax: int
    entries: dict[Cell, CountRecord]
    spot_checks: list[SpotCheck] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.curve.n

    @property
    def p(self) -> int:
        return self.curve.p

    def quotient_type(self, subset: SubsetMask) -> int:
        return self.n - len(subset)

    def subsets(self) -> list[SubsetMask]:
        """The subsets present in the table, sorted by (``|T|``, bits)."""
        return sorted({t for t, _ in self.entries}, key=SubsetMask.sort_key)

    def record(self, subset: SubsetMask, k: int) -> CountRecord:
        return self.entries[(subset, k)]

    def a(self, subset: SubsetMask, k: int) -> int:
        return self.entries[(subset, k)].a

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.entries, key=lambda c: (*c[0].sort_key(), c[1]))

    def to_frame(self) -> pd.DataFrame:
        rows = [{'T': str(t), 'type': self.quotient_type(t), 'k': k,
                 'N': self.entries[(t, k)].N, 'a': self.entries[(t, k)].a, 'method': self.entries[(t, k)].method}
                for t, k in self.sorted_cells()]
        return pd.DataFrame(rows, columns=['T', 'type', 'k', 'N', 'a', 'method'])

    def to_dict(self) -> list[dict]:
        return [self.entries[c].to_dict() for c in self.sorted_cells()]


def conic_record(curve: CurveMatrix, subset: SubsetMask, k: int) -> CountRecord:
    """The type-2 entry implied by the conic law (trace 0)."""
    q = curve.p ** k
    return CountRecord(curve.curve_hash(), subset.indices(), curve.p, k, 2, q + 1, 'conic')


def spot_check_cells(curve: CurveMatrix, kmax: int, seed: int, fraction: float = SPOT_CHECK_FRACTION) -> list[Cell]:
    """The seeded sample of type-2 cells that is counted anyway (at least one cell when any exist)."""
    n = curve.n
    cells = [(t, k) for t in subsets_up_to(n + 1, n - 2) if len(t) == n - 2 for k in range(1, kmax + 1)]
    if not cells or fraction <= 0:
        return []
    size = min(len(cells), max(1, math.ceil(Fraction(str(fraction)) * len(cells))))
    rng = make_rng(seed, SPOT_CHECK_STREAM, n, curve.p, kmax)
    chosen = sorted(int(i) for i in rng.choice(len(cells), size=size, replace=False))
    return [cells[i] for i in chosen]


class TraceTableBuilder:
    """This class builds trace tables, counting independent cells in a process pool.
    """
    _CURVE = None
    _COUNTER = None
    _SEED = None

    def __init__(self, method: str | PointCounter = 'auto', workers: int = 1, cache: CountCache | None = None,
                 seed: int = 0, spot_fraction: float = SPOT_CHECK_FRACTION) -> None:
        """Initialises a TraceTableBuilder object.

        Parameters
        ----------
        method : str | PointCounter, optional
            The counter (registered name or instance), by default 'auto'
        workers : int, optional
            Worker processes for the cells, by default 1 (in-process)
        cache : CountCache | None, optional
            The count cache, consulted and updated in the parent process, by default None
        seed : int, optional
            Seed of the spot-check sample and of the field construction, by default 0
        spot_fraction : float, optional
            Share of type-2 cells that is counted, by default 0.1

        Raises
        ------
        ValueError
            if both the cells and the counter ask for worker processes (pool workers cannot start pools)
        """
        self.counter = resolve_counter(method)
        if workers > 1 and self.counter.workers > 1:
            raise ValueError(f'{self.counter!r} runs {self.counter.workers} workers of its own; '
                             f'use workers=1 on the counter or on the table')
        self.workers = workers
        self.cache = cache
        self.seed = seed
        self.spot_fraction = spot_fraction
        self._logger = logging.getLogger(__name__)

    @staticmethod
    def _init_worker(curve: CurveMatrix, counter: PointCounter, seed: int) -> None:
        """Installs the curve, counter and seed shared by every cell."""
        TraceTableBuilder._CURVE = curve
        TraceTableBuilder._COUNTER = counter
        TraceTableBuilder._SEED = seed

    @staticmethod
    def count_cell_worker(item: tuple[int, int]) -> CountRecord:
        """Counts one ``(T bits, k)`` cell against the installed state. Used in :meth:`TraceTableBuilder.build`."""
        curve = TraceTableBuilder._CURVE
        bits, k = item
        return trace(curve, SubsetMask(bits, curve.n + 1), curve.p, k, TraceTableBuilder._COUNTER,
                     seed=TraceTableBuilder._SEED)

    def _check_budgets(self, curve: CurveMatrix, cells: list[Cell]) -> None:
        for t, k in cells:
            quot = quotient(curve, t)
            if not self.counter.fits(quot, field_for(curve.p, k, self.seed)):
                raise BudgetExceededError(f'Cell T={t}, k={k} (type {quot.n}) exceeds the budget of {self.counter!r}',
                                          cell=(t.indices(), k))

    def build(self, curve: CurveMatrix, kmax: int) -> TraceTable:
        """Builds the complete trace table of ``curve`` for ``k = 1 .. kmax``.

        Raises
        ------
        ValueError
            if ``kmax < 1`` or the curve has type below 3
        BudgetExceededError
            if some cell does not fit the counter's budget; ``error.cell`` names it
        """
        if kmax < 1:
            raise ValueError(f'kmax must be >= 1, got {kmax}')
        n = curve.n
        if n < 3:
            raise ValueError(f'The quotient tower is verified for n >= 3, got {n}')

        counted = [(t, k) for t in subsets_up_to(n + 1, n - 3) for k in range(1, kmax + 1)]
        spots = spot_check_cells(curve, kmax, self.seed, self.spot_fraction)
        self._check_budgets(curve, counted + spots)

        records: dict[Cell, CountRecord] = {}
        pending = []
        for t, k in counted + spots:
            cached = None
            if self.cache is not None:
                cached = self.cache.get(curve.curve_hash(), t.indices(), curve.p, k)
            if cached is None:
                pending.append((t, k))
            else:
                records[(t, k)] = CountRecord(curve.curve_hash(), t.indices(), curve.p, k, n - len(t), cached, 'cache')

        items = [(t.bits, k) for t, k in pending]
        if self.workers > 1 and len(items) > 1:
            with Pool(self.workers, initializer=TraceTableBuilder._init_worker,
                      initargs=(curve, self.counter, self.seed)) as pool:
                results = pool.map(TraceTableBuilder.count_cell_worker, items)
        else:
            TraceTableBuilder._init_worker(curve, self.counter, self.seed)
            results = [TraceTableBuilder.count_cell_worker(item) for item in items]

        for (t, k), rec in zip(pending, results):
            records[(t, k)] = rec
            if self.cache is not None:
                self.cache.put(rec.curve_hash, rec.subset, rec.p, rec.k, rec.N)

        entries: dict[Cell, CountRecord] = {}
        for t in subsets_up_to(n + 1, n - 2):
            for k in range(1, kmax + 1):
                if len(t) == n - 2:
                    entries[(t, k)] = conic_record(curve, t, k)
                else:
                    entries[(t, k)] = records[(t, k)]

        checks = []
        for t, k in spots:
            check = SpotCheck(t, k, records[(t, k)].N, curve.p ** k + 1)
            if not check.passed:
                self._logger.warning(f' Spot check failed for T={t}, k={k}: N={check.N}, expected {check.expected}')
            checks.append(check)

        self._logger.info(f' Built trace table: {len(entries)} cells, {len(pending)} counted, '
                          f'{len(counted) + len(spots) - len(pending)} from cache')
        return TraceTable(curve, kmax, entries, checks)


def build_trace_table(curve: CurveMatrix, kmax: int = 3, method: str | PointCounter = 'auto', workers: int = 1,
                      cache: CountCache | None = None, seed: int = 0) -> TraceTable:
    """Builds the trace table of ``curve`` (see :class:`TraceTableBuilder`).

    Parameters
    ----------
    curve : CurveMatrix
        An accepted curve of type ``n >= 3``
    kmax : int, optional
        The largest extension degree, by default 3
    method : str | PointCounter, optional
        The counter, by default 'auto'
    workers : int, optional
        Worker processes, by default 1
    cache : CountCache | None, optional
        The count cache, by default None
    seed : int, optional
        The seed of spot checks and fields, by default 0

    Returns
    -------
    TraceTable
        The complete table
    """
    return TraceTableBuilder(method, workers, cache, seed).build(curve, kmax)
