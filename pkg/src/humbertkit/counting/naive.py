"""This module provides the naive point counter, the oracle for every other method.

Points of P^m(F_Q) are enumerated through their representatives with first nonzero coordinate 1, in lexicographic order of element indices, in numpy chunks. A point lies on the diagonal system ``A`` iff ``sum_i a_ji x_i^2 = 0`` for every row ``j``; with ``a_ji`` in F_p this is checked digit-wise on the tabulated squares.
"""

from collections.abc import Iterator, Sequence
import logging

import numpy as np

from humbertkit.counting.base import PointCounter, BudgetExceededError
from humbertkit.counting.tables import field_tables, FieldTables
from humbertkit.curves.curve import CurveMatrix
from humbertkit.fields.extension import ExtField

DEFAULT_NAIVE_BUDGET = 10**9
DEFAULT_CHUNK = 1 << 16

_logger = logging.getLogger(__name__)


def projective_chunks(nvars: int, q: int, chunk: int = DEFAULT_CHUNK) -> Iterator[tuple[int, int, int]]:
    """Partitions the representatives of P^(nvars-1)(F_q) into ``(lead, start, stop)`` work items.

    ``lead`` is the position of the leading 1; ``start:stop`` ranges over the base-q numbers formed by the coordinates after it.
    """
    for lead in range(nvars):
        total = q ** (nvars - lead - 1)
        for start in range(0, total, chunk):
            yield lead, start, min(start + chunk, total)


def point_count(nvars: int, q: int) -> int:
    """Number ``(q**nvars - 1) / (q - 1)`` of points of P^(nvars-1)(F_q), i.e. the work items of :func:`projective_chunks`."""
    return (q ** nvars - 1) // (q - 1)


def decode_chunk(lead: int, start: int, stop: int, nvars: int, q: int) -> np.ndarray:
    """Element indices ``(stop - start, nvars)`` of the representatives in one work item."""
    idx = np.arange(start, stop, dtype=np.int64)
    coords = np.zeros((idx.size, nvars), dtype=np.int64)
    coords[:, lead] = 1
    free = nvars - lead - 1
    for j in range(free):
        coords[:, lead + 1 + j] = (idx // q ** (free - 1 - j)) % q
    return coords


def on_system(coords: np.ndarray, rows: Sequence[Sequence[int]], tables: FieldTables) -> np.ndarray:
    """Boolean mask of the points (rows of ``coords``) satisfying every quadric."""
    squares = tables.squares[coords]
    mask = np.ones(coords.shape[0], dtype=bool)
    for row in rows:
        mask &= tables.combine([c % tables.p for c in row], squares) == 0
    return mask


def _check_budget(nvars: int, q: int, budget: int) -> None:
    if q ** nvars > budget:
        raise BudgetExceededError(f'Naive enumeration needs {q}^{nvars} tuples, over the budget {budget}')


def iter_points(rows: Sequence[Sequence[int]], field: ExtField, nvars: int | None = None,
                budget: int = DEFAULT_NAIVE_BUDGET, chunk: int = DEFAULT_CHUNK) -> Iterator[np.ndarray]:
    """Streams the projective solutions of a diagonal system.

    Parameters
    ----------
    rows : Sequence[Sequence[int]]
        The coefficient rows over F_p (possibly none)
    field : ExtField
        The field of definition of the points
    nvars : int | None, optional
        The number of variables; required when ``rows`` is empty, by default None
    budget : int, optional
        Maximum number ``Q**nvars`` of tuples, by default 10**9
    chunk : int, optional
        Representatives per numpy batch, by default 2**16

    Yields
    ------
    np.ndarray
        ``(m, nvars)`` element indices of solutions, one batch at a time, in lexicographic order

    Raises
    ------
    BudgetExceededError
        if ``Q**nvars`` exceeds ``budget``
    """
    nvars = len(rows[0]) if rows else nvars
    if not nvars:
        raise ValueError('The number of variables is unknown for an empty system')
    tables = field_tables(field)
    q = tables.order
    _check_budget(nvars, q, budget)
    for lead, start, stop in projective_chunks(nvars, q, chunk):
        coords = decode_chunk(lead, start, stop, nvars, q)
        found = coords[on_system(coords, rows, tables)]
        if found.size:
            yield found


def count_system_naive(rows: Sequence[Sequence[int]], field: ExtField, nvars: int | None = None,
                       budget: int = DEFAULT_NAIVE_BUDGET) -> int:
    """Number of projective points of an arbitrary diagonal system (not necessarily a curve)."""
    return sum(int(batch.shape[0]) for batch in iter_points(rows, field, nvars, budget))


class NaiveCounter(PointCounter):
    """This class counts points by enumerating P^n(F_Q).
    """
    name = 'naive'

    def __init__(self, budget: int = DEFAULT_NAIVE_BUDGET, chunk: int = DEFAULT_CHUNK) -> None:
        """Initialises a NaiveCounter object.

        Parameters
        ----------
        budget : int, optional
            Maximum number ``Q**(n+1)`` of coordinate tuples, by default 10**9
        chunk : int, optional
            Representatives per numpy batch, by default 2**16
        """
        self.budget = budget
        self.chunk = chunk

    def fits(self, curve: CurveMatrix, field: ExtField) -> bool:
        return field.order ** (curve.n + 1) <= self.budget

    def count(self, curve: CurveMatrix, field: ExtField) -> int:
        if field.p != curve.p:
            raise ValueError(f'Curve over F_{curve.p} counted over a field of characteristic {field.p}')
        n_points = sum(int(batch.shape[0])
                       for batch in iter_points(curve.rows, field, curve.n + 1, self.budget, self.chunk))
        _logger.debug(f' naive: type {curve.n} over F_{field.p}^{field.k}: {n_points} points')
        return n_points

    def __repr__(self) -> str:
        return f'NaiveCounter(budget={self.budget})'
