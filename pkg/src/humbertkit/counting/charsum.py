"""This module provides the character-sum point counter.

For a diagonal system ``A`` of ``nu - 1`` quadrics in ``nu + 1`` variables over F_Q, orthogonality of additive characters gives

    Q^(nu-1) * N_aff = sum_{t in F_Q^(nu-1)} prod_i sum_x psi(c_i x^2),    c = t^T A,

and each inner sum is ``Q`` when ``c_i = 0`` and ``chi(c_i) G`` otherwise, with G the quadratic Gauss sum. The term ``t = 0`` is ``Q^(nu+1)``. Grouping ``t`` by projective line, the ``Q - 1`` scalings multiply the product of characters by ``chi(lambda)^s``, ``s = #{c_i != 0}``; their sum is ``Q - 1`` for even ``s`` and ``sum chi = 0`` for odd ``s``. Everything is summed exactly in Z[G]/(G^2 - eps Q), ``eps = chi(-1)``.

Lines are partitioned into independent chunks; each chunk yields per-``z`` partial sums that are reduced in a fixed order, so the result does not depend on the partition or on the number of workers.
"""

from dataclasses import dataclass
from collections.abc import Sequence
from multiprocessing import Pool
import logging

import numpy as np

from humbertkit.counting.base import PointCounter, BudgetExceededError, CountingError
from humbertkit.counting.naive import projective_chunks, decode_chunk, point_count
from humbertkit.counting.tables import field_tables, FieldTables
from humbertkit.curves.curve import CurveMatrix
from humbertkit.fields.extension import ExtField

DEFAULT_CHARSUM_BUDGET = 10**9
DEFAULT_CHUNK = 1 << 15

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaussAccumulator:
    """An exact element ``a + b G`` of Z[G]/(G^2 - eps Q)."""
    a: int = 0
    b: int = 0

    def __add__(self, other: 'GaussAccumulator') -> 'GaussAccumulator':
        return GaussAccumulator(self.a + other.a, self.b + other.b)

    def add_power(self, coeff: int, s: int, eps: int, q: int) -> 'GaussAccumulator':
        """Returns ``self + coeff * G**s``, using ``G**(2h) = (eps Q)**h``."""
        h, odd = divmod(s, 2)
        term = coeff * (eps * q) ** h
        return GaussAccumulator(self.a, self.b + term) if odd else GaussAccumulator(self.a + term, self.b)


def line_sums(lead: int, start: int, stop: int, rows: np.ndarray, tables: FieldTables) -> dict[int, int]:
    """Sums ``prod_{c_i != 0} chi(c_i)`` over the lines of one chunk, grouped by ``z = #{c_i = 0}``.

    Parameters
    ----------
    lead, start, stop : int
        The chunk (see :func:`~humbertkit.counting.naive.projective_chunks`)
    rows : np.ndarray
        ``(nu - 1, nu + 1)`` coefficient matrix over F_p
    tables : FieldTables
        The field tables

    Returns
    -------
    dict[int, int]
        Map ``z -> sum of character products``
    """
    t = decode_chunk(lead, start, stop, rows.shape[0], tables.order)
    digits = tables.digits[t]
    # c_i = sum_j t_j a_ji, digit-wise since a_ji lies in F_p
    c_digits = np.einsum('mjd,ji->mid', digits, rows) % tables.p
    c = tables.to_index(c_digits)
    zero = c == 0
    z = zero.sum(axis=1)
    prods = np.where(zero, 1, tables.chi[c]).prod(axis=1)
    return {int(zz): int(prods[z == zz].sum()) for zz in np.unique(z)}


class CharSumCounter(PointCounter):
    """This class counts points with exact Gauss-sum arithmetic over the lines of F_Q^(nu-1).
    """
    name = 'charsum'

    _ROWS = None
    _TABLES = None

    def __init__(self, budget: int = DEFAULT_CHARSUM_BUDGET, workers: int = 1, chunk: int = DEFAULT_CHUNK) -> None:
        """Initialises a CharSumCounter object.

        Parameters
        ----------
        budget : int, optional
            Maximum number ``(Q**(nu-1) - 1) / (Q - 1)`` of lines through the origin of F_Q^(nu-1), by default 10**9
        workers : int, optional
            Worker processes for the line chunks, by default 1 (in-process)
        chunk : int, optional
            Lines per chunk, by default 2**15
        """
        self.budget = budget
        self.workers = workers
        self.chunk = chunk
        self._logger = logging.getLogger(__name__)

    @staticmethod
    def _init_worker(rows: np.ndarray, tables: FieldTables) -> None:
        """Installs the coefficient matrix and field tables shared by every chunk."""
        CharSumCounter._ROWS = rows
        CharSumCounter._TABLES = tables

    @staticmethod
    def chunk_worker(item: tuple[int, int, int]) -> dict[int, int]:
        """Evaluates one chunk against the installed state. Used in :meth:`CharSumCounter.accumulate`."""
        return line_sums(*item, CharSumCounter._ROWS, CharSumCounter._TABLES)

    def fits(self, curve: CurveMatrix, field: ExtField) -> bool:
        return point_count(curve.n - 1, field.order) <= self.budget

    def accumulate(self, rows: Sequence[Sequence[int]], field: ExtField) -> GaussAccumulator:
        """Computes ``Q^(nu-1) N_aff`` as an element of Z[G].

        Raises
        ------
        BudgetExceededError
            if the number of lines exceeds the budget
        """
        tables = field_tables(field)
        q = tables.order
        matrix = np.array(rows, dtype=np.int64) % tables.p
        n_eq, n_var = matrix.shape
        lines = point_count(n_eq, q)
        if lines > self.budget:
            raise BudgetExceededError(f'Character sum needs {lines} lines of F_{q}^{n_eq}, over the budget {self.budget}')

        items = list(projective_chunks(n_eq, q, self.chunk))
        if self.workers > 1 and len(items) > 1:
            with Pool(self.workers, initializer=CharSumCounter._init_worker, initargs=(matrix, tables)) as pool:
                partials = pool.map(CharSumCounter.chunk_worker, items)
        else:
            partials = [line_sums(*item, matrix, tables) for item in items]

        by_z: dict[int, int] = {}
        for part in partials:
            for z, value in part.items():
                by_z[z] = by_z.get(z, 0) + value

        eps, chi_sum = tables.eps, tables.chi_sum
        acc = GaussAccumulator(q ** n_var, 0)
        for z in sorted(by_z):
            s = n_var - z
            scalings = (q - 1) if s % 2 == 0 else chi_sum
            acc = acc.add_power(scalings * q ** z * by_z[z], s, eps, q)
        return acc

    def count(self, curve: CurveMatrix, field: ExtField) -> int:
        """Counts points via :meth:`accumulate`.

        Raises
        ------
        CountingError
            if the Gauss component does not vanish or a division is inexact
        """
        if field.p != curve.p:
            raise ValueError(f'Curve over F_{curve.p} counted over a field of characteristic {field.p}')
        return self.count_rows(curve.rows, field)

    def count_rows(self, rows: Sequence[Sequence[int]], field: ExtField) -> int:
        """Projective count of a diagonal system with at least one row."""
        q = field.order
        acc = self.accumulate(rows, field)
        n_eq = len(rows)
        if acc.b != 0:
            raise CountingError(f'Gauss component {acc.b} does not vanish')
        n_aff, r = divmod(acc.a, q ** n_eq)
        if r:
            raise CountingError(f'{acc.a} is not divisible by {q}^{n_eq}')
        n_points, r = divmod(n_aff - 1, q - 1)
        if r:
            raise CountingError(f'{n_aff - 1} affine points do not form projective classes of size {q - 1}')
        self._logger.debug(f' charsum: {n_eq} quadrics over F_{field.p}^{field.k}: {n_points} points')
        return n_points

    def __repr__(self) -> str:
        return f'CharSumCounter(budget={self.budget}, workers={self.workers})'
