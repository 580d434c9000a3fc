"""This module provides Frobenius-trace extraction on the quotient tower and the fixed-locus count.

:func:`trace` counts the quotient X_T over F_{p^k} (through a :class:`~humbertkit.counting.cache.CountCache` when given) and packs the result as a :class:`~humbertkit.counting.base.CountRecord`. :func:`fixed_locus_count` counts the points of X_n with ``x_i = 0``, i.e. the fixed points of sigma_i.
"""

import logging

import numpy as np

from humbertkit.counting.base import CountRecord, PointCounter, CountingError
from humbertkit.counting.cache import CountCache
from humbertkit.counting.factory import make_counter
from humbertkit.counting.tables import field_tables, field_for
from humbertkit.curves.curve import CurveMatrix, TypeOneQuotient, InvalidCurveError, quotient
from humbertkit.curves.group import SubsetMask
from humbertkit.curves.linalg import nullspace_mod
from humbertkit.fields.extension import ExtField

_logger = logging.getLogger(__name__)


def resolve_counter(method: str | PointCounter) -> PointCounter:
    """Accepts a counter instance or a registered counter name."""
    return method if isinstance(method, PointCounter) else make_counter({'name': method})


def trace(curve: CurveMatrix, subset: SubsetMask, p: int, k: int, method: str | PointCounter = 'auto',
          cache: CountCache | None = None, seed: int = 0) -> CountRecord:
    """Counts X_T over F_{p^k} and returns its trace.

    Type-2 quotients are counted like any other; their trace must be 0 and a nonzero value shows up as a Weil-bound violation of the record (genus 0).

    Parameters
    ----------
    curve : CurveMatrix
        The base curve X_n
    subset : SubsetMask
        The subset T (``|T| <= n - 2``)
    p : int
        The characteristic; must be the curve's
    k : int
        The extension degree
    method : str | PointCounter, optional
        A registered counter name or instance, by default 'auto'
    cache : CountCache | None, optional
        The count cache, by default None
    seed : int, optional
        Seed of the irreducible-polynomial search for F_{p^k}, by default 0

    Returns
    -------
    CountRecord
        The count and trace

    Raises
    ------
    ValueError
        if ``p`` is not the curve's characteristic or X_T has type 1
    BudgetExceededError
        if the counter's budget is exceeded
    """
    if p != curve.p:
        raise ValueError(f'Curve is defined over F_{curve.p}, not F_{p}')
    quot = quotient(curve, subset)
    if isinstance(quot, TypeOneQuotient):
        raise ValueError(f'X_T for T={subset} has type 1; it carries no equations to count')

    base_hash = curve.curve_hash()
    indices = subset.indices()
    if cache is not None:
        cached = cache.get(base_hash, indices, p, k)
        if cached is not None:
            _logger.info(f' Cache hit for T={subset}, k={k}')
            return CountRecord(base_hash, indices, p, k, quot.n, cached, 'cache')

    counter = resolve_counter(method)
    field = field_for(p, k, seed)
    n_points = counter.count(quot, field)
    if cache is not None:
        cache.put(base_hash, indices, p, k, n_points)
    _logger.info(f' Counted T={subset} (type {quot.n}) over F_{p}^{k}: N={n_points}')
    return CountRecord(base_hash, indices, p, k, quot.n, n_points, counter.method_for(quot, field))


def fixed_locus_count(curve: CurveMatrix, i: int, field: ExtField | None = None) -> int:
    """Counts the points of X_n with ``x_i = 0`` over ``field`` (F_{p^2} by default).

    Dropping column ``i`` leaves ``n - 1`` equations in the ``n`` squares ``y_j = x_j^2``, whose solutions form the line ``y = mu v`` for a kernel vector ``v`` with all entries nonzero. Hence the affine count is ``1 + sum_{mu != 0} prod_j (1 + chi(mu v_j))`` and the projective count follows by dividing out scalars. Over F_{p^2} every ``v_j`` is a square and the count is ``2^(n-1)``.

    Parameters
    ----------
    curve : CurveMatrix
        An accepted curve of type ``n >= 3``
    i : int
        The involution index
    field : ExtField | None, optional
        The field, by default F_{p^2}

    Returns
    -------
    int
        The number of fixed points of sigma_i over ``field``

    Raises
    ------
    InvalidCurveError
        if the reduced system does not have a one-dimensional solution space
    """
    if curve.n < 3:
        raise ValueError(f'Fixed loci are counted for n >= 3, got {curve.n}')
    if not 0 <= i <= curve.n:
        raise ValueError(f'Involution index {i} outside [0, {curve.n}]')
    field = field or field_for(curve.p, 2)
    p = curve.p
    reduced = [[x for c, x in enumerate(row) if c != i] for row in curve.rows]
    kernel = nullspace_mod(reduced, p)
    if len(kernel) != 1:
        raise InvalidCurveError(f'Removing column {i} leaves a solution space of dimension {len(kernel)}')
    v = kernel[0]

    tables = field_tables(field)
    q = tables.order
    mu = np.arange(1, q, dtype=np.int64)
    prods = np.ones(q - 1, dtype=np.int64)
    for vj in v:
        scaled = tables.to_index(tables.digits[mu] * vj % p)
        prods *= 1 + tables.chi[scaled]
    affine = 1 + int(prods.sum())
    n_points, r = divmod(affine - 1, q - 1)
    if r:
        raise CountingError(f'{affine - 1} affine fixed points do not form projective classes')
    return n_points
