"""This module provides a brute-force smoothness test for diagonal systems.

At a point x the Jacobian matrix of ``sum_i a_ji x_i^2`` is ``A diag(2x)``; its maximal minor on a column set C equals ``2^r prod_{i in C} x_i minor_C(A)``, ``r`` the number of rows. A point is singular iff every column set with ``minor_C(A) != 0`` contains a vanishing coordinate of x.
"""

from collections.abc import Sequence
from itertools import combinations

import numpy as np

from humbertkit.counting.naive import iter_points, DEFAULT_NAIVE_BUDGET
from humbertkit.curves.linalg import det_mod, rank_mod
from humbertkit.fields.extension import ExtField


def nonzero_minors(rows: Sequence[Sequence[int]], p: int) -> list[tuple[int, ...]]:
    """Column sets whose maximal minor is nonzero mod ``p``."""
    r, cols = len(rows), len(rows[0])
    return [c for c in combinations(range(cols), r) if det_mod([[row[i] for i in c] for row in rows], p)]


def is_degenerate(rows: Sequence[Sequence[int]], p: int) -> bool:
    """Whether the system has rank below its number of rows or a variable that occurs in no equation."""
    zero_column = any(all(row[i] % p == 0 for row in rows) for i in range(len(rows[0])))
    return zero_column or rank_mod(rows, p) < len(rows)


def find_singular_points(rows: Sequence[Sequence[int]], p: int, field: ExtField,
                         budget: int = DEFAULT_NAIVE_BUDGET) -> list[tuple[int, ...]]:
    """Enumerates the singular points of a diagonal system over ``field``.

    Parameters
    ----------
    rows : Sequence[Sequence[int]]
        The coefficient rows over F_p (accepted or not)
    p : int
        The characteristic
    field : ExtField
        The field searched
    budget : int, optional
        Enumeration budget (see :func:`~humbertkit.counting.naive.iter_points`), by default 10**9

    Returns
    -------
    list[tuple[int, ...]]
        The singular points as tuples of element indices, in enumeration order
    """
    minors = nonzero_minors(rows, p)
    singular = []
    for batch in iter_points(rows, field, budget=budget):
        nonzero = batch != 0
        full_rank = np.zeros(batch.shape[0], dtype=bool)
        for c in minors:
            full_rank |= nonzero[:, list(c)].all(axis=1)
        singular.extend(tuple(int(x) for x in pt) for pt in batch[~full_rank])
    return singular
