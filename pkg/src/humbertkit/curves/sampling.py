"""This module provides seeded sampling of accepted Humbert-Edge curves."""

import logging

from humbertkit.curves.curve import CurveMatrix, InvalidCurveError
from humbertkit.utils.rng import make_rng, CURVE_STREAM

DEFAULT_MAX_ATTEMPTS = 1000

_logger = logging.getLogger(__name__)


def random_smooth_curve(n: int, p: int, seed: int, max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> CurveMatrix:
    """Samples an accepted curve of type ``n`` over F_p, deterministically in ``(n, p, seed)``.

    Matrices with an all-ones first row and uniformly random remaining rows are drawn until one passes validation. After ``max_attempts`` failures the Vandermonde witness ``(b_i^j)`` with distinct seeded nodes ``b_i`` is used; its maximal minors are Vandermonde determinants and hence nonzero whenever ``p >= n + 1``.

    Parameters
    ----------
    n : int
        The type (``n >= 2``)
    p : int
        An odd prime; ``p >= n + 2`` guarantees the witness exists
    seed : int
        The seed
    max_attempts : int, optional
        The number of rejection-sampling attempts, by default 1000

    Returns
    -------
    CurveMatrix
        An accepted curve

    Raises
    ------
    CurveSamplingError
        if neither sampling nor the witness produces an accepted matrix
    """
    if n < 2:
        raise ValueError(f'Type must be >= 2, got {n}')
    rng = make_rng(seed, CURVE_STREAM, n, p)

    for attempt in range(max_attempts):
        rows = [[1] * (n + 1)] + rng.integers(0, p, size=(n - 2, n + 1)).tolist()
        try:
            return CurveMatrix(n, p, tuple(tuple(r) for r in rows))
        except InvalidCurveError:
            continue

    _logger.info(f' Rejection sampling failed {max_attempts} times for n={n}, p={p}; trying the Vandermonde witness')
    if p >= n + 1:
        nodes = [int(b) for b in rng.choice(p, size=n + 1, replace=False)]
        rows = tuple(tuple(pow(b, j, p) for b in nodes) for j in range(n - 1))
        try:
            return CurveMatrix(n, p, rows)
        except InvalidCurveError:
            pass

    raise CurveSamplingError(f'No accepted curve of type {n} over F_{p} found (seed {seed}, {max_attempts} attempts)')


class CurveSamplingError(RuntimeError):
    pass
