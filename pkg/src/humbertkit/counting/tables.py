"""This module provides lookup tables of a finite field for the counting kernels.

Elements are addressed by their index (see :class:`~humbertkit.fields.extension.ExtField`). Since curve coefficients lie in F_p, the counting kernels only need F_p-linear combinations of elements, which act digit-wise on the coefficient vectors, plus two per-element tables: the index of the square and the quadratic character. Both are computed once per field with numpy.
"""

from dataclasses import dataclass, field
from functools import lru_cache
import logging

import numpy as np

from humbertkit.fields.extension import ExtField, make_extension
from humbertkit.fields.prime import PrimeField

# fields with more elements are never tabulated
MAX_TABLE_ORDER = 1 << 24

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Read-only numpy tables for one field F_Q.

    Parameters
    ----------
    p : int
        The characteristic
    k : int
        The extension degree
    digits : np.ndarray
        ``(Q, k)`` coefficient vectors of every element, indexed by element index
    powers : np.ndarray
        ``(k,)`` place values ``p**d``; ``digits @ powers`` recovers the index
    squares : np.ndarray
        ``(Q,)`` index of ``x**2`` for every element ``x``
    chi : np.ndarray
        ``(Q,)`` quadratic character in {-1, 0, 1}
    """
    p: int
    k: int
    digits: np.ndarray = field(repr=False)
    powers: np.ndarray = field(repr=False)
    squares: np.ndarray = field(repr=False)
    chi: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def eps(self) -> int:
        """chi(-1); the Gauss sum satisfies ``G**2 = eps * Q``."""
        return int(self.chi[self.p - 1])

    @property
    def chi_sum(self) -> int:
        """Sum of chi over the nonzero elements (0 in every finite field of odd order)."""
        return int(self.chi[1:].sum())

    def to_index(self, digits: np.ndarray) -> np.ndarray:
        """Element indices of reduced coefficient vectors along the last axis."""
        return digits @ self.powers

    def combine(self, coeffs, idx: np.ndarray) -> np.ndarray:
        """Indices of the F_p-linear combinations ``sum_j coeffs[j] * x_j``.

        Parameters
        ----------
        coeffs : Sequence[int]
            Residues mod p, one per column of ``idx``
        idx : np.ndarray
            ``(m, len(coeffs))`` element indices

        Returns
        -------
        np.ndarray
            ``(m,)`` indices of the combinations
        """
        acc = np.zeros((idx.shape[0], self.k), dtype=np.int64)
        for j, c in enumerate(coeffs):
            if c:
                acc += c * self.digits[idx[:, j]]
        return self.to_index(acc % self.p)


def build_tables(f: ExtField) -> FieldTables:
    """Tabulates digits, squares and quadratic character of ``f``.

    Squares are computed by a vectorised schoolbook product of every coefficient vector with itself, reduced modulo the field's modulus; the character is read off the set of squares.

    Raises
    ------
    ValueError
        if the field has more than :data:`MAX_TABLE_ORDER` elements
    """
    p, k, q = f.p, f.k, f.order
    if q > MAX_TABLE_ORDER:
        raise ValueError(f'F_{p}^{k} is too large to tabulate ({q} elements)')

    powers = np.array([p ** d for d in range(k)], dtype=np.int64)
    idx = np.arange(q, dtype=np.int64)
    digits = (idx[:, None] // powers[None, :]) % p

    prod = np.zeros((q, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[:, i + j] += digits[:, i] * digits[:, j]
    prod %= p
    modulus = np.array(f.modulus, dtype=np.int64)
    for deg in range(2 * k - 2, k - 1, -1):
        lead = prod[:, deg].copy()
        prod[:, deg - k:deg] = (prod[:, deg - k:deg] - lead[:, None] * modulus[None, :k]) % p
        prod[:, deg] = 0
    squares = prod[:, :k] @ powers

    chi = -np.ones(q, dtype=np.int64)
    chi[squares] = 1
    chi[0] = 0

    _logger.info(f' Tabulated F_{p}^{k} ({q} elements)')
    return FieldTables(p, k, digits, powers, squares, chi)


@lru_cache(maxsize=64)
def field_tables(f: ExtField) -> FieldTables:
    """Memoised :func:`build_tables`."""
    return build_tables(f)


@lru_cache(maxsize=64)
def field_for(p: int, k: int, seed: int = 0) -> ExtField:
    """The field F_{p^k} used by the counters, memoised per ``(p, k, seed)``."""
    return make_extension(PrimeField(p), k, seed)
