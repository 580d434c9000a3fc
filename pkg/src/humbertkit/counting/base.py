"""This module provides the PointCounter base class and the CountRecord produced by trace extraction.

Counters return the exact number of projective points of an accepted curve over a finite field. New counting methods subclass :class:`PointCounter` and are registered in :mod:`humbertkit.counting.factory`.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass

from humbertkit.curves.curve import CurveMatrix
from humbertkit.curves.invariants import genus_of_type
from humbertkit.fields.extension import ExtField


class PointCounter(ABC):
    """This class provides a base class for point-counting methods.
    """
    name = 'base'
    workers = 1

    @abstractmethod
    def count(self, curve: CurveMatrix, field: ExtField) -> int:
        """Counts the projective points of ``curve`` over ``field``.

        Parameters
        ----------
        curve : CurveMatrix
            An accepted curve of type ``>= 2``
        field : ExtField
            A field of the curve's characteristic

        Returns
        -------
        int
            The exact number of points in P^n(field) on the curve

        Raises
        ------
        BudgetExceededError
            if the count does not fit the counter's budget
        """
        pass

    def fits(self, curve: CurveMatrix, field: ExtField) -> bool:
        """Whether :meth:`count` would run within the budget."""
        return True

    def method_for(self, curve: CurveMatrix, field: ExtField) -> str:
        """The name of the method that actually counts ``curve`` over ``field``."""
        return self.name

    def __repr__(self) -> str:
        return f'{type(self).__name__}()'


@dataclass(frozen=True)
class CountRecord:
    """The point count and Frobenius trace of one quotient over one field.

    Parameters
    ----------
    curve_hash : str
        Hash of the canonical base curve
    subset : tuple[int, ...]
        The sorted indices of T
    p : int
        The characteristic
    k : int
        The extension degree
    n : int
        The type ``n - |T|`` of the counted quotient
    N : int
        The number of points of X_T over F_{p^k}
    method : str
        How N was obtained (a counter name, ``conic`` or ``cache``)
    """
    curve_hash: str
    subset: tuple[int, ...]
    p: int
    k: int
    n: int
    N: int
    method: str

    @property
    def q(self) -> int:
        return self.p ** self.k

    @property
    def a(self) -> int:
        """The trace ``q + 1 - N``."""
        return self.q + 1 - self.N

    @property
    def genus(self) -> int:
        return genus_of_type(self.n)

    @property
    def weil_ok(self) -> bool:
        """``|a| <= 2 g sqrt(q)``, compared exactly as ``a^2 <= 4 g^2 q``."""
        return self.N >= 0 and self.a ** 2 <= 4 * self.genus ** 2 * self.q

    def to_dict(self) -> dict:
        return {'T': list(self.subset), 'type': self.n, 'p': self.p, 'k': self.k,
                'N': self.N, 'a': self.a, 'method': self.method}


class BudgetExceededError(RuntimeError):
    def __init__(self, message: str, cell: tuple[tuple[int, ...], int] | None = None) -> None:
        super().__init__(message)
        self.cell = cell


class CountingError(ArithmeticError):
    pass
