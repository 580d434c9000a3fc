"""This module provides the ExtField class and the field operations of the package.

An extension F_{p^k} is realised as F_p[x]/(f) for a monic irreducible ``f`` of degree ``k``, chosen by a seeded deterministic search (see :func:`make_extension`). Elements are :class:`Elem` values holding ``k`` residues, lowest degree first. Elements are also addressed by an integer *index* ``sum(c_d * p**d)``; enumeration runs through indices ``0 .. Q-1``, which is lexicographic order on the coefficient vector read from the highest degree down.

All objects are immutable and every operation is pure, so fields may be shared freely between threads and processes.
"""

from dataclasses import dataclass
from collections.abc import Iterator
import logging
import math

from humbertkit.fields import polynomials as poly
from humbertkit.fields.prime import PrimeField
from humbertkit.utils.rng import make_rng, IRREDUCIBLE_STREAM

DEFAULT_ENUMERATION_BUDGET = 10**9

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Elem:
    """An element of an extension field in polynomial representation.

    Parameters
    ----------
    coeffs : tuple[int, ...]
        The ``k`` residues in ``[0, p)``, lowest degree first
    """
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)


@dataclass(frozen=True)
class ExtField:
    """The finite field F_{p^k} = F_p[x]/(modulus).

    Parameters
    ----------
    base : PrimeField
        The prime field F_p
    k : int
        The extension degree (``k >= 1``)
    modulus : tuple[int, ...]
        Monic irreducible polynomial of degree ``k``, lowest degree first (length ``k + 1``)

    Raises
    ------
    ValueError
        if the modulus is not monic of degree ``k`` or not irreducible
    """
    base: PrimeField
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f'Extension degree must be >= 1, got {self.k}')
        f = list(self.modulus)
        if len(f) != self.k + 1 or f[-1] != 1 or any(not 0 <= c < self.p for c in f):
            raise ValueError(f'Modulus {self.modulus} is not a reduced monic polynomial of degree {self.k}')
        if not poly.is_irreducible(f, self.p):
            raise ValueError(f'Modulus {self.modulus} is reducible over F_{self.p}')

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def order(self) -> int:
        """The number of elements ``Q = p**k``."""
        return self.p ** self.k

    # ------------- Conversions ------------- #
    def _make(self, a: list[int]) -> Elem:
        return Elem(tuple(a) + (0,) * (self.k - len(a)))

    def _check(self, a: Elem) -> list[int]:
        if len(a.coeffs) != self.k or any(not 0 <= c < self.p for c in a.coeffs):
            raise ValueError(f'{a} is not a reduced element of F_{self.p}^{self.k}')
        return poly.trim(list(a.coeffs))

    def element(self, index: int) -> Elem:
        """Returns the element with the given index ``sum(c_d * p**d)``."""
        if not 0 <= index < self.order:
            raise ValueError(f'Index {index} outside [0, {self.order})')
        coeffs = []
        for _ in range(self.k):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return Elem(tuple(coeffs))

    def index(self, a: Elem) -> int:
        self._check(a)
        return sum(c * self.p**d for d, c in enumerate(a.coeffs))

    def embed_base(self, residue: int) -> Elem:
        """The embedding F_p -> F_{p^k} as constant polynomials."""
        return self._make([residue % self.p])

    def zero(self) -> Elem:
        return self.embed_base(0)

    def one(self) -> Elem:
        return self.embed_base(1)

    # ------------- Arithmetic ------------- #
    def add(self, a: Elem, b: Elem) -> Elem:
        self._check(a), self._check(b)
        return Elem(tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: Elem) -> Elem:
        self._check(a)
        return Elem(tuple(-x % self.p for x in a.coeffs))

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self.add(a, self.neg(b))

    def mul(self, a: Elem, b: Elem) -> Elem:
        return self._make(poly.mulmod(self._check(a), self._check(b), list(self.modulus), self.p))

    def pow(self, a: Elem, exponent: int) -> Elem:
        """Raises ``a`` to an integer power; negative exponents invert first."""
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        return self._make(poly.powmod(self._check(a), exponent, list(self.modulus), self.p))

    def inv(self, a: Elem) -> Elem:
        """Multiplicative inverse.

        Raises
        ------
        FieldArithmeticError
            if ``a`` is zero
        """
        if a.is_zero():
            raise FieldArithmeticError(f'Zero has no inverse in F_{self.p}^{self.k}')
        return self.pow(a, self.order - 2)

    def quadratic_character(self, c: Elem) -> int:
        """The quadratic character; see :func:`quadratic_character`."""
        if c.is_zero():
            return 0
        r = self.pow(c, (self.order - 1) // 2)
        if r == self.one():
            return 1
        if r == self.embed_base(-1):
            return -1
        raise FieldArithmeticError(f'Euler criterion returned {r}; modulus is not irreducible')

    def elements(self, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[Elem]:
        """Yields every element once, by increasing index, starting with zero."""
        if self.order > budget:
            raise FieldArithmeticError(f'F_{self.p}^{self.k} has {self.order} elements, over the budget {budget}')
        for i in range(self.order):
            yield self.element(i)


def quadratic_character(field: ExtField, c: Elem) -> int:
    """Computes the quadratic character of ``c`` as ``c**((Q-1)/2)``.

    Parameters
    ----------
    field : ExtField
        The field containing ``c``
    c : Elem
        The element

    Returns
    -------
    int
        0 if ``c`` is zero, +1 if ``c`` is a nonzero square, -1 otherwise
    """
    return field.quadratic_character(c)


def enumerate_field(field: ExtField, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Iterator[Elem]:
    """Streams all ``Q`` elements of ``field`` in index order (see :meth:`ExtField.elements`)."""
    return field.elements(budget)


def attempt_cap(p: int, k: int) -> int:
    """The cap ``4*k*log2(p) + 64`` on the number of candidate moduli tried."""
    return math.ceil(4 * k * math.log2(p)) + 64


def make_extension(base: PrimeField, k: int, seed: int = 0) -> ExtField:
    """Creates F_{p^k} with a deterministically chosen irreducible modulus.

    Candidates ``x^k + a`` for small ``a`` are tried first, then monic polynomials with coefficients drawn from the generator ``make_rng(seed, IRREDUCIBLE_STREAM, p, k)``.

    Parameters
    ----------
    base : PrimeField
        The prime field
    k : int
        The extension degree
    seed : int, optional
        The seed of the candidate search, by default 0

    Returns
    -------
    ExtField
        The extension field; for ``k = 1`` the modulus is ``x``

    Raises
    ------
    ValueError
        if ``k < 1``
    FieldArithmeticError
        if no irreducible polynomial is found within :func:`attempt_cap` attempts
    """
    if k < 1:
        raise ValueError(f'Extension degree must be >= 1, got {k}')
    p = base.p
    if k == 1:
        return ExtField(base, 1, (0, 1))

    cap = attempt_cap(p, k)
    rng = make_rng(seed, IRREDUCIBLE_STREAM, p, k)
    small = [[a] + [0] * (k - 1) + [1] for a in range(1, min(p, 5))]

    for attempt in range(cap):
        if attempt < len(small):
            f = small[attempt]
        else:
            f = [int(c) for c in rng.integers(0, p, size=k)] + [1]
        if f[0] != 0 and poly.is_irreducible(f, p):
            _logger.info(f' Built F_{p}^{k} with modulus {f} after {attempt + 1} attempts')
            return ExtField(base, k, tuple(f))

    raise FieldArithmeticError(f'No irreducible polynomial of degree {k} over F_{p} found in {cap} attempts (seed {seed})')


class FieldArithmeticError(ArithmeticError):
    pass
