"""This module provides the predicted isogeny decomposition of the Jacobian of a Humbert-Edge curve.

For a curve X_n of type ``n >= 3`` the Jacobian splits up to isogeny as the sum over subsets T of {sigma_0, ..., sigma_n} with ``|T| <= n - 3`` of the pullbacks of the anti-invariant parts JX_T^-. A factor is trivial when ``n - |T|`` is even and has dimension ``m`` when ``n - |T| = 2m + 1``. Every factor is a Prym-Tyurin variety of exponent ``2^(n-3)``, its induced polarization is of type ``(2^(n-3), ..., 2^(n-3))``, and the kernel of the sum map has order ``(2^(n-3))^(g_n)``.

The number of subsets grows like ``2^(n+1)``, so :class:`DecompositionReport` aggregates factors by ``|T|`` and produces the per-subset :class:`FactorRecord` values lazily.
"""

from dataclasses import dataclass, field
from collections.abc import Callable, Iterator
from math import comb

import pandas as pd

from humbertkit.curves.group import SubsetMask, subsets_up_to
from humbertkit.curves.invariants import genus_of_type

# the structured report lists every subset only up to this type
MAX_LISTED_TYPE = 12
# kernel orders are materialised as integers only up to this many bits
MAX_KERNEL_BITS = 1 << 22
# decimal rendering stays below the interpreter's int-to-str digit limit
MAX_DECIMAL_BITS = 14000


def prym_dimension(n: int, t: int) -> int:
    """Dimension of JX_T^- for ``|T| = t``: 0 if ``n - t`` is even, ``(n - t - 1) / 2`` if odd."""
    nu = n - t
    if nu < 2:
        raise ValueError(f'Quotient type {nu} is below 2')
    return 0 if nu % 2 == 0 else (nu - 1) // 2


def pt_exponent(n: int) -> int:
    """The Prym-Tyurin exponent ``2^(n-3)``."""
    if n < 3:
        raise ValueError(f'The decomposition is stated for n >= 3, got {n}')
    return 2 ** (n - 3)


def polarization_type(n: int, m: int) -> tuple[int, ...]:
    """The type ``(2^(n-3), ..., 2^(n-3))`` (length ``m``) of the polarization induced on a factor of dimension ``m``."""
    return (pt_exponent(n),) * m


def pt_data(n: int) -> tuple[int, Callable[[int], tuple[int, ...]]]:
    """Returns the exponent and the polarization-type constructor ``m -> (e, ..., e)`` for type ``n``."""
    e = pt_exponent(n)
    return e, lambda m: (e,) * m


def kernel_exponent(n: int) -> int:
    """The exponent ``(n - 3) * g_n`` with ``|ker phi| = 2^((n-3) g_n)``."""
    return (n - 3) * genus_of_type(n)


def kernel_order(n: int) -> int:
    """Order ``(2^(n-3))^(g_n)`` of the kernel of the decomposition isogeny, exact.

    The order has ``(n - 3) g_n + 1`` bits, which is astronomically large from ``n`` around 25 on; beyond :data:`MAX_KERNEL_BITS` only :func:`kernel_exponent` is available.

    Raises
    ------
    ValueError
        if ``n < 3``
    OverflowError
        if the order has more than :data:`MAX_KERNEL_BITS` bits
    """
    e = kernel_exponent(n) if n >= 3 else pt_exponent(n)
    if e > MAX_KERNEL_BITS:
        raise OverflowError(f'Kernel order 2^{e} for n={n} is too large to materialise')
    return pt_exponent(n) ** genus_of_type(n)


def render_power_of_two(e: int) -> str:
    """Decimal text of ``2**e`` when it is short enough, otherwise ``2^e``."""
    return str(2 ** e) if e <= MAX_DECIMAL_BITS else f'2^{e}'


@dataclass(frozen=True)
class FactorRecord:
    """One summand pi_T^* JX_T^- of the decomposition.

    Parameters
    ----------
    subset : SubsetMask
        The subset T
    quotient_type : int
        The type ``n - |T|`` of X_T
    prym_dim : int
        The dimension ``m`` of JX_T^-
    pt_exponent : int
        The Prym-Tyurin exponent ``2^(n-3)``
    polarization_type : tuple[int, ...]
        The induced polarization type (length ``m``)
    """
    subset: SubsetMask
    quotient_type: int
    prym_dim: int
    pt_exponent: int
    polarization_type: tuple[int, ...]

    def to_dict(self) -> dict:
        return {'T': list(self.subset.indices()),
                'type': self.quotient_type,
                'dim': self.prym_dim,
                'polarization_type': list(self.polarization_type)}


@dataclass
class DecompositionReport:
    """The predicted decomposition of JX_n.

    Parameters
    ----------
    n : int
        The type of the curve
    counts_by_dim : dict[int, int]
        Number of factors of each positive dimension ``m``
    total_dim : int
        Sum of the factor dimensions
    genus : int
        The genus ``g_n``
    pt_exponent : int
        The Prym-Tyurin exponent ``2^(n-3)``
    kernel_exponent : int
        ``e`` with ``|ker phi| = 2^e``; the order itself is :attr:`kernel_order`
    isogeny_degree_check : bool
        Whether ``|ker phi| == pt_exponent ** total_dim``
    summary : pd.DataFrame
        One row per ``t = |T|``: quotient type, factor dimension and number of subsets
    """
    n: int
    counts_by_dim: dict[int, int]
    total_dim: int
    genus: int
    pt_exponent: int
    kernel_exponent: int
    isogeny_degree_check: bool
    summary: pd.DataFrame = field(repr=False)

    @property
    def kernel_order(self) -> int:
        return kernel_order(self.n)

    @property
    def kernel_order_text(self) -> str:
        return render_power_of_two(self.kernel_exponent)

    @property
    def factor_count(self) -> int:
        """Number of subsets T with ``|T| <= n - 3`` (trivial factors included)."""
        return int(self.summary['subsets'].sum())

    @property
    def largest_dim(self) -> int:
        return max(self.counts_by_dim, default=0)

    @property
    def elliptic_count(self) -> int:
        return self.counts_by_dim.get(1, 0)

    @property
    def anti_invariant_dim(self) -> int:
        """Dimension of JX_n^- (the T = {} factor)."""
        return prym_dimension(self.n, 0)

    @property
    def coarse_split(self) -> tuple[int, int]:
        """Dimensions of ``A`` and ``JX_n^-`` in the coarse decomposition ``JX_n ~ A + JX_n^-``."""
        return self.genus - self.anti_invariant_dim, self.anti_invariant_dim

    def iter_factors(self) -> Iterator[FactorRecord]:
        """Yields every FactorRecord, sorted by (``|T|``, bits)."""
        e = self.pt_exponent
        for subset in subsets_up_to(self.n + 1, self.n - 3):
            m = prym_dimension(self.n, len(subset))
            yield FactorRecord(subset, self.n - len(subset), m, e, (e,) * m)

    def factors(self) -> list[FactorRecord]:
        return list(self.iter_factors())

    def to_frame(self) -> pd.DataFrame:
        """Rows per dimension ``m``: multiplicity and polarization type."""
        rows = [{'dim': m,
                 'multiplicity': c,
                 'quotient_type': 2 * m + 1,
                 'polarization_type': '(' + ', '.join([str(self.pt_exponent)] * m) + ')'}
                for m, c in sorted(self.counts_by_dim.items())]
        return pd.DataFrame(rows, columns=['dim', 'multiplicity', 'quotient_type', 'polarization_type'])

    def to_dict(self) -> dict:
        """Structured serialization with a fixed key order."""
        d = {'n': self.n,
             'genus': str(self.genus),
             'total_dim': str(self.total_dim),
             'counts_by_dim': {str(m): str(c) for m, c in sorted(self.counts_by_dim.items())},
             'pt_exponent': self.pt_exponent,
             'kernel_order': self.kernel_order_text,
             'kernel_order_power': f'2^{self.kernel_exponent}',
             'isogeny_degree_check': self.isogeny_degree_check,
             'largest_dim': self.largest_dim,
             'coarse_split': {'A': str(self.coarse_split[0]), 'JX_minus': self.coarse_split[1]}}
        if self.n <= MAX_LISTED_TYPE:
            d['factors'] = [f.to_dict() for f in self.iter_factors() if f.prym_dim > 0]
        return d


def decompose(n: int) -> DecompositionReport:
    """Computes the predicted decomposition of JX_n.

    Factors are counted by ``|T| = t`` (there are ``C(n+1, t)`` subsets of each size), which gives the exact multiplicities without enumerating subsets. The report's invariants are checked before returning.

    Parameters
    ----------
    n : int
        The type of the curve (``n >= 3``)

    Returns
    -------
    DecompositionReport
        The decomposition report

    Raises
    ------
    ValueError
        if ``n < 3``
    AssertionError
        if an invariant of the report fails (a defect)
    """
    if n < 3:
        raise ValueError(f'The decomposition is stated for n >= 3, got {n}')

    counts: dict[int, int] = {}
    rows = []
    for t in range(0, n - 2):
        m = prym_dimension(n, t)
        subsets = comb(n + 1, t)
        rows.append({'t': t, 'quotient_type': n - t, 'dim': m, 'subsets': subsets,
                     'polarization_type': '(' + ', '.join(map(str, polarization_type(n, m))) + ')' if m else '-'})
        if m > 0:
            counts[m] = counts.get(m, 0) + subsets

    total_dim = sum(m * c for m, c in counts.items())
    genus = genus_of_type(n)
    e = pt_exponent(n)
    exponent = kernel_exponent(n)

    # |ker phi| = d^(dim) with d = 2^(n-3); compared on exponents, and on the integers when they fit
    degree_check = exponent == (n - 3) * total_dim
    if exponent <= MAX_KERNEL_BITS:
        degree_check = degree_check and kernel_order(n) == e ** total_dim

    report = DecompositionReport(
        n=n,
        counts_by_dim=counts,
        total_dim=total_dim,
        genus=genus,
        pt_exponent=e,
        kernel_exponent=exponent,
        isogeny_degree_check=degree_check,
        summary=pd.DataFrame(rows, columns=['t', 'quotient_type', 'dim', 'subsets', 'polarization_type'])
    )

    assert report.total_dim == report.genus, f'total dimension {total_dim} != genus {genus} for n={n}'
    assert all(c == comb(n + 1, 2 * m + 2) for m, c in counts.items()), f'multiplicities off for n={n}'
    assert report.isogeny_degree_check, f'kernel order is not exponent^dim for n={n}'
    return report
