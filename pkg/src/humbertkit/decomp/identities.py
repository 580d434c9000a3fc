"""This module provides the exact identity suite behind the decomposition.

Each check compares two exact integers (or exponents of 2 where the integers would be astronomically large) for one type ``n``:

- ``genus_sum``: ``sum_m m C(n+1, 2m+2) = 2^(n-2)(n-3) + 1``
- ``etale_rh`` (odd ``n``): ``2^(n-2)(n-3) = 2^(n-1) ((n-1)/2 - 1)``, Riemann-Hurwitz for the unramified cover X_n -> X_n/H_n
- ``kernel_order``: ``|ker phi| = (2^(n-3))^(total dim)``
- ``h_order`` (odd ``n``): ``|H_n| = 2^(2 dim JX_n^-)``
- ``h_quotient_genus``: genus of X_n/H_n equals ``dim JX_n^-``
- ``tower_rh``: ``g_n - 1 = 2(g_(n-1) - 1) + fix(sigma_i)/2``
- ``exponent`` (odd ``n``): ``2^(2 dim JX_n^- - 2) = 2^(n-3)``
"""

from dataclasses import dataclass
from math import comb

import pandas as pd

from humbertkit.curves.group import h_subgroup
from humbertkit.curves.invariants import genus_of_type, fixed_point_degree
from humbertkit.decomp.report import decompose, kernel_exponent, prym_dimension, MAX_KERNEL_BITS, MAX_DECIMAL_BITS


def render_int(x: int) -> str:
    """Decimal text, or 2^e for powers of two too long to print in decimal."""
    if x > 0 and x & (x - 1) == 0 and x.bit_length() > MAX_DECIMAL_BITS:
        return f'2^{x.bit_length() - 1}'
    return str(x)


@dataclass(frozen=True)
class IdentityResult:
    """One evaluated identity.

    Parameters
    ----------
    n : int
        The type
    name : str
        The identity's name
    lhs : int
        Left-hand side (an exponent of 2 for the kernel check beyond :data:`MAX_KERNEL_BITS`)
    rhs : int
        Right-hand side, same convention
    """
    n: int
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {'n': self.n, 'identity': self.name, 'lhs': render_int(self.lhs), 'rhs': render_int(self.rhs),
                'passed': self.passed}


def identities_for(n: int) -> list[IdentityResult]:
    """Evaluates every identity that applies to type ``n``.

    Raises
    ------
    ValueError
        if ``n < 3``
    """
    if n < 3:
        raise ValueError(f'Identities are stated for n >= 3, got {n}')

    g = genus_of_type(n)
    results = []

    dims = sum(m * comb(n + 1, 2 * m + 2) for m in range(1, (n - 1) // 2 + 1))
    results.append(IdentityResult(n, 'genus_sum', dims, g))

    anti = prym_dimension(n, 0)
    if n % 2:
        results.append(IdentityResult(n, 'etale_rh', 2 ** (n - 2) * (n - 3), 2 ** (n - 1) * (anti - 1)))

    # (2^(n-3))^dim against 2^((n-3) g_n); exponents once the integers get out of hand
    total_dim = decompose(n).total_dim
    exponent = kernel_exponent(n)
    if exponent <= MAX_KERNEL_BITS:
        results.append(IdentityResult(n, 'kernel_order', 2 ** exponent, (2 ** (n - 3)) ** total_dim))
    else:
        results.append(IdentityResult(n, 'kernel_order', exponent, (n - 3) * total_dim))

    h = h_subgroup(n)
    if n % 2:
        results.append(IdentityResult(n, 'h_order', h.order, 2 ** (2 * anti)))
    results.append(IdentityResult(n, 'h_quotient_genus', h.quotient_genus(), anti))

    results.append(IdentityResult(n, 'tower_rh', g - 1, 2 * (genus_of_type(n - 1) - 1) + fixed_point_degree(n) // 2))

    if n % 2:
        results.append(IdentityResult(n, 'exponent', 2 ** (2 * anti - 2), 2 ** (n - 3)))

    return results


def identity_suite(max_n: int) -> list[IdentityResult]:
    """Evaluates all identities for ``3 <= n <= max_n``.

    Parameters
    ----------
    max_n : int
        The largest type checked (``>= 3``)

    Returns
    -------
    list[IdentityResult]
        Results ordered by ``n``; a failed entry is a defect and names its ``n``
    """
    if max_n < 3:
        raise ValueError(f'max_n must be >= 3, got {max_n}')
    return [r for n in range(3, max_n + 1) for r in identities_for(n)]


def suite_frame(results: list[IdentityResult]) -> pd.DataFrame:
    """Tabulates suite results (one row per identity and ``n``)."""
    return pd.DataFrame([r.to_dict() for r in results], columns=['n', 'identity', 'lhs', 'rhs', 'passed'])
