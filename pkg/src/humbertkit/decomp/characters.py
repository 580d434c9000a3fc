"""This module provides the character side of the decomposition.

The rational irreducible representations of E_n = (Z/2Z)^n are its characters. A character is determined by the set U of involutions it sends to -1; since sigma_0 ... sigma_n = 1, only supports of even size occur. For the action of signature (0; 2^(n+1)) with stabilizers <sigma_k>, the dimension formula for the isotypical factor B_chi specialises to

    dim B_chi = -1 + #{k : chi(sigma_k) = -1} / 2 = |U| / 2 - 1    (U nonempty),

and to 0 for the trivial character (the full quotient has genus 0). Complementation U <-> T matches these factors with the subset-side decomposition.
"""

from dataclasses import dataclass

import numpy as np
import pandas as pd

from humbertkit.curves.group import SubsetMask
from humbertkit.decomp.report import decompose

# vectorised enumeration of all supports stays below this many involutions
MAX_ENUMERATED_INVOLUTIONS = 24


@dataclass(frozen=True)
class Character:
    """A character of E_n given by its support U (the involutions sent to -1).

    Raises
    ------
    ValueError
        if ``|U|`` is odd
    """
    support: SubsetMask

    def __post_init__(self) -> None:
        if len(self.support) % 2:
            raise ValueError(f'Support {self.support} has odd size; it does not define a character of E_n')

    @property
    def n(self) -> int:
        return self.support.size - 1

    def value(self, i: int) -> int:
        """chi(sigma_i)."""
        return -1 if i in self.support else 1


def character_dimension(n: int, character: Character) -> int:
    """Dimension of B_chi: ``|U|/2 - 1`` for ``U`` nonempty, 0 for the trivial character.

    Raises
    ------
    ValueError
        if the character does not belong to E_n
    """
    if character.n != n:
        raise ValueError(f'Character of E_{character.n} used with n={n}')
    w = len(character.support)
    return 0 if w == 0 else w // 2 - 1


def _popcount(masks: np.ndarray) -> np.ndarray:
    counts = np.zeros(masks.shape, dtype=np.int64)
    m = masks.copy()
    while m.any():
        counts += m & 1
        m >>= 1
    return counts


def character_decompose(n: int) -> pd.DataFrame:
    """Enumerates all ``2**n`` characters of E_n with the dimensions of their factors.

    Parameters
    ----------
    n : int
        The type (``2 <= n < 24``)

    Returns
    -------
    pd.DataFrame
        One row per even-weight support, sorted by mask, with columns ``support`` (bitmask), ``weight`` (``|U|``) and ``dim``
    """
    if n < 2:
        raise ValueError(f'E_n is considered for n >= 2, got {n}')
    if n + 1 > MAX_ENUMERATED_INVOLUTIONS:
        raise ValueError(f'Enumerating 2^{n} characters is out of range')

    masks = np.arange(1 << (n + 1), dtype=np.int64)
    weights = _popcount(masks)
    even = weights % 2 == 0
    masks, weights = masks[even], weights[even]
    dims = np.where(weights == 0, 0, weights // 2 - 1)
    return pd.DataFrame({'support': masks, 'weight': weights, 'dim': dims})


def compare_with_subsets(n: int) -> pd.DataFrame:
    """Matches every character with the subset factor T = complement(U).

    Characters with ``|U| >= 4`` must correspond exactly to the factors with ``|T| <= n - 3`` and have equal dimension; characters with ``|U|`` in {0, 2} must have dimension 0.

    Returns
    -------
    pd.DataFrame
        The character table extended by ``complement`` (mask of T), ``subset_size``, ``is_factor``, ``prym_dim`` and ``agrees``
    """
    table = character_decompose(n)
    full = (1 << (n + 1)) - 1
    table['complement'] = full ^ table['support']
    table['subset_size'] = n + 1 - table['weight']
    table['is_factor'] = table['subset_size'] <= n - 3
    nu = n - table['subset_size'].to_numpy()
    table['prym_dim'] = np.where(table['is_factor'] & (nu % 2 == 1), (nu - 1) // 2, 0)
    table['agrees'] = ((table['is_factor'] == (table['weight'] >= 4))
                       & (table['dim'] == table['prym_dim']))
    return table


def characters_agree(n: int) -> bool:
    """True iff the character side and the subset side give the same factors.

    Every row of :func:`compare_with_subsets` must agree, and the positive dimensions on the character side must have the multiplicities of :func:`~humbertkit.decomp.report.decompose`.
    """
    table = compare_with_subsets(n)
    positive = table.loc[table['dim'] > 0, 'dim'].value_counts()
    counts = {int(m): int(c) for m, c in positive.items()}
    return bool(table['agrees'].all()) and counts == decompose(n).counts_by_dim
