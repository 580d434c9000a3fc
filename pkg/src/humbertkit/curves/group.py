"""This module provides the bookkeeping for the involutions sigma_0, ..., sigma_n of a Humbert-Edge curve.

A :class:`SubsetMask` is a subset T of S_n = {sigma_0, ..., sigma_n}; it indexes the quotients X_T and the factors of the Jacobian decomposition. A :class:`GroupElement` is an element of E_n = <sigma_0, ..., sigma_n | sigma_0 ... sigma_n = 1>, stored as an (n+1)-bit flip mask modulo the all-ones mask. The module also computes the subgroup H_n generated by the double products sigma_i sigma_j and the genus of any quotient X_n / K by Riemann-Hurwitz.
"""

from dataclasses import dataclass
from collections.abc import Iterable, Iterator
from itertools import combinations

from humbertkit.curves.invariants import genus_of_type


@dataclass(frozen=True)
class SubsetMask:
    """A subset of ``{0, ..., size-1}`` stored as a bitmask.

    Parameters
    ----------
    bits : int
        The mask; bit ``i`` set means sigma_i belongs to the subset
    size : int
        The number of involutions ``n + 1``
    """
    bits: int
    size: int

    def __post_init__(self) -> None:
        if self.size < 1 or not 0 <= self.bits < 1 << self.size:
            raise ValueError(f'Mask {self.bits} does not fit {self.size} involutions')

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> 'SubsetMask':
        bits = 0
        for i in indices:
            if not 0 <= i < size:
                raise ValueError(f'Involution index {i} outside [0, {size})')
            bits |= 1 << i
        return cls(bits, size)

    @classmethod
    def empty(cls, size: int) -> 'SubsetMask':
        return cls(0, size)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.bits >> i & 1)

    def __len__(self) -> int:
        return bin(self.bits).count('1')

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def complement(self) -> 'SubsetMask':
        return SubsetMask(((1 << self.size) - 1) ^ self.bits, self.size)

    def issubset(self, other: 'SubsetMask') -> bool:
        return self.bits & ~other.bits == 0

    def union(self, other: 'SubsetMask') -> 'SubsetMask':
        return SubsetMask(self.bits | other.bits, self.size)

    def without_index(self, i: int) -> 'SubsetMask':
        """The image of the subset after sigma_i is divided out.

        On X / sigma_i the involutions are renumbered ``0..size-2`` by dropping index ``i``; ``i`` must not belong to the subset.
        """
        if i in self:
            raise ValueError(f'sigma_{i} is divided out and has no image')
        low = self.bits & ((1 << i) - 1)
        high = self.bits >> (i + 1)
        return SubsetMask(low | high << i, self.size - 1)

    def sort_key(self) -> tuple[int, int]:
        return len(self), self.bits

    def __str__(self) -> str:
        return '{' + ','.join(map(str, self.indices())) + '}'


def subsets_up_to(size: int, max_len: int) -> Iterator[SubsetMask]:
    """Yields every subset with at most ``max_len`` elements, ordered by (cardinality, bits)."""
    for t in range(0, min(max_len, size) + 1):
        masks = sorted(sum(1 << i for i in c) for c in combinations(range(size), t))
        for bits in masks:
            yield SubsetMask(bits, size)


def proper_supersets(subset: SubsetMask, max_len: int) -> Iterator[SubsetMask]:
    """Yields the strict supersets of ``subset`` with at most ``max_len`` elements."""
    rest = subset.complement().bits
    sub = rest
    while sub:
        candidate = SubsetMask(subset.bits | sub, subset.size)
        if len(candidate) <= max_len:
            yield candidate
        sub = (sub - 1) & rest


@dataclass(frozen=True)
class GroupElement:
    """An element of E_n, stored as the canonical flip mask (bit ``n`` clear).

    Two (n+1)-bit masks give the same element iff they differ by the all-ones mask, since sigma_0 ... sigma_n = 1.
    """
    n: int
    vec: int

    def __post_init__(self) -> None:
        if not 0 <= self.vec < 1 << self.n:
            raise ValueError(f'{self.vec} is not a canonical element of E_{self.n}')

    @classmethod
    def from_mask(cls, mask: int, n: int) -> 'GroupElement':
        full = (1 << (n + 1)) - 1
        mask &= full
        if mask >> n & 1:
            mask ^= full
        return cls(n, mask)

    @classmethod
    def sigma(cls, i: int, n: int) -> 'GroupElement':
        return cls.from_mask(1 << i, n)

    @classmethod
    def identity(cls, n: int) -> 'GroupElement':
        return cls(n, 0)

    def __mul__(self, other: 'GroupElement') -> 'GroupElement':
        if self.n != other.n:
            raise ValueError('Elements of different groups')
        return GroupElement(self.n, self.vec ^ other.vec)

    def is_identity(self) -> bool:
        return self.vec == 0

    def lifts(self) -> tuple[int, int]:
        """The two (n+1)-bit masks representing this element."""
        return self.vec, self.vec ^ ((1 << (self.n + 1)) - 1)

    def involution_index(self) -> int | None:
        """Returns ``i`` if the element is sigma_i, otherwise None."""
        for lift in self.lifts():
            if bin(lift).count('1') == 1:
                return lift.bit_length() - 1
        return None


def group_elements(n: int) -> list[GroupElement]:
    """All ``2**n`` elements of E_n, ordered by canonical mask."""
    return [GroupElement(n, v) for v in range(1 << n)]


def subgroup_closure(n: int, generators: Iterable[GroupElement]) -> frozenset[GroupElement]:
    """The subgroup of E_n generated by ``generators`` (always contains the identity)."""
    elements = {GroupElement.identity(n)}
    for g in generators:
        if g in elements:
            continue
        elements |= {h * g for h in elements}
    return frozenset(elements)


@dataclass(frozen=True)
class HSubgroup:
    """The subgroup H_n of E_n generated by the double products sigma_i sigma_j."""
    n: int

    @property
    def order(self) -> int:
        # index 2 for odd n; the whole group for even n
        return 2 ** (self.n - 1) if self.n % 2 else 2 ** self.n

    def __contains__(self, g: GroupElement) -> bool:
        """An element lies in H_n iff one of its lifts has even weight."""
        return any(bin(lift).count('1') % 2 == 0 for lift in g.lifts())

    def elements(self) -> frozenset[GroupElement]:
        return frozenset(g for g in group_elements(self.n) if g in self)

    def involution_count(self) -> int:
        """How many of sigma_0, ..., sigma_n lie in H_n."""
        return sum(1 for i in range(self.n + 1) if GroupElement.sigma(i, self.n) in self)

    def quotient_genus(self) -> int:
        """Genus of X_n / H_n."""
        return riemann_hurwitz_genus(self.n, self.order, self.involution_count())

    def generators(self) -> list[GroupElement]:
        return [GroupElement.from_mask(1 << i | 1 << j, self.n)
                for i, j in combinations(range(self.n + 1), 2)]


def h_subgroup(n: int) -> HSubgroup:
    """Returns H_n (order ``2**(n-1)`` for odd ``n``, ``2**n`` for even ``n``).

    Raises
    ------
    ValueError
        if ``n < 2``
    """
    if n < 2:
        raise ValueError(f'H_n is defined for n >= 2, got {n}')
    return HSubgroup(n)


def fixed_point_count(n: int, g: GroupElement) -> int | None:
    """Number of points of X_n fixed by a non-identity element ``g`` (None for the identity).

    Only the involutions sigma_i have fixed points, ``2**(n-1)`` each: a point fixed by a product of at least two and at most ``n - 1`` involutions would have two vanishing coordinates, which the smoothness of X_n excludes.
    """
    if g.is_identity():
        return None
    return 2 ** (n - 1) if g.involution_index() is not None else 0


def quotient_genus(n: int, subgroup: Iterable[GroupElement]) -> int:
    """Genus of X_n / K by Riemann-Hurwitz.

    Parameters
    ----------
    n : int
        The type of the curve (``n >= 2``)
    subgroup : Iterable[GroupElement]
        The elements of K (a subgroup of E_n, identity included)

    Returns
    -------
    int
        The genus ``g'`` with ``2g' - 2 = (2 g_n - 2 - sum_{h != 1} fix(h)) / |K|``

    Raises
    ------
    ValueError
        if ``subgroup`` is not closed under multiplication or the division is not exact
    """
    elements = frozenset(subgroup)
    if GroupElement.identity(n) not in elements or any(a * b not in elements for a in elements for b in elements):
        raise ValueError('Elements do not form a subgroup of E_n')
    involutions = sum(1 for h in elements if not h.is_identity() and h.involution_index() is not None)
    return riemann_hurwitz_genus(n, len(elements), involutions)


def riemann_hurwitz_genus(n: int, order: int, involutions: int) -> int:
    """Genus of X_n / K from the order of K and the number of sigma_i it contains.

    Raises
    ------
    ValueError
        if the Riemann-Hurwitz quotient is not an integer genus
    """
    numerator = 2 * genus_of_type(n) - 2 - involutions * 2 ** (n - 1)
    if numerator % order or (numerator // order) % 2:
        raise ValueError(f'Riemann-Hurwitz is not integral for a subgroup of order {order}')
    return (numerator // order + 2) // 2
