"""This module provides the closed-form invariants of a Humbert-Edge curve of type ``nu``: genus, signature of the E_nu action and the number of fixed points of each involution."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Signature:
    """Signature ``(genus; orders...)`` of the action of E_nu on a curve of type ``nu``."""
    genus: int
    branch_orders: tuple[int, ...]

    @property
    def branch_count(self) -> int:
        return len(self.branch_orders)

    def __str__(self) -> str:
        return f"({self.genus}; {', '.join(map(str, self.branch_orders))})"


def genus_of_type(nu: int) -> int:
    """Genus ``2^(nu-2) * (nu-3) + 1`` of a Humbert-Edge curve of type ``nu``.

    Raises
    ------
    ValueError
        if ``nu < 2``
    """
    if nu < 2:
        raise ValueError(f'Humbert-Edge curves have type >= 2, got {nu}')
    return 2 ** (nu - 2) * (nu - 3) + 1


def signature_of_type(nu: int) -> Signature:
    """The action of E_nu is of signature ``(0; 2, ..., 2)`` with ``nu + 1`` branch points."""
    if nu < 2:
        raise ValueError(f'Humbert-Edge curves have type >= 2, got {nu}')
    return Signature(0, (2,) * (nu + 1))


def fixed_point_degree(nu: int) -> int:
    """Number ``2^(nu-1)`` of geometric fixed points of each involution sigma_i on X_nu."""
    if nu < 3:
        raise ValueError(f'Fixed point degree is defined for type >= 3, got {nu}')
    return 2 ** (nu - 1)
