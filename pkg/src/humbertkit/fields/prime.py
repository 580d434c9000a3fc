"""This module provides the PrimeField class, the base of every field in the package."""

from dataclasses import dataclass

MAX_MODULUS = 2**31


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality test (moduli are below 2^31)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p for an odd prime ``p`` with ``3 <= p < 2^31``.

    Parameters
    ----------
    p : int
        The odd prime modulus

    Raises
    ------
    ValueError
        if ``p`` is even, not prime or out of range
    """
    p: int

    def __post_init__(self) -> None:
        if not 3 <= self.p < MAX_MODULUS:
            raise ValueError(f'Modulus {self.p} outside [3, 2^31)')
        if self.p % 2 == 0:
            raise ValueError(f'Characteristic must be odd, got {self.p}')
        if not is_prime(self.p):
            raise ValueError(f'Modulus {self.p} is not prime')

    def reduce(self, value: int) -> int:
        return value % self.p
