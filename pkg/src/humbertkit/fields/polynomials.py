"""This module provides dense polynomial arithmetic over a prime field F_p.

Polynomials are lists of residues in ``[0, p)``, lowest degree first, with no trailing zeros; the zero polynomial is the empty list. Only what irreducibility testing and extension-field arithmetic need is implemented.
"""


def trim(a: list[int]) -> list[int]:
    """Removes trailing zero coefficients (in place) and returns the list."""
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: list[int]) -> int:
    """Degree of a trimmed polynomial; -1 for the zero polynomial."""
    return len(a) - 1


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def divmod_poly(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Euclidean division of ``a`` by ``b`` over F_p.

    Raises
    ------
    ZeroDivisionError
        if ``b`` is the zero polynomial
    """
    if not b:
        raise ZeroDivisionError('Polynomial division by zero')
    r = list(a)
    db = degree(b)
    lead_inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while r and degree(r) >= db:
        shift = degree(r) - db
        c = r[-1] * lead_inv % p
        q[shift] = c
        for i, bi in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bi) % p
        trim(r)
    return trim(q), r


def mod(a: list[int], f: list[int], p: int) -> list[int]:
    return divmod_poly(a, f, p)[1]


def mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    return mod(mul(a, b, p), f, p)


def powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    """Computes ``a**e mod f`` by square-and-multiply (``e >= 0``)."""
    if e < 0:
        raise ValueError('Negative exponent')
    result = mod([1], f, p)
    base = mod(a, f, p)
    while e:
        if e & 1:
            result = mulmod(result, base, f, p)
        base = mulmod(base, base, f, p)
        e >>= 1
    return result


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic greatest common divisor over F_p (zero if both inputs are zero)."""
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, divmod_poly(a, b, p)[1]
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def prime_divisors(k: int) -> list[int]:
    out, d = [], 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def is_irreducible(f: list[int], p: int) -> bool:
    """Tests a monic polynomial for irreducibility over F_p.

    Uses the standard criterion for a monic ``f`` of degree ``k``: ``x^(p^k) = x (mod f)`` and ``gcd(x^(p^(k/l)) - x, f) = 1`` for every prime ``l`` dividing ``k``.

    Parameters
    ----------
    f : list[int]
        Monic polynomial, lowest degree first
    p : int
        The characteristic

    Returns
    -------
    bool
        True iff ``f`` is irreducible
    """
    k = degree(f)
    if k < 1 or f[-1] != 1:
        return False
    if k == 1:
        return True
    x = [0, 1]

    def frobenius_power(j: int) -> list[int]:
        h = mod(x, f, p)
        for _ in range(j):
            h = powmod(h, p, f, p)
        return h

    if sub(frobenius_power(k), mod(x, f, p), p):
        return False
    for ell in prime_divisors(k):
        g = gcd(sub(frobenius_power(k // ell), x, p), f, p)
        if degree(g) != 0:
            return False
    return True
