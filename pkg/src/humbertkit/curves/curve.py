"""This module provides the CurveMatrix class, the model of a Humbert-Edge curve.

A Humbert-Edge curve X_n of type ``n`` is the complete intersection in P^n of the ``n - 1`` diagonal quadrics ``sum_i a_ji x_i^2 = 0`` given by the rows of an (n-1) x (n+1) matrix over F_p. A matrix is accepted when every maximal ((n-1) x (n-1)) minor is nonzero mod p: then no point of the curve has two vanishing coordinates, and the Jacobian matrix ``A diag(2x)`` has full rank everywhere.

The quotient X_T = X_n / <T> is again such a curve, of type ``n - |T|``; :func:`quotient` computes its matrix by eliminating the squares x_i^2, i in T.
"""

from dataclasses import dataclass
from itertools import combinations
import hashlib
import json

from humbertkit.curves.group import SubsetMask
from humbertkit.curves.invariants import genus_of_type
from humbertkit.curves.linalg import det_mod, rref_mod
from humbertkit.fields.prime import is_prime


@dataclass(frozen=True)
class CurveMatrix:
    """An accepted coefficient matrix of a Humbert-Edge curve.

    Instances are always valid: construction runs the checks of :func:`validate_curve`.

    Parameters
    ----------
    n : int
        The type of the curve (``n >= 2``)
    p : int
        The odd prime characteristic
    rows : tuple[tuple[int, ...], ...]
        The ``n - 1`` rows of ``n + 1`` residues in ``[0, p)``; row ``j`` holds the coefficients of the j-th quadric

    Raises
    ------
    InvalidCurveError
        if a dimension is wrong, ``p`` is not an odd prime, an entry is not reduced or a maximal minor vanishes
    """
    n: int
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'rows', tuple(tuple(int(x) for x in row) for row in self.rows))
        _check_shape(self.n, self.p, self.rows)
        columns = vanishing_minor(self.n, self.p, self.rows)
        if columns is not None:
            raise InvalidCurveError(f'Minor on columns {list(columns)} vanishes mod {self.p}', minor=columns)

    @property
    def genus(self) -> int:
        return genus_of_type(self.n)

    @property
    def involutions(self) -> int:
        return self.n + 1

    def canonical(self) -> 'CurveMatrix':
        """The same curve with rows in reduced row echelon form (pivots on the lowest columns, leading 1s)."""
        reduced, _ = rref_mod(self.rows, self.p)
        return CurveMatrix(self.n, self.p, tuple(tuple(row) for row in reduced))

    def scale_row(self, j: int, c: int) -> 'CurveMatrix':
        """Multiplies row ``j`` by a nonzero scalar; the curve is unchanged."""
        if c % self.p == 0:
            raise ValueError('Scalar must be nonzero mod p')
        rows = [list(r) for r in self.rows]
        rows[j] = [x * c % self.p for x in rows[j]]
        return CurveMatrix(self.n, self.p, tuple(tuple(r) for r in rows))

    def to_dict(self) -> dict:
        """Canonical serialization with keys in the order n, p, rows."""
        return {'n': self.n, 'p': self.p, 'rows': [list(r) for r in self.canonical().rows]}

    @classmethod
    def from_dict(cls, d: dict) -> 'CurveMatrix':
        return validate_curve(d['n'], d['p'], d['rows'])

    def curve_hash(self) -> str:
        """SHA-256 of the canonical serialization; identical for row-equivalent matrices."""
        return curve_hash(self)


@dataclass(frozen=True)
class TypeOneQuotient:
    """The quotient of type 1 (``|T| = n - 1``): a rational curve carried without equations."""
    p: int
    n: int = 1
    genus: int = 0

    def to_dict(self) -> dict:
        return {'n': 1, 'p': self.p, 'rows': []}


def _check_shape(n: int, p: int, rows: tuple[tuple[int, ...], ...]) -> None:
    if n < 2:
        raise InvalidCurveError(f'Type must be >= 2, got {n}')
    if p % 2 == 0 or not is_prime(p):
        raise InvalidCurveError(f'Characteristic must be an odd prime, got {p}')
    if len(rows) != n - 1 or any(len(r) != n + 1 for r in rows):
        raise InvalidCurveError(f'Expected a {n - 1}x{n + 1} matrix, got {len(rows)} rows of lengths {[len(r) for r in rows]}')
    if any(not 0 <= x < p for r in rows for x in r):
        raise InvalidCurveError(f'Entries must be reduced mod {p}')


def vanishing_minor(n: int, p: int, rows) -> tuple[int, ...] | None:
    """Returns the first column set (lexicographic) whose maximal minor vanishes mod ``p``, or None."""
    for columns in combinations(range(n + 1), n - 1):
        sub = [[row[c] for c in columns] for row in rows]
        if det_mod(sub, p) == 0:
            return columns
    return None


def validate_curve(n: int, p: int, rows) -> CurveMatrix:
    """Validates a candidate coefficient matrix.

    Parameters
    ----------
    n : int
        The type of the curve
    p : int
        The characteristic
    rows : Sequence[Sequence[int]]
        The candidate (n-1) x (n+1) matrix

    Returns
    -------
    CurveMatrix
        The accepted curve (rows kept as given)

    Raises
    ------
    InvalidCurveError
        on a dimension mismatch, an even or non-prime ``p``, unreduced entries, or a vanishing maximal minor; in the last case ``error.minor`` holds the column set
    """
    return CurveMatrix(n, p, tuple(tuple(r) for r in rows))


def quotient(curve: CurveMatrix, subset: SubsetMask) -> CurveMatrix | TypeOneQuotient:
    """Computes the matrix of the quotient curve X_T.

    For each ``i`` in T (increasing), the surviving row of smallest index with a nonzero entry in column ``i`` is used as pivot to eliminate x_i^2 from the other rows and is then discarded. Finally the T-columns are dropped and the result is put in canonical form.

    Parameters
    ----------
    curve : CurveMatrix
        The curve X_n
    subset : SubsetMask
        The subset T of the ``n + 1`` involutions

    Returns
    -------
    CurveMatrix | TypeOneQuotient
        The canonical matrix of X_T, of type ``n - |T|``, or the type-1 marker when ``|T| = n - 1``

    Raises
    ------
    ValueError
        if ``|T| > n - 1`` or the subset does not match the curve
    """
    if subset.size != curve.n + 1:
        raise ValueError(f'Subset over {subset.size} involutions does not match a curve of type {curve.n}')
    t = len(subset)
    if t > curve.n - 1:
        raise ValueError(f'Cannot divide a curve of type {curve.n} by {t} involutions')
    if t == curve.n - 1:
        return TypeOneQuotient(curve.p)

    p = curve.p
    rows = [list(r) for r in curve.rows]
    for i in subset.indices():
        pivot = next((r for r in range(len(rows)) if rows[r][i]), None)
        if pivot is None:
            raise InvalidCurveError(f'No pivot for column {i}; the matrix is degenerate')
        inv = pow(rows[pivot][i], -1, p)
        for r in range(len(rows)):
            if r != pivot and rows[r][i]:
                factor = rows[r][i] * inv % p
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[pivot])]
        del rows[pivot]

    kept = [c for c in range(curve.n + 1) if c not in subset]
    reduced = tuple(tuple(row[c] for c in kept) for row in rows)
    return CurveMatrix(curve.n - t, p, reduced).canonical()


def curve_hash(curve: CurveMatrix) -> str:
    payload = json.dumps(curve.to_dict(), separators=(',', ':'))
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


def dumps_curve(curve: CurveMatrix | TypeOneQuotient) -> str:
    """Bit-exact canonical text of a curve file (keys n, p, rows; base-10 integers)."""
    d = curve.to_dict()
    rows = ',\n'.join('    ' + json.dumps(r) for r in d['rows'])
    body = f'[\n{rows}\n  ]' if rows else '[]'
    return f'{{\n  "n": {d["n"]},\n  "p": {d["p"]},\n  "rows": {body}\n}}\n'


def dump_curve(curve: CurveMatrix | TypeOneQuotient, path: str) -> None:
    with open(path, 'w') as f:
        f.write(dumps_curve(curve))


def load_curve(path: str) -> CurveMatrix:
    """Loads and validates a curve file.

    Raises
    ------
    InvalidCurveError
        if the file is missing, malformed or describes an invalid curve
    """
    try:
        with open(path, 'r') as f:
            d = json.load(f)
    except FileNotFoundError:
        raise InvalidCurveError(f'Curve file not found: {path}')
    except json.JSONDecodeError as e:
        raise InvalidCurveError(f'Curve file {path} is not valid JSON: {e}')

    missing = {'n', 'p', 'rows'} - set(d)
    if missing:
        raise InvalidCurveError(f'Curve file {path} is missing {sorted(missing)}')
    return CurveMatrix.from_dict(d)


class InvalidCurveError(ValueError):
    def __init__(self, message: str, minor: tuple[int, ...] | None = None) -> None:
        super().__init__(message)
        self.minor = minor
