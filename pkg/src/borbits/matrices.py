"""Small exact matrix helpers shared by the orbit and closure modules.

Matrices are tuples of row tuples over one field at a time: ``Fraction``
or :class:`~borbits.ratfunc.RFun`.  Constructors promote plain ints so
that arithmetic never falls back to floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertibleError
from .ratfunc import RF_ONE, RF_ZERO, RFun

Matrix = tuple[tuple, ...]


def field_constants(sample) -> tuple:
    """(one, zero) of the field the sample entry lives in."""
    if isinstance(sample, RFun):
        return RF_ONE, RF_ZERO
    return Fraction(1), Fraction(0)


def promote(matrix) -> Matrix:
    """Copy with int entries promoted to Fraction (RFun rows pass through)."""
    return tuple(
        tuple(Fraction(x) if isinstance(x, int) else x for x in row)
        for row in matrix
    )


def zero_matrix(n: int, like=Fraction(0)) -> Matrix:
    _, zero = field_constants(like)
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def identity_matrix(n: int, like=Fraction(1)) -> Matrix:
    one, zero = field_constants(like)
    return tuple(
        tuple(one if r == c else zero for c in range(n)) for r in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_from_entries(n: int, entries: dict, like=Fraction(0)) -> Matrix:
    """Matrix from a {(row, col): value} dict, 1-based keys."""
    _, zero = field_constants(like)
    return tuple(
        tuple(entries.get((r, c), zero) for c in range(1, n + 1))
        for r in range(1, n + 1)
    )


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def is_upper_triangular(m: Matrix) -> bool:
    return all(not m[r][c] for r in range(len(m)) for c in range(r))


def is_strictly_lower(m: Matrix) -> bool:
    return all(not m[r][c] for r in range(len(m)) for c in range(r, len(m)))


def strictly_lower_part(m: Matrix) -> Matrix:
    n = len(m)
    _, zero = field_constants(m[0][0]) if n else (None, Fraction(0))
    return tuple(
        tuple(m[r][c] if r > c else zero for c in range(n)) for r in range(n)
    )


def upper_inverse(g: Matrix) -> Matrix:
    """Inverse of an upper-triangular matrix by back substitution."""
    n = len(g)
    for k in range(n):
        if not g[k][k]:
            raise NotInvertibleError(f"zero diagonal entry at {k + 1}")
    one, zero = field_constants(g[0][0])
    inv = [[zero] * n for _ in range(n)]
    for j in range(n - 1, -1, -1):
        inv[j][j] = one / g[j][j]
        for i in range(j - 1, -1, -1):
            acc = zero
            for k in range(i + 1, j + 1):
                acc = acc + g[i][k] * inv[k][j]
            inv[i][j] = -acc / g[i][i]
    return tuple(tuple(row) for row in inv)


def exact_det(matrix: Matrix) -> Fraction:
    """Determinant by fraction-free-style elimination over the rationals."""
    rows = [list(map(Fraction, row)) for row in matrix]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, n):
            if rows[r][col]:
                factor = rows[r][col] / pivot
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def qmatrix_to_json(m: Matrix) -> dict:
    """Exact rationals serialized as "p/q" strings."""
    return {
        "n": len(m),
        "rows": [[str(Fraction(x)) for x in row] for row in m],
    }


def qmatrix_from_json(data: dict) -> Matrix:
    return tuple(
        tuple(Fraction(entry) for entry in row) for row in data["rows"]
    )


def rfmatrix_to_json(m: Matrix) -> dict:
    return {
        "n": len(m),
        "rows": [
            [entry.to_json() if isinstance(entry, RFun) else RFun.const(entry).to_json() for entry in row]
            for row in m
        ],
    }
