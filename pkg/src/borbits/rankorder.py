"""Rank matrices of rook placements and the three partial orders.

Two independent routes compute the same numbers and are cross-validated
in the test suite rather than assumed equal:

- combinatorially, the rank of a corner truncation of a rook placement
  equals the number of rooks weakly South-West of the corner;
- linear-algebraically, by exact Gaussian elimination over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import IndexOutOfRangeError, SizeMismatchError
from .involutions import (
    Arc,
    Involution,
    Permutation,
    to_permutation,
)

Matrix = tuple[tuple, ...]


@dataclass(frozen=True)
class RankMatrix:
    """An n x n table of corner ranks of a rook placement."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise SizeMismatchError(f"expected {self.n}x{self.n} table")
        for i, row in enumerate(self.rows, start=1):
            for j, entry in enumerate(row, start=1):
                # a corner spans n-i+1 rows and j columns, one rook each
                if not 0 <= entry <= min(self.n - i + 1, j):
                    raise IndexOutOfRangeError(
                        f"entry {entry} at ({i},{j}) exceeds rook bound"
                    )

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "RankMatrix":
        return cls(data["n"], tuple(tuple(row) for row in data["rows"]))


def pi_truncate(matrix: Matrix, i: int, j: int) -> Matrix:
    """Zero out the first i-1 rows and the last n-j columns."""
    n = len(matrix)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRangeError(f"({i},{j}) outside 1..{n}")
    zero = matrix[0][0] - matrix[0][0] if n else 0
    return tuple(
        tuple(matrix[r][c] if r >= i - 1 and c <= j - 1 else zero for c in range(n))
        for r in range(n)
    )


def exact_rank(matrix: Sequence[Sequence]) -> int:
    """Rank by Gaussian elimination over an exact field (rationals,
    rational functions, prime fields); no floating point anywhere."""
    rows = [
        [Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix
    ]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pivot
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def southwest_count(arcs: Iterable[Arc], i: int, j: int) -> int:
    """Number of rooks weakly South-West of box (i, j): a >= i and b <= j."""
    return sum(1 for a, b in arcs if a >= i and b <= j)


def _southwest_table(rooks: Iterable[tuple[int, int]], n: int) -> tuple[tuple[int, ...], ...]:
    grid = [[0] * (n + 2) for _ in range(n + 2)]
    for a, b in rooks:
        grid[a][b] = 1
    table = [[0] * (n + 1) for _ in range(n + 2)]
    for i in range(n, 0, -1):
        for j in range(1, n + 1):
            table[i][j] = grid[i][j] + table[i + 1][j] + table[i][j - 1] - table[i + 1][j - 1]
    return tuple(tuple(table[i][1 : n + 1]) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def melnikov_rank_matrix(sigma: Involution) -> RankMatrix:
    """Corner ranks of the strictly upper-triangular placement of sigma,
    with a rook at (j, i) for each arc (i, j)."""
    rooks = [(j, i) for i, j in sigma.arcs]
    return RankMatrix(sigma.n, _southwest_table(rooks, sigma.n))


@lru_cache(maxsize=None)
def star_rank_matrix(sigma: Involution) -> RankMatrix:
    """Corner ranks of the strictly lower-triangular placement of sigma;
    entries on and above the diagonal are defined to be 0."""
    n = sigma.n
    full = _southwest_table(sigma.arcs, n)
    rows = tuple(
        tuple(full[i - 1][j - 1] if i > j else 0 for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return RankMatrix(n, rows)


@lru_cache(maxsize=None)
def bruhat_rank_matrix(w: Permutation) -> RankMatrix:
    """Corner ranks of the full permutation matrix (rook of column k in
    row w(k)), over the whole n x n grid."""
    rooks = [(w.apply(k), k) for k in range(1, w.n + 1)]
    return RankMatrix(w.n, _southwest_table(rooks, w.n))


def _dominated(low: RankMatrix, high: RankMatrix) -> bool:
    for row_low, row_high in zip(low.rows, high.rows):
        for x, y in zip(row_low, row_high):
            if x > y:
                return False
    return True


def leq_star(tau: Involution, sigma: Involution) -> bool:
    """tau <=* sigma: entrywise comparison of lower-triangular rank matrices."""
    if tau.n != sigma.n:
        raise SizeMismatchError(f"sizes differ: {tau.n} vs {sigma.n}")
    return _dominated(star_rank_matrix(tau), star_rank_matrix(sigma))


def leq_melnikov(tau: Involution, sigma: Involution) -> bool:
    """tau <= sigma in the adjoint order: comparison of upper placements."""
    if tau.n != sigma.n:
        raise SizeMismatchError(f"sizes differ: {tau.n} vs {sigma.n}")
    return _dominated(melnikov_rank_matrix(tau), melnikov_rank_matrix(sigma))


def leq_bruhat(v: Permutation, w: Permutation) -> bool:
    """v <=_B w via entrywise comparison of full rank matrices."""
    if v.n != w.n:
        raise SizeMismatchError(f"sizes differ: {v.n} vs {w.n}")
    return _dominated(bruhat_rank_matrix(v), bruhat_rank_matrix(w))


def leq_bruhat_involutions(tau: Involution, sigma: Involution) -> bool:
    return leq_bruhat(to_permutation(tau), to_permutation(sigma))


def rank_matrix_by_elimination(matrix: Matrix) -> RankMatrix:
    """Corner ranks computed by exact elimination; the independent route
    cross-checking the South-West counts."""
    n = len(matrix)
    exact = tuple(tuple(Fraction(x) for x in row) for row in matrix)
    rows = tuple(
        tuple(exact_rank(pi_truncate(exact, i, j)) for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return RankMatrix(n, rows)
