"""The candidate closure variety of an orbit: rank bounds plus quadrics.

Membership asks two condition families of a strictly lower-triangular A:

- corner rank bounds ``rank of A[i.., ..j] <= bound(i, j)`` everywhere,
- vanishing of the square entries ``(A^2)_{r,s}`` on the upward-closed
  cell set spread above the maximal arcs.

For chain supports the variety is known to agree with the orbit closure;
the essential-set machinery below checks, set-theoretically over a small
prime field, that rank bounds at the essential cells of the complementary
permutation already imply them everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    NotChainError,
    NotStrictlyLowerError,
    SizeMismatchError,
    TooLargeError,
)
from .involutions import (
    Arc,
    Involution,
    Permutation,
    longest_involution,
    to_permutation,
)
from .matrices import Matrix, is_strictly_lower, promote
from .moves import phi_lt
from .orbits import rank_profile
from .rankorder import RankMatrix, star_rank_matrix

MAX_FIELD_ENUMERATION = 70_000  # q ** (n*n) budget: q=2 n<=4, q=3 n<=3


def maximal_support(sigma: Involution) -> frozenset[Arc]:
    """Arcs with no other arc strictly above them in the board order."""
    return frozenset(
        arc
        for arc in sigma.arcs
        if not any(phi_lt(arc, other) for other in sigma.arcs)
    )


def quadric_cells(sigma: Involution) -> frozenset[tuple[int, int]]:
    """Board cells strictly above some maximal arc; upward closed."""
    tops = maximal_support(sigma)
    return frozenset(
        (r, s)
        for r in range(2, sigma.n + 1)
        for s in range(1, r)
        if any(phi_lt(arc, (r, s)) for arc in tops)
    )


def gamma(a: Matrix, r: int, s: int) -> Fraction:
    """The (r, s) entry of A^2 for strictly lower-triangular A:
    sum over s < k < r of A[r,k] A[k,s]."""
    total = Fraction(0)
    for k in range(s + 1, r):
        total += Fraction(a[r - 1][k - 1]) * Fraction(a[k - 1][s - 1])
    return total


@dataclass(frozen=True)
class ZSpec:
    """Defining data of the candidate closure variety of one involution."""

    sigma: Involution
    rank_bounds: RankMatrix
    quadric_cells: frozenset[tuple[int, int]]

    def to_json(self) -> dict:
        return {
            "sigma": str(self.sigma),
            "rank_bounds": self.rank_bounds.to_json(),
            "quadric_cells": sorted(list(c) for c in self.quadric_cells),
        }


@lru_cache(maxsize=None)
def z_spec(sigma: Involution) -> ZSpec:
    return ZSpec(sigma, star_rank_matrix(sigma), quadric_cells(sigma))


def z_contains(spec: ZSpec, a: Matrix) -> bool:
    """Membership test: rank bounds on every strict lower cell and
    vanishing quadrics on the spread cells."""
    a = promote(a)
    if len(a) != spec.sigma.n:
        raise SizeMismatchError(f"matrix size {len(a)} vs n={spec.sigma.n}")
    if not is_strictly_lower(a):
        raise NotStrictlyLowerError("membership is defined for functionals")
    profile = rank_profile(a)
    for i in range(2, spec.sigma.n + 1):
        for j in range(1, i):
            if profile.entry(i, j) > spec.rank_bounds.entry(i, j):
                return False
    return all(gamma(a, r, s) == 0 for r, s in spec.quadric_cells)


def is_chain(sigma: Involution) -> bool:
    """True iff the arcs are totally ordered in the board order."""
    arcs = sigma.arcs
    return all(
        phi_lt(a, b) or phi_lt(b, a)
        for k, a in enumerate(arcs)
        for b in arcs[k + 1 :]
    )


def rothe_diagram(w: Permutation) -> frozenset[tuple[int, int]]:
    """Cells (i, j) with w(i) > j and w^{-1}(j) > i; the cell count equals
    the length of w."""
    inv = w.inverse()
    return frozenset(
        (i, j)
        for i in range(1, w.n + 1)
        for j in range(1, w.n + 1)
        if w.apply(i) > j and inv.apply(j) > i
    )


def essential_set(w: Permutation) -> frozenset[tuple[int, int]]:
    """Diagram cells whose South and East neighbours leave the diagram."""
    diagram = rothe_diagram(w)
    return frozenset(
        (i, j)
        for i, j in diagram
        if (i + 1, j) not in diagram and (i, j + 1) not in diagram
    )


def rotate90(y: Matrix) -> Matrix:
    """Clockwise quarter turn: result[i][j] = y[n-j+1][i] (1-based)."""
    n = len(y)
    return tuple(
        tuple(y[n - j - 1][i] for j in range(n)) for i in range(n)
    )


def complement_permutation(sigma: Involution) -> Permutation:
    """w0 . sigma, the permutation whose matrix is the quarter turn of
    the full placement of sigma."""
    w0 = to_permutation(longest_involution(sigma.n))
    return w0.compose(to_permutation(sigma))


def _gf_rank(rows: list[list[int]], q: int) -> int:
    rank = 0
    rows = [row[:] for row in rows]
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], q - 2, q)
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] * inv % q
                rows[r] = [(x - factor * y) % q for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _corner_rank_table_bits(rows: tuple[int, ...], n: int) -> bytes:
    """Ranks of all upper-left i x j corners of an n x n matrix over the
    two-element field, rows encoded as bit integers (column 1 = low bit)."""
    out = bytearray(n * n)
    for j in range(1, n + 1):
        mask = (1 << j) - 1
        basis: list[int] = []
        rank = 0
        for i in range(1, n + 1):
            row = rows[i - 1] & mask
            for b in basis:
                low = b & -b
                if row & low:
                    row ^= b
            if row:
                basis.append(row)
                basis.sort(key=lambda x: x & -x)
                rank += 1
            out[(i - 1) * n + (j - 1)] = rank
    return bytes(out)


def _corner_rank_table_gf(rows: list[list[int]], n: int, q: int) -> bytes:
    out = bytearray(n * n)
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            block = [row[:j] for row in rows[:i]]
            out[(i - 1) * n + (j - 1)] = _gf_rank(block, q)
    return bytes(out)


@lru_cache(maxsize=4)
def _all_corner_rank_tables(n: int, q: int) -> tuple[bytes, ...]:
    """Corner rank tables of every n x n matrix over the prime field,
    enumerated in row-major odometer order."""
    total = q ** (n * n)
    tables = []
    if q == 2:
        for code in range(total):
            rows = tuple((code >> (n * r)) & ((1 << n) - 1) for r in range(n))
            tables.append(_corner_rank_table_bits(rows, n))
    else:
        for code in range(total):
            digits = []
            rest = code
            for _ in range(n * n):
                digits.append(rest % q)
                rest //= q
            rows = [digits[r * n : (r + 1) * n] for r in range(n)]
            tables.append(_corner_rank_table_gf(rows, n, q))
    return tuple(tables)


def essential_reduction_check(sigma: Involution, q: int) -> bool:
    """Exhaustive set-level check of the essential-set reduction for a
    chain involution.

    With w the complementary permutation of sigma, every matrix over the
    q-element field meeting the corner rank bounds of the matrix of w at
    the essential cells must meet them at every cell.
    """
    if not is_chain(sigma):
        raise NotChainError(f"{sigma} is not a chain")
    n = sigma.n
    if q ** (n * n) > MAX_FIELD_ENUMERATION:
        raise TooLargeError(f"q^(n^2) = {q ** (n * n)} exceeds budget")
    w = complement_permutation(sigma)
    # row convention (rook of row k at column w(k)): the one whose corner
    # ranks the diagram formula describes
    wmat = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        wmat[k - 1][w.apply(k) - 1] = 1
    if q == 2:
        wrows = tuple(
            sum(1 << c for c in range(n) if wmat[r][c]) for r in range(n)
        )
        bounds = _corner_rank_table_bits(wrows, n)
    else:
        bounds = _corner_rank_table_gf(wmat, n, q)
    essential = sorted(essential_set(w))
    ess_flat = [((i - 1) * n + (j - 1)) for i, j in essential]
    for table in _all_corner_rank_tables(n, q):
        if any(table[k] > bounds[k] for k in ess_flat):
            continue
        if any(table[k] > bounds[k] for k in range(n * n)):
            return False
    return True
