"""Exact action of the upper-triangular group on strictly lower-triangular
functionals, orbit representatives, degeneration curves, and dimensions.

The action is ``act(g, lam) = strictly lower part of g lam g^{-1}``.
Because conjugation by an upper-triangular g sends upper-plus-diagonal
matrices to upper-plus-diagonal matrices, truncating between steps is
harmless: act(g, act(h, lam)) == act(g h, lam).

Degeneration curves live over the exact rational-function field in eps,
so limits at eps -> 0 and identities of curves are exact equalities, not
numeric approximations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IndexOutOfRangeError,
    LimitUndefinedError,
    MissingArcError,
    MoveNotApplicableError,
    NotStrictlyLowerError,
    NotUpperTriangularError,
    SingularElementError,
    ZeroXiError,
)
from .involutions import Arc, Involution, rook_matrix_lower
from .matrices import (
    Matrix,
    exact_det,
    field_constants,
    identity_matrix,
    is_strictly_lower,
    is_upper_triangular,
    mat_from_entries,
    mat_mul,
    promote,
    strictly_lower_part,
    upper_inverse,
)
from .moves import Move, apply_move, near_moves
from .rankorder import RankMatrix, exact_rank
from .ratfunc import EPS, EPS_INV, RF_ONE, RFun


def x_elem(n: int, j: int, i: int, alpha) -> Matrix:
    """One-parameter element: identity plus alpha at (j, i).

    On the diagonal (j == i) the entry becomes 1 + alpha, which must not
    vanish.
    """
    if not (1 <= j <= n and 1 <= i <= n):
        raise IndexOutOfRangeError(f"({j},{i}) outside 1..{n}")
    if not isinstance(alpha, RFun):
        alpha = Fraction(alpha)
    one, _ = field_constants(alpha)
    if j == i and not (one + alpha):
        raise SingularElementError("diagonal entry 1 + alpha vanishes")
    rows = [list(row) for row in identity_matrix(n, like=one)]
    rows[j - 1][i - 1] = rows[j - 1][i - 1] + alpha
    return tuple(tuple(row) for row in rows)


def act(g: Matrix, lam: Matrix) -> Matrix:
    """The induced action: strictly lower part of g lam g^{-1}."""
    g = promote(g)
    lam = promote(lam)
    if not is_upper_triangular(g):
        raise NotUpperTriangularError("group element must be upper triangular")
    if not is_strictly_lower(lam):
        raise NotStrictlyLowerError("functional must be strictly lower triangular")
    return strictly_lower_part(mat_mul(mat_mul(g, lam), upper_inverse(g)))


def orbit_point(sigma: Involution, xi: dict[Arc, Fraction] | None = None) -> Matrix:
    """The base functional of sigma: weight xi(arc) at each arc position,
    weight 1 everywhere when xi is omitted."""
    if xi is None:
        return promote(rook_matrix_lower(sigma))
    rows = [[Fraction(0)] * sigma.n for _ in range(sigma.n)]
    for arc in sigma.arcs:
        if arc not in xi:
            raise MissingArcError(f"no weight for arc {arc!r}")
        value = Fraction(xi[arc])
        if value == 0:
            raise ZeroXiError(f"weight of {arc!r} must be nonzero")
        rows[arc.i - 1][arc.j - 1] = value
    return tuple(tuple(row) for row in rows)


def _echelon_insert(basis: list, row: list) -> bool:
    """Reduce row against basis; append if independent.  Returns True on
    growth.  Basis rows are kept with a leading nonzero pivot position."""
    for pivot_col, pivot_row in basis:
        if row[pivot_col]:
            factor = row[pivot_col] / pivot_row[pivot_col]
            for k in range(len(row)):
                row[k] = row[k] - factor * pivot_row[k]
    for col, value in enumerate(row):
        if value:
            basis.append((col, row))
            basis.sort(key=lambda item: item[0])
            return True
    return False


def rank_profile(lam: Matrix) -> RankMatrix:
    """Corner ranks of all South-West truncations of a strictly
    lower-triangular matrix, by exact elimination; entries outside the
    strict lower triangle are 0."""
    lam = promote(lam)
    if not is_strictly_lower(lam):
        raise NotStrictlyLowerError("rank profile is defined on functionals")
    n = len(lam)
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n + 1):
        basis: list = []
        rank = 0
        for i in range(n, j, -1):  # rank of lam[i..n, 1..j], i > j
            if _echelon_insert(basis, list(lam[i - 1][:j])):
                rank += 1
            rows[i - 1][j - 1] = rank
    return RankMatrix(n, tuple(tuple(r) for r in rows))


def orbit_dimension(sigma: Involution) -> int:
    """Dimension of the orbit through the base functional of sigma.

    Computed as the rank of the linearized action on the triangular Lie
    algebra: dim b minus the dimension of {x upper triangular with
    bracket [x, lam] vanishing strictly below the diagonal}.
    """
    n = sigma.n
    lam = rook_matrix_lower(sigma)
    basis = [(p, q) for p in range(1, n + 1) for q in range(p, n + 1)]
    lower = [(r, s) for r in range(1, n + 1) for s in range(1, r)]
    matrix = []
    for r, s in lower:
        row = []
        for p, q in basis:
            # ([e_pq, lam])_{r,s} = delta_{r,p} lam_{q,s} - lam_{r,p} delta_{q,s}
            value = 0
            if r == p:
                value += lam[q - 1][s - 1]
            if q == s:
                value -= lam[r - 1][p - 1]
            row.append(Fraction(value))
        matrix.append(tuple(row))
    return exact_rank(tuple(matrix)) if matrix else 0


def delta_minors(y: Matrix) -> tuple[Fraction, ...]:
    """Bottom-left corner determinants: the k-th minor spans rows
    n-k+1..n and columns 1..k, for k up to n // 2."""
    n = len(y)
    out = []
    for k in range(1, n // 2 + 1):
        block = tuple(tuple(y[r][c] for c in range(k)) for r in range(n - k, n))
        out.append(exact_det(block))
    return tuple(out)


def random_borel(n: int, seed: int, bound: int = 3) -> Matrix:
    """Seeded random upper-triangular matrix: diagonal in 1..bound,
    above-diagonal in -bound..bound.  Deterministic per (n, seed, bound)."""
    if bound < 1:
        raise IndexOutOfRangeError(f"bound must be >= 1, got {bound}")
    rng = random.Random(seed * 1_000_003 + n * 1_009 + bound)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for r in range(n):
        rows[r][r] = Fraction(rng.randint(1, bound))
        for c in range(r + 1, n):
            rows[r][c] = Fraction(rng.randint(-bound, bound))
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class Degeneration:
    """A curve inside the orbit of sigma whose limit at eps -> 0 is the
    base functional of the move's output.

    ``word`` lists (j, i, alpha) factors for :func:`x_elem`, leftmost
    first; ``curve`` is the acted functional over the rational-function
    field; ``limit`` is its entrywise value at 0.
    """

    move: Move
    word: tuple[tuple[int, int, RFun], ...]
    curve: Matrix
    limit: Matrix


def _torus_factor(i: int, value: RFun) -> tuple[int, int, RFun]:
    # x_elem puts 1 + alpha on the diagonal, so alpha = value - 1
    return (i, i, value - RF_ONE)


def degeneration_word(sigma: Involution, move: Move) -> tuple[tuple[int, int, RFun], ...]:
    """The elementary factor list of the degeneration curve for one move."""
    i, j = move.arc
    if move.kind == "remove":
        return (_torus_factor(i, EPS),)
    if move.kind in ("right", "up"):
        # recover the slide target, the unique new endpoint
        tau = apply_move(sigma, move)
        (m,) = set(p for arc in tau.arcs for p in arc) - set(
            p for arc in sigma.arcs for p in arc
        )
        if move.kind == "right":
            return ((j, m, -EPS_INV), _torus_factor(i, EPS))
        return ((m, i, EPS_INV), _torus_factor(i, EPS))
    if move.kind == "c":
        al, be = move.partner
        return ((al, i, EPS_INV), (j, be, -EPS_INV), _torus_factor(i, EPS))
    if move.kind == "a":
        al, be = move.partner
        return (
            (be, i, EPS_INV),
            _torus_factor(i, EPS),
            _torus_factor(al, -EPS),
        )
    if move.kind == "b":
        al, be = move.partner
        return (
            (be, j, -EPS_INV),
            (i, al, EPS_INV),
            _torus_factor(al, EPS),
            _torus_factor(i, EPS - EPS_INV),
        )
    raise MoveNotApplicableError(f"unknown move kind {move.kind!r}")


def degeneration_closed_form(sigma: Involution, move: Move) -> Matrix:
    """The displayed entries of the curve, built directly: the second,
    independent route against which the group-action computation is
    checked."""
    i, j = move.arc
    entries: dict[tuple[int, int], RFun] = {}
    for a, b in sigma.arcs:
        entries[(a, b)] = RF_ONE
    entries[(i, j)] = EPS
    if move.kind in ("right", "up"):
        tau = apply_move(sigma, move)
        (m,) = set(p for arc in tau.arcs for p in arc) - set(
            p for arc in sigma.arcs for p in arc
        )
        entries[(i, m) if move.kind == "right" else (m, j)] = RF_ONE
    elif move.kind == "c":
        al, be = move.partner
        entries[(al, j)] = RF_ONE
        entries[(i, be)] = RF_ONE
    elif move.kind == "a":
        al, be = move.partner
        entries[(be, j)] = RF_ONE
        entries[(al, i)] = RF_ONE
        entries[(al, be)] = -EPS
    elif move.kind == "b":
        al, be = move.partner
        entries[(i, be)] = RF_ONE
        entries[(al, j)] = RF_ONE
        entries[(al, be)] = EPS
    return mat_from_entries(sigma.n, entries, like=RF_ONE)


def degeneration(sigma: Involution, move: Move) -> Degeneration:
    """Compute the degeneration curve of a move by the honest group
    action over the rational-function field, and its limit at 0."""
    if move not in near_moves(sigma):
        raise MoveNotApplicableError(f"{move} not applicable to {sigma}")
    word = degeneration_word(sigma, move)
    n = sigma.n
    g = identity_matrix(n, like=RF_ONE)
    for jj, ii, alpha in word:
        g = mat_mul(g, x_elem(n, jj, ii, alpha))
    lam = tuple(
        tuple(RFun.const(x) for x in row) for row in rook_matrix_lower(sigma)
    )
    curve = act(g, lam)
    try:
        limit = tuple(tuple(entry.eval_at(0) for entry in row) for row in curve)
    except ZeroDivisionError as exc:
        raise LimitUndefinedError(str(exc)) from exc
    return Degeneration(move=move, word=word, curve=curve, limit=limit)


def diagonal_weights(sigma: Involution, d: Matrix) -> dict[Arc, Fraction]:
    """The arc weights produced by acting with a diagonal matrix:
    weight(arc) = d_i / d_j."""
    return {
        arc: Fraction(d[arc.i - 1][arc.i - 1]) / Fraction(d[arc.j - 1][arc.j - 1])
        for arc in sigma.arcs
    }
