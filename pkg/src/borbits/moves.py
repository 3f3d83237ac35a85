"""The six covering-move constructions on involutions.

Moves act on the rook placement of an involution sigma:

- ``remove``  delete a minimal arc,
- ``right``   slide an arc's column to the first free point inside it,
- ``up``      slide an arc's row to the last free point inside it,
- ``a``       swap the crossing of two arcs nested side by side,
- ``b``       swap the nesting of two comparable arcs,
- ``c``       split one arc through two free interior points.

``remove`` drops the arc count by one, ``c`` raises it by one, the rest
preserve it.  The board order on positions is (a, b) <= (c, d) iff
a <= c and b >= d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    ArcNotInSupportError,
    InvalidResultError,
    MoveNotApplicableError,
    NotACandidateError,
    NotBCandidateError,
    NotCCandidateError,
    NotMinimalError,
)
from .involutions import Arc, Involution


def phi_leq(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Board order: (a1, a2) <= (b1, b2) iff a1 <= b1 and a2 >= b2."""
    return a[0] <= b[0] and a[1] >= b[1]


def phi_lt(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a != b and phi_leq(a, b)


def minimal_support(sigma: Involution) -> frozenset[Arc]:
    """Arcs with no other arc strictly below them in the board order."""
    return frozenset(
        arc
        for arc in sigma.arcs
        if not any(phi_lt(other, arc) for other in sigma.arcs)
    )


def _require_arc(sigma: Involution, arc: Arc) -> None:
    if arc not in sigma.arcs:
        raise ArcNotInSupportError(f"{arc!r} not an arc of {sigma}")


def _replace(sigma: Involution, drop: tuple[Arc, ...], add: tuple[Arc, ...]) -> Involution:
    kept = tuple(a for a in sigma.arcs if a not in drop) + add
    return Involution(sigma.n, tuple(sorted(kept, key=lambda a: a.j)))


def move_right(sigma: Involution, arc: Arc) -> Involution | None:
    """Slide (i, j) to (i, m), m the smallest fixed point in (j, i).

    Undefined (None) when no such m exists or some arc strictly below
    (i, j) fails to stay strictly below (i, m).
    """
    _require_arc(sigma, arc)
    i, j = arc
    m = next((s for s in range(j + 1, i) if sigma.is_fixed(s)), None)
    if m is None:
        return None
    new_arc = Arc(i, m)
    for other in sigma.arcs:
        if phi_lt(other, arc) and not phi_lt(other, new_arc):
            return None
    return _replace(sigma, (arc,), (new_arc,))


def move_up(sigma: Involution, arc: Arc) -> Involution | None:
    """Slide (i, j) to (m, j), m the largest fixed point in (j, i)."""
    _require_arc(sigma, arc)
    i, j = arc
    m = next((r for r in range(i - 1, j, -1) if sigma.is_fixed(r)), None)
    if m is None:
        return None
    new_arc = Arc(m, j)
    for other in sigma.arcs:
        if phi_lt(other, arc) and not phi_lt(other, new_arc):
            return None
    return _replace(sigma, (arc,), (new_arc,))


def move_remove(sigma: Involution, arc: Arc) -> Involution:
    """Delete a minimal arc."""
    _require_arc(sigma, arc)
    if arc not in minimal_support(sigma):
        raise NotMinimalError(f"{arc!r} not minimal in {sigma}")
    return _replace(sigma, (arc,), ())


def a_candidates(sigma: Involution, arc: Arc) -> frozenset[Arc]:
    """Arcs (al, be) with j < be < i < al, no fixed point in (be, i), and
    no blocking arc (p, q): one strictly below (i, j) but not strictly
    below (be, j), or strictly below (al, be) but not strictly below
    (al, i)."""
    _require_arc(sigma, arc)
    i, j = arc
    out = []
    for al, be in sigma.arcs:
        if not (j < be < i < al):
            continue
        if any(sigma.is_fixed(r) for r in range(be + 1, i)):
            continue
        if any(
            (phi_lt(other, arc) and not phi_lt(other, (be, j)))
            or (phi_lt(other, (al, be)) and not phi_lt(other, (al, i)))
            for other in sigma.arcs
        ):
            continue
        out.append(Arc(al, be))
    return frozenset(out)


def a_move(sigma: Involution, arc: Arc, partner: Arc) -> Involution:
    """Replace (i, j), (al, be) by (be, j), (al, i)."""
    if partner not in a_candidates(sigma, arc):
        raise NotACandidateError(f"{partner!r} fails the crossing-swap conditions")
    (i, j), (al, be) = arc, partner
    return _replace(sigma, (arc, partner), (Arc(be, j), Arc(al, i)))


def b_candidates(sigma: Involution, arc: Arc) -> frozenset[Arc]:
    """Arcs strictly above (i, j) in the board order with nothing strictly
    between."""
    _require_arc(sigma, arc)
    out = []
    for other in sigma.arcs:
        if not phi_lt(arc, other):
            continue
        if any(phi_lt(arc, mid) and phi_lt(mid, other) for mid in sigma.arcs):
            continue
        out.append(other)
    return frozenset(out)


def b_move(sigma: Involution, arc: Arc, partner: Arc) -> Involution:
    """Replace (i, j), (al, be) by (i, be), (al, j)."""
    if partner not in b_candidates(sigma, arc):
        raise NotBCandidateError(f"{partner!r} fails the nesting-swap conditions")
    (i, j), (al, be) = arc, partner
    return _replace(sigma, (arc, partner), (Arc(i, be), Arc(al, j)))


def _c_clauses_hold(sigma: Involution, arc: Arc, pair: tuple[int, int]) -> bool:
    i, j = arc
    al, be = pair
    if not (i > be > al > j):
        return False
    if any(sigma.is_fixed(s) for s in range(al + 1, be)):
        return False
    for p, q in sigma.arcs:
        if phi_lt((p, q), arc) and not phi_lt((p, q), (al, j)):
            if not phi_lt((p, q), (i, be)):
                return False
    return True


def c_candidates(sigma: Involution, arc: Arc) -> frozenset[tuple[int, int]]:
    """Position pairs (al, be), j < al < be < i, both fixed points of sigma,
    with no fixed point strictly between and every arc strictly below
    (i, j) but not below (al, j) staying strictly below (i, be).

    Fixedness of al and be is required for the output to be an
    involution; pairs violating it are excluded here and rejected by
    :func:`c_move` as invalid results.
    """
    _require_arc(sigma, arc)
    i, j = arc
    return frozenset(
        (al, be)
        for al in range(j + 1, i)
        for be in range(al + 1, i)
        if _c_clauses_hold(sigma, arc, (al, be))
        and sigma.is_fixed(al)
        and sigma.is_fixed(be)
    )


def c_move(sigma: Involution, arc: Arc, pair: tuple[int, int]) -> Involution:
    """Replace (i, j) by (i, be), (al, j); raises the arc count by one."""
    _require_arc(sigma, arc)
    if not _c_clauses_hold(sigma, arc, pair):
        raise NotCCandidateError(f"{pair!r} fails the splitting conditions")
    al, be = pair
    if not (sigma.is_fixed(al) and sigma.is_fixed(be)):
        raise InvalidResultError(f"positions {pair!r} collide with existing arcs")
    i, j = arc
    return _replace(sigma, (arc,), (Arc(i, be), Arc(al, j)))


@dataclass(frozen=True)
class Move:
    """One applicable move instance: kind, source arc, optional partner.

    ``partner`` is an arc for kinds a/b and a position pair (al, be)
    with al < be for kind c; the three one-arc kinds carry none.
    """

    kind: str
    arc: Arc
    partner: tuple[int, int] | None = None


def apply_move(sigma: Involution, move: Move) -> Involution:
    if move.kind == "remove":
        result: Involution | None = move_remove(sigma, move.arc)
    elif move.kind == "right":
        result = move_right(sigma, move.arc)
    elif move.kind == "up":
        result = move_up(sigma, move.arc)
    elif move.kind == "a":
        result = a_move(sigma, move.arc, Arc(*move.partner))
    elif move.kind == "b":
        result = b_move(sigma, move.arc, Arc(*move.partner))
    elif move.kind == "c":
        result = c_move(sigma, move.arc, move.partner)
    else:
        raise MoveNotApplicableError(f"unknown move kind {move.kind!r}")
    if result is None:
        raise MoveNotApplicableError(f"{move} undefined on {sigma}")
    return result


@lru_cache(maxsize=None)
def near_moves(sigma: Involution) -> tuple[Move, ...]:
    """Every applicable move instance, in a fixed deterministic order."""
    minimal = minimal_support(sigma)
    out: list[Move] = []
    for arc in sigma.arcs:
        if arc in minimal:
            out.append(Move("remove", arc))
        if move_right(sigma, arc) is not None:
            out.append(Move("right", arc))
        if move_up(sigma, arc) is not None:
            out.append(Move("up", arc))
        for partner in sorted(a_candidates(sigma, arc)):
            out.append(Move("a", arc, tuple(partner)))
        for partner in sorted(b_candidates(sigma, arc)):
            out.append(Move("b", arc, tuple(partner)))
        for pair in sorted(c_candidates(sigma, arc)):
            out.append(Move("c", arc, pair))
    return tuple(out)


def n_minus(sigma: Involution) -> frozenset[Involution]:
    return frozenset(
        apply_move(sigma, m) for m in near_moves(sigma) if m.kind == "remove"
    )


def n_zero(sigma: Involution) -> frozenset[Involution]:
    return frozenset(
        apply_move(sigma, m)
        for m in near_moves(sigma)
        if m.kind in ("right", "up", "a", "b")
    )


def n_plus(sigma: Involution) -> frozenset[Involution]:
    return frozenset(apply_move(sigma, m) for m in near_moves(sigma) if m.kind == "c")


def near(sigma: Involution) -> frozenset[Involution]:
    """All outputs of all applicable moves."""
    return n_minus(sigma) | n_zero(sigma) | n_plus(sigma)


def n_prime(sigma: Involution) -> frozenset[Involution]:
    """Removals at minimal arcs whose closed interval [j, i] is free of
    fixed points."""
    out = []
    for move in near_moves(sigma):
        if move.kind != "remove":
            continue
        i, j = move.arc
        if all(not sigma.is_fixed(m) for m in range(j, i + 1)):
            out.append(apply_move(sigma, move))
    return frozenset(out)


def near_prime(sigma: Involution) -> frozenset[Involution]:
    """Restricted neighbour set; equals the set of elements sigma covers
    in both Bruhat-Chevalley order and the lower-placement order."""
    return n_prime(sigma) | n_zero(sigma) | n_plus(sigma)
