"""Exhaustive posets of involutions, their covers, and order-side
neighbour classes.

The covering DAG is one route; the L-classes below are computed from the
raw order predicate by definition-level scans, so the two can be checked
against each other and against the move constructions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import BoundExceededError, NotInPosetError, UnknownSuiteError
from .involutions import (
    Involution,
    enumerate_involutions,
    format_involution,
    to_permutation,
)
from .rankorder import leq_bruhat, leq_melnikov, leq_star

ORDER_NAMES = ("star", "melnikov", "bruhat")

DEFAULT_MAX_N = 8


def order_predicate(order: str):
    if order == "star":
        return leq_star
    if order == "melnikov":
        return leq_melnikov
    if order == "bruhat":
        return lambda tau, sigma: leq_bruhat(to_permutation(tau), to_permutation(sigma))
    raise UnknownSuiteError(f"unknown order {order!r}; expected one of {ORDER_NAMES}")


@dataclass(frozen=True, eq=False)
class Poset:
    """All involutions of S_n under one of the three orders.

    ``less[k]`` is a bitmask of the indices strictly below element k;
    ``covers[k]`` lists the indices that element k covers (its lower
    covers), i.e. the transitive reduction of the order.
    """

    order: str
    n: int
    elements: tuple[Involution, ...]
    less: tuple[int, ...]
    covers: tuple[tuple[int, ...], ...]
    index: dict = field(repr=False)

    def index_of(self, sigma: Involution) -> int:
        try:
            return self.index[sigma]
        except KeyError:
            raise NotInPosetError(f"{sigma} not in poset of size {self.n}") from None

    def leq(self, tau: Involution, sigma: Involution) -> bool:
        a, b = self.index_of(tau), self.index_of(sigma)
        return a == b or bool(self.less[b] >> a & 1)

    def covers_of(self, sigma: Involution) -> frozenset[Involution]:
        return frozenset(self.elements[k] for k in self.covers[self.index_of(sigma)])


@lru_cache(maxsize=None)
def build_poset(n: int, order: str = "star", max_n: int = DEFAULT_MAX_N) -> Poset:
    """Build the full poset by pairwise comparison; covers come from
    removing every relation implied by a two-step path."""
    if n > max_n:
        raise BoundExceededError(f"n={n} exceeds poset bound {max_n}")
    pred = order_predicate(order)
    elements = enumerate_involutions(n)
    size = len(elements)
    less = []
    for b in range(size):
        mask = 0
        for a in range(size):
            if a != b and pred(elements[a], elements[b]):
                mask |= 1 << a
        less.append(mask)
    covers = []
    for b in range(size):
        implied = 0
        below = less[b]
        for a in range(size):
            if below >> a & 1:
                implied |= less[a]
        direct = below & ~implied
        covers.append(tuple(a for a in range(size) if direct >> a & 1))
    return Poset(
        order=order,
        n=n,
        elements=elements,
        less=tuple(less),
        covers=tuple(covers),
        index={sigma: k for k, sigma in enumerate(elements)},
    )


@dataclass(frozen=True)
class LSets:
    """Order-side neighbour classes of one element, from definition-level
    scans of the raw order predicate (not from the covers DAG).

    - ``l_minus``: strictly below with smaller arc count, and minimal
      among such through the arc-count-filtered intermediacy clause;
    - ``l_zero`` / ``l_plus``: strictly below with equal / larger arc
      count and no strictly intermediate element at all;
    - ``l_prime``: the subset of ``l_minus`` passing the unconditional
      intermediacy clause;
    - ``l_star``: the covering set, equal to l_prime | l_zero | l_plus.
    """

    l_minus: frozenset[Involution]
    l_zero: frozenset[Involution]
    l_plus: frozenset[Involution]
    l_prime: frozenset[Involution]
    l_star: frozenset[Involution]


def l_sets(sigma: Involution, poset: Poset) -> LSets:
    b = poset.index_of(sigma)
    elements = poset.elements
    below = [a for a in range(len(elements)) if poset.less[b] >> a & 1]
    s_sigma = len(sigma.arcs)

    def intermediate(a: int, s_filter: bool) -> bool:
        # some w with a <= w < b, w != a (strictly between in the weak sense)
        for w in below:
            if w == a:
                continue
            if not (poset.less[w] >> a & 1):
                continue
            if s_filter and len(elements[w].arcs) >= s_sigma:
                continue
            return True
        return False

    minus, zero, plus, prime, star = [], [], [], [], []
    for a in below:
        s_a = len(elements[a].arcs)
        blocked_plain = intermediate(a, s_filter=False)
        if s_a < s_sigma:
            if not intermediate(a, s_filter=True):
                minus.append(a)
            if not blocked_plain:
                prime.append(a)
        elif s_a == s_sigma:
            if not blocked_plain:
                zero.append(a)
        else:
            if not blocked_plain:
                plus.append(a)
        if not blocked_plain:
            star.append(a)
    wrap = lambda idxs: frozenset(elements[k] for k in idxs)
    return LSets(wrap(minus), wrap(zero), wrap(plus), wrap(prime), wrap(star))


def is_graded(poset: Poset) -> bool:
    """True iff every maximal chain from the unique bottom to the unique
    top has the same length.

    Checked structurally: with rank(x) = longest cover path from the
    bottom, every cover edge must raise the rank by exactly one.
    """
    size = len(poset.elements)
    bottoms = [k for k in range(size) if poset.less[k] == 0]
    tops = [k for k in range(size) if not any(poset.less[b] >> k & 1 for b in range(size) if b != k)]
    if len(bottoms) != 1 or len(tops) != 1:
        return False
    order_by_downset = sorted(range(size), key=lambda k: poset.less[k].bit_count())
    rank = [0] * size
    for b in order_by_downset:
        for a in poset.covers[b]:
            rank[b] = max(rank[b], rank[a] + 1)
    return all(
        rank[b] == rank[a] + 1 for b in range(size) for a in poset.covers[b]
    )


def poset_ranks(poset: Poset) -> tuple[int, ...]:
    """Longest-cover-path rank of each element (the layer used for DOT)."""
    size = len(poset.elements)
    rank = [0] * size
    for b in sorted(range(size), key=lambda k: poset.less[k].bit_count()):
        for a in poset.covers[b]:
            rank[b] = max(rank[b], rank[a] + 1)
    return tuple(rank)


def hasse_edges(poset: Poset) -> tuple[tuple[int, int], ...]:
    """Cover edges as (upper, lower) index pairs, sorted."""
    return tuple(
        (b, a) for b in range(len(poset.elements)) for a in poset.covers[b]
    )


def hasse_dot(poset: Poset) -> str:
    """DOT digraph: one node per involution labelled by cycle notation,
    one edge per cover, nodes layered by rank."""
    ranks = poset_ranks(poset)
    lines = ["digraph hasse {", "  rankdir=BT;", '  node [shape=box];']
    for k, sigma in enumerate(poset.elements):
        lines.append(f'  v{k} [label="{format_involution(sigma)}"];')
    for level in sorted(set(ranks)):
        same = " ".join(f"v{k};" for k in range(len(ranks)) if ranks[k] == level)
        lines.append(f"  {{ rank=same; {same} }}")
    for b, a in hasse_edges(poset):
        lines.append(f"  v{b} -> v{a};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(poset: Poset) -> str:
    """JSON export: elements in enumeration order, covers as index pairs
    [upper, lower]."""
    payload = {
        "n": poset.n,
        "order": poset.order,
        "elements": [format_involution(s) for s in poset.elements],
        "covers": [list(edge) for edge in hasse_edges(poset)],
    }
    return json.dumps(payload, sort_keys=True)
