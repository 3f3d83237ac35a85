"""Involutions of the symmetric group, their rook placements, and words.

Conventions used throughout the package:

- All indices are 1-based; matrices are tuples of row tuples.
- An involution is stored by its 2-cycles ("arcs"), each written (i, j)
  with i > j, sorted by ascending j.  Drawn as rooks, the arcs live on
  the strictly lower-triangular board ``{(i, j) : 1 <= j < i <= n}``.
- A permutation w is stored in one-line notation, ``one_line[k-1] = w(k)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import (
    BorbitsError,
    CycleSyntaxError,
    IndexOutOfRangeError,
    OverlapError,
    SizeMismatchError,
)


class Arc(NamedTuple):
    """A 2-cycle (i, j) with i > j: a rook in row i, column j."""

    i: int
    j: int


@dataclass(frozen=True)
class Involution:
    """A self-inverse permutation of {1..n}, stored by its disjoint arcs.

    The tuple of arcs is normalized: each arc has i > j, arcs are sorted
    by ascending j, and every index appears in at most one arc.  Use
    :func:`involution` or :func:`parse_involution` to build one from
    unnormalized data.
    """

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise IndexOutOfRangeError(f"size must be >= 1, got {self.n}")
        seen: set[int] = set()
        prev_j = 0
        for arc in self.arcs:
            i, j = arc
            if not (1 <= j < i <= self.n):
                raise IndexOutOfRangeError(f"arc {arc!r} out of range for n={self.n}")
            if i in seen or j in seen:
                raise OverlapError(f"endpoint of {arc!r} repeated")
            if j <= prev_j:
                raise BorbitsError(f"arcs not sorted by ascending j: {self.arcs!r}")
            seen.update(arc)
            prev_j = j

    def apply(self, m: int) -> int:
        """Image of m, i.e. the partner of m or m itself if fixed."""
        for i, j in self.arcs:
            if m == i:
                return j
            if m == j:
                return i
        return m

    def is_fixed(self, m: int) -> bool:
        return self.apply(m) == m

    def one_line(self) -> tuple[int, ...]:
        image = list(range(1, self.n + 1))
        for i, j in self.arcs:
            image[i - 1], image[j - 1] = j, i
        return tuple(image)

    def __str__(self) -> str:
        return format_involution(self)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation (1-based values)."""

    one_line: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.one_line)) != tuple(range(1, len(self.one_line) + 1)):
            raise IndexOutOfRangeError(f"not a permutation: {self.one_line!r}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    def apply(self, k: int) -> int:
        return self.one_line[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, image in enumerate(self.one_line, start=1):
            inv[image - 1] = k
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self . other)(k) = self(other(k))."""
        if self.n != other.n:
            raise SizeMismatchError(f"sizes differ: {self.n} vs {other.n}")
        return Permutation(tuple(self.one_line[x - 1] for x in other.one_line))


def involution(n: int, pairs: Iterable[tuple[int, int]]) -> Involution:
    """Build an involution from unordered cycles, normalizing each to (i, j)
    with i > j and sorting by ascending j."""
    arcs = []
    for a, b in pairs:
        if a == b:
            raise OverlapError(f"cycle ({a},{b}) repeats its endpoint")
        arcs.append(Arc(max(a, b), min(a, b)))
    return Involution(n, tuple(sorted(arcs, key=lambda arc: arc.j)))


def identity_involution(n: int) -> Involution:
    return Involution(n, ())


def longest_involution(n: int) -> Involution:
    """The order-reversing element (n,1)(n-1,2)...: maximal in every order here."""
    return involution(n, [(n - k, k + 1) for k in range(n // 2)])


_CYCLE_RE = re.compile(r"\((\d+),(\d+)\)")


def parse_involution(text: str, n: int) -> Involution:
    """Parse cycle notation like ``"(3,1)(5,2)"`` or ``"id"``.

    Whitespace-insensitive; cycles may be written in either endpoint
    order and are normalized.  Raises :class:`CycleSyntaxError` on
    malformed text, :class:`IndexOutOfRangeError` for endpoints outside
    1..n, and :class:`OverlapError` for repeated endpoints.
    """
    compact = "".join(text.split())
    if compact == "id":
        return identity_involution(n)
    if not compact or _CYCLE_RE.sub("", compact):
        raise CycleSyntaxError(f"cannot parse involution from {text!r}")
    pairs = [(int(a), int(b)) for a, b in _CYCLE_RE.findall(compact)]
    for a, b in pairs:
        if not (1 <= a <= n and 1 <= b <= n):
            raise IndexOutOfRangeError(f"endpoint of ({a},{b}) outside 1..{n}")
    return involution(n, pairs)


def format_involution(sigma: Involution) -> str:
    if not sigma.arcs:
        return "id"
    return "".join(f"({i},{j})" for i, j in sigma.arcs)


def involution_to_json(sigma: Involution) -> dict:
    """JSON form: cycle string, arc list, and one-line integer array."""
    return {
        "cycles": format_involution(sigma),
        "arcs": [list(arc) for arc in sigma.arcs],
        "one_line": list(sigma.one_line()),
    }


def to_permutation(sigma: Involution) -> Permutation:
    return Permutation(sigma.one_line())


def involution_from_one_line(one_line: Iterable[int]) -> Involution:
    """Inverse of :func:`to_permutation`; rejects non-involutions."""
    word = tuple(one_line)
    perm = Permutation(word)
    pairs = []
    for k, image in enumerate(word, start=1):
        if perm.apply(image) != k:
            raise OverlapError(f"{word!r} is not self-inverse")
        if image > k:
            pairs.append((image, k))
    return involution(perm.n, pairs)


def length(w: Permutation) -> int:
    """Number of inversions, i.e. the length of any reduced word."""
    word = w.one_line
    return sum(
        1
        for a in range(len(word))
        for b in range(a + 1, len(word))
        if word[a] > word[b]
    )


@lru_cache(maxsize=None)
def _involutions_sorted(n: int) -> tuple[Involution, ...]:
    found: list[Involution] = []

    def extend(points: tuple[int, ...], arcs: tuple[tuple[int, int], ...]) -> None:
        if not points:
            found.append(involution(n, arcs))
            return
        p, rest = points[0], points[1:]
        extend(rest, arcs)  # p fixed
        for k, q in enumerate(rest):  # p paired with a larger point
            extend(rest[:k] + rest[k + 1 :], arcs + ((q, p),))

    extend(tuple(range(1, n + 1)), ())
    found.sort(key=lambda s: s.one_line())
    return tuple(found)


def enumerate_involutions(n: int) -> tuple[Involution, ...]:
    """All involutions of S_n, ordered lexicographically by one-line form.

    Built by direct arc recursion (pair or fix the smallest unused point),
    never by filtering all n! permutations.
    """
    if n < 1:
        raise IndexOutOfRangeError(f"size must be >= 1, got {n}")
    return _involutions_sorted(n)


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """A reduced word for w in the adjacent transpositions s_1..s_{n-1}.

    Deterministic: repeatedly clears the leftmost descent.  The word has
    length ``length(w)`` and :func:`eval_word` reproduces w.
    """
    current = list(w.one_line)
    removed: list[int] = []
    while True:
        for k in range(len(current) - 1):
            if current[k] > current[k + 1]:
                current[k], current[k + 1] = current[k + 1], current[k]
                removed.append(k + 1)
                break
        else:
            return tuple(reversed(removed))


def eval_word(n: int, word: Iterable[int]) -> Permutation:
    """Product of adjacent transpositions, multiplied left to right."""
    current = list(range(1, n + 1))
    for s in word:
        if not 1 <= s <= n - 1:
            raise IndexOutOfRangeError(f"letter {s} outside 1..{n - 1}")
        current[s - 1], current[s] = current[s], current[s - 1]
    return Permutation(tuple(current))


@lru_cache(maxsize=None)
def _subword_closure(one_line: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    # All products of subwords of one reduced word; by the subword
    # property this set does not depend on the chosen word.
    n = len(one_line)
    word = reduced_word(Permutation(one_line))
    reachable: set[tuple[int, ...]] = {tuple(range(1, n + 1))}
    for s in word:
        extra = set()
        for prod in reachable:
            grown = list(prod)
            grown[s - 1], grown[s] = grown[s], grown[s - 1]
            extra.add(tuple(grown))
        reachable |= extra
    return frozenset(reachable)


def bruhat_leq_subword(v: Permutation, w: Permutation) -> bool:
    """Subword test for v <= w in Bruhat-Chevalley order.

    True iff some subword of a reduced word of w multiplies out to v.
    Exponential in principle; fine at desk scale (length(w) <= ~12).
    """
    if v.n != w.n:
        raise SizeMismatchError(f"sizes differ: {v.n} vs {w.n}")
    return v.one_line in _subword_closure(w.one_line)


def permutation_matrix(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """0/1 matrix with the rook of column k in row w(k); symmetric for
    involutions."""
    n = w.n
    rows = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        rows[w.apply(k) - 1][k - 1] = 1
    return tuple(tuple(row) for row in rows)


def rook_matrix_upper(sigma: Involution) -> tuple[tuple[int, ...], ...]:
    """Strictly upper-triangular rook placement: a 1 at (j, i) per arc (i, j)."""
    rows = [[0] * sigma.n for _ in range(sigma.n)]
    for i, j in sigma.arcs:
        rows[j - 1][i - 1] = 1
    return tuple(tuple(row) for row in rows)


def rook_matrix_lower(sigma: Involution) -> tuple[tuple[int, ...], ...]:
    """Strictly lower-triangular rook placement: a 1 at (i, j) per arc (i, j)."""
    rows = [[0] * sigma.n for _ in range(sigma.n)]
    for i, j in sigma.arcs:
        rows[i - 1][j - 1] = 1
    return tuple(tuple(row) for row in rows)
