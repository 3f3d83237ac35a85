"""Shared brute-force oracles, kept independent of the code paths they
check."""

from __future__ import annotations

import itertools

import pytest

from borbits import Involution, Permutation, involution_from_one_line


def filter_involutions(n: int) -> list[Involution]:
    """Oracle: walk all n! permutations and keep the self-inverse ones."""
    out = []
    for word in itertools.permutations(range(1, n + 1)):
        perm = Permutation(word)
        if perm.compose(perm).one_line == tuple(range(1, n + 1)):
            out.append(involution_from_one_line(word))
    return out


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(w) for w in itertools.permutations(range(1, n + 1))]


def apply_cycles_oracle(n: int, pairs) -> tuple[int, ...]:
    """Oracle for one-line forms: apply each transposition to 1..n."""
    image = list(range(1, n + 1))
    for a, b in pairs:
        image[a - 1], image[b - 1] = image[b - 1], image[a - 1]
    return tuple(image)


@pytest.fixture(scope="session")
def small_posets():
    from borbits import build_poset

    return {n: build_poset(n, "star") for n in range(1, 7)}
