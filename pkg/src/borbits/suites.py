"""Named verification suites with machine-readable, replayable reports.

Each suite exhaustively checks one family of statements at a given size.
Reports are deterministic given (n, seed): the serialized form excludes
wall time (kept on the report object for humans) so that two runs are
byte-identical.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass

from .closure import (
    essential_reduction_check,
    is_chain,
    z_contains,
    z_spec,
)
from .errors import BoundExceededError, UnknownSuiteError
from .involutions import (
    Permutation,
    enumerate_involutions,
    format_involution,
    length,
    longest_involution,
    to_permutation,
)
from .moves import (
    apply_move,
    n_minus,
    n_plus,
    n_prime,
    n_zero,
    near_moves,
    near_prime,
)
from .orbits import (
    act,
    degeneration,
    degeneration_closed_form,
    orbit_dimension,
    orbit_point,
    random_borel,
    rank_profile,
)
from .poset import build_poset, hasse_dot, hasse_json, is_graded, l_sets
from .rankorder import bruhat_rank_matrix, leq_star, star_rank_matrix

SUITE_BOUNDS = {
    "counts": 8,
    "order-equivalence": 8,
    "covers": 6,
    "graded": 7,
    "dimension": 6,
    "rank-invariance": 6,
    "degeneration": 6,
    "closure": 6,
    "essential-set": 4,
}

HASSE_MAX_N = 8


@dataclass
class SuiteReport:
    """Outcome of one suite run; passing means no failure records."""

    suite: str
    n: int
    checked: int
    failures: tuple[dict, ...]
    wall_time: float
    observations: tuple[dict, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        # wall_time deliberately excluded: reports must be byte-identical
        # across runs for fixed (n, seed)
        out = {
            "suite": self.suite,
            "n": self.n,
            "checked": self.checked,
            "failures": list(self.failures),
            "passed": self.passed,
        }
        if self.observations:
            out["observations"] = list(self.observations)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        # counterexample first, aggregate counts after
        lines = [f"suite: {self.suite}", f"n: {self.n}"]
        if self.failures:
            lines.append(
                "first failure: " + json.dumps(self.failures[0], sort_keys=True)
            )
        lines.append(f"checked: {self.checked}")
        lines.append(f"failures: {len(self.failures)}")
        for obs in self.observations:
            lines.append("observation: " + json.dumps(obs, sort_keys=True))
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def _suite_counts(n: int, seed: int, samples: int):
    checked, failures = 0, []
    for m in range(1, n + 1):
        enumerated = len(enumerate_involutions(m))
        filtered = 0
        for word in itertools.permutations(range(1, m + 1)):
            perm = Permutation(word)
            if perm.compose(perm).one_line == tuple(range(1, m + 1)):
                filtered += 1
        checked += 1
        if enumerated != filtered:
            failures.append({"n": m, "enumerated": enumerated, "filtered": filtered})
    return checked, failures, ()


def _suite_order_equivalence(n: int, seed: int, samples: int):
    elements = enumerate_involutions(n)
    checked, failures = 0, []
    stars = [star_rank_matrix(s) for s in elements]
    fulls = [bruhat_rank_matrix(to_permutation(s)) for s in elements]

    def dominated(a, b):
        for ra, rb in zip(a.rows, b.rows):
            for x, y in zip(ra, rb):
                if x > y:
                    return False
        return True

    for a in range(len(elements)):
        for b in range(len(elements)):
            star = dominated(stars[a], stars[b])
            bruhat = dominated(fulls[a], fulls[b])
            checked += 1
            if star != bruhat:
                failures.append(
                    {
                        "tau": format_involution(elements[a]),
                        "sigma": format_involution(elements[b]),
                        "star": star,
                        "bruhat": bruhat,
                    }
                )
    return checked, failures, ()


def _suite_covers(n: int, seed: int, samples: int):
    poset = build_poset(n, "star")
    checked, failures = 0, []
    for sigma in poset.elements:
        sets = l_sets(sigma, poset)
        got = {
            "minus": n_minus(sigma),
            "zero": n_zero(sigma),
            "plus": n_plus(sigma),
            "prime": n_prime(sigma),
        }
        want = {
            "minus": sets.l_minus,
            "zero": sets.l_zero,
            "plus": sets.l_plus,
            "prime": sets.l_prime,
        }
        checked += 1
        for name in got:
            if got[name] != want[name]:
                failures.append(
                    {
                        "sigma": format_involution(sigma),
                        "set": name,
                        "moves": sorted(map(format_involution, got[name])),
                        "order": sorted(map(format_involution, want[name])),
                    }
                )
        if near_prime(sigma) != poset.covers_of(sigma):
            failures.append(
                {
                    "sigma": format_involution(sigma),
                    "set": "covering",
                    "moves": sorted(map(format_involution, near_prime(sigma))),
                    "order": sorted(map(format_involution, poset.covers_of(sigma))),
                }
            )
        if near_prime(sigma) != sets.l_star:
            failures.append(
                {"sigma": format_involution(sigma), "set": "l_star mismatch"}
            )
    return checked, failures, ()


def _suite_graded(n: int, seed: int, samples: int):
    poset = build_poset(n, "star")
    edges = sum(len(c) for c in poset.covers)
    failures = []
    if not is_graded(poset):
        failures.append({"n": n, "detail": "maximal chains of unequal length"})
    return edges, failures, ()


def _suite_dimension(n: int, seed: int, samples: int):
    checked, failures = 0, []
    for sigma in enumerate_involutions(n):
        checked += 1
        dim = orbit_dimension(sigma)
        expect = length(to_permutation(sigma))
        if dim != expect:
            failures.append(
                {"sigma": format_involution(sigma), "dimension": dim, "length": expect}
            )
    return checked, failures, ()


def _suite_rank_invariance(n: int, seed: int, samples: int):
    checked, failures = 0, []
    for index, sigma in enumerate(enumerate_involutions(n)):
        base = orbit_point(sigma)
        expect = star_rank_matrix(sigma)
        for k in range(samples):
            sample_seed = seed * 1_000_003 + index * 1_000 + k
            g = random_borel(n, sample_seed)
            checked += 1
            if rank_profile(act(g, base)) != expect:
                failures.append(
                    {"sigma": format_involution(sigma), "seed": sample_seed}
                )
    return checked, failures, ()


def _suite_degeneration(n: int, seed: int, samples: int):
    checked, failures = 0, []
    for sigma in enumerate_involutions(n):
        for move in near_moves(sigma):
            checked += 1
            record = {
                "sigma": format_involution(sigma),
                "move": move.kind,
                "arc": list(move.arc),
                "partner": list(move.partner) if move.partner else None,
            }
            result = degeneration(sigma, move)
            if result.curve != degeneration_closed_form(sigma, move):
                failures.append({**record, "detail": "curve != closed form"})
                continue
            tau = apply_move(sigma, move)
            if result.limit != orbit_point(tau):
                failures.append({**record, "detail": "limit != target functional"})
    return checked, failures, ()


def _suite_closure(n: int, seed: int, samples: int, explore: bool = False):
    checked, failures = 0, []
    observations = []
    elements = enumerate_involutions(n)
    for index, sigma in enumerate(elements):
        spec = z_spec(sigma)
        base = orbit_point(sigma)
        for k in range(samples):
            sample_seed = seed * 1_000_003 + index * 1_000 + k
            g = random_borel(n, sample_seed)
            checked += 1
            if not z_contains(spec, act(g, base)):
                failures.append(
                    {"sigma": format_involution(sigma), "seed": sample_seed}
                )
        for tau in elements:
            below = leq_star(tau, sigma)
            if below:
                checked += 1
                if not z_contains(spec, orbit_point(tau)):
                    failures.append(
                        {
                            "sigma": format_involution(sigma),
                            "tau": format_involution(tau),
                            "detail": "comparable base point escapes variety",
                        }
                    )
            elif explore and tau != sigma and z_contains(spec, orbit_point(tau)):
                observations.append(
                    {
                        "sigma": format_involution(sigma),
                        "tau": format_involution(tau),
                        "detail": "member of variety though not below in order",
                    }
                )
    return checked, failures, tuple(observations)


def _suite_essential_set(n: int, seed: int, samples: int):
    checked, failures = 0, []
    n_phi = n * (n - 1) // 2
    w0 = to_permutation(longest_involution(n))
    for sigma in enumerate_involutions(n):
        w = w0.compose(to_permutation(sigma))
        checked += 1
        if length(w) != n_phi - length(to_permutation(sigma)):
            failures.append(
                {"sigma": format_involution(sigma), "detail": "length identity fails"}
            )
        if is_chain(sigma):
            checked += 1
            if not essential_reduction_check(sigma, 2):
                failures.append(
                    {
                        "sigma": format_involution(sigma),
                        "detail": "essential cells do not pin the rank bounds",
                    }
                )
    return checked, failures, ()


_SUITES = {
    "counts": _suite_counts,
    "order-equivalence": _suite_order_equivalence,
    "covers": _suite_covers,
    "graded": _suite_graded,
    "dimension": _suite_dimension,
    "rank-invariance": _suite_rank_invariance,
    "degeneration": _suite_degeneration,
    "closure": _suite_closure,
    "essential-set": _suite_essential_set,
}


def suite_names() -> tuple[str, ...]:
    return tuple(sorted(_SUITES))


def run_suite(
    name: str, n: int, seed: int = 0, samples: int = 100, explore: bool = False
) -> SuiteReport:
    """Run one named suite at size n.  Deterministic given (n, seed)."""
    if name not in _SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; expected one of {', '.join(suite_names())}"
        )
    bound = SUITE_BOUNDS[name]
    if not 1 <= n <= bound:
        raise BoundExceededError(f"suite {name!r} accepts 1 <= n <= {bound}")
    start = time.perf_counter()
    if name == "closure":
        checked, failures, observations = _suite_closure(n, seed, samples, explore)
    else:
        checked, failures, observations = _SUITES[name](n, seed, samples)
    # failures keep enumeration order, so the first is the smallest instance
    failures = tuple(failures)
    return SuiteReport(
        suite=name,
        n=n,
        checked=checked,
        failures=failures,
        wall_time=time.perf_counter() - start,
        observations=observations,
    )


def emit_hasse(n: int, order: str = "star", format: str = "dot") -> str:
    """Render the covering diagram of all involutions of S_n."""
    if not 1 <= n <= HASSE_MAX_N:
        raise BoundExceededError(f"hasse rendering accepts 1 <= n <= {HASSE_MAX_N}")
    poset = build_poset(n, order)
    if format == "dot":
        return hasse_dot(poset)
    if format == "json":
        return hasse_json(poset) + "\n"
    raise UnknownSuiteError(f"unknown format {format!r}; expected dot or json")
