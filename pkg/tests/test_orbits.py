from fractions import Fraction

import pytest

from borbits import (
    Arc,
    act,
    apply_move,
    degeneration,
    degeneration_closed_form,
    delta_minors,
    diagonal_weights,
    enumerate_involutions,
    identity_involution,
    length,
    longest_involution,
    near_moves,
    orbit_dimension,
    orbit_point,
    parse_involution,
    random_borel,
    rank_profile,
    star_rank_matrix,
    to_permutation,
    x_elem,
)
from borbits.errors import (
    MissingArcError,
    MoveNotApplicableError,
    NotStrictlyLowerError,
    NotUpperTriangularError,
    NotInvertibleError,
    SingularElementError,
    ZeroXiError,
)
from borbits.matrices import identity_matrix, mat_from_entries, mat_mul
from borbits.moves import Move
from borbits.ratfunc import EPS, EPS_INV, RF_ONE, RFun


def test_x_elem_examples():
    assert x_elem(2, 1, 2, 5) == ((1, 5), (0, 1))
    assert x_elem(2, 1, 1, 0) == identity_matrix(2)
    assert x_elem(2, 1, 1, EPS) == ((RF_ONE + EPS, RFun(())), (RFun(()), RF_ONE))
    with pytest.raises(SingularElementError):
        x_elem(3, 2, 2, -1)


def test_act_identity_and_validation():
    lam = orbit_point(parse_involution("(3,1)", 3))
    assert act(identity_matrix(3), lam) == lam
    with pytest.raises(NotUpperTriangularError):
        act(((1, 0), (1, 1)), ((0, 0), (1, 0)))
    with pytest.raises(NotStrictlyLowerError):
        act(identity_matrix(2), identity_matrix(2))
    with pytest.raises(NotInvertibleError):
        act(((0, 0), (0, 1)), ((0, 0), (1, 0)))


def test_act_unchanged_2x2_example():
    g = x_elem(2, 1, 2, 1)
    lam = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
    assert act(g, lam) == lam


def test_diagonal_action_gives_weighted_point():
    sigma = parse_involution("(3,1)(5,2)", 5)
    d = mat_from_entries(
        5, {(k, k): Fraction(v) for k, v in zip(range(1, 6), (2, 3, 5, 1, 7))}
    )
    weights = diagonal_weights(sigma, d)
    assert weights == {Arc(3, 1): Fraction(5, 2), Arc(5, 2): Fraction(7, 3)}
    assert act(d, orbit_point(sigma)) == orbit_point(sigma, weights)


def test_orbit_point_examples():
    sigma = parse_involution("(3,1)(5,2)", 5)
    weighted = orbit_point(sigma, {Arc(3, 1): Fraction(2), Arc(5, 2): Fraction(-1)})
    assert weighted[2][0] == 2 and weighted[4][1] == -1
    assert orbit_point(identity_involution(3)) == tuple(
        (Fraction(0),) * 3 for _ in range(3)
    )
    with pytest.raises(MissingArcError):
        orbit_point(sigma, {Arc(3, 1): Fraction(1)})
    with pytest.raises(ZeroXiError):
        orbit_point(sigma, {Arc(3, 1): Fraction(0), Arc(5, 2): Fraction(1)})


def test_action_law():
    lam = orbit_point(parse_involution("(3,1)(4,2)", 4))
    for seed in range(5):
        g = random_borel(4, seed)
        h = random_borel(4, seed + 100)
        assert act(g, act(h, lam)) == act(mat_mul(g, h), lam)


def test_rank_profile_of_base_point_is_star_matrix():
    for n in range(1, 6):
        for sigma in enumerate_involutions(n):
            assert rank_profile(orbit_point(sigma)) == star_rank_matrix(sigma)


def test_rank_invariance_sample():
    for n in range(2, 5):
        for sigma in enumerate_involutions(n):
            base = orbit_point(sigma)
            expect = star_rank_matrix(sigma)
            for seed in range(10):
                assert rank_profile(act(random_borel(n, seed), base)) == expect


def test_orbit_dimension_examples():
    assert orbit_dimension(parse_involution("(2,1)", 2)) == 1
    assert orbit_dimension(identity_involution(4)) == 0
    assert orbit_dimension(parse_involution("(3,1)", 3)) == 3


def test_orbit_dimension_equals_length_small():
    for n in range(1, 6):
        for sigma in enumerate_involutions(n):
            assert orbit_dimension(sigma) == length(to_permutation(sigma))


def test_delta_minors_examples():
    assert delta_minors(((Fraction(0),) * 2, (Fraction(1), Fraction(0)))) == (
        Fraction(1),
    )
    w0 = longest_involution(4)
    assert delta_minors(orbit_point(w0)) == (Fraction(1), Fraction(-1))
    zero = tuple((Fraction(0),) * 4 for _ in range(4))
    assert delta_minors(zero) == (Fraction(0), Fraction(0))


def test_regular_orbit_minors_stay_nonzero():
    for n in (4, 5):
        base = orbit_point(longest_involution(n))
        for seed in range(20):
            y = act(random_borel(n, seed), base)
            assert all(delta_minors(y))


def test_random_borel_contract():
    assert random_borel(4, 7) == random_borel(4, 7)
    assert random_borel(4, 7) != random_borel(4, 8)
    g = random_borel(5, 3, bound=1)
    for r in range(5):
        assert g[r][r] == 1
        for c in range(r + 1, 5):
            assert g[r][c] in (Fraction(-1), Fraction(0), Fraction(1))
    from borbits.errors import IndexOutOfRangeError

    with pytest.raises(IndexOutOfRangeError):
        random_borel(3, 0, bound=0)


def test_degeneration_remove_case():
    sigma = parse_involution("(2,1)", 2)
    (move,) = [m for m in near_moves(sigma) if m.kind == "remove"]
    result = degeneration(sigma, move)
    assert result.word == ((2, 2, EPS - 1),)
    assert result.curve == ((RFun(()), RFun(())), (EPS, RFun(())))
    assert result.limit == tuple((Fraction(0),) * 2 for _ in range(2))


def test_degeneration_up_case():
    sigma = parse_involution("(3,1)", 3)
    (move,) = [m for m in near_moves(sigma) if m.kind == "up"]
    result = degeneration(sigma, move)
    assert result.word == ((2, 3, EPS_INV), (3, 3, EPS - 1))
    assert result.curve[1][0] == RF_ONE and result.curve[2][0] == EPS
    assert result.limit == orbit_point(parse_involution("(2,1)", 3))


def test_degeneration_nesting_swap_example():
    sigma = parse_involution("(8,1)(3,2)(5,4)(7,6)", 8)
    move = Move("b", Arc(5, 4), (8, 1))
    result = degeneration(sigma, move)
    curve = result.curve
    assert curve[4][0] == RF_ONE and curve[7][3] == RF_ONE  # (5,1), (8,4)
    assert curve[7][0] == EPS and curve[4][3] == EPS  # (8,1), (5,4)
    assert curve[2][1] == RF_ONE and curve[6][5] == RF_ONE  # untouched arcs
    assert result.limit == orbit_point(parse_involution("(5,1)(3,2)(8,4)(7,6)", 8))


def test_degeneration_agrees_with_closed_form_small():
    for n in range(1, 5):
        for sigma in enumerate_involutions(n):
            for move in near_moves(sigma):
                result = degeneration(sigma, move)
                assert result.curve == degeneration_closed_form(sigma, move)
                assert result.limit == orbit_point(apply_move(sigma, move))


def test_degeneration_rejects_inapplicable_move():
    sigma = parse_involution("(2,1)", 2)
    with pytest.raises(MoveNotApplicableError):
        degeneration(sigma, Move("up", Arc(2, 1)))


def test_second_largest_unipotent_rank_is_attained_by_swap_family():
    # exploratory, not part of acceptance: rank all values of
    # length - arc count and locate the prescribed swap involutions
    for n in range(4, 7):
        values = sorted(
            {
                length(to_permutation(s)) - len(s.arcs)
                for s in enumerate_involutions(n)
            },
            reverse=True,
        )
        second = values[1]
        half = n // 2
        w0 = longest_involution(n)
        for j in range(1, half):
            pairs = [
                (i, k)
                for (i, k) in w0.arcs
                if (i, k) not in ((n - j + 1, j), (n - j, j + 1))
            ]
            pairs += [(n - j + 1, j + 1), (n - j, j)]
            from borbits import involution

            swapped = involution(n, pairs)
            assert length(to_permutation(swapped)) - len(swapped.arcs) == second
