"""Exact-arithmetic combinatorics of Borel orbit degenerations and
Bruhat-Chevalley order on involutions of the symmetric group.

Everything is computed over exact fields (integers, rationals, rational
functions, small prime fields); no floating point anywhere.  All value
types are immutable and all operations are pure functions, so the whole
API is safe to share across threads.
"""

from .involutions import (
    Arc,
    Involution,
    Permutation,
    bruhat_leq_subword,
    enumerate_involutions,
    eval_word,
    format_involution,
    identity_involution,
    involution,
    involution_from_one_line,
    involution_to_json,
    length,
    longest_involution,
    parse_involution,
    permutation_matrix,
    reduced_word,
    rook_matrix_lower,
    rook_matrix_upper,
    to_permutation,
)
from .rankorder import (
    RankMatrix,
    bruhat_rank_matrix,
    exact_rank,
    leq_bruhat,
    leq_melnikov,
    leq_star,
    melnikov_rank_matrix,
    pi_truncate,
    southwest_count,
    star_rank_matrix,
)
from .moves import (
    Move,
    a_candidates,
    a_move,
    apply_move,
    b_candidates,
    b_move,
    c_candidates,
    c_move,
    minimal_support,
    move_remove,
    move_right,
    move_up,
    n_minus,
    n_plus,
    n_prime,
    n_zero,
    near,
    near_moves,
    near_prime,
    phi_leq,
    phi_lt,
)
from .poset import LSets, Poset, build_poset, hasse_dot, hasse_json, is_graded, l_sets
from .ratfunc import EPS, EPS_INV, RFun
from .orbits import (
    Degeneration,
    act,
    degeneration,
    degeneration_closed_form,
    delta_minors,
    diagonal_weights,
    orbit_dimension,
    orbit_point,
    random_borel,
    rank_profile,
    x_elem,
)
from .closure import (
    ZSpec,
    complement_permutation,
    essential_reduction_check,
    essential_set,
    gamma,
    is_chain,
    maximal_support,
    quadric_cells,
    rotate90,
    rothe_diagram,
    z_contains,
    z_spec,
)
from .suites import SuiteReport, emit_hasse, run_suite, suite_names

__version__ = "0.1.0"
