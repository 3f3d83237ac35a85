from fractions import Fraction

import pytest

from borbits.errors import NotInvertibleError
from borbits.matrices import (
    exact_det,
    identity_matrix,
    is_strictly_lower,
    is_upper_triangular,
    mat_mul,
    promote,
    qmatrix_from_json,
    qmatrix_to_json,
    rfmatrix_to_json,
    strictly_lower_part,
    transpose,
    upper_inverse,
)
from borbits.orbits import random_borel
from borbits.ratfunc import EPS, RF_ONE, RFun, poly


def test_upper_inverse_random():
    for seed in range(10):
        g = random_borel(5, seed)
        assert mat_mul(g, upper_inverse(g)) == identity_matrix(5)
        assert mat_mul(upper_inverse(g), g) == identity_matrix(5)


def test_upper_inverse_over_function_field():
    g = (
        (RF_ONE, EPS, RFun(poly(0))),
        (RFun(poly(0)), EPS, RF_ONE),
        (RFun(poly(0)), RFun(poly(0)), EPS),
    )
    inv = upper_inverse(g)
    assert mat_mul(g, inv) == identity_matrix(3, like=RF_ONE)


def test_upper_inverse_requires_unit_diagonal():
    with pytest.raises(NotInvertibleError):
        upper_inverse(((Fraction(0),),))


def test_shape_predicates():
    lower = ((0, 0), (1, 0))
    assert is_strictly_lower(promote(lower))
    assert not is_upper_triangular(promote(lower))
    assert is_upper_triangular(identity_matrix(3))
    taken = strictly_lower_part(promote(((1, 2), (3, 4))))
    assert taken == ((Fraction(0), Fraction(0)), (Fraction(3), Fraction(0)))


def test_exact_det():
    assert exact_det(((0, 1), (1, 0))) == -1
    assert exact_det(((1, 2), (2, 4))) == 0
    assert exact_det(((2, 0, 0), (0, 3, 0), (0, 0, 4))) == 24
    assert exact_det(((Fraction(1, 2), 0), (0, Fraction(2, 3)))) == Fraction(1, 3)


def test_transpose():
    assert transpose(((1, 2), (3, 4))) == ((1, 3), (2, 4))


def test_qmatrix_json_round_trip():
    m = ((Fraction(1, 2), Fraction(0)), (Fraction(-3), Fraction(7, 5)))
    blob = qmatrix_to_json(m)
    assert blob["rows"] == [["1/2", "0"], ["-3", "7/5"]]
    assert qmatrix_from_json(blob) == m


def test_rfmatrix_json():
    m = ((EPS, RF_ONE),) + ((RF_ONE, EPS),)
    blob = rfmatrix_to_json(m)
    assert blob["n"] == 2
    assert blob["rows"][0][0] == {"num": ["0", "1"], "den": ["1"]}
