import math

import pytest

from rszeta import whittaker
from rszeta.errors import DomainError
from rszeta.special import bessel_k

import oracles


def test_gl2_base_case():
    a, y1 = oracles.GL2_POINT
    got = whittaker.whittaker_a_direct(list(a), [y1, 1.0])
    assert abs(got - oracles.W_GL2) <= 1e-12 * abs(oracles.W_GL2)


def test_unit_points():
    assert abs(whittaker.whittaker_a_direct([0, 0], [1, 1]) - oracles.TWO_K0_2PI) < 1e-15
    assert abs(whittaker.whittaker_b_direct([0], [1]) - oracles.TWO_K0_2PI) < 1e-15


def test_so1_base_case():
    b, y = 0.3 - 0.2j, 0.7
    assert abs(whittaker.whittaker_b_direct([b], [y]) - 2 * bessel_k(b / 2, 2 * math.pi * y)) < 1e-14


def test_gl3_routes_agree():
    a, y = [0.2, 0, -0.2], [1, 1, 1]
    d = whittaker.whittaker_a_direct(a, y)
    m = whittaker.whittaker_a_mellin(a, y)
    assert abs(d - m) <= 1e-4 * abs(d)


def test_so2_routes_agree():
    b, y = [0.3, 0.1], [1, 1]
    d = whittaker.whittaker_b_direct(b, y)
    m = whittaker.whittaker_b_mellin(b, y)
    assert abs(d - m) <= 1e-3 * abs(d)


def test_so1_mellin_matches_direct_and_is_even():
    b = 0.3 - 0.2j
    d = whittaker.whittaker_b_direct([b], [0.8])
    assert abs(whittaker.whittaker_b_mellin([b], [0.8]) - d) <= 1e-8 * abs(d)
    assert abs(whittaker.whittaker_b_mellin([-b], [0.8]) - d) <= 1e-8 * abs(d)


def test_gl2_decay():
    assert abs(whittaker.whittaker_a_mellin([0.1, -0.1], [5.0, 1.0])) < 1e-12
    vals = [abs(whittaker.whittaker_a_direct([0.1, 0.2, -0.3], [y, 1.0, 1.0])) for y in (3, 4, 5)]
    assert vals[0] > vals[1] > vals[2]


def test_coordinates_must_be_positive():
    with pytest.raises(DomainError):
        whittaker.whittaker_a_direct([0, 0], [0.0, 1.0])


@pytest.mark.parametrize("a,y", [([0.2, 0, -0.2], (1, 1, 1)), ([0.1, 0.1, -0.2], (2, 0.5, 1))])
def test_jacquet_recursion(a, y):
    rep = whittaker.verify_jacquet_recursion(a, y)
    assert rep.passed and rep.rel_error < 1e-5


def test_jacquet_order_of_parameters_is_irrelevant():
    a = [-0.3 + 0.1j, 0.25, 0.05 - 0.2j]
    v1 = whittaker.jacquet_rhs(a, (1, 1, 1))
    v2 = whittaker.jacquet_rhs(a[::-1], (1, 1, 1))
    assert abs(v1 - v2) <= 1e-12 * abs(v1)
