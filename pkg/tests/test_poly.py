from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from grothpieri.poly import (
    Polynomial,
    complete_homogeneous,
    divided_difference,
    elementary_symmetric,
    format_polynomial,
    isobaric_difference,
    lowest_degree_component,
)

NV = 4
monomials = st.lists(st.integers(0, 3), min_size=0, max_size=NV).map(tuple)
polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=6).map(Polynomial)
index = st.integers(1, NV - 1)
x = Polynomial.var


def swap_vars(f, i):
    return f.swap(i)


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == Polynomial()
    assert f * 1 == f and f + 0 == f


def test_zero_coefficients_are_dropped():
    f = Polynomial({(1,): 2, (0, 1): 0})
    assert f.terms == {(1,): 2}
    assert Polynomial({(1, 0, 0): 1}) == x(1)


def test_coefficients_are_exact():
    f = Polynomial.constant(2 ** 80) * Polynomial.constant(2 ** 80)
    assert f.coefficient(()) == 2 ** 160


@given(polys, index)
def test_divided_difference_definition(f, i):
    # (x_i - x_{i+1}) d_i f = f - s_i f
    assert (x(i) - x(i + 1)) * divided_difference(f, i) == f - swap_vars(f, i)


@given(polys, index)
def test_divided_difference_squares_to_zero(f, i):
    assert divided_difference(divided_difference(f, i), i) == Polynomial()


@given(polys, st.integers(1, NV - 2))
def test_braid_relation(f, i):
    d = divided_difference
    assert d(d(d(f, i), i + 1), i) == d(d(d(f, i + 1), i), i + 1)


@given(polys)
def test_distant_operators_commute(f):
    d = divided_difference
    assert d(d(f, 1), 3) == d(d(f, 3), 1)


@given(polys, index)
def test_isobaric_two_ways(f, i):
    # pi_i f = d_i((1 - x_{i+1}) f), also computed from the definition of d_i
    g = (1 - x(i + 1)) * f
    assert (x(i) - x(i + 1)) * isobaric_difference(f, i) == g - swap_vars(g, i)
    assert isobaric_difference(f, i) == divided_difference(g, i)


@given(polys, index)
@settings(max_examples=50)
def test_isobaric_is_idempotent(f, i):
    p = isobaric_difference
    assert p(p(f, i), i) == p(f, i)


def test_divided_difference_of_symmetric_is_zero():
    e = elementary_symmetric(2, 3)
    assert divided_difference(e, 1) == Polynomial()
    assert divided_difference(e, 2) == Polynomial()


def test_elementary_and_complete_by_enumeration():
    for k in range(0, 5):
        for p in range(0, 5):
            e = Polynomial()
            for s in combinations(range(1, k + 1), p):
                t = Polynomial.constant(1)
                for j in s:
                    t = t * x(j)
                e = e + t
            assert elementary_symmetric(p, k) == e
    # h_2(x1, x2) = x1^2 + x1 x2 + x2^2
    assert complete_homogeneous(2, 2) == x(1) ** 2 + x(1) * x(2) + x(2) ** 2


def test_format():
    assert format_polynomial(x(1) + x(2) - x(1) * x(2)) == "x1 + x2 - x1*x2"
    assert format_polynomial(Polynomial()) == "0"
    assert format_polynomial(Polynomial.constant(-3) + 2 * x(2) ** 2) == "-3 + 2*x2^2"


def test_degree_queries():
    f = x(1) + x(2) - x(1) * x(2)
    assert f.degree() == 2 and f.min_degree() == 1
    assert lowest_degree_component(f) == x(1) + x(2)
    assert not f.is_homogeneous()
    with pytest.raises(ValueError):
        lowest_degree_component(Polynomial())


@given(polys, polys, st.lists(st.integers(-3, 3), min_size=NV, max_size=NV))
def test_evaluation_is_a_ring_map(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Polynomial({(-1,): 1})
    with pytest.raises(ValueError):
        divided_difference(x(1), 0)
