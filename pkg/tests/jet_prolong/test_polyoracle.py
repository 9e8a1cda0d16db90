import random
from fractions import Fraction

import pytest

from scripts.jet_prolong.errors import DomainError
from scripts.jet_prolong.polyoracle import RationalPoly, poly_compose, poly_diff, poly_eval, random_poly


def x(arity, index):
    return RationalPoly.variable(arity, index)


def test_compose_product_with_sum_and_product():
    f = RationalPoly.from_terms(2, {(1, 1): 1})
    g = [RationalPoly.from_terms(2, {(1, 0): 1, (0, 1): 1}), RationalPoly.from_terms(2, {(1, 1): 1})]
    h = poly_compose(f, g)
    assert h.arity == 2
    assert h.terms == {(2, 1): Fraction(1), (1, 2): Fraction(1)}


def test_compose_power_and_differentiate_to_constant():
    f = RationalPoly.from_terms(1, {(2,): 1})
    g = [RationalPoly.from_terms(1, {(3,): 1})]
    h = poly_compose(f, g)
    assert h.terms == {(6,): Fraction(1)}
    for _ in range(6):
        h = poly_diff(h, 1)
    assert h.terms == {(0,): Fraction(720)}
    assert poly_eval(h, (5,)) == 720
    assert poly_diff(h, 1).is_zero


def test_evaluate_at_rational_points():
    p = RationalPoly.from_terms(2, {(2, 1): 1, (1, 2): 1})
    assert poly_eval(p, (1, 1)) == 2
    assert poly_eval(p, (Fraction(1, 2), Fraction(1, 3))) == Fraction(5, 36)
    assert RationalPoly.constant(3, Fraction(-2, 7)).terms == {(0, 0, 0): Fraction(-2, 7)}
    assert p.total_degree == 3


def test_derivatives_commute():
    rng = random.Random(11)
    for _ in range(5):
        p = random_poly(3, rng, max_degree=5)
        assert poly_diff(poly_diff(p, 1), 3).terms == poly_diff(poly_diff(p, 3), 1).terms


def test_chain_rule_first_order():
    rng = random.Random(5)
    f = random_poly(2, rng)
    g = [random_poly(1, rng, max_degree=3) for _ in range(2)]
    point = (Fraction(2, 3),)
    lhs = poly_eval(poly_diff(poly_compose(f, g), 1), point)
    inner = [poly_eval(gl, point) for gl in g]
    rhs = sum(poly_eval(poly_diff(f, l), inner) * poly_eval(poly_diff(g[l - 1], 1), point) for l in (1, 2))
    assert lhs == rhs


def test_random_poly_is_seeded():
    a = random_poly(2, random.Random("seed"), max_terms=6)
    b = random_poly(2, random.Random("seed"), max_terms=6)
    assert a.terms == b.terms
    assert a.arity == 2
    assert all(len(exps) == 2 for exps in a.terms)


def test_bad_arguments():
    with pytest.raises(DomainError):
        RationalPoly.from_terms(2, {(1,): 1})
    with pytest.raises(DomainError):
        RationalPoly.variable(2, 3)
    with pytest.raises(DomainError):
        poly_compose(x(2, 1), [x(1, 1)])
    with pytest.raises(DomainError):
        poly_compose(x(2, 1), [x(1, 1), x(2, 1)])
    with pytest.raises(DomainError):
        poly_diff(x(2, 1), 3)
    with pytest.raises(DomainError):
        poly_eval(x(2, 1), (1,))
    with pytest.raises(DomainError):
        RationalPoly.from_terms(0, {})
