import itertools
import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from monobasis.errors import DimensionMismatch, ZeroPolynomialError
from monobasis.poly import (
    Polynomial,
    as_rational,
    diff_apply,
    evaluate,
    functional_apply,
    leading_monomial,
    least_monomial,
    mul,
    support,
    truncate,
)
from util import P, grlex


def test_support():
    assert support([P("1"), P("x"), P("1/2*x^2 + y")]) == {(0, 0), (1, 0), (0, 1), (2, 0)}
    assert support([Polynomial.zero(2)]) == set()
    assert support([P("1/6*x^3 + x*y + y")]) == {(3, 0), (1, 1), (0, 1)}
    with pytest.raises(DimensionMismatch):
        support([P("x"), Polynomial.constant(3)])


def test_least_and_leading_monomial():
    p = P("1/6*x^3 + x*y + y")
    assert least_monomial(p, grlex()) == (0, 1)
    assert leading_monomial(p, grlex()) == (3, 0)
    assert least_monomial(P("-7/3*x*y^2"), grlex()) == (1, 2)
    with pytest.raises(ZeroPolynomialError):
        least_monomial(Polynomial.zero(2), grlex())
    with pytest.raises(ZeroPolynomialError):
        leading_monomial(Polynomial.zero(2), grlex())


def test_arithmetic_examples():
    assert (P("x") + P("-x")).is_zero()
    assert mul(P("x + 2*y"), P("x + 2*y")) == P("x^2 + 4*x*y + 4*y^2")
    assert truncate(Polynomial(1, {(0,): 1, (1,): 1, (2,): 1, (3,): 1}), 2) == Polynomial(1, {(0,): 1, (1,): 1, (2,): 1})
    assert P("x") * 0 == Polynomial.zero(2)
    assert 0 not in P("x - x + y").terms.values()


def test_rejects_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ValueError):
        as_rational("0.5")
    assert as_rational("-7/6") == Fraction(-7, 6)


def test_diff_apply_examples():
    assert diff_apply(P("x"), P("x*y")) == P("y")
    assert diff_apply(P("x^2*y"), P("x^2*y")) == Polynomial.constant(2, 2)
    assert diff_apply(P("x^2"), P("x*y^3")).is_zero()


def test_eval_examples():
    assert evaluate(P("1"), (Fraction(3, 7), 5)) == 1
    assert evaluate(P("x + 2*y"), (1, 2)) == 5
    assert evaluate(Polynomial.zero(2), (1, 2)) == 0
    with pytest.raises(DimensionMismatch):
        evaluate(P("x"), (1,))


def test_functional_apply_examples():
    assert functional_apply(P("1"), (0, 0), P("1")) == 1
    assert functional_apply(P("x"), (1, 2), P("x*y")) == 2
    assert functional_apply(P("1/2*x^2 + y"), (0, 0), P("y")) == 1


def test_origin_functional_identity_exhaustive():
    # delta_0 o D^a X^b = b! if a == b else 0, all a, b of degree <= 4, d <= 3
    for d in (1, 2, 3):
        monos = [m for m in itertools.product(range(5), repeat=d) if sum(m) <= 4]
        origin = (0,) * d
        for a in monos:
            pa = Polynomial.monomial(a)
            for b in monos:
                got = functional_apply(pa, origin, Polynomial.monomial(b))
                want = math.prod(math.factorial(e) for e in b) if a == b else 0
                assert got == want


# -- sympy as an independent route for differentiation and evaluation --

SX, SY = sympy.symbols("x y")


def to_sympy(p):
    return sum((sympy.Rational(c.numerator, c.denominator) * SX**a * SY**b for (a, b), c in p.terms.items()), sympy.Integer(0))


def sympy_diff_apply(p, q):
    target = to_sympy(q)
    total = sympy.Integer(0)
    for (a, b), c in p.terms.items():
        total += sympy.Rational(c.numerator, c.denominator) * sympy.diff(target, SX, a, SY, b)
    return sympy.expand(total)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys2 = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), rationals, max_size=5).map(
    lambda t: Polynomial(2, t)
)


@settings(max_examples=60, deadline=None)
@given(polys2, polys2)
def test_diff_apply_matches_sympy(p, q):
    assert sympy.expand(to_sympy(diff_apply(p, q)) - sympy_diff_apply(p, q)) == 0


@settings(max_examples=60, deadline=None)
@given(polys2, st.tuples(rationals, rationals))
def test_evaluate_matches_sympy(p, pt):
    want = to_sympy(p).subs({SX: sympy.Rational(pt[0].numerator, pt[0].denominator), SY: sympy.Rational(pt[1].numerator, pt[1].denominator)})
    got = evaluate(p, pt)
    assert sympy.Rational(got.numerator, got.denominator) == want


@given(polys2, polys2, polys2)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert all(v != 0 for v in (a * b).terms.values())


@given(polys2, polys2, polys2, rationals)
def test_diff_apply_bilinear_and_composition(a, b, q, c):
    assert diff_apply(a + b, q) == diff_apply(a, q) + diff_apply(b, q)
    assert diff_apply(a, q + b) == diff_apply(a, q) + diff_apply(a, b)
    assert diff_apply(c * a, q) == c * diff_apply(a, q)
    assert diff_apply(mul(a, b), q) == diff_apply(a, diff_apply(b, q))


@given(polys2, polys2, st.integers(0, 6))
def test_capped_mul_equals_truncated_product(a, b, cap):
    assert mul(a, b, cap=cap) == truncate(mul(a, b), cap)
