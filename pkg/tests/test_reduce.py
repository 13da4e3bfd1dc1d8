import sympy
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from monobasis.errors import ZeroPivot
from monobasis.order import MonomialOrder
from monobasis.poly import Polynomial, least_monomial, support
from monobasis.reduce import is_reduced, is_reverse_reduced, reverse_reduce
from util import XYZ, P, grlex


def monic_at_lm(p, order):
    return p / p.coeff(least_monomial(p, order))


def test_small_example_matches_hand_elimination():
    inputs = [P(s) for s in ("1", "x", "x^2 + 2*y", "1/6*x^3 + x*y + y")]
    expected = [P(s) for s in ("1", "x", "x^2 + 2*y", "1/6*x^3 - 1/2*x^2 + x*y")]
    out = reverse_reduce(inputs, grlex())
    assert out == [monic_at_lm(e, grlex()) for e in expected]
    # fourth output is P4 - P3/2 exactly (its lm coefficient is already 1)
    assert out[3] == inputs[3] - inputs[2] / 2


def test_single_polynomial_is_normalized():
    assert reverse_reduce([P("3*x + 6*y^2")], grlex()) == [P("x + 2*y^2")]


def test_already_reverse_reduced_is_unchanged():
    inputs = [P(s, XYZ) for s in ("1", "y + z", "x")]
    assert reverse_reduce(inputs, grlex(3)) == inputs


def test_dependent_input_raises_zero_pivot_at_offender():
    with pytest.raises(ZeroPivot) as info:
        reverse_reduce([P("1 + x"), P("y"), P("2 + 2*x - y")], grlex())
    assert info.value.index == 2


def test_definition_checks():
    o2, o3 = grlex(), grlex(3)
    rr = [P(s) for s in ("1", "x", "1/2*x^2 + y", "1/6*x^3 - 1/2*x^2 + x*y")]
    assert is_reverse_reduced(rr, o2)
    not_rr = [P(s) for s in ("1", "x", "1/2*x^2 + y", "1/6*x^3 + x*y + y")]
    assert not is_reverse_reduced(not_rr, o2)
    assert not is_reverse_reduced([P("x + y"), P("x + y")], o2)
    assert is_reverse_reduced([P(s, XYZ) for s in ("1", "y + z", "x - y")], o3)

    for group in (("1", "x", "1/2*x^2 + y", "1/6*x^3 + x*y + y"), ("1", "y + z", "x"), ("1", "y + z", "x + z")):
        assert is_reduced([P(s, XYZ) for s in group], o3)
    assert not is_reduced([P(s, XYZ) for s in ("1", "x + z", "y + x")], o3)
    assert not is_reduced([P("x"), P("x")], o2)


def sympy_rank(polys):
    monos = sorted(support(polys))
    rows = [[sympy.Rational(p.coeff(m).numerator, p.coeff(m).denominator) for m in monos] for p in polys]
    return sympy.Matrix(rows).rank() if rows and monos else 0


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
polys2 = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), rationals, min_size=1, max_size=5).map(
    lambda t: Polynomial(2, t)
)
orders2 = st.sampled_from(
    [MonomialOrder(k, p) for k in ("lex", "grlex", "grevlex") for p in ((0, 1), (1, 0))]
)


@settings(max_examples=80, deadline=None)
@given(st.lists(polys2, min_size=1, max_size=5), orders2)
def test_reduction_properties(polys, order):
    assume(all(not p.is_zero() for p in polys))
    assume(sympy_rank(polys) == len(polys))
    out = reverse_reduce(polys, order)
    n = len(polys)
    assert is_reverse_reduced(out, order)
    lms = [least_monomial(q, order) for q in out]
    assert len(set(lms)) == n
    assert all(q.coeff(m) == 1 for q, m in zip(out, lms))
    # same span
    assert sympy_rank(polys + out) == n
    # q_i in span(P_1..P_i) but not in span(P_1..P_{i-1})
    for i in range(n):
        assert sympy_rank(polys[: i + 1] + [out[i]]) == i + 1
        assert sympy_rank(polys[:i] + [out[i]]) == i + 1
    again = reverse_reduce(out, order)
    assert sorted(least_monomial(q, order) for q in again) == sorted(lms)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys2, min_size=2, max_size=4), orders2, st.data())
def test_dependent_lists_always_raise(polys, order, data):
    assume(all(not p.is_zero() for p in polys))
    coeffs = data.draw(st.lists(rationals, min_size=len(polys), max_size=len(polys)))
    combo = Polynomial.zero(2)
    for c, p in zip(coeffs, polys):
        combo = combo + c * p
    assume(not combo.is_zero())
    with pytest.raises(ZeroPivot):
        reverse_reduce(polys + [combo], order)
