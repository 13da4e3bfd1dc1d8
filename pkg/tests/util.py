"""Shared helpers for building small test problems."""

from fractions import Fraction

from monobasis import MonomialOrder, Polynomial, Problem, Site
from monobasis.parser import parse_polynomial

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, variables=XY):
    return parse_polynomial(text, variables)


def grlex(dim=2):
    # x > y (> z), i.e. grlex(y < x) / grlex(z < y < x)
    return MonomialOrder.of("grlex", dim)


def problem(sites, variables=XY, order=None):
    order = order or MonomialOrder.of("grlex", len(variables))
    return Problem(
        variables,
        order,
        tuple(Site(tuple(Fraction(t) for t in pt), tuple(P(c, variables) for c in conds)) for pt, conds in sites),
    )
