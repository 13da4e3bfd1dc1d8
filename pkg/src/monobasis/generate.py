"""Seeded random interpolation problems for fuzzing and benchmarks."""

from __future__ import annotations

import random
from fractions import Fraction

from .engine import Problem, Site
from .order import KINDS, MonomialOrder
from .poly import Polynomial


def random_rational(rng: random.Random, span: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_points(rng: random.Random, dim: int, count: int) -> list:
    seen = set()
    while len(seen) < count:
        seen.add(tuple(random_rational(rng) for _ in range(dim)))
    pts = sorted(seen)
    rng.shuffle(pts)
    return pts


def random_order(rng: random.Random, dim: int, kind: str | None = None) -> MonomialOrder:
    prec = list(range(dim))
    rng.shuffle(prec)
    return MonomialOrder(kind or rng.choice(KINDS), tuple(prec))


def hermite_block(rng: random.Random, dim: int, size: int) -> list:
    """Conditions ``1``, ``x_i``, ``x_i^2/2 + x_j`` (first ``size`` of them); D-invariant."""
    i = rng.randrange(dim)
    j = rng.randrange(dim)
    one = Polynomial.constant(dim)
    xi = Polynomial.variable(dim, i)
    xj = Polynomial.variable(dim, j)
    return [one, xi, xi * xi / 2 + xj][:size]


def variable_names(dim: int) -> tuple:
    if dim <= 3:
        return ("x", "y", "z")[:dim]
    return tuple(f"x{i}" for i in range(1, dim + 1))


def random_problem(rng: random.Random, dim: int, n: int, kind: str = "lagrange", order: MonomialOrder | None = None) -> Problem:
    """A random problem with exactly ``n`` conditions.

    ``kind`` is ``"lagrange"`` (one value condition per distinct point) or
    ``"hermite"`` (blocks of up to three derivative conditions per point).
    """
    if order is None:
        order = random_order(rng, dim)
    if kind == "lagrange":
        sizes = [1] * n
    elif kind == "hermite":
        sizes = []
        left = n
        while left:
            s = rng.randint(1, min(3, left))
            sizes.append(s)
            left -= s
    else:
        raise ValueError(f"unknown problem kind {kind!r}")
    points = random_points(rng, dim, len(sizes))
    sites = []
    for pt, size in zip(points, sizes):
        conds = [Polynomial.constant(dim)] if size == 1 else hermite_block(rng, dim, size)
        sites.append(Site(pt, tuple(conds)))
    return Problem(variable_names(dim), order, tuple(sites))


def permuted(rng: random.Random, problem: Problem) -> Problem:
    """Same conditions with sites and within-site conditions shuffled."""
    sites = []
    for s in problem.sites:
        conds = list(s.conditions)
        rng.shuffle(conds)
        sites.append(Site(s.point, tuple(conds)))
    rng.shuffle(sites)
    return Problem(problem.variables, problem.order, tuple(sites))
