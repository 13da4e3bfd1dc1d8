"""Minimal monomial interpolating bases for Lagrange/Hermite problems.

Pipeline: shift every condition to the origin with a truncated exponential,
reverse-reduce the shifted polynomials, and read the basis off their least
monomials.  The result is checked against the exact (untruncated) condition
matrix before it is returned; if the check or the elimination fails the
truncation cap is doubled and the whole computation repeated.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DependentConditions, DimensionMismatch, EmptyProblem, ZeroAfterTruncation, ZeroPivot
from .linalg import is_nonsingular, solve
from .order import ExponentVector, MonomialOrder
from .poly import Polynomial, as_rational, functional_apply, least_monomial
from .reduce import reverse_reduce
from .shift import shift_condition

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Site:
    """A point together with the differential conditions imposed there."""

    point: tuple
    conditions: tuple

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(as_rational(t) for t in self.point))
        object.__setattr__(self, "conditions", tuple(self.conditions))
        if not self.conditions:
            raise EmptyProblem("a site needs at least one condition")
        for p in self.conditions:
            if p.dim != len(self.point):
                raise DimensionMismatch(f"condition in {p.dim} variables at a point of length {len(self.point)}")
            if p.is_zero():
                raise ValueError("interpolation conditions must be nonzero polynomials")


@dataclass(frozen=True)
class Problem:
    variables: tuple
    order: MonomialOrder
    sites: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "sites", tuple(self.sites))
        if not self.sites:
            raise EmptyProblem("problem has no sites")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        if self.order.dim != self.dim:
            raise DimensionMismatch(f"ordering on {self.order.dim} variables, problem has {self.dim}")
        for s in self.sites:
            if len(s.point) != self.dim:
                raise DimensionMismatch(f"point {s.point} does not have {self.dim} coordinates")

    @property
    def dim(self) -> int:
        return len(self.variables)

    @property
    def n(self) -> int:
        return sum(len(s.conditions) for s in self.sites)

    def flat(self):
        """``[(tag, point, condition)]`` in site order, then condition order."""
        return [((i, j), s.point, p) for i, s in enumerate(self.sites) for j, p in enumerate(s.conditions)]

    def with_order(self, order: MonomialOrder) -> "Problem":
        return Problem(self.variables, order, self.sites)


@dataclass
class BasisResult:
    basis: list  # exponent vectors, ascending in the problem's order
    reduced: list  # reverse reduced shifted conditions, in reduction order
    cap_used: int
    condition_tags: list  # (site, condition) of each reduced polynomial
    pivots: list = field(default_factory=list)  # lm of each reduced polynomial, reduction order


def _shifted(problem: Problem, cap: int):
    return [shift_condition(p, theta, cap) for _, theta, p in problem.flat()]


def max_cap(problem: Problem) -> int:
    n = problem.n
    top = max(p.total_degree() for _, _, p in problem.flat())
    return max(4 * (n - 1), n - 1 + top)


def minimal_basis(problem: Problem, cap: int | None = None) -> BasisResult:
    """Compute the minimal monomial interpolating basis of ``problem``.

    ``cap`` overrides the initial truncation degree (default ``n - 1``).
    Raises DependentConditions when no cap up to ``max_cap`` yields a
    verified basis.
    """
    n = problem.n
    tags = [t for t, _, _ in problem.flat()]
    cap = n - 1 if cap is None else cap
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    limit = max(max_cap(problem), cap)
    while True:
        bad_tag = None
        try:
            reduced = reverse_reduce(_shifted(problem, cap), problem.order)
            pivots = [least_monomial(q, problem.order) for q in reduced]
            basis = problem.order.sorted(pivots)
            if is_interpolating_basis(problem, basis):
                return BasisResult(basis, reduced, cap, tags, pivots)
            reason = "verification failed"
        except ZeroPivot as exc:
            bad_tag = tags[exc.index]
            reason = f"condition {bad_tag} reduced to zero"
        except ZeroAfterTruncation:
            reason = "a shifted condition vanished under truncation"
        if cap >= limit:
            raise DependentConditions(
                f"no interpolating basis found up to truncation degree {cap}: {reason}", bad_tag
            )
        log.debug("cap %d: %s; retrying", cap, reason)
        cap = min(max(2 * cap, 1), limit)


def monomial_column(problem: Problem, beta: ExponentVector) -> list:
    xb = Polynomial.monomial(beta)
    return [functional_apply(p, theta, xb) for _, theta, p in problem.flat()]


def build_matrix(problem: Problem, monomials: Sequence[ExponentVector]) -> list:
    """Exact condition matrix: rows are conditions, columns the given monomials."""
    for beta in monomials:
        if len(beta) != problem.dim:
            raise DimensionMismatch(f"monomial {beta} is not in {problem.dim} variables")
    cols = [monomial_column(problem, tuple(b)) for b in monomials]
    return [[col[i] for col in cols] for i in range(problem.n)]


def is_interpolating_basis(problem: Problem, monomials) -> bool:
    monomials = list(monomials)
    if len(monomials) != problem.n:
        raise DimensionMismatch(f"{len(monomials)} monomials for {problem.n} conditions")
    return is_nonsingular(build_matrix(problem, monomials))


def interpolate(problem: Problem, values: Sequence, basis: Sequence[ExponentVector] | None = None) -> Polynomial:
    """The unique polynomial spanned by ``basis`` matching ``values`` on every condition."""
    values = [as_rational(v) for v in values]
    if len(values) != problem.n:
        raise DimensionMismatch(f"{len(values)} values for {problem.n} conditions")
    if basis is None:
        basis = minimal_basis(problem).basis
    basis = [tuple(b) for b in basis]
    coeffs = solve(build_matrix(problem, basis), values)
    if coeffs is None:
        raise DependentConditions("condition matrix is singular for the given basis")
    return Polynomial(problem.dim, dict(zip(basis, coeffs)))


def residuals(problem: Problem, g: Polynomial, values: Sequence) -> list:
    return [functional_apply(p, theta, g) - as_rational(v) for (_, theta, p), v in zip(problem.flat(), values)]


def reduction_matrix(result: BasisResult) -> list:
    """Origin functionals of the reduced polynomials against their own least monomials.

    Row i is ``delta_0 o q_i(D)``, column j is ``X^lm(q_j)``, both in
    reduction order.  For a single site at the origin this matrix is upper
    triangular with nonzero diagonal.
    """
    if not result.reduced:
        return []
    origin = (Fraction(0),) * result.reduced[0].dim
    cols = [Polynomial.monomial(m) for m in result.pivots]
    return [[functional_apply(q, origin, c) for c in cols] for q in result.reduced]
