"""Independent reference computations of the minimal interpolating basis.

Neither routine uses the exponential shift or reverse reduction; both work
directly on the exact condition matrix.
"""

from __future__ import annotations

import functools
import itertools
import math

from .engine import Problem, build_matrix, monomial_column
from .errors import DependentConditions, NoBasisInPool, PoolTooLarge
from .linalg import IncrementalSpan, is_nonsingular
from .order import compare_sets, monomials_up_to

EXHAUSTIVE_LIMIT = 10**6


def greedy_minimal_basis(problem: Problem, max_degree: int | None = None) -> set:
    """Scan monomials in increasing order, keeping each one whose column adds rank.

    The scan covers total degree <= n - 1 by default: a lower set of size n
    contains nothing of higher degree, so that bound suffices whenever the
    conditions span a D-invariant space.
    """
    n = problem.n
    if max_degree is None:
        max_degree = n - 1
    candidates = problem.order.sorted(monomials_up_to(problem.dim, max_degree))
    span = IncrementalSpan()
    chosen = []
    for beta in candidates:
        if span.add(monomial_column(problem, beta)):
            chosen.append(beta)
            if len(chosen) == n:
                return set(chosen)
    raise DependentConditions(
        f"rank {len(chosen)} < {n} over monomials of degree <= {max_degree}"
    )


def exhaustive_minimal_basis(problem: Problem, candidate_pool) -> set:
    """Brute force: the set-order minimum over every interpolating n-subset of the pool."""
    pool = problem.order.sorted(set(candidate_pool))
    n = problem.n
    count = math.comb(len(pool), n)
    if count > EXHAUSTIVE_LIMIT:
        raise PoolTooLarge(f"C({len(pool)}, {n}) = {count} subsets exceeds {EXHAUSTIVE_LIMIT}")
    full = build_matrix(problem, pool)
    valid = []
    for idx in itertools.combinations(range(len(pool)), n):
        sub = [[row[j] for j in idx] for row in full]
        if is_nonsingular(sub):
            valid.append(frozenset(pool[j] for j in idx))
    if not valid:
        raise NoBasisInPool("no interpolating subset in the candidate pool")
    cmp = functools.partial(compare_sets, problem.order)
    best = min(valid, key=functools.cmp_to_key(cmp))
    assert all(cmp(best, t) != 0 for t in valid if t != best)
    return set(best)


def degree_pool(problem: Problem) -> list:
    return monomials_up_to(problem.dim, problem.n - 1)
