"""Reverse reduced bases: eliminate each polynomial's least monomial from its successors."""

from __future__ import annotations

from typing import Sequence

from .errors import ZeroPivot, ZeroPolynomialError
from .linalg import rank
from .order import MonomialOrder
from .poly import Polynomial, _check_same_dim, leading_monomial, least_monomial, support


def reverse_reduce(polys: Sequence[Polynomial], order: MonomialOrder) -> list:
    """Transform linearly independent polynomials into a reverse reduced basis.

    Works through the list in order.  The k-th polynomial, already reduced by
    its predecessors, is scaled to be monic at its least monomial ``m``, and
    ``m`` is then eliminated from every later polynomial.  Afterwards no
    output's least monomial occurs in any output that follows it.

    Raises ZeroPivot(k) if the k-th polynomial vanishes during elimination,
    which happens exactly when it depends linearly on its predecessors.
    """
    polys = list(polys)
    _check_same_dim(polys)
    work = [dict(p.terms) for p in polys]
    dim = polys[0].dim if polys else 0
    out = []
    for k in range(len(work)):
        pk = work[k]
        if not pk:
            raise ZeroPivot(k)
        m = min(pk, key=order.key)
        inv = 1 / pk[m]
        pk = {a: c * inv for a, c in pk.items()}
        out.append(Polynomial._raw(dim, pk))
        for j in range(k + 1, len(work)):
            pj = work[j]
            f = pj.get(m)
            if not f:
                continue
            for a, c in pk.items():
                v = pj.get(a, 0) - f * c
                if v:
                    pj[a] = v
                else:
                    pj.pop(a, None)
    return out


def _independent(polys) -> bool:
    monomials = sorted(support(polys))
    matrix = [[p.coeff(a) for a in monomials] for p in polys]
    return rank(matrix) == len(polys)


def _check_nonzero(polys):
    if any(p.is_zero() for p in polys):
        raise ZeroPolynomialError("reduced-basis tests need nonzero polynomials")


def is_reverse_reduced(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Linearly independent, and ``lm(P_i)`` absent from every later ``P_j``."""
    polys = list(polys)
    _check_same_dim(polys)
    _check_nonzero(polys)
    for i, p in enumerate(polys):
        m = least_monomial(p, order)
        if any(m in q.terms for q in polys[i + 1:]):
            return False
    return _independent(polys)


def is_reduced(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Linearly independent, and ``LM(P_i)`` absent from every later ``P_j``."""
    polys = list(polys)
    _check_same_dim(polys)
    _check_nonzero(polys)
    for i, p in enumerate(polys):
        m = leading_monomial(p, order)
        if any(m in q.terms for q in polys[i + 1:]):
            return False
    return _independent(polys)
