"""Move interpolation conditions from a point to the origin.

The functional ``delta_theta o P(D)`` equals ``delta_0 o (exp(theta.D) P)(D)``.
Only the low-degree part of ``exp(theta.X) * P`` can influence the least
monomials that matter downstream, so the series is cut at a total-degree cap.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, ZeroAfterTruncation
from .poly import Polynomial, as_rational, mul


def exp_series(theta: Sequence, cap: int) -> Polynomial:
    """``sum_{j<=cap} (theta.X)^j / j!`` expanded into monomials."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    dim = len(theta)
    theta = [as_rational(t) for t in theta]
    linear = Polynomial(dim, {tuple(int(i == k) for i in range(dim)): t for k, t in enumerate(theta)})
    total = Polynomial.constant(dim)
    term = total
    for j in range(1, cap + 1):
        if term.is_zero():
            break
        term = mul(term, linear) / j
        total = total + term
    return total


def shift_condition(p: Polynomial, theta: Sequence, cap: int) -> Polynomial:
    """Degree-<=cap part of ``exp(theta.X) * p``."""
    if len(theta) != p.dim:
        raise DimensionMismatch(f"point of length {len(theta)} for dimension {p.dim}")
    if p.is_zero():
        raise ValueError("cannot shift the zero condition")
    out = mul(exp_series(theta, cap), p, cap=cap)
    if out.is_zero():
        raise ZeroAfterTruncation(cap)
    return out
