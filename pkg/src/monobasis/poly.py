"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, ZeroPolynomialError
from .order import ExponentVector, MonomialOrder


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected so that no inexact value sneaks into a computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean coefficient {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Polynomial:
    """Immutable polynomial in ``dim`` variables.

    ``terms`` maps exponent tuples to nonzero Fractions and must be treated as
    read-only.  The zero polynomial has an empty term map.
    """

    __slots__ = ("dim", "terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[ExponentVector, object] | None = None):
        self.dim = dim
        clean = {}
        if terms:
            for alpha, c in terms.items():
                alpha = tuple(alpha)
                if len(alpha) != dim:
                    raise DimensionMismatch(f"term {alpha} does not have {dim} exponents")
                if any(e < 0 for e in alpha):
                    raise ValueError(f"negative exponent in {alpha}")
                c = as_rational(c)
                if c:
                    clean[alpha] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, terms: dict) -> "Polynomial":
        # trusted constructor: keys valid, values nonzero Fractions
        p = cls.__new__(cls)
        p.dim = dim
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls._raw(dim, {})

    @classmethod
    def constant(cls, dim: int, c=1) -> "Polynomial":
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def monomial(cls, alpha: Sequence[int], c=1) -> "Polynomial":
        return cls(len(alpha), {tuple(alpha): c})

    @classmethod
    def variable(cls, dim: int, i: int) -> "Polynomial":
        alpha = [0] * dim
        alpha[i] = 1
        return cls._raw(dim, {tuple(alpha): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, alpha: ExponentVector) -> Fraction:
        return self.terms.get(tuple(alpha), Fraction(0))

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(a) for a in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(a) for a in self.terms), default=-1)

    def _check(self, other: "Polynomial"):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimension {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, as_rational(other))
        self._check(other)
        terms = dict(self.terms)
        for alpha, c in other.terms.items():
            s = terms.get(alpha, 0) + c
            if s:
                terms[alpha] = s
            else:
                terms.pop(alpha, None)
        return Polynomial._raw(self.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.dim, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.dim, as_rational(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __truediv__(self, other):
        return scale(self, 1 / as_rational(other))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return f"Polynomial({self.dim}, 0)"
        body = " + ".join(f"{c}*X^{list(a)}" for a, c in sorted(self.terms.items(), reverse=True))
        return f"Polynomial({self.dim}, {body})"


def _check_same_dim(polys):
    dims = {p.dim for p in polys}
    if len(dims) > 1:
        raise DimensionMismatch(f"polynomials of mixed dimensions {sorted(dims)}")


def support(polys: Iterable[Polynomial]) -> set:
    """Set of exponent vectors occurring with nonzero coefficient in any input."""
    polys = list(polys)
    _check_same_dim(polys)
    out = set()
    for p in polys:
        out.update(p.terms)
    return out


def least_monomial(p: Polynomial, order: MonomialOrder) -> ExponentVector:
    if not p.terms:
        raise ZeroPolynomialError("least monomial of the zero polynomial")
    return min(p.terms, key=order.key)


def leading_monomial(p: Polynomial, order: MonomialOrder) -> ExponentVector:
    if not p.terms:
        raise ZeroPolynomialError("leading monomial of the zero polynomial")
    return max(p.terms, key=order.key)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def scale(p: Polynomial, c) -> Polynomial:
    c = as_rational(c)
    if not c:
        return Polynomial.zero(p.dim)
    return Polynomial._raw(p.dim, {a: v * c for a, v in p.terms.items()})


def mul(p: Polynomial, q: Polynomial, cap: int | None = None) -> Polynomial:
    """Product ``p*q``; with ``cap`` set, terms of total degree > cap are never formed."""
    p._check(q)
    terms = {}
    for a, ca in p.terms.items():
        da = sum(a)
        for b, cb in q.terms.items():
            if cap is not None and da + sum(b) > cap:
                continue
            k = tuple(x + y for x, y in zip(a, b))
            terms[k] = terms.get(k, 0) + ca * cb
    return Polynomial._raw(p.dim, {k: v for k, v in terms.items() if v})


def truncate(p: Polynomial, cap: int) -> Polynomial:
    """Drop every term of total degree greater than ``cap``."""
    return Polynomial._raw(p.dim, {a: c for a, c in p.terms.items() if sum(a) <= cap})


def _falling(b: int, a: int) -> int:
    return math.perm(b, a)


def diff_apply(p: Polynomial, q: Polynomial) -> Polynomial:
    """Apply the differential operator ``p(D)`` to ``q``.

    ``D^a X^b = prod(b_i!/(b_i - a_i)!) X^(b - a)`` when ``b >= a``
    componentwise, and 0 otherwise.
    """
    p._check(q)
    terms = {}
    for a, ca in p.terms.items():
        for b, cb in q.terms.items():
            if any(x > y for x, y in zip(a, b)):
                continue
            factor = 1
            for x, y in zip(a, b):
                factor *= _falling(y, x)
            k = tuple(y - x for x, y in zip(a, b))
            terms[k] = terms.get(k, 0) + ca * cb * factor
    return Polynomial._raw(p.dim, {k: v for k, v in terms.items() if v})


def evaluate(p: Polynomial, point: Sequence) -> Fraction:
    if len(point) != p.dim:
        raise DimensionMismatch(f"point of length {len(point)} for a polynomial in {p.dim} variables")
    point = [as_rational(t) for t in point]
    total = Fraction(0)
    for alpha, c in p.terms.items():
        v = c
        for t, e in zip(point, alpha):
            if e:
                v *= t**e
        total += v
    return total


def functional_apply(p: Polynomial, point: Sequence, q: Polynomial) -> Fraction:
    """Value of the functional ``delta_point o p(D)`` on ``q``, with no truncation."""
    return evaluate(diff_apply(p, q), point)
