"""Exponent vectors and monomial orderings.

A monomial ``x_1^a_1 * ... * x_d^a_d`` is represented by its exponent tuple
``(a_1, ..., a_d)``.  Orderings are described by a kind (``lex``, ``grlex``,
``grevlex``) and a variable precedence, most significant variable first.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch

ExponentVector = tuple  # tuple[int, ...]

KINDS = ("lex", "grlex", "grevlex")


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def exponent_vector(exponents: Iterable[int], dim: int | None = None) -> ExponentVector:
    """Validate and normalize ``exponents`` into a tuple of nonnegative ints."""
    alpha = tuple(int(e) for e in exponents)
    if any(e < 0 for e in alpha):
        raise ValueError(f"negative exponent in {alpha}")
    if dim is not None and len(alpha) != dim:
        raise DimensionMismatch(f"exponent vector {alpha} has length {len(alpha)}, expected {dim}")
    return alpha


def degree(alpha: ExponentVector) -> int:
    return sum(alpha)


@dataclass(frozen=True)
class MonomialOrder:
    kind: str
    precedence: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ordering kind {self.kind!r}; expected one of {KINDS}")
        prec = tuple(int(i) for i in self.precedence)
        if sorted(prec) != list(range(len(prec))):
            raise ValueError(f"precedence {prec} is not a permutation of 0..{len(prec) - 1}")
        object.__setattr__(self, "precedence", prec)

    @classmethod
    def of(cls, kind: str, dim: int, precedence: Sequence[int] | None = None) -> "MonomialOrder":
        """Build an ordering; the default precedence is ``x_0 > x_1 > ...``."""
        if precedence is None:
            precedence = range(dim)
        order = cls(kind, tuple(precedence))
        if order.dim != dim:
            raise DimensionMismatch(f"precedence has {order.dim} variables, expected {dim}")
        return order

    @property
    def dim(self) -> int:
        return len(self.precedence)

    def key(self, alpha: ExponentVector):
        """Sort key: ``a < b`` in this ordering iff ``key(a) < key(b)``."""
        if len(alpha) != self.dim:
            raise DimensionMismatch(f"exponent vector {alpha} has length {len(alpha)}, expected {self.dim}")
        if self.kind == "lex":
            return tuple(alpha[i] for i in self.precedence)
        if self.kind == "grlex":
            return (sum(alpha),) + tuple(alpha[i] for i in self.precedence)
        # grevlex: the smaller exponent in the least significant variable wins
        return (sum(alpha),) + tuple(-alpha[i] for i in reversed(self.precedence))

    def compare(self, a: ExponentVector, b: ExponentVector) -> Cmp:
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Cmp.LESS
        if ka > kb:
            return Cmp.GREATER
        return Cmp.EQUAL

    def max(self, monomials: Iterable[ExponentVector]) -> ExponentVector:
        return max(monomials, key=self.key)

    def min(self, monomials: Iterable[ExponentVector]) -> ExponentVector:
        return min(monomials, key=self.key)

    def sorted(self, monomials: Iterable[ExponentVector], reverse: bool = False) -> list:
        return sorted(monomials, key=self.key, reverse=reverse)

    def is_graded(self) -> bool:
        return self.kind != "lex"


def compare(order: MonomialOrder, a: ExponentVector, b: ExponentVector) -> Cmp:
    return order.compare(a, b)


def compare_sets(order: MonomialOrder, t1: Iterable[ExponentVector], t2: Iterable[ExponentVector]) -> Cmp:
    """Compare two monomial sets by the largest element of each one-sided difference.

    ``t1 < t2`` iff ``max(t1 - t2) < max(t2 - t1)``.  When one set contains
    the other, the strict subset is the smaller one.
    """
    s1, s2 = set(t1), set(t2)
    for alpha in itertools.chain(s1, s2):
        if len(alpha) != order.dim:
            raise DimensionMismatch(f"exponent vector {alpha} has length {len(alpha)}, expected {order.dim}")
    only1, only2 = s1 - s2, s2 - s1
    if not only1 and not only2:
        return Cmp.EQUAL
    if not only1:
        return Cmp.LESS
    if not only2:
        return Cmp.GREATER
    # the two maxima are distinct monomials, so this is never EQUAL
    return order.compare(order.max(only1), order.max(only2))


def is_lower_set(monomials: Iterable[ExponentVector]) -> bool:
    """True iff the set is closed under taking divisors."""
    s = set(monomials)
    for alpha in s:
        # closure under single-step decrements implies closure under all divisors
        for i, e in enumerate(alpha):
            if e > 0 and alpha[:i] + (e - 1,) + alpha[i + 1:] not in s:
                return False
    return True


def monomials_up_to(dim: int, max_degree: int) -> list:
    """All exponent vectors in ``dim`` variables with total degree <= ``max_degree``."""
    out = []
    for deg in range(max_degree + 1):
        out.extend(_homogeneous(dim, deg))
    return out


def _homogeneous(dim: int, deg: int):
    if dim == 0:
        if deg == 0:
            yield ()
        return
    if dim == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in _homogeneous(dim - 1, deg - first):
            yield (first,) + rest
