"""Polynomial expressions: recursive-descent parser and canonical printer.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := rational | var ['^' uint] | '(' expr ')'

A rational literal ``p/q`` is a single token when written without spaces, so
``1/2*x`` reads as ``(1/2)*x``.  Multiplication is always explicit and there
are no floating-point literals.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import NegativeExponent, ParseError, UnknownVariable
from .order import ExponentVector, MonomialOrder
from .poly import Polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<rat>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))"
)


def tokenize(text: str):
    """List of ``(kind, value, position)``; a final ``("end", None, len)`` is appended."""
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "rat":
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", start)
            value = Fraction(int(num), int(den) if den else 1)
            if m.end() < len(text) and (text[m.end()].isalnum() or text[m.end()] in "_./"):
                raise ParseError(f"malformed number near {text[start:m.end() + 1]!r}", start)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = tokenize(text)
        self.i = 0
        self.index = {name: k for k, name in enumerate(variables)}
        self.dim = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op):
        kind, value, _ = self.peek()
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos, "operator or end of input")
        return p

    def expr(self) -> Polynomial:
        negate = self.accept("-")
        p = self.term()
        if negate:
            p = -p
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.accept("*"):
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "rat":
            return Polynomial.constant(self.dim, value)
        if kind == "name":
            if value not in self.index:
                raise UnknownVariable(value, pos)
            exp = 1
            if self.accept("^"):
                kind, e, epos = self.take()
                if kind == "op" and e == "-":
                    raise NegativeExponent(epos)
                if kind != "rat" or e.denominator != 1:
                    raise ParseError("bad exponent", epos, "nonnegative integer")
                exp = int(e)
            alpha = [0] * self.dim
            alpha[self.index[value]] = exp
            return Polynomial.monomial(alpha)
        if kind == "op" and value == "(":
            p = self.expr()
            kind, value, pos = self.take()
            if not (kind == "op" and value == ")"):
                raise ParseError("unbalanced parenthesis", pos, "')'")
            return p
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {found}", pos, "number, variable or '('")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    variables = list(variables)
    if not variables:
        raise ValueError("at least one variable is required")
    if len(set(variables)) != len(variables):
        raise ValueError(f"duplicate variable names in {variables}")
    return _Parser(text, variables).parse()


def parse_monomial(text: str, variables: Sequence[str]) -> ExponentVector:
    """Parse a single monomial such as ``1``, ``x`` or ``x^2*y``."""
    p = parse_polynomial(text, variables)
    if len(p.terms) != 1:
        raise ParseError(f"{text!r} is not a single monomial")
    (alpha, c), = p.terms.items()
    if c != 1:
        raise ParseError(f"{text!r} carries coefficient {c}; expected a bare monomial")
    return alpha


def format_monomial(alpha: ExponentVector, variables: Sequence[str]) -> str:
    parts = []
    for name, e in zip(variables, alpha):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_polynomial(p: Polynomial, variables: Sequence[str], order: MonomialOrder) -> str:
    """Canonical text for ``p``, terms in decreasing monomial order."""
    if len(variables) != p.dim:
        raise ValueError(f"{len(variables)} names for a polynomial in {p.dim} variables")
    if p.is_zero():
        return "0"
    out = []
    for alpha in order.sorted(p.terms, reverse=True):
        c = p.terms[alpha]
        mag = abs(c)
        mono = format_monomial(alpha, variables)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def format_rational(c: Fraction) -> str:
    return str(c)


def format_matrix(matrix, row_labels: Sequence[str], col_labels: Sequence[str]) -> str:
    """Column headers on top, one row per line with its label on the right."""
    cells = [[format_rational(x) for x in row] for row in matrix]
    widths = [len(h) for h in col_labels]
    for row in cells:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    head = "  " + "  ".join(h.rjust(w) for h, w in zip(col_labels, widths))
    lines = [head]
    for row, label in zip(cells, row_labels):
        lines.append("( " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " )  " + label)
    return "\n".join(lines)
