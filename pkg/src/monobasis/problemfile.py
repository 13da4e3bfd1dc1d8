"""Reading and writing problem files.

A problem file is a JSON (or YAML) mapping::

    variables: [x, y]
    order: {kind: grlex, precedence: [x, y]}     # most significant first
    sites:
      - point: ["0", "0"]
        conditions: ["1", "x", "1/2*x^2 + y"]
      - point: ["1", "2"]
        conditions: ["1", "x"]
    values: ["0", "1", "0", "2", "1"]             # optional

Rationals are written as strings (``"1/2"``); plain integers are accepted too.
"""

from __future__ import annotations

import yaml

from .engine import Problem, Site
from .errors import MonobasisError, ParseError
from .order import MonomialOrder
from .parser import format_polynomial, parse_polynomial
from .poly import as_rational


class InputError(MonobasisError, ValueError):
    """Problem file is unreadable or fails validation."""


def _rational(value, where):
    try:
        return as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: {exc}") from None


def order_from_spec(kind, precedence, variables) -> MonomialOrder:
    if precedence is None:
        precedence = list(variables)
    if isinstance(precedence, str):
        precedence = [p.strip() for p in precedence.split(",") if p.strip()]
    if sorted(precedence) != sorted(variables) or len(set(precedence)) != len(precedence):
        raise InputError(f"precedence {precedence} is not a permutation of variables {list(variables)}")
    if kind not in ("lex", "grlex", "grevlex"):
        raise InputError(f"unknown ordering kind {kind!r}")
    index = {v: i for i, v in enumerate(variables)}
    return MonomialOrder(kind, tuple(index[v] for v in precedence))


def problem_from_document(doc, kind=None, precedence=None):
    """Validate a parsed document; return ``(problem, values_or_None)``.

    ``kind``/``precedence`` override the file's ordering when given.
    """
    if not isinstance(doc, dict):
        raise InputError("problem file must be a mapping")
    variables = doc.get("variables")
    if not isinstance(variables, list) or not variables or not all(isinstance(v, str) for v in variables):
        raise InputError("'variables' must be a nonempty list of names")
    if len(set(variables)) != len(variables):
        raise InputError(f"duplicate variable names in {variables}")
    ospec = doc.get("order") or {}
    if not isinstance(ospec, dict):
        raise InputError("'order' must be a mapping with 'kind' and 'precedence'")
    order = order_from_spec(
        kind or ospec.get("kind", "grlex"),
        precedence if precedence is not None else ospec.get("precedence"),
        variables,
    )
    raw_sites = doc.get("sites")
    if not isinstance(raw_sites, list) or not raw_sites:
        raise InputError("'sites' must be a nonempty list")
    sites = []
    for i, s in enumerate(raw_sites):
        if not isinstance(s, dict):
            raise InputError(f"site {i} must be a mapping")
        point = s.get("point")
        if not isinstance(point, list) or len(point) != len(variables):
            raise InputError(f"site {i}: point must list {len(variables)} coordinates")
        point = [_rational(t, f"site {i} point") for t in point]
        conds = s.get("conditions")
        if not isinstance(conds, list) or not conds:
            raise InputError(f"site {i}: 'conditions' must be a nonempty list")
        polys = []
        for j, text in enumerate(conds):
            if isinstance(text, int) and not isinstance(text, bool):
                text = str(text)
            if not isinstance(text, str):
                raise InputError(f"site {i} condition {j}: expected an expression string")
            try:
                p = parse_polynomial(text, variables)
            except ParseError as exc:
                raise InputError(f"site {i} condition {j} ({text!r}): {exc}") from None
            if p.is_zero():
                raise InputError(f"site {i} condition {j}: condition is the zero polynomial")
            polys.append(p)
        sites.append(Site(tuple(point), tuple(polys)))
    problem = Problem(tuple(variables), order, tuple(sites))
    values = doc.get("values")
    if values is not None:
        if not isinstance(values, list) or len(values) != problem.n:
            raise InputError(f"'values' must list {problem.n} entries, one per condition")
        values = [_rational(v, f"value {k}") for k, v in enumerate(values)]
    return problem, values


def load_problem(stream, kind=None, precedence=None):
    try:
        doc = yaml.safe_load(stream)
    except yaml.YAMLError as exc:
        raise InputError(f"cannot parse problem file: {exc}") from None
    return problem_from_document(doc, kind, precedence)


def problem_to_document(problem: Problem, values=None) -> dict:
    names = list(problem.variables)
    doc = {
        "variables": names,
        "order": {
            "kind": problem.order.kind,
            "precedence": [names[i] for i in problem.order.precedence],
        },
        "sites": [
            {
                "point": [str(t) for t in s.point],
                "conditions": [format_polynomial(p, names, problem.order) for p in s.conditions],
            }
            for s in problem.sites
        ],
    }
    if values is not None:
        doc["values"] = [str(as_rational(v)) for v in values]
    return doc
