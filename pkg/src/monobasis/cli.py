"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 dependent conditions, 3 engine and
oracle disagree (``check`` only).
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time

from . import engine, oracle
from .errors import DependentConditions, MonobasisError, ParseError
from .generate import random_problem
from .parser import format_matrix, format_monomial, format_polynomial, parse_monomial
from .problemfile import InputError, load_problem, problem_to_document

EXIT_OK, EXIT_INPUT, EXIT_DEPENDENT, EXIT_DISAGREE = 0, 1, 2, 3


def _open(path):
    if path == "-":
        return sys.stdin
    return open(path, encoding="utf-8")


def _load(args):
    with _open(args.file) as fh:
        return load_problem(fh, args.order, args.precedence)


def _emit(args, report, text):
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text)


def _fmt_basis(problem, basis):
    return [format_monomial(b, problem.variables) for b in basis]


def _fmt_point(point):
    return "(" + ", ".join(str(t) for t in point) + ")"


def _row_labels(problem):
    return [
        f"δ_{_fmt_point(theta)} ∘ {{{format_polynomial(p, problem.variables, problem.order)}}}"
        for _, theta, p in problem.flat()
    ]


def _dependent(args, exc):
    tag = list(exc.tag) if exc.tag is not None else None
    where = f" (site {tag[0]}, condition {tag[1]})" if tag else ""
    _emit(
        args,
        {"command": args.command, "error": "DependentConditions", "message": str(exc), "tag": tag},
        f"DependentConditions{where}: {exc}",
    )
    return EXIT_DEPENDENT


def cmd_basis(args):
    problem, _ = _load(args)
    try:
        res = engine.minimal_basis(problem, cap=args.cap)
    except DependentConditions as exc:
        return _dependent(args, exc)
    names, order = problem.variables, problem.order
    basis = _fmt_basis(problem, res.basis)
    reduced = [
        {
            "tag": list(tag),
            "lm": format_monomial(lm, names),
            "polynomial": format_polynomial(q, names, order),
        }
        for tag, lm, q in zip(res.condition_tags, res.pivots, res.reduced)
    ]
    report = {"command": "basis", "n": problem.n, "basis": basis, "cap_used": res.cap_used, "reduced": reduced}
    lines = [f"basis: {', '.join(basis)}", f"cap_used: {res.cap_used}", "reduced:"]
    lines += [f"  q{r['tag']}  lm={r['lm']}  {r['polynomial']}" for r in reduced]
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def cmd_interpolate(args):
    problem, values = _load(args)
    if values is None:
        raise InputError("problem file has no 'values' to interpolate")
    try:
        res = engine.minimal_basis(problem, cap=args.cap)
        g = engine.interpolate(problem, values, res.basis)
    except DependentConditions as exc:
        return _dependent(args, exc)
    if any(engine.residuals(problem, g, values)):
        raise AssertionError("interpolant does not reproduce the data exactly")
    basis = _fmt_basis(problem, res.basis)
    text_g = format_polynomial(g, problem.variables, problem.order)
    report = {"command": "interpolate", "basis": basis, "interpolant": text_g, "residuals": "exact"}
    _emit(args, report, f"basis: {', '.join(basis)}\ng = {text_g}\nresiduals: exact")
    return EXIT_OK


def _parse_monomials(words, variables):
    out = []
    for w in words:
        for piece in w.replace(",", " ").split():
            try:
                out.append(parse_monomial(piece, variables))
            except ParseError as exc:
                raise InputError(f"bad monomial {piece!r}: {exc}") from None
    return out


def cmd_verify(args):
    problem, _ = _load(args)
    monomials = _parse_monomials(args.monomials, problem.variables)
    if len(monomials) != problem.n:
        raise InputError(f"{len(monomials)} monomials given for {problem.n} conditions")
    matrix = engine.build_matrix(problem, monomials)
    ok = engine.is_interpolating_basis(problem, monomials)
    cols = _fmt_basis(problem, monomials)
    rows = _row_labels(problem)
    report = {
        "command": "verify",
        "monomials": cols,
        "rows": rows,
        "matrix": [[str(x) for x in row] for row in matrix],
        "nonsingular": ok,
    }
    _emit(args, report, format_matrix(matrix, rows, cols) + f"\nnonsingular: {str(ok).lower()}")
    return EXIT_OK


def cmd_check(args):
    problem, _ = _load(args)
    found, errors = {}, {}
    for name, fn in (
        ("engine", lambda: engine.minimal_basis(problem, cap=args.cap).basis),
        ("oracle", lambda: oracle.greedy_minimal_basis(problem)),
    ):
        try:
            found[name] = problem.order.sorted(fn())
        except DependentConditions as exc:
            errors[name] = str(exc)
    agree = found.get("engine") == found.get("oracle") and len(errors) in (0, 2)
    report = {"command": "check", "agree": agree}
    lines = []
    for name in ("engine", "oracle"):
        if name in found:
            report[name] = _fmt_basis(problem, found[name])
            lines.append(f"{name}: {', '.join(report[name])}")
        else:
            report[name] = None
            report[f"{name}_error"] = "DependentConditions"
            lines.append(f"{name}: DependentConditions ({errors[name]})")
    lines.append(f"agree: {str(agree).lower()}")
    _emit(args, report, "\n".join(lines))
    if not agree:
        return EXIT_DISAGREE
    return EXIT_DEPENDENT if errors else EXIT_OK


def cmd_generate(args):
    seed = args.seed if args.seed is not None else random.randrange(2**32)
    rng = random.Random(seed)
    problem = random_problem(rng, args.dim, args.n, args.kind)
    values = None
    if args.values:
        values = [str(rng.randint(-9, 9)) for _ in range(problem.n)]
    doc = {"seed": seed, **problem_to_document(problem, values)}
    text = json.dumps(doc, indent=2)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(f"seed: {seed}", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args):
    rng = random.Random(args.seed)
    t_engine = t_oracle = 0.0
    for _ in range(args.count):
        problem = random_problem(rng, args.dim, args.n, args.kind)
        t0 = time.perf_counter()
        engine.minimal_basis(problem)
        t1 = time.perf_counter()
        oracle.greedy_minimal_basis(problem)
        t_oracle += time.perf_counter() - t1
        t_engine += t1 - t0
    report = {
        "command": "bench",
        "seed": args.seed,
        "count": args.count,
        "engine_seconds": round(t_engine, 6),
        "oracle_seconds": round(t_oracle, 6),
    }
    _emit(args, report, f"{args.count} problems (d={args.dim}, n={args.n}, {args.kind}): "
          f"engine {t_engine:.3f}s, oracle {t_oracle:.3f}s")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="monobasis", description="Minimal monomial interpolating bases")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def problem_cmd(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="problem file (JSON or YAML), '-' for stdin")
        p.add_argument("--order", choices=["lex", "grlex", "grevlex"], help="override the file's ordering kind")
        p.add_argument("--precedence", help="override variable precedence, e.g. x,y,z (most significant first)")
        p.add_argument("--cap", type=int, help="initial truncation degree (default n-1)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    problem_cmd("basis", cmd_basis, "compute the minimal monomial basis")
    problem_cmd("interpolate", cmd_interpolate, "solve for the interpolant of the file's values")
    v = problem_cmd("verify", cmd_verify, "test whether given monomials form an interpolating basis")
    v.add_argument("monomials", nargs="+", help="monomials, e.g. '1 x y y^2 x*y'")
    problem_cmd("check", cmd_check, "cross-check engine against the greedy oracle")

    g = sub.add_parser("generate", help="emit a random problem file")
    g.add_argument("--seed", type=int)
    g.add_argument("--dim", type=int, default=2)
    g.add_argument("--n", type=int, default=4)
    g.add_argument("--kind", choices=["lagrange", "hermite"], default="lagrange")
    g.add_argument("--values", action="store_true", help="include random data values")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="time engine and oracle on random problems")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--count", type=int, default=50)
    b.add_argument("--dim", type=int, default=2)
    b.add_argument("--n", type=int, default=6)
    b.add_argument("--kind", choices=["lagrange", "hermite"], default="lagrange")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (InputError, MonobasisError, OSError, ValueError) as exc:
        msg = f"{type(exc).__name__}: {exc}"
        if getattr(args, "json", False):
            print(json.dumps({"command": args.command, "error": type(exc).__name__, "message": str(exc)}, indent=2))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
