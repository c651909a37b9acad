"""Command-line front end: ``slitpaths {gf,series,verify,expand,roots,validate}``.

Exit codes: 0 success / routes agree, 1 bad input, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import RationalFunction, rat
from .errors import DegenerateRoots, DomainError, NumericFailure, SlitPathsError
from .kernel import SlitProblem, WeightedStepSet, check_heights, numeric_kernel_roots
from .numeric import (CLOSED_FORM_CASES, DEFAULT_T0, validate_section3_closed_forms,
                      validate_theorem1_at)
from .oracle import transfer_gf
from .partitions import Partition, SkewShape, endpoint_shape, lemma3_mu_list, strip_shape
from .schur import gf_schur_sum_route, gf_skew_route
from .sweep import NUMERIC_TOL, run_sweep

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

ROUTE_FUNCS = {
    "skew": lambda p: gf_skew_route(p).value,
    "schur-sum": lambda p: gf_schur_sum_route(p).value,
    "transfer": lambda p: transfer_gf(p.steps, p.w, p.u, p.v).value,
}


class InputError(Exception):
    pass


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [rat(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational list {text!r}: {exc}") from exc


def load_problem(args, need_heights: bool = True) -> SlitProblem | WeightedStepSet:
    """Problem from ``--problem FILE`` or the inline flags."""
    if args.problem:
        try:
            with open(args.problem) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read problem file: {exc}") from exc
        if isinstance(data, dict) and "problem" in data:
            data = data["problem"]
        if not isinstance(data, dict):
            raise InputError("problem file must hold a JSON object")
        if not need_heights:
            data = dict(data, w=data.get("w", 1), u=data.get("u", 0), v=data.get("v", 0))
            return SlitProblem.from_json(data).steps
        return SlitProblem.from_json(data)
    p = _rational_list(args.p) if args.p else None
    q = _rational_list(args.q) if args.q else None
    alpha = args.alpha if args.alpha is not None else (len(p) - 1 if p else None)
    beta = args.beta if args.beta is not None else (len(q) if q else None)
    if alpha is None or beta is None:
        raise InputError("give --problem FILE or --alpha/--beta (or --p/--q)")
    p = p if p is not None else [Fraction(1)] * (alpha + 1)
    q = q if q is not None else [Fraction(1)] * beta
    data = {"alpha": alpha, "beta": beta, "p": p, "q": q}
    if not need_heights:
        return SlitProblem.from_json(dict(data, w=1, u=0, v=0)).steps
    if args.w is None or args.u is None or args.v is None:
        raise InputError("--w, --u and --v are required")
    return SlitProblem.from_json(dict(data, w=args.w, u=args.u, v=args.v))


def ratfun_json(f: RationalFunction) -> dict:
    n, d = f.integer_parts()
    return {"numerator": [str(x) for x in n], "denominator": [str(x) for x in d], "text": f.format()}


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# -- subcommands --------------------------------------------------------------

def cmd_gf(args) -> int:
    prob = load_problem(args)
    names = list(ROUTE_FUNCS) if args.route == "all" else [args.route]
    values = {name: ROUTE_FUNCS[name](prob) for name in names}
    agree = len(set(values.values())) == 1
    if args.format == "json":
        text = json.dumps({"problem": prob.to_json(),
                           "results": {k: ratfun_json(v) for k, v in values.items()},
                           "agree": agree}, sort_keys=True, indent=1)
    else:
        style = args.format
        if len(names) == 1:
            text = values[names[0]].format(style)
        else:
            text = "\n".join(f"{k}: {v.format(style)}" for k, v in values.items())
            text += "\n" + ("AGREE" if agree else "DISAGREE")
    _emit(args, text)
    return EXIT_OK if agree else EXIT_VERIFY


def cmd_series(args) -> int:
    prob = load_problem(args)
    if not 0 <= args.n <= 10 ** 5:
        raise InputError("--n must lie in [0, 100000]")
    coeffs = gf_skew_route(prob).value.series(args.n)
    if args.format == "json":
        text = json.dumps({"problem": prob.to_json(), "coefficients": [str(c) for c in coeffs]},
                          sort_keys=True, indent=1)
    else:
        text = "\n".join(str(c) for c in coeffs)
    _emit(args, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.weights != "unit" and args.seed is None:
        raise InputError("--seed is required for random weight sweeps")
    pairs = [(a, b) for a in range(1, args.max_alpha + 1) for b in range(1, args.max_beta + 1)]
    if args.max_alpha < 1 or args.max_beta < 1 or args.max_w < 1:
        raise InputError("--max-alpha, --max-beta and --max-w must be >= 1")
    report = run_sweep(pairs, args.max_w, weights=args.weights, n_random=args.n_random,
                       seed=args.seed, n_series=args.n_series, numeric=not args.no_numeric)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json() + "\n")
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY


def _compact(parts: tuple, latex: bool) -> str:
    if not latex:
        return "(" + ",".join(map(str, parts)) + ")"
    chunks, i = [], 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        k = j - i
        chunks.append(str(parts[i]) if k == 1 else f"{parts[i]}^{{{k}}}")
        i = j
    return "(" + ",".join(chunks) + ")"


def format_expansion(w: int, alpha: int, beta: int, u: int, v: int, style: str = "plain") -> str:
    lam = strip_shape(w, alpha, beta, u)
    nu = endpoint_shape(v, alpha, beta)
    mus = lemma3_mu_list(w, alpha, beta, u, v)
    latex = style == "latex"

    def shape(p: Partition) -> str:
        return _compact(p.parts if latex else p.trimmed(), latex)

    lhs = f"s_{{{shape(lam)}/{shape(nu)}}}" if v or latex else f"s_{{{shape(lam)}}}"
    rhs = " + ".join(f"s_{{{shape(m)}}}" for m in mus)
    return f"{lhs} = {rhs}"


def cmd_expand(args) -> int:
    for name in ("w", "alpha", "beta", "u", "v"):
        if getattr(args, name) is None:
            raise InputError(f"--{name} is required")
    w, alpha, beta, u, v = args.w, args.alpha, args.beta, args.u, args.v
    mus = lemma3_mu_list(w, alpha, beta, u, v)
    if args.format == "json":
        skew = SkewShape(strip_shape(w, alpha, beta, u), endpoint_shape(v, alpha, beta))
        text = json.dumps({"outer": list(skew.outer.parts), "inner": list(skew.inner.parts),
                           "terms": [list(m.parts) for m in mus],
                           "r": min(u, v, w - u, w - v)}, sort_keys=True)
    else:
        text = format_expansion(w, alpha, beta, u, v, args.format)
    _emit(args, text)
    return EXIT_OK


def cmd_roots(args) -> int:
    steps = load_problem(args, need_heights=False)
    t0 = rat(args.t)
    roots = numeric_kernel_roots(steps, t0)
    if args.format == "json":
        text = json.dumps({"t": str(t0), "roots": [[z.real, z.imag] for z in roots]}, sort_keys=True)
    else:
        text = "\n".join(f"{z.real:.15g} {z.imag:+.15g}j" for z in roots)
    _emit(args, text)
    return EXIT_OK


def cmd_validate(args) -> int:
    prob = load_problem(args)
    t0 = rat(args.t)
    if args.closed_form:
        rep = validate_section3_closed_forms(args.closed_form, prob, t0)
    else:
        rep = validate_theorem1_at(prob, t0)
    ok = bool(rep.rel_error < args.tol)
    if args.format == "json":
        text = json.dumps(dict(rep.to_json(), ok=ok, t=str(t0)), sort_keys=True)
    else:
        text = (f"exact    {rep.exact.real:.15g}\nnumeric  {rep.numeric.real:.15g} "
                f"{rep.numeric.imag:+.3g}j\nrel_err  {rep.rel_error:.3e}\n"
                f"method   {rep.method}\n" + (f"note     {rep.note}\n" if rep.note else "")
                + ("OK" if ok else "FAIL"))
    _emit(args, text)
    return EXIT_OK if ok else EXIT_VERIFY


# -- parser -------------------------------------------------------------------

def _common(parser: argparse.ArgumentParser, top: bool) -> None:
    d = {} if top else {"default": argparse.SUPPRESS}
    parser.add_argument("--format", choices=("plain", "latex", "json"), **(d or {"default": "plain"}))
    parser.add_argument("--seed", type=int, **(d or {"default": None}))
    parser.add_argument("--out", metavar="FILE", **(d or {"default": None}))


def _problem_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--problem", metavar="FILE", help="JSON problem file")
    parser.add_argument("--alpha", type=int)
    parser.add_argument("--beta", type=int)
    parser.add_argument("--w", type=int)
    parser.add_argument("--u", type=int)
    parser.add_argument("--v", type=int)
    parser.add_argument("--p", help="comma-separated p_0..p_alpha, e.g. 0,1")
    parser.add_argument("--q", help="comma-separated q_1..q_beta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slitpaths",
                                     description="Generating functions of weighted paths in a strip.")
    _common(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gf", help="exact generating function G_(u,v)(t)")
    _common(p, top=False)
    _problem_flags(p)
    p.add_argument("--route", choices=("skew", "schur-sum", "transfer", "all"), default="skew")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("series", help="Taylor coefficients of G_(u,v)(t)")
    _common(p, top=False)
    _problem_flags(p)
    p.add_argument("--n", type=int, default=10, help="highest power of t")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="cross-check all routes over a parameter sweep")
    _common(p, top=False)
    p.add_argument("--max-alpha", type=int, default=2)
    p.add_argument("--max-beta", type=int, default=2)
    p.add_argument("--max-w", type=int, default=4)
    p.add_argument("--weights", choices=("unit", "random", "both"), default="unit")
    p.add_argument("--n-random", type=int, default=3)
    p.add_argument("--n-series", type=int, default=25)
    p.add_argument("--no-numeric", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", help="horizontal-strip expansion of the numerator skew Schur function")
    _common(p, top=False)
    for name in ("w", "alpha", "beta", "u", "v"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("roots", help="numeric kernel roots at t")
    _common(p, top=False)
    _problem_flags(p)
    p.add_argument("--t", default="1/10")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("validate", help="numeric check of the root formula at t")
    _common(p, top=False)
    _problem_flags(p)
    p.add_argument("--t", default=str(DEFAULT_T0))
    p.add_argument("--closed-form", choices=sorted(CLOSED_FORM_CASES))
    p.add_argument("--tol", type=float, default=NUMERIC_TOL)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DegenerateRoots, NumericFailure) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (SlitPathsError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
