"""Command-line surface: compute any object in the family, or verify identities.

Subcommands:

    catalan   -- full / truncated / staircase / two-variable values
    binom     -- noncommutative binomial coefficients of either kind
    hankel    -- Hankel blocks: show, factor, invert, quasideterminants
    special   -- apply a ring map (eps, chi-q, sigma, pi, bar) to an object
    verify    -- run the identity registry and report

Exit codes: 0 success, 1 identity failure, 2 usage error.
"""

import argparse
import json
import sys

from .binomials import binom_first, binom_second
from .catalan import catalan, dd_truncated, truncated, truncated_tilde, underline_catalan
from .identities import REGISTRY, run_suite, suite_ids
from .matrices import gauss_L, gauss_U, hankel, hankel_inverse, quasidet_bordered
from .qpoly import chi_q, format_qpoly, latex_qpoly, qpoly_to_obj
from .ring import bar, eps, pi, sigma
from .serialize import format_poly, latex_poly, poly_to_obj


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def render_poly(p, fmt):
    if fmt == "json":
        return json.dumps(poly_to_obj(p))
    if fmt == "latex":
        return latex_poly(p)
    return format_poly(p)


def render_qpoly(p, fmt):
    if fmt == "json":
        return json.dumps(qpoly_to_obj(p), sort_keys=True)
    if fmt == "latex":
        return latex_qpoly(p)
    return format_qpoly(p)


def _matrix_obj(M):
    return M.to_obj()


def render_matrix(M, fmt):
    if fmt == "json":
        return json.dumps(_matrix_obj(M))
    if fmt == "latex":
        body = " \\\\\n".join(" & ".join(latex_poly(e) for e in row) for row in M.entries)
        return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"
    lines = []
    for i, row in enumerate(M.entries):
        for j, e in enumerate(row):
            lines.append(f"[{i},{j}] {format_poly(e)}")
    return "\n".join(lines)


def cmd_catalan(args):
    n, k = args.n, args.k
    if args.dd and k is None:
        raise UsageError("--dd requires --k")
    if args.tilde and k is None:
        raise UsageError("--tilde requires --k")
    if args.dd and (args.sigma or args.tilde):
        raise UsageError("--dd cannot be combined with --sigma/--tilde")
    if args.sigma and args.tilde:
        raise UsageError("--sigma cannot be combined with --tilde")
    if args.dd:
        value = dd_truncated(n, k)
    elif args.sigma:
        value = underline_catalan(n) if k is None else sigma(truncated(n, k))
    elif args.tilde:
        value = truncated_tilde(n, k)
    elif k is not None:
        value = truncated(n, k)
    else:
        value = catalan(n)
    print(render_poly(value, args.format))
    return 0


def cmd_binom(args):
    builder = binom_first if args.kind == "first" else binom_second
    print(render_poly(builder(args.n, args.k), args.format))
    return 0


def cmd_hankel(args):
    action, extra = args.action[0], args.action[1:]
    m, n = args.m, args.n
    if action == "show":
        if extra:
            raise UsageError("show takes no extra arguments")
        print(render_matrix(hankel(m, n), args.format))
        return 0
    if action == "factor":
        if extra:
            raise UsageError("factor takes no extra arguments")
        L, U = gauss_L(m, n), gauss_U(m, n)
        verified = (L * U) == hankel(m, n)
        if args.format == "json":
            print(json.dumps({"L": _matrix_obj(L), "U": _matrix_obj(U),
                              "verified": verified}))
        else:
            print("L:")
            print(render_matrix(L, args.format))
            print("U:")
            print(render_matrix(U, args.format))
            print(f"L*U == H: {str(verified).lower()}")
        return 0
    if action == "inverse":
        if extra:
            raise UsageError("inverse takes no extra arguments")
        print(render_matrix(hankel_inverse(m, n), args.format))
        return 0
    if action == "quasidet":
        if len(extra) != 2:
            raise UsageError("quasidet needs two indices: --action quasidet I J")
        try:
            i, j = int(extra[0]), int(extra[1])
        except ValueError:
            raise UsageError("quasidet indices must be integers")
        if not 0 <= i <= j:
            raise UsageError(f"quasidet needs 0 <= i <= j, got i={i}, j={j}")
        print(render_poly(quasidet_bordered(m, i, j), args.format))
        return 0
    raise UsageError(f"unknown action {action!r}")


_SPECIAL_OBJECTS = ("catalan", "truncated", "tilde", "underline", "binom-first", "binom-second")


def cmd_special(args):
    n, k = args.n, args.k
    needs_k = args.object in ("truncated", "tilde", "binom-first", "binom-second")
    if needs_k and k is None:
        raise UsageError(f"--object {args.object} requires --k")
    if args.object == "catalan":
        value = catalan(n)
    elif args.object == "truncated":
        value = truncated(n, k)
    elif args.object == "tilde":
        value = truncated_tilde(n, k)
    elif args.object == "underline":
        value = underline_catalan(n)
    elif args.object == "binom-first":
        value = binom_first(n, k)
    else:
        value = binom_second(n, k)
    if args.op == "eps":
        print(json.dumps(eps(value)) if args.format == "json" else eps(value))
        return 0
    if args.op == "chi-q":
        print(render_qpoly(chi_q(value), args.format))
        return 0
    mapped = {"sigma": sigma, "pi": pi, "bar": bar}[args.op](value)
    print(render_poly(mapped, args.format))
    return 0


def cmd_verify(args):
    if args.list:
        for ident in suite_ids():
            print(f"{ident}: {REGISTRY[ident].statement}")
        return 0
    try:
        reports, ok = run_suite(args.suite, max_n=args.max_n, jobs=args.jobs)
    except KeyError:
        print(f"error: unknown suite {args.suite!r} "
              f"(use `verify --list` to see the registry)", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(reports))
    else:
        width = max(len(r["id"]) for r in reports)
        for r in reports:
            line = f"{r['status']:<4} {r['id']:<{width}}  [{r['params']}]  {r['millis']} ms"
            print(line)
            if r["status"] == "fail":
                print(f"     lhs: {r['lhs']}")
                print(f"     rhs: {r['rhs']}")
        total = sum(r["millis"] for r in reports)
        bad = sum(1 for r in reports if r["status"] != "ok")
        print(f"{len(reports)} identities, {bad} failing, {total} ms")
    return 0 if ok else 1


class UsageError(Exception):
    pass


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")

    parser = argparse.ArgumentParser(
        prog="nccatalan",
        description="Noncommutative Catalan numbers: exact computation and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalan", parents=[common],
                       help="full, truncated, staircase or two-variable values")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--tilde", action="store_true", help="staircase form (needs --k)")
    p.add_argument("--sigma", action="store_true", help="two-variable specialization")
    p.add_argument("--dd", action="store_true",
                   help="homogeneous two-variable form (needs --k)")
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("binom", parents=[common], help="noncommutative binomials")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--kind", choices=("first", "second"), default="first")
    p.set_defaults(func=cmd_binom)

    p = sub.add_parser("hankel", parents=[common], help="Hankel blocks and quasiminors")
    p.add_argument("--m", type=int, choices=(0, 1), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--action", nargs="+", required=True,
                   metavar=("ACTION", "ARG"),
                   help="show | factor | inverse | quasidet I J")
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("special", parents=[common],
                       help="apply a ring map to a named object")
    p.add_argument("--op", choices=("eps", "chi-q", "sigma", "pi", "bar"), required=True)
    p.add_argument("--object", choices=_SPECIAL_OBJECTS, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg)
    p.set_defaults(func=cmd_special)

    p = sub.add_parser("verify", parents=[common], help="run the identity registry")
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=_nonneg, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--list", action="store_true", help="list registry ids and exit")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
