"""Command-line interface: ``treefpp <command> [options]``.

JSON output is an envelope ``{command, inputs, result, provenance}``. Exit
codes: 0 success, 2 invalid input, 3 budget exceeded, 4 precondition violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import serialization as ser
from .branch import analyze_gqp, as_group, search_good_cosets, survey
from .constructions import construction1, construction2, galois_unicritical
from .errors import BudgetExceeded, PreconditionError, TreeFppError
from .gf2 import glnf2_count
from .oracle import DEFAULT_BUDGET, brute_count, gqp_brute, mc_estimate
from .permcore import coset, parse_permutation, perm_set
from .solver import DEFAULT_PRECISION_BITS, decimal_digits, solve_set, truncate_decimal
from .spectrum import characteristic_polynomial, derangement_profile, evaluate

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_PRECONDITION = 0, 2, 3, 4

SURVEY_COLUMNS = ("class-id", "generators", "order", "transitive", "mean-fixed-points", "fpp-class", "fpp-decimal")

FORMULAS = {
    "fpp": "largest fixed point on [0,1] of f_S(x) = sum_k D[k]/#S * (1 - (1-x)^k)",
    "survey": "FPP(W_H) for each subgroup class H of Sym(d)",
    "curve": "f_S(x) = sum_k D[k]/#S * (1 - (1-x)^k)",
    "gqp": "FPP(G_Q^P) = average over cosets A of Q in P of FPP(W_A); dim = log|Q| / log d!",
    "search": "cosets of Q in N(Q) whose elements all fix exactly one point",
    "construction1": "FPP = #{a in I : gcd(a-1, d) = 1} / |I|",
    "construction2": "FPP = #{A in GL_n(F_2) : A - I invertible} / |GL_n(F_2)| * prod_{p | r} (p-2)/(p-1)",
    "glcount": "#{A in GL_n(F_2) : A - I invertible}, #GL_n(F_2)",
    "galois": "FPP = prod_{p | d} (p-2)/(p-1); dim = log d / log d!",
    "oracle": "f_{n+1} = sum_k D[k] sigma_n^(d-k) (sigma_n^k - (sigma_n - f_n)^k) against portrait enumeration",
    "mc": "survival to depth n of the Galton-Watson process with offspring law D[k]/#S",
}


# label-set selection shared by fpp, curve, oracle and mc

def _add_selector(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--set", nargs="+", metavar="PERM", help="explicit label set")
    g.add_argument("--group", nargs="+", metavar="GEN", help="group generated by these permutations")
    g.add_argument("--coset", metavar="REP", help="left coset REP * <base>; needs --base")
    p.add_argument("--base", nargs="+", metavar="GEN", help="generators of the coset's base group")
    p.add_argument("-d", "--degree", type=int, required=True)


def _label_set(args):
    d = args.degree
    if args.set is not None:
        return perm_set(parse_permutation(t, d) for t in args.set)
    if args.group is not None:
        return as_group(args.group, d)
    if not args.base:
        raise ValueError("--coset needs --base")
    return coset(parse_permutation(args.coset, d), as_group(args.base, d))


# commands; each returns (result, rows) where rows is a CSV table or None

def cmd_fpp(args):
    return solve_set(_label_set(args), args.precision_bits), None


def cmd_survey(args):
    rows = survey(args.degree, args.precision_bits)
    table = [
        (r.class_id, " ".join(str(g) for g in r.generators) or "()", r.order, str(r.transitive).lower(),
         ser.rational(r.mean_fixed_points), r.fpp.classification, r.fpp.decimal)
        for r in rows
    ]
    return rows, (SURVEY_COLUMNS, table)


def cmd_curve(args):
    if args.points < 2:
        raise ValueError("--points must be at least 2")
    f = characteristic_polynomial(derangement_profile(_label_set(args)))
    digits = decimal_digits(args.precision_bits)
    xs = [Fraction(i, args.points) for i in range(args.points + 1)]
    table = [(truncate_decimal(x, digits), truncate_decimal(evaluate(f, x), digits)) for x in xs]
    result = [{"x": ser.rational(x), "f": ser.rational(evaluate(f, x))} for x in xs]
    return result, (("x", "f"), table)


def cmd_gqp(args):
    return analyze_gqp(args.q, args.p, args.degree, args.precision_bits), None


def cmd_search(args):
    return search_good_cosets(args.degree), None


def cmd_construction1(args):
    return construction1(args.degree, args.I, args.precision_bits), None


def cmd_construction2(args):
    return construction2(args.n, args.r, args.explicit, args.precision_bits), None


def cmd_glcount(args):
    return glnf2_count(args.n, allow_large=args.allow_large), None


def cmd_galois(args):
    return galois_unicritical(args.degree), None


def cmd_oracle(args):
    if args.q is not None or args.p is not None:
        if args.q is None or args.p is None:
            raise ValueError("--q and --p go together")
        Q, P = as_group(args.q, args.degree), as_group(args.p, args.degree)
        return gqp_brute(Q, P, args.n, args.budget), None
    if args.set is None and args.group is None and args.coset is None:
        raise ValueError("oracle needs --set, --group, --coset or --q/--p")
    return brute_count(_label_set(args), args.n, args.budget), None


def cmd_mc(args):
    return mc_estimate(_label_set(args), args.depth, args.samples, args.seed, args.workers), None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="treefpp", description="Fixed-point proportions of tree automorphism groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        fmt = p.add_mutually_exclusive_group()
        for tag in ("json", "csv", "text"):
            fmt.add_argument(f"--{tag}", dest="format", action="store_const", const=tag)
        p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="portrait budget for brute-force counting (env TREEFPP_BUDGET)")
        p.set_defaults(func=fn, format=None)
        return p

    p = command("fpp", cmd_fpp, "FPP of W_S")
    _add_selector(p)
    p = command("survey", cmd_survey, "FPP of every subgroup class of Sym(d)")
    p.add_argument("-d", "--degree", type=int, required=True)
    p = command("curve", cmd_curve, "samples of f_S on [0,1]")
    _add_selector(p)
    p.add_argument("--points", type=int, default=100)
    p = command("gqp", cmd_gqp, "report on G_Q^P")
    p.add_argument("--q", nargs="+", required=True, metavar="GEN")
    p.add_argument("--p", nargs="+", required=True, metavar="GEN")
    p.add_argument("-d", "--degree", type=int, required=True)
    p = command("search", cmd_search, "good cosets of transitive Q in its normalizer")
    p.add_argument("-d", "--degree", type=int, required=True)
    p = command("construction1", cmd_construction1, "affine family over Z/dZ")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("--I", nargs="*", type=int, default=None, metavar="UNIT", help="generators of the unit subgroup")
    p = command("construction2", cmd_construction2, "holomorph family, d = 2^n r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--explicit", action="store_true")
    p = command("glcount", cmd_glcount, "count A in GL_n(F_2) with A - I invertible")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    p = command("galois", cmd_galois, "closed forms for the unicritical family")
    p.add_argument("-d", "--degree", type=int, required=True)
    p = command("oracle", cmd_oracle, "portrait enumeration against the level recursion")
    _add_selector(p, required=False)
    p.add_argument("--q", nargs="+", metavar="GEN")
    p.add_argument("--p", nargs="+", metavar="GEN")
    p.add_argument("-n", "--level", dest="n", type=int, required=True)
    p = command("mc", cmd_mc, "Monte Carlo estimate of p_n")
    _add_selector(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--samples", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    return parser


def _inputs(args) -> dict:
    return {k: v for k, v in vars(args).items() if k not in ("func", "format", "command")}


def _serialize(result):
    if isinstance(result, list):
        return [r if isinstance(r, dict) else ser.to_dict(r) for r in result]
    return ser.to_dict(result)


def envelope(args, result) -> dict:
    return {
        "command": args.command,
        "inputs": _inputs(args),
        "result": _serialize(result),
        "provenance": {"formula_used": FORMULAS[args.command]},
    }


def _flatten(prefix: str, value, out: list) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    else:
        out.append((prefix, value if not isinstance(value, (list, bool)) else json.dumps(value)))


def render(args, result, table) -> str:
    fmt = args.format or ("csv" if table is not None else "json")
    if fmt == "json":
        return json.dumps(envelope(args, result), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if table is None:
            pairs: list = []
            _flatten("", _serialize(result), pairs)
            w.writerow([k for k, _ in pairs])
            w.writerow(["" if v is None else v for _, v in pairs])
        else:
            header, rows = table
            w.writerow(header)
            w.writerows(rows)
        return buf.getvalue()
    pairs = []
    _flatten("", _serialize(result), pairs)
    return "".join(f"{k}: {v}\n" for k, v in pairs)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result, table = args.func(args)
    except BudgetExceeded as exc:
        print(f"treefpp: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PreconditionError as exc:
        print(f"treefpp: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (TreeFppError, ValueError) as exc:
        print(f"treefpp: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(render(args, result, table))
    return EXIT_OK


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
