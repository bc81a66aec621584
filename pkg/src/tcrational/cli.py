"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (a JSON error object is
written to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra as alg
from . import charsets, cw, lambdas, series, zcl
from .errors import InputError, TCRationalError
from .reports import dumps, envelope, parse_cohomology_input


def _fmt_primes(ps):
    return ", ".join(str(p) for p in ps)


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# command handlers return (envelope, text)

def cmd_lambda(args):
    k = args.k
    value = lambdas.lambda3(k) if args.n == 3 else lambdas.lambda_nk(args.n, k)
    result = {"k": k, "n": args.n, "value": value}
    lines = [f"lambda_({args.n},{k}) = {value}"]
    if k % 2:
        result["note"] = "odd k"
        result["prime_factors"] = []
        lines.append("note: odd k, the alternating sum vanishes")
    else:
        fac = lambdas.lambda_factorization(k)
        result["prime_factors"] = [list(pe) for pe in fac]
        result["closed_form"] = lambdas.lambda3_closed_form(k // 2) * (1 if args.n == 3 else (-1) ** ((args.n - 1) * k))
        lines.append("factorization: " + " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fac))
    if args.show_expanded_form:
        if k % 2:
            result["expanded_display_value"] = None
        else:
            disp = lambdas.expanded_display_value(k)
            result["expanded_display_value"] = disp
            result["expanded_display_agrees"] = disp == lambdas.lambda3(k)
            lines.append(f"expanded display value: {disp} ({'agrees' if disp == lambdas.lambda3(k) else 'differs'})")
    env = envelope("lambda", {"k": k, "n": args.n, "show_expanded_form": args.show_expanded_form}, result,
                   ["lambda_(3,k) = sum (-1)^i C(k,i)^3", "lambda_(n,k) = (-1)^((n-1)k) lambda_(3,k)"])
    return env, "\n".join(lines)


def _lambda_table(command, max_k):
    rows = lambdas.lambda_prime_table(max_k)
    result = {"rows": [{"k": k, "primes": ps} for k, ps in rows]}
    text = ["k  | prime factors of lambda_(3,k)", "---+------------------------------"]
    text += [f"{k:<3}| {_fmt_primes(ps)}" for k, ps in rows]
    return envelope(command, {"max": max_k}, result, ["prime factors of lambda_(3,k), even k"]), "\n".join(text)


def cmd_lambda_table(args):
    return _lambda_table("lambda-table", args.max)


def cmd_lambda_primes(args):
    return _lambda_table("table1", args.max)


def cmd_zcl_witness(args):
    algebra = alg.make_algebra(args.r, args.k, args.char)
    cert = zcl.zcl_witness(args.n, algebra, args.term_budget)
    result = cert.as_dict()
    lo, hi = zcl.sandwich_bounds(args.n, args.k, args.r)
    result["sandwich"] = {"zcl_lower": lo if cert.product_nonzero else None, "tc_upper": hi,
                          "tc_pinned": hi if cert.product_nonzero and lo == hi else None}
    env = envelope("zcl-witness", {"n": args.n, "k": args.k, "char": args.char, "r": args.r}, result,
                   ["zcl_n <= TC_n <= n dim X/(s+1)"])
    status = "nonzero" if cert.product_nonzero else "zero"
    text = (f"witness {cert.shape} over {algebra.field}: {cert.witness_length} factors, product {status}\n"
            + alg.serialize(cert.product))
    return env, text


def cmd_zcl_exhaustive(args):
    algebra = alg.make_algebra(args.r, args.k, args.char)
    value = zcl.exhaustive_zcl(args.n, algebra, args.max_len)
    env = envelope("zcl-exhaustive", {"n": args.n, "k": args.k, "char": args.char, "max_len": args.max_len},
                   {"zcl_lower_bound": value,
                    "restriction": "homogeneous kernel elements with coefficients in {-1,0,1} over the difference basis"})
    return env, f"exhaustive zcl_{args.n} over {algebra.field} (k={args.k}): {value}"


def cmd_verify_lemma2(args):
    checks = zcl.verify_witness_identities(range(3, args.max_n + 1), range(2, args.max_k + 1), args.term_budget)
    rows = [c.as_dict() for c in checks]
    ok = all(c.passed for c in checks if c.name != "mu*(A1-An)|reduced")
    env = envelope("verify-lemma2", {"max_n": args.max_n, "max_k": args.max_k},
                   {"checks": rows, "all_passed": ok})
    text = [f"{'PASS' if c.passed else 'FAIL'}  {c.name:<20} n={c.n} k={c.k} expected={c.expected} observed={c.observed}"
            for c in checks]
    return env, "\n".join(text)


def cmd_char_sets(args):
    data = parse_cohomology_input(_read(args.input))
    result = charsets.report(data)
    env = envelope("char-sets", {"input": args.input}, result)
    text = (f"case {result['case']}: excluded {result['admissible']['excluded']}, "
            f"zero allowed: {result['admissible']['includes_zero']}, "
            f"selected characteristic: {result['selected_characteristic']}")
    return env, text


def cmd_tcgen(args):
    if args.values:
        seq = series.infer_sequence(args.values)
    else:
        if args.k is None:
            raise InputError("tcgen needs --k or --values")
        seq = series.tc_sequence_for_condition1(args.k, max(args.length, 2))
    poly = series.generating_polynomial(seq)
    result = {"P": list(poly.coefficients), "P_text": str(poly), "degree": poly.degree,
              "slope": seq.slope, "P_at_1": poly(1)}
    text = [f"P(x) = {poly}", f"F(x) = P(x)/(1-x)^2, eventual slope {seq.slope} = P(1) = {poly(1)}"]
    if args.expand:
        coeffs = series.series_expand(poly, args.expand)
        expected = [seq.coefficient(n) for n in range(args.expand)]
        result["series"] = coeffs
        result["series_matches"] = coeffs == expected
        text.append(f"series: {tuple(coeffs)}")
    inputs = {"k": args.k, "values": args.values, "expand": args.expand}
    return envelope("tcgen", inputs, result, ["F(x) = sum TC_{n+1} x^n = P(x)/(1-x)^2"]), "\n".join(text)


def cmd_cw_build(args):
    data = parse_cohomology_input(_read(args.input))
    cs = cw.synthesize_cell_structure(data, args.relators)
    env = envelope("cw-build", {"input": args.input, "relators": args.relators}, cs.as_dict())
    text = "\n".join(f"{c.label:<12} dim {c.dimension:<3} {c.role}"
                     + (f" d={c.boundary_multiplicity}" if c.role == cw.RELATOR else "")
                     + (f" h={c.hopf_invariant}" if c.hopf_invariant is not None else "")
                     for c in cs.cells)
    return env, text


def cmd_cw_check(args):
    raw = _read(args.structure)
    try:
        d = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    if isinstance(d, dict) and "result" in d and "cells" not in d:
        d = d["result"]
    cs = cw.structure_from_dict(d)
    rep = cw.cellular_cohomology(cs, args.char)
    env = envelope("cw-check", {"structure": args.structure, "char": args.char}, rep.as_dict())
    text = (f"H^*(K; {alg.FieldSpec(args.char)}) dims {list(rep.dims)}\n"
            f"truncated polynomial: {rep.truncated_polynomial}; witness hypothesis: {rep.witness_hypothesis}")
    return env, text


def cmd_exclusions(args):
    rows = cw.factorial_family_exclusions(args.r, args.k_list)
    result = {"r": args.r, "rows": [{"k": k, "excluded": ps} for k, ps in rows]}
    text = [f"k  | finite characteristic p not allowed (r={args.r})", "---+-----------------------------"]
    text += [f"{k:<3}| {_fmt_primes(ps)}" for k, ps in rows]
    return envelope("table2", {"r": args.r, "k_list": args.k_list}, result, ["Hopf product primes joined with lambda primes, k! family"]), "\n".join(text)


def build_parser():
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--term-budget", type=int, default=alg.DEFAULT_TERM_BUDGET)

    parser = argparse.ArgumentParser(prog="tcrational", description="Exact zero-divisor and TC computations for truncated polynomial cohomology.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda", parents=[fmt], help="lambda_(3,k) or lambda_(n,k) with factorization")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--show-expanded-form", action="store_true",
                   help="also report the expanded closed-form display for even k")
    p.set_defaults(func=cmd_lambda)

    for name, func in (("lambda-table", cmd_lambda_table), ("table1", cmd_lambda_primes)):
        p = sub.add_parser(name, parents=[fmt], help="prime factors of lambda_(3,k) for even k")
        p.add_argument("--max", type=int, default=40)
        p.set_defaults(func=func)

    p = sub.add_parser("zcl-witness", parents=[fmt, budget], help="zero-divisor witness certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_zcl_witness)

    p = sub.add_parser("zcl-exhaustive", parents=[fmt], help="brute-force zero-divisor cup length (tiny cases)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--max-len", type=int, default=8)
    p.set_defaults(func=cmd_zcl_exhaustive)

    p = sub.add_parser("verify-lemma2", parents=[fmt, budget], help="check the xi/mu identities symbolically")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-k", type=int, default=6)
    p.set_defaults(func=cmd_verify_lemma2)

    p = sub.add_parser("char-sets", parents=[fmt], help="admissible characteristics from cohomology data")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_char_sets)

    p = sub.add_parser("tcgen", parents=[fmt], help="numerator of the TC generating function")
    p.add_argument("--k", type=int)
    p.add_argument("--values", type=_int_list, help="explicit TC_2,TC_3,... prefix")
    p.add_argument("--length", type=int, default=10, help="prefix length generated from --k")
    p.add_argument("--expand", type=int, default=0)
    p.set_defaults(func=cmd_tcgen)

    p = sub.add_parser("cw-build", parents=[fmt], help="minimal cell structure from cohomology data")
    p.add_argument("--input", required=True)
    p.add_argument("--relators", choices=("high", "low"), default="high")
    p.set_defaults(func=cmd_cw_build)

    p = sub.add_parser("cw-check", parents=[fmt], help="cellular cohomology of a cell structure")
    p.add_argument("--structure", required=True)
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(func=cmd_cw_check)

    p = sub.add_parser("table2", parents=[fmt], help="excluded characteristics for the k! family")
    p.add_argument("--r", type=int, default=6)
    p.add_argument("--k-list", type=_int_list, default=[4, 5, 16, 18, 20, 22])
    p.set_defaults(func=cmd_exclusions)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        env, text = args.func(args)
    except TCRationalError as exc:
        errors = getattr(exc, "errors", [str(exc)])
        stderr.write(dumps({"error": {"type": type(exc).__name__, "messages": errors}}))
        return 1
    stdout.write(dumps(env) if args.format == "json" else text + "\n")
    if args.command == "verify-lemma2" and not env["result"]["all_passed"]:
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
