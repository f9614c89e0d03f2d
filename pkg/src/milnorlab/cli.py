"""Command-line front end.

Exit status: 0 on success, 1 for a mathematical negative (non-isolated
singularity, non-polynomial quotient, failed check), 2 for usage or parse
errors.  Results go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import InputError, MilnorError, NotPolynomial
from .grading import infer_weight_system, parse_weight_system
from .koszul import koszul_shifts, verify_exactness
from .milnor import finiteness_window, full_report, type_report
from .poly import parse_polynomial
from .series import (
    format_t_polynomial,
    lemma_expansion,
    milnor_poincare_polynomial,
    product_numerator,
    ring_hilbert_series,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def emit(obj, fmt, plain_lines, out):
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(plain_lines) + "\n")


def _yes(flag):
    return "yes" if flag else "no"


def _polynomial(args):
    variables = args.vars.split(",") if args.vars else None
    return parse_polynomial(args.poly, variables)


def _weights(args, f):
    if args.weights:
        ws = parse_weight_system(args.weights)
        if ws.r != f.nvars:
            raise InputError(f"{ws.r} weights given for {f.nvars} variables {list(f.variables)}")
        return ws
    return infer_weight_system(f)


def report_lines(report):
    ws = report.weight_system
    lines = [
        f"type        {ws}",
        f"mu_formula  {report.mu_formula}",
        f"mu_series   {'NotPolynomial' if report.mu_series is None else report.mu_series}",
    ]
    if report.per_degree_dims:
        lines += [
            f"mu_oracle   {'NotIsolated' if report.mu_oracle is None else report.mu_oracle}",
            f"isolated    {_yes(report.isolated)}",
            f"consistent  {_yes(report.consistent)}",
            "dims        " + " ".join(map(str, report.per_degree_dims)),
        ]
    if report.poincare is not None:
        lines.append(f"poincare    {format_t_polynomial(report.poincare)}")
    return lines


def cmd_infer(args, out):
    f = _polynomial(args)
    ws = infer_weight_system(f)
    obj = dict(ws.to_json(), variables=list(f.variables))
    emit(obj, args.format, [f"variables   {','.join(f.variables)}", f"type        {ws}"], out)
    return EXIT_OK


def cmd_mu(args, out):
    if args.type:
        report = type_report(parse_weight_system(args.type))
        obj = report.to_json()
        del obj["dims"], obj["mu_oracle"], obj["isolated"], obj["consistent"]
        emit(obj, args.format, report_lines(report), out)
        return EXIT_OK if report.mu_series is not None else EXIT_NEGATIVE
    f = _polynomial(args)
    report = full_report(f, _weights(args, f))
    obj = dict(report.to_json(), variables=list(f.variables))
    emit(obj, args.format, report_lines(report), out)
    return EXIT_OK if report.consistent else EXIT_NEGATIVE


def cmd_hilbert(args, out):
    ws = parse_weight_system(args.type)
    order = ws.r * ws.degree if args.order is None else args.order
    if order < 0:
        raise InputError("--order must be non-negative")
    ring = ring_hilbert_series(ws.weights, order)
    try:
        poincare = milnor_poincare_polynomial(ws)
    except NotPolynomial:
        poincare = None
    obj = {
        "weights": list(ws.weights),
        "degree": ws.degree,
        "order": order,
        "ring_series": [str(c) for c in ring.coeffs],
        "poincare": None if poincare is None else poincare.to_json()["coeffs"],
    }
    lines = [
        f"type        {ws}",
        "HS_S        " + " ".join(map(str, ring.coeffs)),
        f"HS_M        {poincare if poincare is not None else 'NotPolynomial'}",
    ]
    emit(obj, args.format, lines, out)
    return EXIT_OK if poincare is not None else EXIT_NEGATIVE


def cmd_lemma(args, out):
    ws = parse_weight_system(args.type)
    lhs, rhs = product_numerator(ws), lemma_expansion(ws)
    equal = lhs == rhs
    obj = {
        "weights": list(ws.weights),
        "degree": ws.degree,
        "product": lhs.to_json()["coeffs"],
        "expansion": rhs.to_json()["coeffs"],
        "equal": equal,
    }
    lines = [f"type        {ws}", f"product     {lhs}", f"expansion   {rhs}", f"equal       {_yes(equal)}"]
    emit(obj, args.format, lines, out)
    return EXIT_OK if equal else EXIT_NEGATIVE


def cmd_koszul(args, out):
    f = _polynomial(args)
    ws = _weights(args, f)
    b, w = finiteness_window(ws)
    alpha_max = b + w if args.max_degree is None else args.max_degree
    res = koszul_shifts(ws)
    rep = verify_exactness(f, ws, alpha_max)
    obj = {"resolution": res.to_json(), "exactness": rep.to_json(), "variables": list(f.variables)}
    lines = [f"type        {ws}"]
    for k in range(res.length + 1):
        lines.append(f"K_{k}         " + " ".join(f"S(-{a})" if a else "S" for a in res.shifts(k)))
    lines.append(f"alpha_max   {alpha_max}")
    lines.append("coker_dims  " + " ".join(map(str, rep.coker_dims)))
    lines.append(f"exact       {_yes(rep.exact)}")
    lines.append(f"d^2 = 0     {_yes(rep.complex_ok)}")
    lines.append(f"coker=HS_M  {_yes(rep.coker_match)}")
    for s in rep.failures():
        lines.append(
            f"  failure at k={s.k} alpha={s.alpha}: kernel {s.kernel_dim}, image {s.image_dim}"
            + ("" if s.boundary_zero else ", d^2 != 0")
        )
    emit(obj, args.format, lines, out)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def read_corpus(path):
    """Parse ``name ; polynomial ; expected_mu|NONISOLATED [; w1,...,wr;d]`` lines."""
    cases = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = [x.strip() for x in line.split(";")]
            if len(fields) not in (3, 5):
                raise InputError(f"{path}:{lineno}: expected 'name ; polynomial ; expected [; w1,...,wr;d]'")
            name, poly, expected = fields[:3]
            if expected.upper() == "NONISOLATED":
                expected = None
            else:
                try:
                    expected = int(expected)
                except ValueError:
                    raise InputError(f"{path}:{lineno}: expected an integer or NONISOLATED") from None
            weights = ";".join(fields[3:]) if len(fields) == 5 else None
            cases.append((name, poly, expected, weights))
    return cases


def run_case(case):
    name, poly, expected, weights = case
    entry = {"name": name, "polynomial": poly, "expected": "NONISOLATED" if expected is None else expected}
    try:
        f = parse_polynomial(poly)
        ws = parse_weight_system(weights) if weights else infer_weight_system(f)
        report = full_report(f, ws)
    except MilnorError as exc:
        entry.update(verdict="ERROR", error=f"{type(exc).__name__}: {exc}")
        return entry
    if expected is None:
        ok = not report.isolated
    else:
        ok = report.consistent and report.mu_oracle == expected
    entry.update(verdict="PASS" if ok else "FAIL", report=report.to_json())
    return entry


def cmd_corpus(args, out):
    cases = read_corpus(args.file)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(run_case, cases))
    else:
        results = [run_case(c) for c in cases]
    passed = all(r["verdict"] == "PASS" for r in results)
    lines = []
    for r in results:
        rep = r.get("report")
        detail = r.get("error") or (
            f"type {','.join(map(str, rep['weights']))};{rep['degree']}  mu_formula={rep['mu_formula']} "
            f"mu_series={rep['mu_series']} mu_oracle={rep['mu_oracle']} consistent={rep['consistent']}"
        )
        lines.append(f"{r['verdict']:5} {r['name']:12} {detail}")
    lines.append(f"{sum(r['verdict'] == 'PASS' for r in results)}/{len(results)} cases passed")
    emit({"cases": results, "passed": passed}, args.format, lines, out)
    return EXIT_OK if passed else EXIT_NEGATIVE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain")

    parser = _Parser(prog="milnor", description="Milnor numbers of weighted-homogeneous singularities.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("infer", parents=[common], help="infer the weight system of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("mu", parents=[common], help="Milnor number by every available route")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly")
    g.add_argument("--type", metavar="W;D")
    p.add_argument("--weights", metavar="W;D")
    p.add_argument("--vars")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("hilbert", parents=[common], help="ring series and Poincare polynomial of a type")
    p.add_argument("--type", required=True, metavar="W;D")
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("lemma", parents=[common], help="compare the product and subset-sum numerators")
    p.add_argument("--type", required=True, metavar="W;D")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("koszul", parents=[common], help="Koszul shifts and degreewise exactness")
    p.add_argument("--poly", required=True)
    p.add_argument("--weights", metavar="W;D")
    p.add_argument("--vars")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_koszul)

    p = sub.add_parser("corpus", parents=[common], help="run a file of test cases")
    p.add_argument("--file", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_corpus)
    return parser


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "mu" and args.type and (args.weights or args.vars):
            raise UsageError("milnor mu: error: --type cannot be combined with --weights or --vars")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or EXIT_OK
    except InputError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except MilnorError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_NEGATIVE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
