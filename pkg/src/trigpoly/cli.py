"""Command-line interface.

Exit codes: 0 success / identity holds / representable, 1 refuted / not
representable / sample check failed, 2 usage, parse or semantic error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from typing import Sequence

from . import __version__
from .numkernel import UniPoly, chebyshev, format_scalar
from .parser import (
    ExpressionError,
    evaluate,
    family,
    lower,
    lower_bivariate,
    parse,
    parse_bivariate,
)
from .quotient import CanonicalForm, Modulus, reduce
from .trigalg import (
    DEFAULT_TOL,
    NaiveRepresentation,
    TrigPoly,
    compare_samples,
    decide_naive,
    forms_identity,
    trig_to_canonical,
)

OK, REFUTED, ERROR = 0, 1, 2
_STATUS = {OK: "ok", REFUTED: "refuted", ERROR: "error"}

DEFAULT_SAMPLES = 50
DEFAULT_SEED = 0


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _coeffs(p: UniPoly) -> list[str]:
    return [format_scalar(c) for c in p.coeffs]


def _form_json(c: CanonicalForm) -> dict:
    return {
        "modulus": c.modulus.value,
        "A": _coeffs(c.a),
        "B": _coeffs(c.b),
        "rendered": c.render(),
    }


def _trig_json(f: TrigPoly) -> dict:
    return {
        "degree": f.degree,
        "cos": [format_scalar(c) for c in f.a],
        "sin": [format_scalar(c) for c in f.b],
        "rendered": f.render(),
    }


def _circular(text: str) -> TrigPoly:
    return lower(parse(text), "circular")


def cmd_normalize(args):
    f = _circular(args.expr)
    return OK, f.render(), _trig_json(f)


def cmd_canonical(args):
    value = lower(parse(args.expr))
    form = trig_to_canonical(value) if isinstance(value, TrigPoly) else value
    return OK, form.render(), _form_json(form)


def cmd_naive(args):
    f = _circular(args.expr)
    result = decide_naive(f)
    if isinstance(result, NaiveRepresentation):
        text = "\n".join(
            ["REPRESENTABLE", "# x = cos(t), y = sin(t)", result.render()]
        )
        payload = {
            "representable": True,
            "P": _coeffs(result.p),
            "Q": _coeffs(result.q),
            "rendered": result.render(),
        }
        return OK, text, payload
    text = f"NOT REPRESENTABLE\nobstruction: {result.render()}"
    payload = {
        "representable": False,
        "obstruction": _coeffs(result.b_odd),
        "rendered": result.b_odd.render("x"),
    }
    return REFUTED, text, payload


def cmd_identity(args):
    text = args.equation
    if text.count("=") != 1:
        pos = text.find("=", text.find("=") + 1) if "=" in text else len(text)
        raise ExpressionError("identity needs exactly one '=' separating two sides", pos)
    split = text.index("=")
    lhs_ast = parse(text[:split])
    rhs_ast = parse(text[split + 1 :], offset=split + 1)
    fam = family(lhs_ast, rhs_ast) or "circular"
    lhs, rhs = lower(lhs_ast, fam), lower(rhs_ast, fam)
    if fam == "circular":
        lhs, rhs = trig_to_canonical(lhs), trig_to_canonical(rhs)
    verdict = forms_identity(lhs, rhs)
    if verdict.equal:
        return OK, "IDENTITY", {"holds": True, "modulus": lhs.modulus.value}
    x, y = verdict.point
    names = ("cos", "sin") if fam == "circular" else ("cosh", "sinh")
    out = "\n".join(
        [
            "NOT AN IDENTITY",
            f"witness: (x, y) = ({format_scalar(x)}, {format_scalar(y)})"
            f"  [{names[0]}(t) = x, {names[1]}(t) = y]",
            f"lhs = {format_scalar(verdict.lhs)}",
            f"rhs = {format_scalar(verdict.rhs)}",
        ]
    )
    payload = {
        "holds": False,
        "modulus": lhs.modulus.value,
        "witness": {
            "parameter": format_scalar(verdict.parameter),
            "x": format_scalar(x),
            "y": format_scalar(y),
            "lhs": format_scalar(verdict.lhs),
            "rhs": format_scalar(verdict.rhs),
        },
    }
    return REFUTED, out, payload


def cmd_chebyshev(args):
    p = chebyshev(args.kind, args.n)
    return OK, p.render("x"), {
        "kind": args.kind,
        "n": args.n,
        "coefficients": _coeffs(p),
        "rendered": p.render("x"),
    }


def cmd_reduce(args):
    r = lower_bivariate(parse_bivariate(args.poly))
    m = Modulus(args.modulus)
    s, form = reduce(r, m)
    text = "\n".join([f"S(x, y) = {s.render()}", form.render()])
    payload = {
        "modulus": m.value,
        "S": s.render(),
        "A": _coeffs(form.a),
        "B": _coeffs(form.b),
        "ideal_member": form.is_zero(),
        "rendered": form.render(),
    }
    return OK, text, payload


def cmd_check(args):
    ast = parse(args.expr)
    f = lower(ast, "circular")
    report = compare_samples(
        f, lambda t: evaluate(ast, t), args.samples, args.seed, args.tol
    )
    line = (
        f"{report.verdict.upper()}: max deviation {report.max_deviation:.3e}"
        f" over {report.samples} samples (seed {report.seed}, tol {report.tol:g})"
    )
    lines = [line]
    if not report.passed and report.worst_t is not None:
        lines.append(f"worst t = {report.worst_t!r}")
    payload = {
        "verdict": report.verdict,
        "max_deviation": report.max_deviation,
        "samples": report.samples,
        "seed": report.seed,
        "tol": report.tol,
        "worst_t": None if report.passed else report.worst_t,
        "normalized": f.render(),
    }
    return (OK if report.passed else REFUTED), "\n".join(lines), payload


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def _nonneg_int(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return n


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON document")

    parser = _ArgumentParser(
        prog="trigpoly",
        description="Exact algebra for trigonometric polynomials in cos(t), sin(t).",
        parents=[common],
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_ArgumentParser)
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(
            name, help=help, description=help, parents=[common],
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        p.set_defaults(func=func)
        return p

    add("normalize", cmd_normalize, "rewrite an expression in the Fourier basis").add_argument("expr")
    add("canonical", cmd_canonical, "print the residue A(x) + y*B(x)").add_argument("expr")
    add("naive", cmd_naive, "decide whether an expression is a polynomial in cos(t) and sin(t) separately").add_argument("expr")
    add("identity", cmd_identity, 'prove or refute "<lhs> = <rhs>"').add_argument("equation")
    p = add("chebyshev", cmd_chebyshev, "print the Chebyshev polynomial T_n or U_n")
    p.add_argument("kind", choices=["T", "U"])
    p.add_argument("n", type=_nonneg_int)
    p = add("reduce", cmd_reduce, "reduce a polynomial in x, y modulo the circle or hyperbola")
    p.add_argument("poly")
    p.add_argument("--modulus", choices=["circle", "hyperbola"], default="circle")
    p = add("check", cmd_check, "floating-point spot check of normalize against direct evaluation")
    p.add_argument("expr")
    p.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES, help="number of sample points")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL, help="absolute tolerance")
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one invocation; returns ``(exit_code, output text)``."""
    argv = list(argv)
    want_json = "--json" in argv
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured):
            args = parser.parse_args(argv)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0), captured.getvalue().rstrip("\n")
    except UsageError as exc:
        return _error(want_json, None, f"usage error: {exc}")

    try:
        code, text, payload = args.func(args)
    except (ExpressionError, ValueError, ZeroDivisionError) as exc:
        return _error(want_json, args.command, f"error: {exc}")

    if args.json:
        doc = {"status": _STATUS[code], "subcommand": args.command, "result": payload}
        return code, json.dumps(doc, sort_keys=True)
    return code, text


def _error(want_json: bool, command: str | None, message: str) -> tuple[int, str]:
    if want_json:
        doc = {"status": "error", "subcommand": command, "result": None, "diagnostic": message}
        return ERROR, json.dumps(doc, sort_keys=True)
    return ERROR, message


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if code == ERROR and not text.startswith("{") else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
