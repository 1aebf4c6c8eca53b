"""Command-line front end: ``hermitia <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .contour import (
    C1_EPSILON,
    LOOP_EPSILON,
    apply_via_contour,
    gamma_via_loop,
    gamma_via_sine_form,
    reciprocal_gamma_via_contour,
)
from .errors import HermitiaError
from .functional import GeneralizedHermiteFunctional, Polynomial
from .hermite import hermite, hermite_1f1_form, hermite_asymptotic, hermite_series
from .quadrature import AUTO, QuadratureConfig, apply_via_quadrature, gamma_via_realline
from .scalar import gamma, reciprocal_gamma
from .verify import DEFAULT_TAU_GRID, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Accept ``re``, ``re,im`` or a Python complex literal such as ``0.5+0.5j``."""
    text = text.strip()
    try:
        if "j" in text:
            return complex(text.replace(" ", ""))
        parts = text.split(",")
        if len(parts) == 1:
            return complex(float(parts[0]))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def parse_grid(text: str) -> list[complex]:
    """Semicolon- or whitespace-separated list of complex values."""
    items = [t for t in text.replace(";", " ").split() if t]
    if not items:
        raise argparse.ArgumentTypeError("empty tau grid")
    return [parse_complex(t) for t in items]


def parse_poly(text: str) -> Polynomial:
    try:
        return Polynomial([complex(c.strip().replace(" ", "")) for c in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient list: {text!r}") from None


def parse_radius(text: str):
    if text == AUTO:
        return AUTO
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("radius must be a number or 'auto'") from None


def _fmt(z: complex) -> str:
    return f"{z.real!r}{'+' if z.imag >= 0 else '-'}{abs(z.imag)!r}j"


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--rel-tol", type=float, default=d(1e-10), help="quadrature relative tolerance")
    p.add_argument("--abs-tol", type=float, default=d(1e-14), help="quadrature absolute tolerance")
    p.add_argument("--epsilon", type=float, default=d(None),
                   help="contour detour radius (default: 0.1 for the loop, 1e-24 for C1)")
    p.add_argument("--radius", type=parse_radius, default=d(AUTO), help="truncation radius R or 'auto'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermitia",
                                     description="Hermite functions of complex degree and Gamma integrals.")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate H_tau(x)")
    p.add_argument("--tau", type=parse_complex, required=True)
    p.add_argument("--x", type=parse_complex, required=True)
    p.add_argument("--method", choices=["auto", "series", "1f1", "asymptotic"], default="auto")

    p = sub.add_parser("moments", parents=[common], help="moments of G_H(tau)")
    p.add_argument("--tau", type=parse_complex, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("apply", parents=[common], help="<G_H(tau), p>")
    p.add_argument("--tau", type=parse_complex, required=True)
    p.add_argument("--poly", type=parse_poly, required=True, help="coefficients c0,c1,...")
    p.add_argument("--via", choices=["moments", "quadrature", "contour"], default="moments")

    p = sub.add_parser("gamma", parents=[common], help="Gamma(tau+1) from an integral representation")
    p.add_argument("--tau", type=parse_complex, required=True)
    p.add_argument("--method", choices=["realline", "loop", "sine", "reciprocal", "reference"],
                   required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p.add_argument("--tau-grid", type=parse_grid, default=list(DEFAULT_TAU_GRID),
                   help="values separated by ';' or spaces, each 're', 're,im' or '0.5+0.5j'")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--deterministic", action="store_true", help="omit the timestamp")
    return parser


def _quad(args) -> QuadratureConfig:
    try:
        return QuadratureConfig(rel_tol=args.rel_tol, abs_tol=args.abs_tol, truncation_radius=args.radius)
    except HermitiaError as exc:
        raise UsageError(str(exc)) from None


def _cmd_eval(args, out) -> int:
    tau, x = args.tau, args.x
    if args.method == "auto":
        v = hermite(tau, x)
    elif args.method == "series":
        v = hermite_series(tau, x)
    elif args.method == "1f1":
        v = hermite_1f1_form(tau, x)
    else:
        if x.imag != 0:
            raise UsageError("the asymptotic method needs a real x")
        v = hermite_asymptotic(tau, x.real)
    print(_fmt(v), file=out)
    return EXIT_OK


def _cmd_moments(args, out) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    F = GeneralizedHermiteFunctional(args.tau)
    rows = [(n, F.moment(n)) for n in range(args.max_n + 1)]
    if args.format == "json":
        data = {"tau": {"re": args.tau.real, "im": args.tau.imag},
                "moments": [{"n": n, "re": m.real, "im": m.imag} for n, m in rows]}
        print(json.dumps(data, indent=2, sort_keys=True), file=out)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "re", "im"])
        for n, m in rows:
            w.writerow([n, repr(m.real), repr(m.imag)])
        out.write(buf.getvalue())
    return EXIT_OK


def _cmd_apply(args, out) -> int:
    cfg = _quad(args)
    if args.via == "moments":
        v = GeneralizedHermiteFunctional(args.tau).apply(args.poly)
    elif args.via == "quadrature":
        v = apply_via_quadrature(args.tau, args.poly, cfg)
    else:
        eps = C1_EPSILON if args.epsilon is None else args.epsilon
        v = apply_via_contour(args.tau, args.poly, cfg, eps)
    print(_fmt(v), file=out)
    return EXIT_OK


def _cmd_gamma(args, out) -> int:
    cfg = _quad(args)
    tau = args.tau
    eps = LOOP_EPSILON if args.epsilon is None else args.epsilon
    method = args.method
    if method == "reciprocal":
        v = reciprocal_gamma_via_contour(tau, cfg, eps)
        ref = reciprocal_gamma(tau + 1)
        label = "1/Gamma(tau+1)"
    else:
        ref = gamma(tau + 1)
        label = "Gamma(tau+1)"
        if method == "realline":
            v = gamma_via_realline(tau, cfg)
        elif method == "loop":
            v = gamma_via_loop(tau, cfg, eps)
        elif method == "sine":
            v = gamma_via_sine_form(tau, cfg, eps)
        else:
            v = ref
    print(f"{label} = {_fmt(v)}", file=out)
    print(f"|delta| = {abs(v - ref)!r}", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    cfg = _quad(args)
    kwargs = {}
    if args.epsilon is not None:
        kwargs = {"loop_epsilon": args.epsilon, "c1_epsilon": args.epsilon}
    report = run_suite(args.suite, args.tau_grid, cfg, tol=args.tol,
                       deterministic=args.deterministic, **kwargs)
    if args.format == "json":
        print(report.to_json(), file=out)
    else:
        out.write(report.to_csv())
    return EXIT_OK if report.ok else EXIT_FAIL


_COMMANDS = {
    "eval": _cmd_eval,
    "moments": _cmd_moments,
    "apply": _cmd_apply,
    "gamma": _cmd_gamma,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Run the CLI; returns 0 on success, 1 on a failed check, 2 on a usage error."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, HermitiaError) as exc:
        print(f"hermitia {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    return main(argv)


def entry() -> None:
    sys.exit(main())
