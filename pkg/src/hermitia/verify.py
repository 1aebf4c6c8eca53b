"""
Identity-verification harness.

:func:`run_suite` evaluates every identity of a suite on a grid of tau
values and collects the outcomes in an :class:`IdentityReport`, which
serialises to JSON (canonical) or CSV.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable, Optional

from . import __version__
from .contour import (
    C1_EPSILON,
    IMAG_TAU_ENVELOPE,
    LOOP_EPSILON,
    apply_via_contour,
    contour_moment_c1,
    gamma_via_loop,
    gamma_via_sine_form,
    reciprocal_gamma_via_contour,
)
from .errors import HermitiaError
from .functional import (
    GeneralizedHermiteFunctional,
    Polynomial,
    first_order_residual_hermite,
    moment_via_relation,
    second_order_residual,
)
from .hermite import hermite, hermite_1f1_form, hermite_derivative, hermite_series
from .quadrature import (
    DEFAULT_QUAD,
    QuadratureConfig,
    apply_via_quadrature,
    closed_form_weight_integral,
    closed_form_even_moment,
    closed_form_fullline,
    gamma_via_realline,
    hermite_weight_integral,
    hermite_weight_integral_fullline,
)
from .scalar import gamma, near_integer, reciprocal_gamma

SUITES = ("moments", "hermite", "realline", "contour", "gamma")
DEFAULT_TAU_GRID = (-0.5, 0.3, 0.5, 1.3, 2.7, 0.5 + 0.5j)
DEFAULT_TOL = 1e-8
TOL_ENV = "HERMITIA_DEFAULT_TOL"

_SQRT_PI = math.sqrt(math.pi)


def default_tolerance() -> float:
    raw = os.environ.get(TOL_ENV)
    return float(raw) if raw else DEFAULT_TOL


@dataclass
class IdentityCheck:
    """
    Outcome of one identity at one (tau, parameters) point.

    ``passed`` is None for skipped checks, otherwise
    ``abs_err <= tolerance or rel_err <= tolerance``.
    """

    name: str
    tau: complex
    parameters: dict
    tolerance: float
    lhs: Optional[complex] = None
    rhs: Optional[complex] = None
    abs_err: Optional[float] = None
    rel_err: Optional[float] = None
    passed: Optional[bool] = None
    status: str = "SKIPPED"
    message: str = ""

    @classmethod
    def compare(cls, name, tau, parameters, lhs, rhs, tolerance) -> "IdentityCheck":
        lhs, rhs = complex(lhs), complex(rhs)
        abs_err = abs(lhs - rhs)
        rel_err = abs_err / abs(rhs) if rhs != 0 else (0.0 if abs_err == 0 else math.inf)
        ok = abs_err <= tolerance or rel_err <= tolerance
        return cls(name, complex(tau), parameters, tolerance, lhs, rhs, abs_err, rel_err,
                   ok, "PASSED" if ok else "FAILED")

    @classmethod
    def skipped(cls, name, tau, parameters, tolerance, reason) -> "IdentityCheck":
        return cls(name, complex(tau), parameters, tolerance, message=reason)

    @classmethod
    def errored(cls, name, tau, parameters, tolerance, exc: Exception) -> "IdentityCheck":
        return cls(name, complex(tau), parameters, tolerance, passed=False, status="FAILED",
                   message=f"{type(exc).__name__}: {exc}")


@dataclass
class IdentityReport:
    checks: list[IdentityCheck]
    config: dict
    timestamp: Optional[str] = None
    summary: dict = field(init=False)

    def __post_init__(self):
        failed = sum(c.status == "FAILED" for c in self.checks)
        skipped = sum(c.status == "SKIPPED" for c in self.checks)
        self.summary = {
            "total": len(self.checks),
            "passed": len(self.checks) - failed - skipped,
            "failed": failed,
            "skipped": skipped,
        }

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_dict(self) -> dict:
        out = {
            "summary": self.summary,
            "config": self.config,
            "checks": [_check_dict(c) for c in self.checks],
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "tau_re", "tau_im", "abs_err", "rel_err", "passed"])
        for c in self.checks:
            w.writerow([c.name, repr(c.tau.real), repr(c.tau.imag),
                        _csv_float(c.abs_err), _csv_float(c.rel_err),
                        "" if c.passed is None else str(c.passed).lower()])
        return buf.getvalue()


def _num(x):
    if x is None:
        return None
    if isinstance(x, complex):
        return {"re": _num(x.real), "im": _num(x.imag)}
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def _csv_float(x) -> str:
    return "" if x is None else repr(x)


def _check_dict(c: IdentityCheck) -> dict:
    return {
        "name": c.name,
        "tau": _num(c.tau),
        "parameters": {k: _num(v) for k, v in c.parameters.items()},
        "lhs": _num(c.lhs),
        "rhs": _num(c.rhs),
        "abs_err": _num(c.abs_err),
        "rel_err": _num(c.rel_err),
        "tolerance": c.tolerance,
        "passed": c.passed,
        "status": c.status,
        "message": c.message,
    }


@dataclass(frozen=True)
class SuiteSettings:
    tol: float = DEFAULT_TOL
    quad: QuadratureConfig = DEFAULT_QUAD
    loop_epsilon: float = LOOP_EPSILON
    c1_epsilon: float = C1_EPSILON


def _guard(name, tau, params, tol, fn: Callable[[], IdentityCheck]) -> IdentityCheck:
    try:
        return fn()
    except HermitiaError as exc:
        return IdentityCheck.errored(name, tau, params, tol, exc)


def _is_integer(tau: complex) -> bool:
    return near_integer(tau, 1e-10) is not None


def _is_negative_integer(tau: complex) -> bool:
    n = near_integer(tau, 1e-10)
    return n is not None and n < 0


# ---------------------------------------------------------------- suites


def _moment_checks(tau: complex, s: SuiteSettings) -> Iterable[IdentityCheck]:
    if _is_negative_integer(tau):
        yield IdentityCheck.skipped("moments", tau, {}, 0.0, "G_H(tau) undefined at negative integers")
        return
    F = GeneralizedHermiteFunctional(tau)
    yield IdentityCheck.compare("moment_monic", tau, {"n": 0}, F.moment(0), 1.0, 0.0)
    for n in range(1, 21, 2):
        yield IdentityCheck.compare("moment_symmetric", tau, {"n": n}, F.moment(n), 0.0, 0.0)
    for n in range(21):
        m = F.moment(n)
        tol = 1e-12 * max(1.0, abs(m))
        yield IdentityCheck.compare("moment_relation", tau, {"n": n}, moment_via_relation(tau, n), m, tol)
    for n in range(21):
        bound = 1e-11 * (n + abs(tau) + 2) ** 2 * max(1.0, abs(F.moment(n)))
        yield IdentityCheck.compare("second_order_equation", tau, {"n": n}, second_order_residual(F, n), 0.0, bound)


def _first_order_checks() -> Iterable[IdentityCheck]:
    for n in range(11):
        yield IdentityCheck.compare("first_order_equation", 0.0, {"n": n}, first_order_residual_hermite(n), 0.0, 1e-12)


def _hermite_checks(tau: complex, s: SuiteSettings) -> Iterable[IdentityCheck]:
    integer = _is_integer(tau)
    for x in (0.1, 0.5, 1.0, 2.0):
        p = {"x": x}
        if integer:
            yield IdentityCheck.skipped("hermite_two_forms", tau, p, 1e-12, "power series degenerate at integer tau")
            continue
        yield _guard("hermite_two_forms", tau, p, 1e-12, lambda: IdentityCheck.compare(
            "hermite_two_forms", tau, p, hermite_1f1_form(tau, x), hermite_series(tau, x), 1e-12))
    for x in (0.1, 0.5, 1.0, 2.0, 5.0):
        p = {"x": x}

        def recurrence():
            up = hermite(tau + 1, x)
            res = up - 2 * x * hermite(tau, x) + 2 * tau * hermite(tau - 1, x)
            return IdentityCheck.compare("hermite_recurrence", tau, p, res, 0.0, 1e-9 * max(1.0, abs(up)))

        def ode():
            h = hermite(tau, x)
            d1 = hermite_derivative(tau, x)
            d2 = 4 * tau * (tau - 1) * hermite(tau - 2, x)
            return IdentityCheck.compare("hermite_ode", tau, p, d2 - 2 * x * d1 + 2 * tau * h, 0.0,
                                         1e-9 * max(1.0, abs(h)))

        yield _guard("hermite_recurrence", tau, p, 1e-9, recurrence)
        yield _guard("hermite_ode", tau, p, 1e-9, ode)
    for x in (0.3, 0.6, 1.5):
        p = {"x": x, "h": 1e-5}

        def derivative():
            fd = (hermite(tau, x + 1e-5) - hermite(tau, x - 1e-5)) / 2e-5
            return IdentityCheck.compare("hermite_derivative", tau, p, hermite_derivative(tau, x), fd, 1e-6)

        yield _guard("hermite_derivative", tau, p, 1e-6, derivative)
    for x in (20.0, 50.0, 100.0):
        p = {"x": x}
        bound = 5 * (abs(tau) + 2) ** 4 / x ** 2
        if tau.imag != 0 or not 0 <= tau.real <= 3:
            yield IdentityCheck.skipped("hermite_asymptotic_ratio", tau, p, bound, "ratio bound stated for real tau in [0, 3]")
            continue
        yield _guard("hermite_asymptotic_ratio", tau, p, bound, lambda: IdentityCheck.compare(
            "hermite_asymptotic_ratio", tau, p, hermite(tau, x) / (2 * x) ** tau, 1.0, bound))


def _realline_checks(tau: complex, s: SuiteSettings) -> Iterable[IdentityCheck]:
    q, tol = s.quad, s.tol
    if tau.real <= -1 or _is_negative_integer(tau):
        yield IdentityCheck.skipped("pairing_quadrature", tau, {}, tol, "real-line representation needs Re tau > -1")
        return
    for z in (0.0, 0.5, 1.0, 2.3, tau):
        p = {"z": complex(z)}
        yield _guard("weight_integral", tau, p, tol, lambda: IdentityCheck.compare(
            "weight_integral", tau, p, hermite_weight_integral(z, tau, q), closed_form_weight_integral(z, tau), tol))
    p = {"z": tau}
    yield _guard("weight_integral_fullline", tau, p, tol, lambda: IdentityCheck.compare(
        "weight_integral_fullline", tau, p, hermite_weight_integral_fullline(tau, tau, q), closed_form_fullline(tau, tau), tol))
    for n in range(3):
        p = {"n": n}
        yield _guard("weight_integral_even", tau, p, tol, lambda: IdentityCheck.compare(
            "weight_integral_even", tau, p, hermite_weight_integral(2 * n + tau, tau, q),
            closed_form_even_moment(n, tau), tol))
    F = GeneralizedHermiteFunctional(tau)
    for n in range(13):
        p = {"degree": n}
        mono = Polynomial.monomial(n)
        yield _guard("pairing_quadrature", tau, p, tol, lambda: IdentityCheck.compare(
            "pairing_quadrature", tau, p, apply_via_quadrature(tau, mono, q), F.apply(mono),
            tol * max(1.0, abs(F.moment(n)))))


def _contour_checks(tau: complex, s: SuiteSettings) -> Iterable[IdentityCheck]:
    q, tol = s.quad, s.tol
    if abs(tau.imag) > IMAG_TAU_ENVELOPE:
        yield IdentityCheck.skipped("contour_moments", tau, {}, tol, "outside the tested |Im tau| envelope")
        return
    for n in (1, 3, 5):
        p = {"n": n, "epsilon": s.c1_epsilon}
        if tau.real + n <= -1:
            yield IdentityCheck.skipped("contour_odd_moment", tau, p, 1e-9, "detour limit diverges for Re tau <= -n-1")
            continue
        yield _guard("contour_odd_moment", tau, p, 1e-9, lambda: IdentityCheck.compare(
            "contour_odd_moment", tau, p, contour_moment_c1(n, tau, q, s.c1_epsilon), 0.0, 1e-9))
    integer = _is_integer(tau)
    for n in range(3):
        p = {"n": 2 * n, "epsilon": s.c1_epsilon}
        if integer or tau.real + 2 * n <= -1:
            yield IdentityCheck.skipped("contour_even_moment", tau, p, tol, "needs non-integer tau with Re(2n+tau) > -1")
            continue
        exact = -_SQRT_PI / 4 ** n * gamma(2 * n + tau + 1) / math.factorial(n)
        yield _guard("contour_even_moment", tau, p, tol, lambda: IdentityCheck.compare(
            "contour_even_moment", tau, p, contour_moment_c1(2 * n, tau, q, s.c1_epsilon), exact, tol))
    F = None if integer else GeneralizedHermiteFunctional(tau)
    for n in range(9):
        p = {"degree": n, "epsilon": s.c1_epsilon}
        if integer or tau.real <= -1:
            yield IdentityCheck.skipped("pairing_contour", tau, p, tol, "needs non-integer tau with Re tau > -1")
            continue
        mono = Polynomial.monomial(n)
        yield _guard("pairing_contour", tau, p, tol, lambda: IdentityCheck.compare(
            "pairing_contour", tau, p, apply_via_contour(tau, mono, q, s.c1_epsilon), F.apply(mono),
            10 * tol * max(1.0, abs(F.moment(n)))))
    if integer:
        yield IdentityCheck.skipped("loop_eps_independence", tau, {}, 1e-9, "loop formula needs non-integer tau")
        return
    try:
        base = gamma_via_loop(tau, q, s.loop_epsilon)
    except HermitiaError as exc:
        yield IdentityCheck.errored("loop_eps_independence", tau, {}, 1e-9, exc)
        return
    for eps in (0.05, 0.2):
        p = {"epsilon": eps}
        yield _guard("loop_eps_independence", tau, p, 1e-9, lambda: IdentityCheck.compare(
            "loop_eps_independence", tau, p, gamma_via_loop(tau, q, eps), base, 1e-9))


def _gamma_checks(tau: complex, s: SuiteSettings) -> Iterable[IdentityCheck]:
    q, tol = s.quad, s.tol
    params = {}
    integer = _is_integer(tau)
    ref = None
    if not (tau.real <= -1 or _is_negative_integer(tau)):
        ref = gamma(tau + 1)
        yield _guard("gamma_realline", tau, params, tol, lambda: IdentityCheck.compare(
            "gamma_realline", tau, params, gamma_via_realline(tau, q), ref, tol))
    else:
        yield IdentityCheck.skipped("gamma_realline", tau, params, tol, "needs Re tau > -1")
    if integer:
        yield IdentityCheck.skipped("gamma_loop", tau, params, tol, "e^(2 pi i tau) - 1 vanishes")
        yield IdentityCheck.skipped("gamma_sine", tau, params, tol, "sin(pi tau) vanishes")
    else:
        ref = gamma(tau + 1)
        yield _guard("gamma_loop", tau, params, tol, lambda: IdentityCheck.compare(
            "gamma_loop", tau, params, gamma_via_loop(tau, q, s.loop_epsilon), ref, tol))
        yield _guard("gamma_sine", tau, params, tol, lambda: IdentityCheck.compare(
            "gamma_sine", tau, params, gamma_via_sine_form(tau, q, s.loop_epsilon), ref, tol))
    yield _guard("gamma_reciprocal", tau, params, tol, lambda: IdentityCheck.compare(
        "gamma_reciprocal", tau, params, reciprocal_gamma_via_contour(tau, q, s.loop_epsilon),
        reciprocal_gamma(tau + 1), tol))


_SUITE_FUNCS = {
    "moments": _moment_checks,
    "hermite": _hermite_checks,
    "realline": _realline_checks,
    "contour": _contour_checks,
    "gamma": _gamma_checks,
}


def run_suite(suite: str, tau_grid: Iterable[complex] = DEFAULT_TAU_GRID,
              cfg: QuadratureConfig = DEFAULT_QUAD, tol: Optional[float] = None,
              loop_epsilon: float = LOOP_EPSILON, c1_epsilon: float = C1_EPSILON,
              deterministic: bool = True) -> IdentityReport:
    """
    Run one suite (or ``"all"``) across ``tau_grid``.

    Exceptions raised inside a check are recorded as failed checks;
    (identity, tau) pairs outside an identity's domain are SKIPPED.
    """
    grid = [complex(t) for t in tau_grid]
    if not grid:
        raise ValueError("tau grid must be nonempty")
    if suite != "all" and suite not in _SUITE_FUNCS:
        raise ValueError(f"unknown suite {suite!r}")
    if tol is None:
        tol = default_tolerance()
    settings = SuiteSettings(tol, cfg, loop_epsilon, c1_epsilon)
    names = SUITES if suite == "all" else (suite,)
    checks: list[IdentityCheck] = []
    for name in names:
        for tau in grid:
            checks.extend(_SUITE_FUNCS[name](tau, settings))
        if name == "moments":
            checks.extend(_first_order_checks())
    config = {
        "suite": suite,
        "tau_grid": [_num(t) for t in grid],
        "tol": tol,
        "rel_tol": cfg.rel_tol,
        "abs_tol": cfg.abs_tol,
        "truncation_radius": cfg.truncation_radius,
        "max_levels": cfg.max_levels,
        "loop_epsilon": loop_epsilon,
        "c1_epsilon": c1_epsilon,
        "version": __version__,
    }
    stamp = None if deterministic else datetime.now(timezone.utc).isoformat()
    return IdentityReport(checks, config, stamp)
