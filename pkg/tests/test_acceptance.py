"""
Acceptance criteria, run at their stated tolerances.

Each criterion is split into parts; a criterion passes when all of its
parts pass. ``pytest`` prints one PASS/FAIL line per criterion in the
terminal summary, and ``python tests/test_acceptance.py`` prints the same
lines directly.
"""

from __future__ import annotations

import itertools
import math
import subprocess
import sys
from dataclasses import dataclass

import pytest

from hermitia import (
    GeneralizedHermiteFunctional,
    Polynomial,
    apply_via_quadrature,
    closed_form_weight_integral,
    contour_moment_c1,
    gamma,
    gamma_via_loop,
    gamma_via_realline,
    gamma_via_sine_form,
    hermite,
    hermite_1f1_form,
    hermite_derivative,
    hermite_series,
    hermite_weight_integral,
    integrate_halfline,
    moment_via_relation,
    reciprocal_gamma,
    reciprocal_gamma_via_contour,
    second_order_residual,
)

GRID = [-0.5, 0, 0.5, 1.3, 2.7, 0.5 + 0.5j]
SQRT_PI = math.sqrt(math.pi)


@dataclass
class Outcome:
    passed: bool
    detail: str


def _worst(label: str, errs, limit: float) -> Outcome:
    errs = list(errs)
    worst = max(errs)
    return Outcome(worst <= limit, f"{label}: worst {worst:.2e} (limit {limit:g}, {len(errs)} cases)")


def _is_integer(t) -> bool:
    t = complex(t)
    return t.imag == 0 and t.real == round(t.real)


# ---------------------------------------------------------------- 1


def c1_monic_and_symmetric():
    bad = 0
    for tau in GRID:
        F = GeneralizedHermiteFunctional(tau)
        bad += F.moment(0) != 1
        bad += sum(F.moment(n) != 0 for n in range(1, 21, 2))
    return Outcome(bad == 0, f"moment(0) = 1 and odd moments exactly 0: {bad} violations")


def c1_relation():
    def errs():
        for tau in GRID:
            F = GeneralizedHermiteFunctional(tau)
            for n in range(0, 21, 2):
                m = F.moment(n)
                yield abs(m - moment_via_relation(tau, n)) / abs(m)

    return _worst("moment vs Pochhammer relation, rel", errs(), 1e-12)


# ---------------------------------------------------------------- 2


def c2_second_order():
    def ratios():
        for tau in GRID:
            F = GeneralizedHermiteFunctional(tau)
            for n in range(21):
                bound = 1e-11 * (n + abs(tau) + 2) ** 2 * max(1, abs(F.moment(n)))
                yield abs(second_order_residual(F, n)) / bound

    return _worst("second-order residual / bound", ratios(), 1.0)


# ---------------------------------------------------------------- 3

X_SMALL = [0.1, 0.5, 1.0, 2.0]
X_ODE = [0.1, 0.5, 1.0, 2.0, 5.0]


def c3_two_forms():
    errs = (abs(hermite_1f1_form(t, x) - hermite_series(t, x)) / abs(hermite_series(t, x))
            for t in GRID if not _is_integer(t) for x in X_SMALL)
    return _worst("1F1 form vs power series, rel", errs, 1e-12)


def c3_recurrence_and_ode():
    def errs():
        for t, x in itertools.product(GRID, X_ODE):
            up = hermite(t + 1, x)
            yield abs(up - 2 * x * hermite(t, x) + 2 * t * hermite(t - 1, x)) / max(1, abs(up))
            h = hermite(t, x)
            d2 = 4 * t * (t - 1) * hermite(t - 2, x)
            yield abs(d2 - 2 * x * hermite_derivative(t, x) + 2 * t * h) / max(1, abs(h))

    return _worst("recurrence and ODE residuals, rel", errs(), 1e-9)


def c3_derivative():
    h = 1e-5
    errs = (abs(hermite_derivative(t, x) - (hermite(t, x + h) - hermite(t, x - h)) / (2 * h))
            for t in GRID for x in X_SMALL)
    return _worst("derivative vs central difference, abs", errs, 1e-6)


# ---------------------------------------------------------------- 4


def c4_weight_integral_grid():
    def errs():
        for tau in (-0.5, 0.5, 1.3, 2.7):
            for z in (0, 0.5, 1, 2.3, tau):
                ref = closed_form_weight_integral(z, tau)
                yield abs(hermite_weight_integral(z, tau) - ref) / abs(ref)

    return _worst("half-line weight integral vs closed form, rel", errs(), 1e-8)


# ---------------------------------------------------------------- 5


def c5_pairing():
    def errs():
        for tau in GRID:
            if complex(tau).real <= -1:
                continue
            F = GeneralizedHermiteFunctional(tau)
            for n in range(13):
                mono = Polynomial.monomial(n)
                exact = F.apply(mono)
                got = apply_via_quadrature(tau, mono)
                yield abs(got - exact) / abs(exact) if exact != 0 else (0.0 if got == 0 else math.inf)

    return _worst("quadrature pairing vs moments, rel", errs(), 1e-8)


# ---------------------------------------------------------------- 6

C6_TAUS = [-0.5, 0.5, 1.3, 0.5 + 0.5j]


def c6_odd():
    errs = (abs(contour_moment_c1(n, t)) for t in C6_TAUS for n in (1, 3, 5))
    return _worst("odd C1 moments, abs", errs, 1e-9)


def c6_even():
    def errs():
        for t in C6_TAUS:
            for n in range(3):
                exact = -SQRT_PI / 4 ** n * gamma(2 * n + t + 1) / math.factorial(n)
                yield abs(contour_moment_c1(2 * n, t) - exact) / abs(exact)

    return _worst("even C1 moments vs Gamma formula, rel", errs(), 1e-8)


def c6_epsilon_c1():
    def errs():
        for t in C6_TAUS:
            for n in range(5):
                vals = [contour_moment_c1(n, t, epsilon=e) for e in (0.05, 0.1, 0.2)]
                yield max(abs(v - vals[1]) for v in vals) / max(1, abs(vals[1]))

    return _worst("C1 moments across eps in {0.05, 0.1, 0.2}, rel", errs(), 1e-9)


def c6_epsilon_loop():
    def errs():
        for t in C6_TAUS:
            vals = [gamma_via_loop(t, epsilon=e) for e in (0.05, 0.1, 0.2)]
            yield max(abs(v - vals[1]) for v in vals) / abs(vals[1])

    return _worst("loop integral across eps in {0.05, 0.1, 0.2}, rel", errs(), 1e-9)


# ---------------------------------------------------------------- 7


def c7_four_way():
    def errs():
        for t in (-0.5, 0.3, 0.5, 1.3, 2.7):
            vals = [gamma_via_realline(t), gamma_via_loop(t), gamma_via_sine_form(t), gamma(t + 1)]
            for a, b in itertools.combinations(vals, 2):
                yield abs(a - b) / abs(b)

    return _worst("pairwise Gamma representations, rel", errs(), 1e-7)


def c7_reciprocal():
    errs = (abs(reciprocal_gamma_via_contour(t) - reciprocal_gamma(t + 1))
            for t in (-0.5, 0.3, 0.5, 1.3, 2.7, 0, -1))
    return _worst("reciprocal contour vs 1/Gamma, abs", errs, 1e-7)


# ---------------------------------------------------------------- 8


def c8_gaussian():
    err = abs(integrate_halfline(lambda x: math.exp(-x * x)) - SQRT_PI / 2)
    return _worst("Gaussian half-line, abs", [err], 1e-12)


def c8_singular():
    ref = gamma(0.25).real / 2
    err = abs(integrate_halfline(lambda x: x ** -0.5 * math.exp(-x * x), growth=-0.5) - ref)
    return _worst("x^(-1/2) e^(-x^2) half-line, abs", [err], 1e-10)


# ---------------------------------------------------------------- 9


def c9_determinism():
    cmd = [sys.executable, "-m", "hermitia", "verify", "--suite", "all", "--deterministic", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0
    codes = [r.returncode for r in runs]
    return Outcome(same and codes == [0, 0],
                   f"two verify runs byte-identical: {same} ({len(runs[0].stdout)} bytes), exit codes {codes}")


CRITERIA = {
    1: ("moment identities", [c1_monic_and_symmetric, c1_relation]),
    2: ("second-order functional equation", [c2_second_order]),
    3: ("Hermite function cross-validation", [c3_two_forms, c3_recurrence_and_ode, c3_derivative]),
    4: ("half-line weight integrals", [c4_weight_integral_grid]),
    5: ("integral pairing", [c5_pairing]),
    6: ("C1 contour moments", [c6_odd, c6_even, c6_epsilon_c1, c6_epsilon_loop]),
    7: ("four-way Gamma and reciprocal", [c7_four_way, c7_reciprocal]),
    8: ("quadrature engine oracles", [c8_gaussian, c8_singular]),
    9: ("report determinism", [c9_determinism]),
}

RESULTS: dict[int, list[tuple[str, Outcome]]] = {}


def summary_lines() -> list[str]:
    lines = []
    for k, (title, parts) in CRITERIA.items():
        got = RESULTS.get(k, [])
        if len(got) < len(parts):
            lines.append(f"criterion {k} ({title}): NOT RUN")
            continue
        ok = all(o.passed for _, o in got)
        details = "; ".join(f"{'ok' if o.passed else 'FAILED'} {o.detail}" for _, o in got)
        lines.append(f"criterion {k} ({title}): {'PASS' if ok else 'FAIL'} -- {details}")
    return lines


PARTS = [(k, f) for k, (_, fs) in CRITERIA.items() for f in fs]


@pytest.mark.parametrize("criterion,part", PARTS, ids=[f"c{k}-{f.__name__[3:]}" for k, f in PARTS])
def test_criterion(criterion, part):
    outcome = part()
    RESULTS.setdefault(criterion, []).append((part.__name__, outcome))
    print(outcome.detail)
    assert outcome.passed, outcome.detail


if __name__ == "__main__":
    for k, f in PARTS:
        RESULTS.setdefault(k, []).append((f.__name__, f()))
    print("\n".join(summary_lines()))
    sys.exit(0 if all(o.passed for v in RESULTS.values() for _, o in v) else 1)
