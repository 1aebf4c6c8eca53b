"""
Contour integrals in the complex plane.

Two paths are supported:

* C1 - the real axis traversed from +R to -R with an upper semicircular
  detour of radius eps around the origin;
* the loop C - from +R to eps along arg(zeta) = 0, once counterclockwise
  around |zeta| = eps, and back to +R along arg(zeta) = 2 pi.

Every segment carries a continuous argument so that multivalued powers
zeta^tau = exp(tau (ln|zeta| + i arg zeta)) follow the path instead of the
principal branch.

The C1 integrand zeta^n |zeta|^tau H_tau(|zeta|) e^(-zeta^2) involves
|zeta| and is not holomorphic, so its value depends on eps; the
representation of G_H(tau) is the eps -> 0 limit. The deviation decays
like eps^(n + Re tau + 1), which is why :data:`C1_EPSILON` is tiny. The
loop integrands are holomorphic off the cut and genuinely independent
of eps.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NonConvergence
from .functional import Polynomial
from .hermite import DEFAULT_CONFIG as HERMITE_DEFAULT
from .hermite import HermiteEvalConfig, hermite
from .quadrature import DEFAULT_QUAD, QuadratureConfig, integrate_unit, resolve_radius
from .scalar import as_complex, csum, near_integer, reciprocal_gamma, sinpi

LOOP_EPSILON = 0.1
#: Detour radius used for C1 unless overridden; see the module docstring.
C1_EPSILON = 1e-24
#: |Im tau| beyond which contour results are not trusted.
IMAG_TAU_ENVELOPE = 2.0
_SQRT_PI = math.sqrt(math.pi)
_JOIN_TOL = 1e-12

Integrand = Callable[[complex, float], complex]


@dataclass(frozen=True)
class ContourSegment:
    """
    A line or a circular arc about the origin-centred ``center``.

    Lines lie on a ray of constant argument ``arg``; arcs carry
    arg(zeta) = theta along zeta = center + radius e^(i theta).
    """

    kind: str
    start: complex
    end: complex
    arg: float = 0.0
    center: complex = 0j
    radius: float = 0.0
    theta0: float = 0.0
    theta1: float = 0.0

    @classmethod
    def line(cls, start: complex, end: complex, arg: float) -> "ContourSegment":
        return cls("line", complex(start), complex(end), arg=float(arg))

    @classmethod
    def arc(cls, radius: float, theta0: float, theta1: float, center: complex = 0j) -> "ContourSegment":
        c = complex(center)
        return cls("arc", c + radius * cmath.exp(1j * theta0), c + radius * cmath.exp(1j * theta1),
                   center=c, radius=float(radius), theta0=float(theta0), theta1=float(theta1))

    def start_arg(self) -> float:
        return self.arg if self.kind == "line" else self.theta0

    def end_arg(self) -> float:
        return self.arg if self.kind == "line" else self.theta1

    def sample(self, s: float, r: float) -> tuple[complex, complex, float]:
        """(zeta, dzeta/ds, arg zeta) at parameter s, with r = 1 - s."""
        if self.kind == "line":
            d = self.end - self.start
            zeta = self.start + d * s if s <= 0.5 else self.end - d * r
            return zeta, d, self.arg
        span = self.theta1 - self.theta0
        theta = self.theta0 + span * s if s <= 0.5 else self.theta1 - span * r
        e = cmath.exp(1j * theta)
        return self.center + self.radius * e, 1j * self.radius * e * span, theta


@dataclass(frozen=True)
class ContourPath:
    segments: tuple[ContourSegment, ...]
    epsilon: float
    truncation: float

    def __post_init__(self):
        if not 0 < self.epsilon < 1 <= self.truncation:
            raise DomainError("contour needs 0 < epsilon < 1 <= truncation")
        scale = max(self.truncation, 1.0)
        for a, b in zip(self.segments, self.segments[1:]):
            if abs(a.end - b.start) > _JOIN_TOL * scale:
                raise DomainError("contour segments do not join")
            if abs(a.end_arg() - b.start_arg()) > _JOIN_TOL:
                raise DomainError("argument is discontinuous across a join")

    @property
    def start(self) -> complex:
        return self.segments[0].start

    @property
    def end(self) -> complex:
        return self.segments[-1].end


def build_c1(epsilon: float, truncation: float) -> ContourPath:
    """+R -> +eps, upper semicircle through i eps, -eps -> -R."""
    return ContourPath(
        (
            ContourSegment.line(truncation, epsilon, 0.0),
            ContourSegment.arc(epsilon, 0.0, math.pi),
            ContourSegment.line(-epsilon, -truncation, math.pi),
        ),
        epsilon,
        truncation,
    )


def build_c_loop(epsilon: float, truncation: float) -> ContourPath:
    """+R -> eps on arg 0, the full circle |zeta| = eps, eps -> +R on arg 2 pi."""
    return ContourPath(
        (
            ContourSegment.line(truncation, epsilon, 0.0),
            ContourSegment.arc(epsilon, 0.0, 2.0 * math.pi),
            ContourSegment.line(epsilon, truncation, 2.0 * math.pi),
        ),
        epsilon,
        truncation,
    )


def integrate_contour(f: Integrand, path: ContourPath, cfg: QuadratureConfig = DEFAULT_QUAD) -> complex:
    """
    Sum over segments of int f(zeta, arg zeta) dzeta.

    Each segment is integrated with tanh-sinh in its own parameter; the
    segment results are combined in path order.
    """
    parts = []
    for seg in path.segments:
        def g(s: float, r: float, seg=seg) -> complex:
            zeta, dz, arg = seg.sample(s, r)
            return f(zeta, arg) * dz

        parts.append(integrate_unit(g, cfg))
    return csum(parts)


def _branch_pow(tau: complex, zeta: complex, arg: float) -> complex:
    return cmath.exp(tau * complex(math.log(abs(zeta)), arg))


def _check_envelope(tau: complex) -> None:
    if abs(tau.imag) > IMAG_TAU_ENVELOPE:
        raise NonConvergence(
            f"|Im tau| = {abs(tau.imag)} exceeds the tested envelope {IMAG_TAU_ENVELOPE}")


def _check_noninteger(tau: complex, what: str) -> None:
    if near_integer(tau, 1e-10) is not None:
        raise DomainError(f"{what} needs non-integer tau, got {tau!r}")


def contour_moment_c1(n: int, tau, cfg: QuadratureConfig = DEFAULT_QUAD,
                      epsilon: float = C1_EPSILON,
                      hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """
    int_{C1} zeta^n |zeta|^tau H_tau(|zeta|) e^(-zeta^2) dzeta.

    For small ``epsilon`` this approaches 0 (n odd) and
    -sqrt(pi) Gamma(n + tau + 1) / (2^n (n/2)!) (n even).
    """
    tau = as_complex(tau)
    _check_envelope(tau)
    path = build_c1(epsilon, resolve_radius(cfg, n + 2 * tau.real))

    def f(zeta: complex, arg: float) -> complex:
        rho = abs(zeta)
        return zeta ** n * cmath.exp(tau * math.log(rho)) * hermite(tau, rho, hcfg) * cmath.exp(-zeta * zeta)

    return integrate_contour(f, path, cfg)


def apply_via_contour(tau, p: Polynomial, cfg: QuadratureConfig = DEFAULT_QUAD,
                      epsilon: float = C1_EPSILON,
                      hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """<G_H(tau), p> = -(1/(sqrt(pi) Gamma(tau+1))) sum_n p_n int_{C1} zeta^n ..."""
    tau = as_complex(tau)
    _check_noninteger(tau, "apply_via_contour")
    total = csum(c * contour_moment_c1(n, tau, cfg, epsilon, hcfg)
                 for n, c in enumerate(p.coeffs) if c != 0)
    return -total * reciprocal_gamma(tau + 1) / _SQRT_PI


def loop_integral(tau, cfg: QuadratureConfig = DEFAULT_QUAD, epsilon: float = LOOP_EPSILON,
                  shift: float = 0.0, hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """
    int_C w(zeta)^tau H_tau(zeta) e^(-zeta^2) dzeta over the loop.

    w(zeta)^tau uses arg w = arg(zeta) - ``shift``: shift 0 gives zeta^tau,
    shift pi gives (-zeta)^tau with arg(-zeta) running from -pi to pi.
    """
    tau = as_complex(tau)
    _check_envelope(tau)
    path = build_c_loop(epsilon, resolve_radius(cfg, 2 * tau.real))

    def f(zeta: complex, arg: float) -> complex:
        return _branch_pow(tau, zeta, arg - shift) * hermite(tau, zeta, hcfg) * cmath.exp(-zeta * zeta)

    return integrate_contour(f, path, cfg)


def gamma_via_loop(tau, cfg: QuadratureConfig = DEFAULT_QUAD, epsilon: float = LOOP_EPSILON,
                   hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """Gamma(tau+1) = 2 / (sqrt(pi) (e^(2 pi i tau) - 1)) int_C zeta^tau H_tau(zeta) e^(-zeta^2) dzeta."""
    tau = as_complex(tau)
    denom = cmath.exp(2j * math.pi * tau) - 1
    if abs(denom) < 1e-8:
        raise DomainError(f"e^(2 pi i tau) - 1 vanishes at tau={tau!r}")
    return 2.0 / (_SQRT_PI * denom) * loop_integral(tau, cfg, epsilon, 0.0, hcfg)


def gamma_via_sine_form(tau, cfg: QuadratureConfig = DEFAULT_QUAD, epsilon: float = LOOP_EPSILON,
                        hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """Gamma(tau+1) = 1/(i sqrt(pi) sin(pi tau)) int_C (-zeta)^tau H_tau(zeta) e^(-zeta^2) dzeta."""
    tau = as_complex(tau)
    s = sinpi(tau)
    if abs(s) < 1e-8:
        raise DomainError(f"sin(pi tau) vanishes at tau={tau!r}")
    return loop_integral(tau, cfg, epsilon, math.pi, hcfg) / (1j * _SQRT_PI * s)


def reciprocal_gamma_via_contour(tau, cfg: QuadratureConfig = DEFAULT_QUAD,
                                 epsilon: float = LOOP_EPSILON,
                                 hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """
    1/Gamma(tau+1) = i pi^(-3/2) int_C (-zeta)^(-1-tau) H_{-1-tau}(zeta) e^(-zeta^2) dzeta.

    Valid for every tau, integers included. The overall factor is +i: at
    tau = 0 the integrand is single valued and the loop reduces to a
    residue equal to -i pi^(3/2).
    """
    tau = as_complex(tau)
    return 1j * math.pi ** -1.5 * loop_integral(-1 - tau, cfg, epsilon, math.pi, hcfg)
