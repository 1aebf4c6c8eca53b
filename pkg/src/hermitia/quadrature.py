"""
Double-exponential (tanh-sinh) quadrature and the real-line integrals
of x^z H_tau(x) e^(-x^2).

The rule is built on [0, 1] and hands back, for every node, its distance
to *both* endpoints so that integrands singular at either end are sampled
with full relative precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Union

import numpy as np

from .errors import DomainError, NonConvergence, SingularIntegrand
from .functional import Polynomial
from .hermite import DEFAULT_CONFIG as HERMITE_DEFAULT
from .hermite import HermiteEvalConfig, hermite
from .scalar import as_complex, gamma, near_integer, reciprocal_gamma

AUTO = "auto"
_SQRT_PI = math.sqrt(math.pi)
# nodes reach within ~e^-700 of the endpoints
_T_MAX = 6.1
_MIN_LEVELS = 3
#: |Im tau| beyond which real-line pairings are not trusted.
IMAG_TAU_ENVELOPE = 3.0


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    truncation_radius: Union[float, str] = AUTO
    max_levels: int = 12

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("rel_tol and abs_tol must be positive")
        r = self.truncation_radius
        if r != AUTO and not (isinstance(r, (int, float)) and r > 0):
            raise DomainError("truncation_radius must be positive or 'auto'")
        if not 4 <= self.max_levels <= 16:
            raise DomainError("max_levels must lie in [4, 16]")


DEFAULT_QUAD = QuadratureConfig()


def resolve_radius(cfg: QuadratureConfig, growth: float = 0.0) -> float:
    """
    Truncation radius R for integrands ~ x^growth e^(-x^2).

    AUTO gives R = max(8, sqrt(ln(1/abs_tol)) + 2 + |growth|/4).
    """
    if cfg.truncation_radius != AUTO:
        return float(cfg.truncation_radius)
    return max(8.0, math.sqrt(math.log(1.0 / cfg.abs_tol)) + 2.0 + abs(growth) / 4.0)


@lru_cache(maxsize=None)
def _level_nodes(level: int):
    """
    Nodes added at ``level`` of the rule on [0, 1].

    Returns (left, right, weight): distances to 0 and to 1, and weights
    already multiplied by the step h. Level 0 holds every integer t.
    """
    h = 2.0 ** -level
    kmax = int(math.floor(_T_MAX / h))
    k = np.arange(-kmax, kmax + 1)
    if level > 0:
        k = k[k % 2 != 0]
    t = k * h
    u = 0.5 * math.pi * np.sinh(t)
    e = np.exp(-2.0 * np.abs(u))
    # distance to the nearer endpoint is e/(1+e); to the farther 1/(1+e)
    near = e / (1.0 + e)
    far = 1.0 / (1.0 + e)
    left = np.where(u < 0, near, far)
    right = np.where(u < 0, far, near)
    # (1/2) (pi/2) cosh t / cosh^2 u, with 1/cosh^2 u = 4e/(1+e)^2
    weight = h * 0.5 * (0.5 * math.pi) * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2
    keep = (left > 0) & (right > 0) & (weight > 0)
    return left[keep], right[keep], weight[keep]


def tanh_sinh_levels(g: Callable[[float, float], complex], max_levels: int):
    """
    Successive tanh-sinh estimates of int_0^1 of an integrand given by
    g(s, 1 - s), both arguments accurate.

    Yields one estimate per level. Contributions are accumulated with a
    correctly rounded sum in ascending node order.
    """
    re: list[float] = []
    im: list[float] = []
    for level in range(max_levels + 1):
        left, right, weight = _level_nodes(level)
        for s, r, w in zip(left.tolist(), right.tolist(), weight.tolist()):
            try:
                v = complex(g(s, r))
            except (ZeroDivisionError, OverflowError) as exc:
                raise SingularIntegrand(f"integrand blew up at s={s!r}: {exc}") from None
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise SingularIntegrand(f"non-finite integrand sample at s={s!r}")
            re.append(w * v.real)
            im.append(w * v.imag)
        yield complex(math.fsum(re), math.fsum(im)), level
        # the next level halves h for every node already summed
        re = [x * 0.5 for x in re]
        im = [x * 0.5 for x in im]


def _converged(prev: complex, cur: complex, cfg: QuadratureConfig) -> bool:
    return abs(cur - prev) <= max(cfg.abs_tol, cfg.rel_tol * abs(cur))


def integrate_unit(g: Callable[[float, float], complex], cfg: QuadratureConfig = DEFAULT_QUAD) -> complex:
    """int_0^1 of g(s, 1 - s) ds with level refinement until converged."""
    prev = None
    for est, level in tanh_sinh_levels(g, cfg.max_levels):
        if prev is not None and level >= _MIN_LEVELS and _converged(prev, est, cfg):
            return est
        prev = est
    raise NonConvergence(f"tanh-sinh did not converge within {cfg.max_levels} levels")


def integrate_interval(f: Callable[[float], complex], a: float, b: float,
                       cfg: QuadratureConfig = DEFAULT_QUAD) -> complex:
    """int_a^b f(x) dx; nodes near either endpoint keep full precision."""
    length = b - a

    def g(s: float, r: float) -> complex:
        x = a + length * s if s <= 0.5 else b - length * r
        return f(x)

    return length * integrate_unit(g, cfg)


def integrate_halfline(f: Callable[[float], complex], cfg: QuadratureConfig = DEFAULT_QUAD,
                       growth: float = 0.0) -> complex:
    """
    int_0^R f(x) dx for integrands decaying like e^(-x^2).

    ``growth`` is the polynomial growth exponent used by the AUTO radius.
    Integrable singularities at 0 are allowed.
    """
    return integrate_interval(f, 0.0, resolve_radius(cfg, growth), cfg)


def _xpow(z: complex, x: float) -> complex:
    return cmath.exp(z * math.log(x))


def hermite_weight_integral(z, tau, cfg: QuadratureConfig = DEFAULT_QUAD,
                            hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """Numerical int_0^inf x^z H_tau(x) e^(-x^2) dx, for Re z > -1."""
    z, tau = as_complex(z), as_complex(tau)
    if z.real <= -1:
        raise DomainError("hermite_weight_integral needs Re z > -1")
    _check_envelope(tau)

    def f(x: float) -> complex:
        return _xpow(z, x) * hermite(tau, x, hcfg) * math.exp(-x * x)

    return integrate_halfline(f, cfg, growth=z.real + tau.real)


def hermite_weight_integral_fullline(z, tau, cfg: QuadratureConfig = DEFAULT_QUAD,
                                     hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """Numerical int_{-inf}^{inf} |x|^z H_tau(|x|) e^(-x^2) dx, split at 0."""
    z, tau = as_complex(z), as_complex(tau)
    if z.real <= -1:
        raise DomainError("hermite_weight_integral_fullline needs Re z > -1")
    _check_envelope(tau)
    R = resolve_radius(cfg, z.real + tau.real)

    def f(x: float) -> complex:
        ax = abs(x)
        return _xpow(z, ax) * hermite(tau, ax, hcfg) * math.exp(-x * x)

    return integrate_interval(f, -R, 0.0, cfg) + integrate_interval(f, 0.0, R, cfg)


def closed_form_weight_integral(z, tau) -> complex:
    """sqrt(pi) / 2^(z - tau + 1) * Gamma(z + 1) / Gamma((z - tau)/2 + 1)."""
    z, tau = as_complex(z), as_complex(tau)
    scale = cmath.exp(-(z - tau + 1) * math.log(2.0))
    return _SQRT_PI * scale * gamma(z + 1) * reciprocal_gamma((z - tau) / 2 + 1)


def closed_form_fullline(z, tau) -> complex:
    """Full-line counterpart of :func:`closed_form_weight_integral` (twice its value)."""
    return 2 * closed_form_weight_integral(z, tau)


def closed_form_even_moment(n: int, tau) -> complex:
    """int_0^inf x^(2n+tau) H_tau(x) e^(-x^2) dx = sqrt(pi) Gamma(2n+tau+1) / (2^(2n+1) n!)."""
    tau = as_complex(tau)
    return _SQRT_PI * gamma(2 * n + tau + 1) / (2.0 ** (2 * n + 1) * math.factorial(n))


def _check_envelope(tau: complex) -> None:
    if abs(tau.imag) > IMAG_TAU_ENVELOPE:
        raise NonConvergence(
            f"|Im tau| = {abs(tau.imag)} exceeds the tested envelope {IMAG_TAU_ENVELOPE}")


def _check_pairing_tau(tau: complex) -> None:
    _check_envelope(tau)
    if tau.real <= -1:
        raise DomainError("the real-line representation needs Re tau > -1")
    n = near_integer(tau, 1e-10)
    if n is not None and n < 0:
        raise DomainError(f"tau={tau!r} is a negative integer")


def apply_via_quadrature(tau, p: Polynomial, cfg: QuadratureConfig = DEFAULT_QUAD,
                         hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """
    <G_H(tau), p> as (1/(sqrt(pi) Gamma(tau+1))) int p(x) |x|^tau H_tau(|x|) e^(-x^2) dx.

    Only the even part p(x) + p(-x) survives, integrated over (0, inf).
    """
    tau = as_complex(tau)
    _check_pairing_tau(tau)
    q = p.even_part()
    if q.coeffs == (0j,):
        return 0j

    def f(x: float) -> complex:
        return q(x) * _xpow(tau, x) * hermite(tau, x, hcfg) * math.exp(-x * x)

    integral = integrate_halfline(f, cfg, growth=q.degree + tau.real)
    return integral * reciprocal_gamma(tau + 1) / _SQRT_PI


def gamma_via_realline(tau, cfg: QuadratureConfig = DEFAULT_QUAD,
                       hcfg: HermiteEvalConfig = HERMITE_DEFAULT) -> complex:
    """Gamma(tau + 1) = (2/sqrt(pi)) int_0^inf x^tau H_tau(x) e^(-x^2) dx."""
    tau = as_complex(tau)
    if tau.real <= -1:
        raise DomainError("gamma_via_realline needs Re tau > -1")
    _check_envelope(tau)
    return 2.0 / _SQRT_PI * hermite_weight_integral(tau, tau, cfg, hcfg)
