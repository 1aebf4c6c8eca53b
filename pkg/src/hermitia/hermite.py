"""
Hermite function H_tau(z) of arbitrary complex degree.

Four evaluators are provided:

* :func:`hermite_1f1_form` - the two-term confluent hypergeometric form,
  the generic evaluator for complex arguments;
* :func:`hermite_series` - the power series in 2z, kept as an
  independent cross-check;
* :func:`hermite_asymptotic` - the large-x expansion (2x)^tau sum_k ...;
* the three-term recurrence for nonnegative integer degree.

For real x > 0, H_tau is the solution of H'' - 2xH' + 2 tau H = 0 that
grows only like (2x)^tau, while the other solution grows like e^(x^2).
The 1F1 form therefore cancels two terms of size ~e^(x^2) and is only
trustworthy for small x. :func:`hermite` bridges the gap between that
region and the asymptotic region by Taylor-stepping the differential
equation inward from the asymptotic anchor, which is stable because the
unwanted solution decays in that direction.
"""

from __future__ import annotations

import bisect
import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateDegree, DomainError, NonConvergence
from .hypergeometric import _Neumaier, kummer_1f1, sum_series
from .scalar import as_complex, ensure_finite, gamma, near_integer, reciprocal_gamma

INTEGER_TOL = 1e-10
_SQRT_PI = math.sqrt(math.pi)
_GAMMA_MINUS_HALF = -2.0 * _SQRT_PI
_LN2 = math.log(2.0)


@dataclass(frozen=True)
class HermiteEvalConfig:
    """
    Evaluation settings for :func:`hermite`.

    Parameters
    ----------
    series_tol : float
        Relative stopping tolerance for the power series.
    asymptotic_threshold : float
        Real arguments at or above this use the asymptotic expansion
        directly; it is also the anchor of the ODE continuation.
    asymptotic_terms : int
        Maximum index n kept in the asymptotic sum.
    series_limit : float
        Real arguments at or below this use the 1F1 form; between it and
        ``asymptotic_threshold`` the ODE continuation is used.
    """

    series_tol: float = 1e-15
    asymptotic_threshold: float = 12.0
    asymptotic_terms: int = 10
    series_limit: float = 1.0

    def __post_init__(self):
        if not self.series_tol > 0:
            raise DomainError("series_tol must be positive")
        if not self.asymptotic_threshold >= 8:
            raise DomainError("asymptotic_threshold must be >= 8")
        if not 1 <= self.asymptotic_terms <= 30:
            raise DomainError("asymptotic_terms must lie in [1, 30]")
        if not 0 < self.series_limit < self.asymptotic_threshold:
            raise DomainError("series_limit must lie in (0, asymptotic_threshold)")


DEFAULT_CONFIG = HermiteEvalConfig()


def _pow2(tau: complex) -> complex:
    return cmath.exp(tau * _LN2)


def hermite_1f1_form(tau, z, tol: float = 1e-16) -> complex:
    """H_tau(z) from the confluent hypergeometric representation."""
    tau, z = as_complex(tau), as_complex(z)
    z2 = z * z
    even = _SQRT_PI * reciprocal_gamma((1 - tau) / 2)
    odd = _GAMMA_MINUS_HALF * reciprocal_gamma(-tau / 2)
    out = 0j
    if even != 0:
        out += even * kummer_1f1(-tau / 2, 0.5, z2, tol)
    if odd != 0 and z != 0:
        out += odd * z * kummer_1f1((1 - tau) / 2, 1.5, z2, tol)
    return ensure_finite(_pow2(tau) * out, "hermite_1f1_form")


def hermite_series(tau, z, tol: float = 1e-16) -> complex:
    """
    H_tau(z) = 1/(2 Gamma(-tau)) sum_m (-1)^m Gamma((m - tau)/2) (2z)^m / m!.

    Raises
    ------
    DegenerateDegree
        ``tau`` is within 1e-10 of a nonnegative integer.
    """
    tau, z = as_complex(tau), as_complex(z)
    n = near_integer(tau, INTEGER_TOL)
    if n is not None and n >= 0:
        raise DegenerateDegree(f"power series is degenerate at tau={tau!r}")
    w = 2 * z
    w2 = w * w
    # even and odd subsequences each obey a two-step ratio
    g0 = gamma(-tau / 2)
    g1 = gamma((1 - tau) / 2)

    def even_ratio(k: int):
        m = 2 * k
        return ((m - tau) / 2) * w2 / ((m + 1) * (m + 2))

    def odd_ratio(k: int):
        m = 2 * k + 1
        return ((m - tau) / 2) * w2 / ((m + 1) * (m + 2))

    s_even = sum_series(g0, even_ratio, tol, what="hermite_series")
    s_odd = 0j if z == 0 else sum_series(-g1 * w, odd_ratio, tol, what="hermite_series")
    return ensure_finite(0.5 * reciprocal_gamma(-tau) * (s_even + s_odd), "hermite_series")


def hermite_asymptotic(tau, x: float, n_terms: int = 10) -> complex:
    """
    Large-x expansion (2x)^tau sum_{k<=n} (-1)^k (-tau)_{2k} (2x)^(-2k) / k!.

    Summation stops early at the smallest term, as usual for a divergent
    asymptotic series.
    """
    tau = as_complex(tau)
    x = float(x)
    if not x > 0:
        raise DomainError("hermite_asymptotic needs x > 0")
    inv = 1.0 / (4.0 * x * x)
    acc = _Neumaier()
    term = 1 + 0j
    acc.add(term)
    for k in range(n_terms):
        new = -term * (2 * k - tau) * (2 * k + 1 - tau) * inv / (k + 1)
        if abs(new) > abs(term):
            break
        acc.add(new)
        term = new
    return ensure_finite(cmath.exp(tau * math.log(2 * x)) * acc.value, "hermite_asymptotic")


def _hermite_poly(n: int, z: complex) -> complex:
    h_prev, h = 1 + 0j, 2 * z
    if n == 0:
        return h_prev
    for k in range(1, n):
        h_prev, h = h, 2 * z * h - 2 * k * h_prev
    return h


def _taylor_step(tau: complex, x0: float, y0: complex, dy0: complex, h: float):
    """Advance (y, y') of H'' - 2xH' + 2 tau H = 0 from x0 to x0 + h."""
    c_prev, c = y0, dy0
    val = _Neumaier()
    der = _Neumaier()
    val.add(c_prev)
    val.add(c * h)
    der.add(c)
    hk = h  # h**(k+1) for the coefficient c_{k+1}
    small = 0
    for k in range(200):
        c_next = (2 * x0 * (k + 1) * c + 2 * (k - tau) * c_prev) / ((k + 2) * (k + 1))
        der.add((k + 2) * c_next * hk)
        hk *= h
        term = c_next * hk
        val.add(term)
        if abs(term) <= 1e-18 * abs(val.value) and abs(c_next) <= abs(c) + abs(c_prev):
            small += 1
            if small >= 3:
                return val.value, der.value
        else:
            small = 0
        c_prev, c = c, c_next
    raise NonConvergence("ODE Taylor step did not converge")


@lru_cache(maxsize=512)
def _checkpoints(tau: complex, anchor: float, low: float, n_terms: int):
    """Descending table (x, H_tau(x), H_tau'(x)) from the anchor down to ``low``."""
    y = hermite_asymptotic(tau, anchor, n_terms)
    dy = 2 * tau * hermite_asymptotic(tau - 1, anchor, n_terms) if tau != 0 else 0j
    xs, ys, dys = [anchor], [y], [dy]
    x = anchor
    while x > low:
        h = -min(0.5, 2.0 / x)
        if x + h < low:
            h = low - x
        y, dy = _taylor_step(tau, x, y, dy, h)
        x = x + h
        xs.append(x)
        ys.append(y)
        dys.append(dy)
    # ascending x for bisect
    return tuple(reversed(xs)), tuple(reversed(ys)), tuple(reversed(dys))


def _hermite_continued(tau: complex, x: float, cfg: HermiteEvalConfig) -> complex:
    xs, ys, dys = _checkpoints(tau, cfg.asymptotic_threshold, cfg.series_limit,
                               cfg.asymptotic_terms)
    j = bisect.bisect_left(xs, x)
    if xs[j] == x:
        return ys[j]
    y, _ = _taylor_step(tau, xs[j], ys[j], dys[j], x - xs[j])
    return y


def hermite(tau, z, cfg: HermiteEvalConfig = DEFAULT_CONFIG) -> complex:
    """
    Evaluate H_tau(z) for complex degree and argument.

    Dispatch:

    * tau a nonnegative integer -> three-term recurrence (exact polynomial);
    * real z >= ``asymptotic_threshold`` -> asymptotic expansion;
    * real ``series_limit`` < z < ``asymptotic_threshold`` -> ODE
      continuation from the asymptotic anchor;
    * anything else -> the 1F1 form.

    For negative real z and non-integer tau the 1F1 form is used as is;
    callers working on the positive ray should pass |x|.
    """
    tau, z = as_complex(tau), as_complex(z)
    n = near_integer(tau, INTEGER_TOL)
    if n is not None and n >= 0:
        return _hermite_poly(n, z)
    if z.imag == 0 and z.real > cfg.series_limit:
        x = z.real
        if x >= cfg.asymptotic_threshold:
            return hermite_asymptotic(tau, x, cfg.asymptotic_terms)
        return _hermite_continued(tau, x, cfg)
    return hermite_1f1_form(tau, z, cfg.series_tol)


def hermite_derivative(tau, z, cfg: HermiteEvalConfig = DEFAULT_CONFIG) -> complex:
    """d/dz H_tau(z) = 2 tau H_{tau-1}(z)."""
    tau = as_complex(tau)
    if tau == 0:
        return 0j
    return 2 * tau * hermite(tau - 1, z, cfg)
