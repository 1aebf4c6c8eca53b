"""
Confluent and Gauss hypergeometric helpers.

Only what the Hermite-function integrals need: the Kummer series for
1F1, Gauss's value of 2F1 at unit argument, and the Laplace transform
of t^(alpha-1) 1F1(a1, b1, t).
"""

from __future__ import annotations

import cmath

from .errors import DomainError, NonConvergence, ParameterPole
from .scalar import (
    POLE_TOL,
    as_complex,
    ensure_finite,
    gamma,
    nearest_nonpositive_integer,
    reciprocal_gamma,
)

SERIES_TOL = 1e-16
MAX_TERMS = 10_000


class _Neumaier:
    """Compensated running sum of complex terms."""

    __slots__ = ("re", "im", "cre", "cim")

    def __init__(self) -> None:
        self.re = self.im = self.cre = self.cim = 0.0

    def add(self, v: complex) -> None:
        self.re, self.cre = _nadd(self.re, self.cre, v.real)
        self.im, self.cim = _nadd(self.im, self.cim, v.imag)

    @property
    def value(self) -> complex:
        return complex(self.re + self.cre, self.im + self.cim)


def _nadd(s: float, c: float, x: float) -> tuple[float, float]:
    t = s + x
    if abs(s) >= abs(x):
        c += (s - t) + x
    else:
        c += (x - t) + s
    return t, c


def sum_series(first: complex, ratio, tol: float = SERIES_TOL,
               max_terms: int = MAX_TERMS, what: str = "series") -> complex:
    """
    Sum sum_k t_k where t_0 = ``first`` and t_{k+1} = t_k * ratio(k).

    ``ratio(k)`` may return None to signal that the series terminated.
    Stops once three consecutive terms are below ``tol`` times the partial
    sum while the terms are no longer growing.
    """
    acc = _Neumaier()
    term = complex(first)
    acc.add(term)
    small = 0
    for k in range(max_terms):
        r = ratio(k)
        if r is None:
            return acc.value
        new = term * r
        acc.add(new)
        if new == 0:
            return acc.value
        if abs(new) <= tol * abs(acc.value) and abs(new) <= abs(term):
            small += 1
            if small >= 3:
                return acc.value
        else:
            small = 0
        term = new
    raise NonConvergence(f"{what}: no convergence within {max_terms} terms")


def kummer_1f1(a, b, z, tol: float = SERIES_TOL, max_terms: int = MAX_TERMS) -> complex:
    """
    Confluent hypergeometric function 1F1(a; b; z) by its Kummer series.

    A nonpositive integer ``a`` (within ``POLE_TOL``) is snapped to the
    integer so the polynomial case terminates exactly.

    Raises
    ------
    ParameterPole
        ``b`` is a nonpositive integer reached before the series terminates.
    NonConvergence
        ``max_terms`` exhausted.
    """
    a, b, z = as_complex(a), as_complex(b), as_complex(z)
    na = nearest_nonpositive_integer(a)
    if na is not None:
        a = complex(na)
    nb = nearest_nonpositive_integer(b)
    if nb is not None and (na is None or -na >= -nb):
        raise ParameterPole(f"1F1 lower parameter b={b!r} is a pole")
    if z == 0:
        return 1 + 0j

    def ratio(k: int):
        if na is not None and k >= -na:
            return None
        return (a + k) * z / ((b + k) * (k + 1))

    out = sum_series(1 + 0j, ratio, tol, max_terms, "kummer_1f1")
    return ensure_finite(out, "kummer_1f1")


def gauss_2f1_at_unit(a, b, c) -> complex:
    """
    2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).

    A nonpositive integer ``a`` or ``b`` makes the series a polynomial,
    which is summed directly.
    """
    a, b, c = as_complex(a), as_complex(b), as_complex(c)
    if nearest_nonpositive_integer(a) is not None or nearest_nonpositive_integer(b) is not None:
        # terminating series; no convergence condition needed
        return _hyp2f1_series(a, b, c, 1 + 0j)
    s = c - a - b
    if s.real <= 0:
        raise DomainError(f"2F1 at 1 diverges: Re(c-a-b) = {s.real} <= 0")
    return gamma(c) * gamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b)


def _hyp2f1_series(a: complex, b: complex, c: complex, w: complex) -> complex:
    if nearest_nonpositive_integer(c) is not None:
        raise ParameterPole(f"2F1 lower parameter c={c!r} is a pole")
    na = nearest_nonpositive_integer(a)
    nb = nearest_nonpositive_integer(b)
    stop = min(-n for n in (na, nb) if n is not None) if (na, nb) != (None, None) else None

    def ratio(k: int):
        if stop is not None and k >= stop:
            return None
        return (a + k) * (b + k) * w / ((c + k) * (k + 1))

    return sum_series(1 + 0j, ratio, what="2F1 series")


def laplace_1f1(a1, b1, alpha, s) -> complex:
    """
    Closed form of int_0^inf t^(alpha-1) 1F1(a1, b1, t) e^(-s t) dt.

    Equals Gamma(alpha) s^(-alpha) 2F1(a1, alpha; b1; 1/s). At s = 1 the
    2F1 factor comes from Gauss's formula (needs Re(b1 - a1 - alpha) > 0);
    otherwise |1/s| < 1 is required and the 2F1 series is summed.
    """
    a1, b1, alpha, s = map(as_complex, (a1, b1, alpha, s))
    if alpha.real <= 0 or s.real <= 0:
        raise DomainError("laplace_1f1 needs Re(alpha) > 0 and Re(s) > 0")
    g = gamma(alpha)
    if abs(s - 1) <= POLE_TOL:
        return g * gauss_2f1_at_unit(a1, alpha, b1)
    w = 1 / s
    if abs(w) >= 1:
        raise DomainError("laplace_1f1 supports s = 1 or |s| > 1 only")
    return g * cmath.exp(-alpha * cmath.log(s)) * _hyp2f1_series(a1, alpha, b1, w)
