"""
The generalized Hermite linear functional G_H(tau) on polynomials.

G_H(tau) is determined by its moments

    <G_H(tau), x^(2k)>   = (tau + 1)_{2k} / (k! 4^k),
    <G_H(tau), x^(2k+1)> = 0,

so it is symmetric and monic. tau = 0 gives the classical Hermite
functional (1/sqrt(pi)) int p(x) e^(-x^2) dx.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DomainError
from .scalar import as_complex, csum, near_integer, pochhammer

NEGATIVE_INTEGER_TOL = 1e-10


@dataclass(frozen=True, init=False)
class Polynomial:
    """Polynomial with complex coefficients; ``coeffs[n]`` multiplies x^n."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Sequence[complex]):
        cs = [complex(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0j]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, n: int, coeff: complex = 1.0) -> "Polynomial":
        return cls([0.0] * n + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: complex) -> complex:
        out = 0j
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def reflected(self) -> "Polynomial":
        """p(-x)."""
        return Polynomial([c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)])

    def even_part(self) -> "Polynomial":
        """p(x) + p(-x)."""
        return Polynomial([2 * c if n % 2 == 0 else 0.0 for n, c in enumerate(self.coeffs)])


class GeneralizedHermiteFunctional:
    """
    G_H(tau) with a lazily grown moment cache.

    The cache is replaced wholesale under a lock, so concurrent readers see
    either the previous or the extended tuple.
    """

    def __init__(self, tau):
        tau = as_complex(tau)
        n = near_integer(tau, NEGATIVE_INTEGER_TOL)
        if n is not None and n <= -1:
            raise DomainError(f"G_H(tau) is undefined at negative integer tau={tau!r}")
        self.tau = tau
        self._moments: tuple[complex, ...] = (1 + 0j, 0j)
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"GeneralizedHermiteFunctional(tau={self.tau!r})"

    def _grow(self, n: int) -> tuple[complex, ...]:
        with self._lock:
            m = list(self._moments)
            tau = self.tau
            while len(m) <= n:
                k = len(m) // 2 - 1  # m currently ends at index 2k + 1
                nxt = m[2 * k] * (tau + 2 * k + 1) * (tau + 2 * k + 2) / (4 * (k + 1))
                m.extend((nxt, 0j))
            self._moments = tuple(m)
            return self._moments

    def moment(self, n: int) -> complex:
        if n < 0:
            raise DomainError("moment index must be >= 0")
        cache = self._moments
        if n >= len(cache):
            cache = self._grow(n)
        return cache[n]

    def apply(self, p: Polynomial) -> complex:
        return csum(c * self.moment(n) for n, c in enumerate(p.coeffs) if c != 0)


def moment(F: GeneralizedHermiteFunctional, n: int) -> complex:
    """The n-th moment <F, x^n>."""
    return F.moment(n)


def apply(F: GeneralizedHermiteFunctional, p: Polynomial) -> complex:
    """<F, p> = sum_n p_n <F, x^n>."""
    return F.apply(p)


_HERMITE = GeneralizedHermiteFunctional(0)


def moment_via_relation(tau, n: int) -> complex:
    """(tau + 1)_n / n! times the n-th moment of the classical Hermite functional."""
    if n % 2:
        return 0j
    tau = as_complex(tau)
    return pochhammer(tau + 1, n) / math.factorial(n) * _HERMITE.moment(n)


def second_order_residual(tau, n: int) -> complex:
    """
    n-th moment of the second-order functional equation's left side.

    -2 (n+2) m_{n+2} + (n + tau + 2)(n + tau + 1) m_n, which vanishes for all n.
    """
    F = tau if isinstance(tau, GeneralizedHermiteFunctional) else GeneralizedHermiteFunctional(tau)
    t = F.tau
    return -2 * (n + 2) * F.moment(n + 2) + (n + t + 2) * (n + t + 1) * F.moment(n)


def first_order_residual_hermite(n: int) -> complex:
    """<G_H' + 2x G_H, x^n> = -n m_{n-1} + 2 m_{n+1} for the classical functional."""
    first = -n * _HERMITE.moment(n - 1) if n > 0 else 0j
    return first + 2 * _HERMITE.moment(n + 1)


def symmetrize(L: Callable[[float], complex]):
    """
    Split L into U(x) = (L(x) + L(-x))/2 and V(x) = (L(x) - L(-x))/(2x).

    Returns the pair (U, V); L(x) = U(|x|) + x V(|x|) for every real x.
    """

    def U(x: float) -> complex:
        return (L(x) + L(-x)) / 2

    def V(x: float) -> complex:
        if x == 0:
            return 0.0
        return (L(x) - L(-x)) / (2 * x)

    return U, V
