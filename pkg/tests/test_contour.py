import cmath
import math

import mpmath
import pytest

from hermitia import (
    ContourPath,
    ContourSegment,
    DomainError,
    GeneralizedHermiteFunctional,
    NonConvergence,
    Polynomial,
    QuadratureConfig,
    apply_via_contour,
    build_c1,
    build_c_loop,
    contour_moment_c1,
    gamma,
    gamma_via_loop,
    gamma_via_sine_form,
    integrate_contour,
    reciprocal_gamma_via_contour,
)
from hermitia.quadrature import DEFAULT_QUAD, resolve_radius

SQRT_PI = math.sqrt(math.pi)


def g_ref(z):
    return complex(mpmath.gamma(mpmath.mpc(z)))


# ---------------------------------------------------------------- paths

def test_c1_shape():
    path = build_c1(0.1, 10)
    assert len(path.segments) == 3
    assert path.start == 10 and path.end == -10
    assert path.segments[0].end == 0.1
    assert abs(path.segments[2].start + 0.1) < 1e-15
    z, _, arg = path.segments[1].sample(0.5, 0.5)
    assert abs(z - 0.1j) < 1e-16 and arg == math.pi / 2


def test_loop_shape_and_branch():
    path = build_c_loop(0.1, 10)
    first, arc, last = path.segments
    assert len(path.segments) == 3
    assert first.end == last.start == 0.1
    assert last.end_arg() - first.start_arg() == 2 * math.pi
    for a, b in zip(path.segments, path.segments[1:]):
        assert a.end_arg() == b.start_arg()
    tau = 0.37 + 0.2j
    zin, _, ain = first.sample(0.5, 0.5)
    zout, _, aout = last.sample(0.5, 0.5)
    assert zin == zout
    incoming = cmath.exp(tau * complex(math.log(abs(zin)), ain))
    outgoing = cmath.exp(tau * complex(math.log(abs(zout)), aout))
    assert abs(outgoing - incoming * cmath.exp(2j * math.pi * tau)) < 1e-15


@pytest.mark.parametrize("eps,R", [(0.0, 10), (1.0, 10), (0.1, 0.5), (-0.1, 10)])
def test_path_validation(eps, R):
    with pytest.raises(DomainError):
        build_c1(eps, R)
    with pytest.raises(DomainError):
        build_c_loop(eps, R)


def test_broken_path_rejected():
    with pytest.raises(DomainError):
        ContourPath((ContourSegment.line(5, 1, 0.0), ContourSegment.line(0.5, -5, math.pi)), 0.5, 5)
    with pytest.raises(DomainError):
        ContourPath((ContourSegment.line(5, 1, 0.0), ContourSegment.arc(1, 0.1, 3.0)), 0.5, 5)


def test_residue_on_circle():
    circle = ContourPath((ContourSegment.arc(1.0, 0.0, 2 * math.pi),), 0.5, 1.0)
    assert abs(integrate_contour(lambda z, a: 1 / z, circle) - 2j * math.pi) < 1e-14


def test_c1_entire_integrands():
    path = build_c1(0.1, resolve_radius(DEFAULT_QUAD))
    odd = integrate_contour(lambda z, a: z * cmath.exp(-z * z), path)
    even = integrate_contour(lambda z, a: cmath.exp(-z * z), path)
    assert abs(odd) <= 1e-10
    assert abs(even + SQRT_PI) <= 1e-9


# ---------------------------------------------------------------- C1 moments

def test_c1_examples():
    assert abs(contour_moment_c1(0, 0.5) + math.pi / 2) <= 1e-9
    assert abs(contour_moment_c1(2, 0.5) + SQRT_PI / 4 * 15 * SQRT_PI / 8) <= 1e-9


@pytest.mark.parametrize("tau", [-0.5, 0.5, 1.3, 0.5 + 0.5j])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_odd_moments_vanish(tau, n):
    assert abs(contour_moment_c1(n, tau)) <= 1e-9


@pytest.mark.parametrize("tau", [-0.5, 0.5, 1.3])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_even_moments(tau, n):
    g = gamma(2 * n + tau + 1)
    expected = -SQRT_PI / 4 ** n * g / math.factorial(n)
    assert abs(contour_moment_c1(2 * n, tau) - expected) <= 1e-8 * abs(g)


C1_EPS_TAUS = [0.5, -0.5]


@pytest.mark.parametrize("tau", C1_EPS_TAUS)
def test_c1_epsilon_independence(tau):
    vals = [contour_moment_c1(0, tau, epsilon=e) for e in (0.05, 0.1, 0.2)]
    assert max(abs(v - vals[1]) for v in vals) <= 1e-9 * abs(vals[1])


@pytest.mark.parametrize("tau,n", [(0.5, 0), (-0.5, 0), (1.3, 2)])
def test_c1_epsilon_dependence_rate(tau, n):
    # |zeta| in the integrand breaks holomorphy; for even n the limit is approached like eps^(n + tau + 1)
    limit = contour_moment_c1(n, tau)
    d1 = abs(contour_moment_c1(n, tau, epsilon=0.01) - limit)
    d2 = abs(contour_moment_c1(n, tau, epsilon=0.005) - limit)
    assert math.log2(d1 / d2) == pytest.approx(n + tau + 1, abs=0.1)


@pytest.mark.parametrize("tau", [-0.5, 0.5, 1.3, 0.5 + 0.5j])
@pytest.mark.parametrize("n", [0, 2, 3])
def test_c1_radius_stability(tau, n):
    R = resolve_radius(DEFAULT_QUAD, n + 2 * complex(tau).real)
    a = contour_moment_c1(n, tau)
    b = contour_moment_c1(n, tau, QuadratureConfig(truncation_radius=R + 2))
    assert abs(a - b) <= 1e-10 * max(abs(b), 1.0)


def test_contour_envelope():
    with pytest.raises(NonConvergence):
        contour_moment_c1(0, 0.5 + 2.5j)
    with pytest.raises(NonConvergence):
        gamma_via_loop(0.5 - 3j)


# ---------------------------------------------------------------- pairing

def test_apply_via_contour_examples():
    assert abs(apply_via_contour(0.5, Polynomial([1])) - 1) <= 1e-8
    assert abs(apply_via_contour(0.5, Polynomial.monomial(2)) - 15 / 16) <= 1e-8
    for tau in (-0.5, 0.5, 1.3):
        assert abs(apply_via_contour(tau, Polynomial.monomial(3))) <= 1e-9


@pytest.mark.parametrize("tau", [-0.5, 0.5, 1.3])
def test_apply_via_contour_consistency(tau):
    F = GeneralizedHermiteFunctional(tau)
    for n in range(9):
        mono = Polynomial.monomial(n)
        exact = F.apply(mono)
        assert abs(apply_via_contour(tau, mono) - exact) <= 1e-7 * max(1, abs(exact))
    p = Polynomial([2, -1, 0.5, 0, 1])
    assert abs(apply_via_contour(tau, p) - F.apply(p)) <= 1e-7 * max(1, abs(F.apply(p)))


@pytest.mark.parametrize("tau", [0, 2, -1])
def test_apply_via_contour_integer(tau):
    with pytest.raises(DomainError):
        apply_via_contour(tau, Polynomial([1]))


# ---------------------------------------------------------------- Gamma

def test_loop_examples():
    assert abs(gamma_via_loop(0.5) - SQRT_PI / 2) <= 1e-8
    assert abs(gamma_via_loop(1.3) - 1.1667119051981603) <= 1e-8
    assert abs(gamma_via_loop(-0.5) - SQRT_PI) <= 1e-8


@pytest.mark.parametrize("tau", [-1.5, -2.5 + 0.3j, 0.3, 2.7, 3.7 - 1.5j, 0.5 + 1.9j])
def test_loop_against_oracle(tau):
    ref = g_ref(tau + 1)
    assert abs(gamma_via_loop(tau) - ref) <= 1e-12 * abs(ref)


@pytest.mark.parametrize("tau", [-0.5, 0.5, 1.3, 0.3 + 0.4j])
def test_loop_epsilon_independence(tau):
    vals = [gamma_via_loop(tau, epsilon=e) for e in (0.05, 0.1, 0.2)]
    assert max(abs(v - vals[1]) for v in vals) <= 1e-9 * abs(vals[1])


def test_loop_radius_stability():
    R = resolve_radius(DEFAULT_QUAD, 2 * 1.3)
    a = gamma_via_loop(1.3)
    b = gamma_via_loop(1.3, QuadratureConfig(truncation_radius=R + 2))
    assert abs(a - b) <= 1e-10 * abs(b)


@pytest.mark.parametrize("tau", [0, 1, -2, 3 + 1e-10])
def test_loop_integer_rejected(tau):
    with pytest.raises(DomainError):
        gamma_via_loop(tau)
    with pytest.raises(DomainError):
        gamma_via_sine_form(tau)


def test_sine_examples():
    assert abs(gamma_via_sine_form(0.5) - SQRT_PI / 2) <= 1e-8
    assert abs(gamma_via_sine_form(2.7) - g_ref(3.7)) <= 1e-8 * abs(g_ref(3.7))
    assert abs(g_ref(3.7) - 4.1706517837966) < 1e-10


@pytest.mark.parametrize("tau", [-1.5, -0.5, 0.3, 1.3, 0.5 + 0.5j])
def test_sine_against_oracle(tau):
    ref = g_ref(tau + 1)
    assert abs(gamma_via_sine_form(tau) - ref) <= 1e-12 * abs(ref)


def test_reciprocal_examples():
    assert abs(reciprocal_gamma_via_contour(0.5) - 2 / SQRT_PI) <= 1e-7
    assert abs(reciprocal_gamma_via_contour(0) - 1) <= 1e-7
    assert abs(reciprocal_gamma_via_contour(-1)) <= 1e-7


@pytest.mark.parametrize("tau", [-3, -2, -0.5, 1, 2, 0.3, 1.3, 2.7, 0.5 - 0.5j])
def test_reciprocal_against_oracle(tau):
    ref = complex(mpmath.rgamma(mpmath.mpc(tau) + 1))
    assert abs(reciprocal_gamma_via_contour(tau) - ref) <= 1e-12 * max(1, abs(ref))
