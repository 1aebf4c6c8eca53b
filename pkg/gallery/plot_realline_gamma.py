"""
Real-line integrals and the Gamma function
==========================================

Weighted integrals of x^z H_tau(x) e^(-x^2) over the half line have a
Gamma-function closed form. Setting z = tau gives an integral formula for
Gamma(tau + 1), and weighting polynomials gives the functional G_H(tau).
"""

# %%
import math

from hermitia import (
    GeneralizedHermiteFunctional,
    Polynomial,
    apply_via_quadrature,
    closed_form_weight_integral,
    gamma,
    gamma_via_realline,
    hermite_weight_integral,
)

for z, tau in [(0.5, -0.5), (1.0, 0.5), (2.3, 2.7)]:
    num = hermite_weight_integral(z, tau)
    print(f"z={z}, tau={tau}: quadrature {num.real:.15f}, closed form {closed_form_weight_integral(z, tau).real:.15f}")

# %%
# Re tau in (-1, 0) puts an integrable singularity at x = 0, which the
# tanh-sinh rule absorbs.
for tau in (-0.9, -0.5, 0.3, 1.5 + 0.5j):
    print(tau, gamma_via_realline(tau), gamma(tau + 1))

# %%
# The functional as a weighted integral.
tau = 1.3
p = Polynomial([1, 0, -3, 0, 1])
print(apply_via_quadrature(tau, p).real, GeneralizedHermiteFunctional(tau).apply(p).real)

# %%
# At integer degree the weight reduces to orthogonality of the Hermite
# polynomials against lower powers of the same parity.
print(abs(hermite_weight_integral(1, 3)), math.isclose(closed_form_weight_integral(1, 3).real, 0.0))
