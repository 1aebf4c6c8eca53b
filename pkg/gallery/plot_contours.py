"""
Contour representations
=======================

In the complex plane the multivalued power zeta^tau has to follow the path.
Along the loop that starts at +infinity, circles the origin, and returns,
zeta^tau picks up e^(2 pi i tau). That gives three more formulas for Gamma.
"""

# %%
import cmath
import math

from hermitia import (
    build_c_loop,
    contour_moment_c1,
    gamma,
    gamma_via_loop,
    gamma_via_sine_form,
    reciprocal_gamma,
    reciprocal_gamma_via_contour,
)

path = build_c_loop(0.1, 10.0)
for seg in path.segments:
    print(seg.kind, seg.start, seg.end, seg.start_arg(), seg.end_arg())

# %%
for tau in (-1.5, -0.5, 0.3, 1.3, 0.5 + 0.5j):
    print(tau, abs(gamma_via_loop(tau) / gamma(tau + 1) - 1), abs(gamma_via_sine_form(tau) / gamma(tau + 1) - 1))

# %%
# The reciprocal form stays valid at integers, where 1/Gamma vanishes.
for tau in (-2, -1, 0, 1, 0.5):
    print(tau, reciprocal_gamma_via_contour(tau), reciprocal_gamma(tau + 1))

# %%
# The C1 path (real axis with a small upper detour) uses |zeta|, which is not
# holomorphic, so the detour radius matters. The moments approach their limit
# as the radius shrinks.
tau = 0.5
limit = -math.sqrt(math.pi) * gamma(tau + 1)
for eps in (0.2, 0.1, 0.05, 1e-3, 1e-24):
    print(f"eps={eps:g}: deviation {abs(contour_moment_c1(0, tau, epsilon=eps) - limit):.3e}")

# %%
# The loop integrand, in contrast, is holomorphic off the cut.
print([gamma_via_loop(0.5, epsilon=e) for e in (0.05, 0.1, 0.2)], cmath.sqrt(math.pi) / 2)
