"""
Hermite functions of non-integer degree
=======================================

H_tau(x) interpolates the Hermite polynomials in the degree. This script
tabulates a few degrees, checks the polynomial case, and shows why the
evaluator switches regimes on the real axis.
"""

# %%
# Integer degrees reproduce the classical polynomials exactly.
import numpy as np

from hermitia import hermite, hermite_1f1_form, hermite_asymptotic, hermite_derivative

xs = np.linspace(0.0, 3.0, 7)
print("x      H_3(x)    8x^3-12x")
for x in xs:
    print(f"{x:4.1f} {hermite(3, x).real:10.4f} {8 * x**3 - 12 * x:10.4f}")

# %%
# Between integers the degree varies smoothly.
for tau in (2.0, 2.25, 2.5, 2.75, 3.0):
    row = " ".join(f"{hermite(tau, x).real:9.4f}" for x in (0.5, 1.0, 1.5))
    print(f"tau={tau:4.2f}: {row}")

# %%
# The confluent hypergeometric form adds two terms of size ~e^(x^2) that
# cancel. By x = 5 it has lost most of its digits, which is why hermite()
# continues the ODE inward from the large-x expansion instead.
for x in (1.0, 3.0, 5.0):
    direct = hermite_1f1_form(0.5, x)
    good = hermite(0.5, x)
    print(f"x={x}: 1F1 form {direct.real:.15g}  dispatcher {good.real:.15g}")

# %%
# For large x, H_tau(x) ~ (2x)^tau.
for x in (20.0, 50.0):
    print(x, hermite(1.3, x).real / (2 * x) ** 1.3, hermite_asymptotic(1.3, x).real)

# %%
# The derivative lowers the degree: H_tau' = 2 tau H_(tau-1).
h = 1e-6
fd = (hermite(0.5, 0.8 + h) - hermite(0.5, 0.8 - h)) / (2 * h)
print("derivative", hermite_derivative(0.5, 0.8).real, "finite difference", fd.real)
