"""
The generalized Hermite functional
==================================

G_H(tau) is a symmetric, monic linear functional on polynomials fixed by
its moments. tau = 0 is the classical Gaussian weight.
"""

# %%
from hermitia import (
    GeneralizedHermiteFunctional,
    Polynomial,
    moment_via_relation,
    second_order_residual,
    symmetrize,
)

F = GeneralizedHermiteFunctional(0.5)
print([F.moment(n).real for n in range(7)])

# %%
# The moments are the Gaussian ones reweighted by (tau+1)_n / n!.
for n in (2, 4, 6):
    print(n, F.moment(n).real, moment_via_relation(0.5, n).real)

# %%
# Pairing with a polynomial only sees its even part.
p = Polynomial([1.0, 4.0, -2.0, 7.0])
print("<G_H(0.5), p> =", F.apply(p).real)

# %%
# The moments satisfy a second-order functional equation; its residual
# vanishes moment by moment (shown relative to the moments involved).
print(max(abs(second_order_residual(F, n)) / abs(F.moment(n + 2) * (n + 2)) for n in range(0, 20, 2)))

# %%
# Any function splits as U(|x|) + x V(|x|).
U, V = symmetrize(lambda x: x**3 + x**2 + 1)
print(U(2.0), V(2.0), U(2.0) + 2.0 * V(2.0))
