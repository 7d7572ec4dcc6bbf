"""The one-half stable density behind the subordinated semigroup.

g(t, s) = t / (2 sqrt(pi)) * e^{-t^2 / 4s} * s^{-3/2} turns the
Ornstein-Uhlenbeck semigroup into its square-root-spectrum version. Its
time derivatives stay integrable in s with total variation growing like
t^{-k}, which is the engine behind every derivative estimate downstream.
The demo checks the density normalizes, differentiates it symbolically,
and reproduces two closed-form families of integrals.
"""

import numpy as np

from gvs import (
    StableDerivative,
    density,
    derivative_terms,
    moment,
    moment_constant,
    moment_quadrature,
    tv_derivative_bound,
)

print("g(t, .) is a probability density in s (t = 1.3):")
print("  quadrature mass =", moment_quadrature(0, 1.3))

print()
print("symbolic derivative table: d^k/dt^k g = (sum a_ij t^i s^-j) g")
for k in (1, 2, 3):
    terms = derivative_terms(k)
    pretty = " + ".join(f"({a}) t^{i} s^-{j}" for (i, j), a in sorted(terms.items()))
    print(f"  k = {k}:  {pretty}")
print("every exponent pair obeys 2j - i = k; the table is exact rational data")

print()
print("evaluating the derivative directly, d^2/dt^2 g at (t, s) = (1.1, 0.4):")
d2 = StableDerivative(2)
print("  value =", d2(1.1, 0.4), "   density there =", density(1.1, 0.4))

print()
print("negative-moment integrals have the closed form C_m / t^{2m}:")
for m in (1, 2, 3):
    t = 0.8
    got = moment_quadrature(m, t)
    print(f"  m = {m}: quadrature {got:.12e}   closed form {moment(m, t):.12e}"
          f"   (C_{m} = {moment_constant(m):g})")
print("C_1 = 2 and C_2 = 12 are the two constants quoted in the estimates")

print()
print("total variation of the k-th derivative scales like t^-k:")
print("(t^k * TV is one constant per k, so TV <= c_k / t^k everywhere)")
for k in (1, 2, 4):
    row = [t**k * tv_derivative_bound(k, t) for t in (0.1, 1.0, 10.0)]
    print(f"  k = {k}:  t^k * TV at t = 0.1, 1, 10  ->  {row[0]:.6f}, {row[1]:.6f}, {row[2]:.6f}")
