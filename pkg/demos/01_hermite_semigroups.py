"""Hermite expansions and the two semigroups acting on them.

Every expansion here is a finite combination of normalized Hermite
functions, so both semigroups act diagonally: the Ornstein-Uhlenbeck
semigroup scales a mode of order n by e^{-tn}, its subordinated cousin by
e^{-t sqrt(n)}. The demo evaluates both through their integral
representations (Mehler kernel, subordination in time) and compares with
the exact spectral answer.
"""

import math

import numpy as np

from gvs import (
    HermiteExpansion,
    make_context,
    ou_apply,
    ou_apply_kernel,
    ph_apply_subordination,
    ph_derivative,
)

ctx = make_context(dim=1)
x = np.linspace(-2.0, 2.0, 5)

print("single mode of order 3, t = 0.7")
f = HermiteExpansion.single((3,))
t = 0.7
exact_ou = math.exp(-3 * t) * f(x)
exact_ph = math.exp(-math.sqrt(3) * t) * f(x)
print("  OU kernel quadrature error :", np.max(np.abs(ou_apply_kernel(f, t, x, ctx) - exact_ou)))
print("  subordination error        :", np.max(np.abs(ph_apply_subordination(f, t, x, ctx) - exact_ph)))
print("  spectral paths are exact   :",
      np.allclose(ou_apply(f, t)(x), exact_ou) and np.allclose(ph_derivative(f, t)(x), exact_ph))

print()
print("a mixed expansion decays mode by mode")
g = HermiteExpansion.single((1,)) + HermiteExpansion.single((4,), -0.5)
for t in (0.1, 1.0, 4.0):
    vals = ph_derivative(g, t)(x)
    print(f"  t = {t:4.1f}   sup |P_t g| on the window = {np.max(np.abs(vals)):.6f}")

print()
print("time derivatives pick up powers of sqrt(n): d/dt P_t h_4 = -2 P_t h_4")
h4 = HermiteExpansion.single((4,))
d1 = ph_derivative(h4, 1.0, k=1)(x)
p0 = ph_derivative(h4, 1.0)(x)
print("  max |d1 + 2 p0| =", np.max(np.abs(d1 + 2.0 * p0)))

print()
print("two dimensions work the same way, order = |nu|")
ctx2 = make_context(dim=2, nodes_per_axis=32)
h = HermiteExpansion.single((2, 1))
pts = np.array([[0.3, -0.4], [1.1, 0.2]])
got = ou_apply_kernel(h, 0.5, pts, ctx2)
want = math.exp(-3 * 0.5) * h(pts)
print("  OU kernel error at |nu| = 3:", np.max(np.abs(got - want)))
