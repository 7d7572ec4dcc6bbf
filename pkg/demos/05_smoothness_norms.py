"""Gaussian smoothness norms of Besov and Triebel-Lizorkin type.

Both norms measure regularity through the decay of time derivatives of the
subordinated semigroup: t^{k - alpha} |d^k/dt^k P_t f| goes into a mixed
Luxemburg norm, time-then-space for the Besov flavor and space-then-time
for the Triebel-Lizorkin one. The demo computes both for a few functions,
shows the value is stable in the auxiliary derivative order k, checks an
inclusion between orders, and runs the seminorm interpolation bound with a
genuinely variable pair of exponents.
"""

import numpy as np

from gvs import (
    HermiteExpansion,
    SmoothnessParams,
    besov_norm,
    inclusion_check_besov,
    interpolation_check,
    make_constant,
    make_context,
    make_gaussian_family,
    make_time_family,
    triebel_norm,
)

# a lighter grid than the verification default keeps the demo quick
ctx = make_context(dim=1, n_panels=150)

f = HermiteExpansion.single((2,)) + HermiteExpansion.single((5,), -0.4)
p_var = make_gaussian_family(2.0, 1.0)
q_var = make_time_family(2.0, 2.5)

print("Besov and Triebel-Lizorkin totals, alpha = 0.6, variable (p, q)")
sp = SmoothnessParams(alpha=0.6, p=p_var, q=q_var)
b = besov_norm(f, sp, ctx)
t = triebel_norm(f, sp, ctx)
print(f"  besov   total {b.total:.8f}  (lp part {b.lp_norm:.8f}, seminorm {b.seminorm:.8f})")
print(f"  triebel total {t.total:.8f}  (lp part {t.lp_norm:.8f}, seminorm {t.seminorm:.8f})")

print()
print("the derivative order k is auxiliary: changing it moves the seminorm only")
print("within a bounded band (different values, same finiteness and scale)")
for k in (1, 2, 3):
    sp_k = SmoothnessParams(alpha=0.6, p=p_var, q=q_var, k=k)
    print(f"  k = {k}:  besov seminorm = {besov_norm(f, sp_k, ctx).seminorm:.8f}")

print()
print("for a single mode the two scales collapse to the same number")
h3 = HermiteExpansion.single((3,))
sp1 = SmoothnessParams(alpha=0.5, p=p_var, q=q_var)
print(f"  besov {besov_norm(h3, sp1, ctx).total:.10f}"
      f"   triebel {triebel_norm(h3, sp1, ctx).total:.10f}")

print()
print("lowering the order can only shrink the seminorm (inclusion constant 1)")
rep = inclusion_check_besov(f, 0.9, 0.4, make_constant(2.0), make_constant(2.0),
                            p_var, ctx)
print(f"  alpha 0.9 -> 0.4:  source {rep.source_total:.8f}  target {rep.target_total:.8f}"
      f"  ratio {rep.ratio:.4f}")

print()
print("interpolation: the mixed-parameter seminorm sits under the endpoint product")
sp0 = SmoothnessParams(0.4, make_gaussian_family(1.6, 0.5), make_time_family(1.8, 2.6))
sp1 = SmoothnessParams(1.3, make_constant(2.8), make_time_family(2.2, 1.9))
rep = interpolation_check(f, sp0, sp1, 0.35, ctx)
print(f"  besov   {rep.lhs_besov:.8f}  <=  {rep.rhs_besov:.8f}")
print(f"  triebel {rep.lhs_tl:.8f}  <=  {rep.rhs_tl:.8f}   ok = {rep.ok}")
