"""Trapezoid integration with a guaranteed error bound.

Run: python demos/04_certified_quadrature.py
"""

import math

from hhcert import Partition, best_certificate, error_bound_p41, integrate_adaptive, trapezoid_sum
from hhcert.errors import BudgetExceeded
from hhcert.funcs import EXP, SQRT_CUBE, Interval, pow_n

sq = pow_n(2)
halves = Partition((0, 0.5, 1))

# A fixed partition: the true error of the trapezoid sum never exceeds the
# certificate.
t = trapezoid_sum(sq, halves)
cert = error_bound_p41(sq, halves, p=2)
print(f"x^2 on {{0, 1/2, 1}}: T = {t}, |error| = {abs(t - 1 / 3):.6f}, P41 bound = {cert.total:.6f}")

# best_certificate tries every rule whose hypothesis holds and keeps the
# smallest bound per panel.
best = best_certificate(sq, halves)
print("best per panel:", [(pb.theorem_used.value, round(pb.bound, 6)) for pb in best.per_interval])

# Adaptive: keep bisecting the panel with the largest bound until the
# certified total is at most eps.
print()
for eps in (1e-2, 1e-3, 1e-4):
    value, cert, d = integrate_adaptive(SQRT_CUBE, Interval(0, 1), eps)
    print(f"eps={eps:g}: nodes {len(d):4d}  value {value:.8f}  cert {cert.total:.2e}  "
          f"true error {abs(value - 4 / 15):.2e}")

# The nodes cluster where |f'| changes fastest.
d = integrate_adaptive(SQRT_CUBE, Interval(0, 1), 1e-3)[2]
print("first widths:", [f"{hi - lo:.4f}" for lo, hi in d.panels[:4]])

# A node budget that is too small still yields a partial, certified answer.
try:
    integrate_adaptive(EXP, Interval(0, 1), 1e-7, max_nodes=100)
except BudgetExceeded as exc:
    print(f"\nbudget hit: value {exc.value:.8f} with certificate {exc.certificate.total:.2e}, "
          f"true error {abs(exc.value - (math.e - 1)):.2e}")
