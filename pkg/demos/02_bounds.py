"""Evaluate the weighted trapezoid bounds and see how tight they are.

Run: python demos/02_bounds.py
"""

from hhcert import HolderPair, bound_t21, bound_t22, bound_t24, midpoint_bound, pow_n
from hhcert.bounds import identity_residual
from hhcert.errors import HypothesisFailed
from hhcert.funcs import EXP, SIN, SQRT_CUBE, Interval

sq = pow_n(2)
unit = Interval(0, 1)

# The quantity being bounded is |((b-x) f(b) + (x-a) f(a))/(b-a) - mean of f|.
# The identity behind every bound writes it as an integral of f'; its
# residual should be at rounding level.
print("identity residual for x^2 at x = 0.3:", identity_residual(sq, unit, 0.3))

# Sweep x across [0, 1] and compare three bounds that need |f'|^q convex.
print("\n   x     lhs      T21      T22(p=2)  T24(q=2)")
for x in (0.0, 0.25, 0.5, 0.75, 1.0):
    r1 = bound_t21(sq, unit, x)
    r2 = bound_t22(sq, unit, x, HolderPair.from_p(2))
    r4 = bound_t24(sq, unit, x, 2)
    print(f"{x:5.2f}  {r1.lhs:.5f}  {r1.rhs:.5f}  {r2.rhs:.5f}   {r4.rhs:.5f}")

# At the midpoint the bounds become statements about the plain trapezoid
# rule.  exp has convex |f'|; sqrt_cube has concave |f'| = sqrt(x).
print()
for fn, variant, kw in ((EXP, "C21", {}), (EXP, "R21", {}), (EXP, "C23", {"q": 2}),
                        (SQRT_CUBE, "C24", {}), (SQRT_CUBE, "R22", {"q": 2})):
    rep = midpoint_bound(fn, unit, variant, **kw)
    extra = "" if rep.relaxed_rhs is None else f"  relaxed {rep.relaxed_rhs:.6f}"
    print(f"{fn.id:9s} {variant}: lhs {rep.lhs:.6f}  rhs {rep.rhs:.6f}{extra}  [{rep.verdict}]")

# Asking for a bound whose hypothesis fails raises, with the shape report
# attached; enforce=False records the verdict instead.
try:
    midpoint_bound(SIN, SIN.test_interval, "C21")
except HypothesisFailed as exc:
    print("\nrefused:", exc)
rep = midpoint_bound(SIN, SIN.test_interval, "C21", enforce=False)
print("recorded anyway:", rep.verdict, "admissible =", rep.admissible)
