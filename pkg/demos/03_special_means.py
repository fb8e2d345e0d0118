"""Inequalities between the arithmetic and logarithmic means.

Run: python demos/03_special_means.py
"""

import math

from hhcert import arithmetic_mean, gen_log_mean_pow, logarithmic_mean, prop31_check, prop32_check

a, b = 1.0, 2.0
print(f"A(1, 2) = {arithmetic_mean(a, b)}")
print(f"L(1, 2) = {logarithmic_mean(a, b):.12f}  (1/ln 2 = {1 / math.log(2):.12f})")
for n in (2, 3, -2):
    print(f"L_{n}^{n}(1, 2) = {gen_log_mean_pow(a, b, n):.12f}")

# A(a^n, b^n) and L_n^n(a, b) are the trapezoid value and the mean value of
# x^n, so the midpoint bounds turn into inequalities between means.
print()
for n in (2, 3, 4):
    for rep in prop31_check(a, b, n, p=2, q_b=1):
        print(f"n={n} {rep.theorem_id.value}: |A - L_n^n| = {rep.lhs:.6f} <= {rep.rhs:.6f}")

# The same with 1/x: A(1/a, 1/b) against 1/L(a, b).  The Hoelder constant
# tends to 1/2 as p -> 1 and as p -> infinity, and dips below it in between.
print()
for p in (1.5, 2, 5, 50):
    first, second = prop32_check(a, b, p=p, q_b=1)
    print(f"p={p:<4g} lhs {first.lhs:.6f}  Hoelder form {first.rhs:.6f}  power form {second.rhs:.6f}")
