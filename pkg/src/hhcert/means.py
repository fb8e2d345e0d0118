"""Special means of two reals and the trapezoid-type inequalities between them.

The inequalities come from applying the relaxed midpoint bounds (C22 and
C23 second lines) to ``f(x) = x**n`` and ``f(x) = 1/x``.  For ``x**n`` the
trapezoid value is ``A(a**n, b**n)`` and the mean integral is
``L_n(a, b)**n``; for ``1/x`` they are ``A(1/a, 1/b)`` and ``1/L(a, b)``.
"""

from __future__ import annotations

import math
import numbers

from .analysis import Shape, derivative_power_shape
from .bounds import BoundReport, HolderPair, TheoremId
from .errors import InvalidExponent, InvalidMeanInput
from .funcs import RECIP, Interval, pow_n


def arithmetic_mean(a: float, b: float) -> float:
    return 0.5 * (a + b)


def logarithmic_mean(a: float, b: float) -> float:
    """``(b - a) / (ln|b| - ln|a|)`` for ``|a| != |b|`` and ``ab != 0``."""
    if a == 0 or b == 0:
        raise InvalidMeanInput("logarithmic mean needs ab != 0")
    if abs(a) == abs(b):
        raise InvalidMeanInput("logarithmic mean needs |a| != |b|")
    return (b - a) / (math.log(abs(b)) - math.log(abs(a)))


def gen_log_mean_pow(a: float, b: float, n: int) -> float:
    """``L_n(a, b)**n = (b**(n+1) - a**(n+1)) / ((b - a)(n + 1))``.

    Only the n-th power is returned; taking the real n-th root would need a
    branch convention for negative brackets.
    """
    if not isinstance(n, numbers.Integral) or isinstance(n, bool):
        raise InvalidMeanInput(f"n must be an integer, got {n!r}")
    n = int(n)
    if n in (0, -1):
        raise InvalidMeanInput("n must not be 0 or -1")
    if a == b:
        raise InvalidMeanInput("generalized logarithmic mean needs a != b")
    if n + 1 < 0 and (a == 0 or b == 0):
        raise InvalidMeanInput("negative powers of 0 are undefined")
    return (b ** (n + 1) - a ** (n + 1)) / ((b - a) * (n + 1))


def _check_interval(a: float, b: float) -> Interval:
    if not a < b:
        raise InvalidMeanInput(f"need a < b, got a = {a}, b = {b}")
    if a <= 0 <= b:
        raise InvalidMeanInput(f"0 must not lie in [{a}, {b}]")
    return Interval(a, b)


def _check_qb(q_b: float) -> float:
    q_b = float(q_b)
    if not q_b >= 1 or not math.isfinite(q_b):
        raise InvalidExponent(f"q_b must be >= 1, got {q_b}")
    return q_b


def prop31_check(a: float, b: float, n: int, p: float,
                 q_b: float) -> tuple[BoundReport, BoundReport]:
    """Bounds on ``|A(a^n, b^n) - L_n^n(a, b)|``.

    Returns the Hoelder form (exponent ``p``, ``q = p/(p-1)``) and the
    power-mean form (exponent ``q_b``).  The hypothesis recorded on each
    report is convexity of ``|n x^(n-1)|**q`` on ``[a, b]``.
    """
    iv = _check_interval(a, b)
    if not isinstance(n, numbers.Integral) or abs(n) < 2:
        raise InvalidMeanInput(f"need an integer n with |n| >= 2, got {n!r}")
    hp = HolderPair.from_p(p)
    q_b = _check_qb(q_b)
    n = int(n)

    lhs = abs(arithmetic_mean(a**n, b**n) - gen_log_mean_pow(a, b, n))
    weight = abs(n) * (b - a) * arithmetic_mean(abs(a) ** (n - 1), abs(b) ** (n - 1))
    rhs_holder = weight * (1.0 / (hp.p + 1.0)) ** (1.0 / hp.p) * 0.5 ** (1.0 / hp.q)
    rhs_power = weight * 3.0 ** (1.0 - 1.0 / q_b) / 4.0

    fn = pow_n(n)
    first = BoundReport(TheoremId.P31A, lhs, rhs_holder, rhs_holder - lhs,
                        derivative_power_shape(fn, iv, hp.q), Shape.CONVEX,
                        x=iv.mid, p=hp.p, q=hp.q)
    second = BoundReport(TheoremId.P31B, lhs, rhs_power, rhs_power - lhs,
                         derivative_power_shape(fn, iv, q_b), Shape.CONVEX, x=iv.mid, q=q_b)
    return first, second


def prop32_check(a: float, b: float, p: float, q_b: float) -> tuple[BoundReport, BoundReport]:
    """Bounds on ``|A(1/a, 1/b) - 1/L(a, b)|``; same two forms as
    :func:`prop31_check` with ``f(x) = 1/x``."""
    iv = _check_interval(a, b)
    hp = HolderPair.from_p(p)
    q_b = _check_qb(q_b)

    lhs = abs(arithmetic_mean(1.0 / a, 1.0 / b) - 1.0 / logarithmic_mean(a, b))
    weight = (b - a) * arithmetic_mean(abs(a) ** -2, abs(b) ** -2)
    rhs_holder = weight * (1.0 / (hp.p + 1.0)) ** (1.0 / hp.p) * 0.5 ** (1.0 / hp.q)
    rhs_power = weight * 3.0 ** (1.0 - 1.0 / q_b) / 4.0

    first = BoundReport(TheoremId.P32A, lhs, rhs_holder, rhs_holder - lhs,
                        derivative_power_shape(RECIP, iv, hp.q), Shape.CONVEX,
                        x=iv.mid, p=hp.p, q=hp.q)
    second = BoundReport(TheoremId.P32B, lhs, rhs_power, rhs_power - lhs,
                         derivative_power_shape(RECIP, iv, q_b), Shape.CONVEX, x=iv.mid, q=q_b)
    return first, second
