"""Weighted-trapezoid identity and Hermite-Hadamard type bound evaluators.

Every bound returns a :class:`BoundReport` holding both sides of the
inequality, so callers can check ``lhs <= rhs`` themselves. The quantity
bounded throughout is

    | ((b - x) f(b) + (x - a) f(a)) / (b - a) - mean(f on [a, b]) |

for a point ``x`` in ``[a, b]``; at the midpoint it is the plain trapezoid
deviation.  Each bound is conditional on ``|f'|**q`` being convex or concave;
that hypothesis is tested with :func:`~hhcert.analysis.derivative_power_shape`
and recorded on the report.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .analysis import (Shape, ShapeReport, classify_shape, derivative_power_shape, integrate,
                       reference_integral)
from .errors import DomainViolation, HypothesisFailed, InvalidExponent
from .funcs import Fn1D, Interval, exact_integral

TOL_VERIFY = 1e-9
ORACLE_TOL = 1e-12


class TheoremId(str, enum.Enum):
    T21 = "T21"
    T22 = "T22"
    T23 = "T23"
    T24 = "T24"
    T25 = "T25"
    C21 = "C21"
    C22 = "C22"
    C23 = "C23"
    C24 = "C24"
    R21 = "R21"
    R22 = "R22"
    # special-means inequalities, see hhcert.means
    P31A = "P31a"
    P31B = "P31b"
    P32A = "P32a"
    P32B = "P32b"


MIDPOINT_VARIANTS = (TheoremId.C21, TheoremId.C22, TheoremId.C23, TheoremId.C24,
                     TheoremId.R21, TheoremId.R22)


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents with ``1/p + 1/q = 1``."""

    p: float
    q: float

    def __post_init__(self):
        if not self.p > 1 or not math.isfinite(self.p):
            raise InvalidExponent(f"Hoelder exponent p must be finite and > 1, got {self.p}")
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise InvalidExponent(f"p = {self.p} and q = {self.q} are not conjugate")

    @classmethod
    def from_p(cls, p: float) -> "HolderPair":
        p = float(p)
        if not p > 1:
            raise InvalidExponent(f"Hoelder exponent p must be > 1, got {p}")
        return cls(p, p / (p - 1.0))

    @classmethod
    def from_q(cls, q: float) -> "HolderPair":
        q = float(q)
        if not q > 1:
            raise InvalidExponent(f"Hoelder exponent q must be > 1, got {q}")
        return cls(q / (q - 1.0), q)


@dataclass(frozen=True)
class BoundReport:
    """One application of a bound.

    ``relaxed_rhs`` is set for C22 and C23, whose corollaries state a
    second, looser right-hand side next to the tight one in ``rhs``.
    """

    theorem_id: TheoremId
    lhs: float
    rhs: float
    slack: float
    hypothesis: Optional[ShapeReport]
    required: Shape
    x: Optional[float] = None
    p: Optional[float] = None
    q: Optional[float] = None
    relaxed_rhs: Optional[float] = None

    @property
    def admissible(self) -> bool:
        return self.hypothesis is not None and self.hypothesis.admits(self.required)

    @property
    def holds(self) -> bool:
        return self.slack >= -TOL_VERIFY

    @property
    def verdict(self) -> str:
        return self.hypothesis.verdict if self.hypothesis is not None else "Unchecked"


def _report(tid, lhs, rhs, hyp, required, enforce, **params) -> BoundReport:
    rep = BoundReport(theorem_id=tid, lhs=lhs, rhs=rhs, slack=rhs - lhs, hypothesis=hyp,
                      required=required, **params)
    if enforce and not rep.admissible:
        raise HypothesisFailed(
            f"{tid.value}: |f'|^q must be {required.value}, grid test says {hyp.verdict}", hyp)
    return rep


def _check_x(iv: Interval, x: float) -> float:
    x = float(x)
    if not iv.a <= x <= iv.b:
        raise DomainViolation(f"x = {x} outside [{iv.a}, {iv.b}]")
    return x


def _check_q(q: float, strict: bool) -> float:
    q = float(q)
    if not math.isfinite(q) or (q <= 1 if strict else q < 1):
        op = ">" if strict else ">="
        raise InvalidExponent(f"exponent q must be {op} 1, got {q}")
    return q


def mean_integral(fn: Fn1D, iv: Interval) -> float:
    """``(1/(b-a)) * integral of f over [a, b]``, exact when possible."""
    fn.check_interval(iv)
    if fn.has_antiderivative:
        total = exact_integral(fn, iv)
    else:
        total = reference_integral(fn, iv, tol=ORACLE_TOL)
    return total / iv.length


def weighted_difference(fn: Fn1D, iv: Interval, x: float) -> float:
    """Signed ``((b-x) f(b) + (x-a) f(a)) / (b-a) - mean integral``."""
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    return ((b - x) * fn.f(b) + (x - a) * fn.f(a)) / (b - a) - mean_integral(fn, iv)


def lhs_weighted(fn: Fn1D, iv: Interval, x: float) -> float:
    return abs(weighted_difference(fn, iv, x))


def trapezoid_deviation(fn: Fn1D, iv: Interval) -> float:
    """``|(f(a) + f(b))/2 - mean integral|``."""
    return abs(0.5 * (fn.f(iv.a) + fn.f(iv.b)) - mean_integral(fn, iv))


def identity_residual(fn: Fn1D, iv: Interval, x: float, tol: float = 1e-10) -> float:
    """Gap between the weighted difference and its integral representation.

    The right-hand side is

        (x-a)^2/(b-a) * int_0^1 (t-1) f'(t x + (1-t) a) dt
      + (b-x)^2/(b-a) * int_0^1 (1-t) f'(t x + (1-t) b) dt

    with both integrals taken by adaptive Simpson at tolerance ``tol``.
    """
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    side1 = weighted_difference(fn, iv, x)
    side2 = 0.0
    if x > a:
        left, _ = integrate(lambda t: (t - 1.0) * fn.df(t * x + (1.0 - t) * a), 0.0, 1.0, tol)
        side2 += (x - a) ** 2 / (b - a) * left
    if x < b:
        right, _ = integrate(lambda t: (1.0 - t) * fn.df(t * x + (1.0 - t) * b), 0.0, 1.0, tol)
        side2 += (b - x) ** 2 / (b - a) * right
    return abs(side1 - side2)


def hh_classic_check(fn: Fn1D, iv: Interval) -> tuple[float, float, float]:
    """``(f(mid), mean integral, (f(a)+f(b))/2)`` for convex ``f``.

    Raises:
        HypothesisFailed: if ``f`` is not convex on the sample grid.
    """
    fn.check_interval(iv)
    hyp = classify_shape(fn.f, iv)
    if not hyp.admits(Shape.CONVEX):
        raise HypothesisFailed(f"{fn.id} is not convex on [{iv.a}, {iv.b}]", hyp)
    return fn.f(iv.mid), mean_integral(fn, iv), 0.5 * (fn.f(iv.a) + fn.f(iv.b))


def bound_t21(fn: Fn1D, iv: Interval, x: float, enforce: bool = True) -> BoundReport:
    """Bound from convexity of ``|f'|``, using ``|f'|`` at ``a``, ``x``, ``b``."""
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    hyp = derivative_power_shape(fn, iv, 1.0)
    da, dx, db = abs(fn.df(a)), abs(fn.df(x)), abs(fn.df(b))
    rhs = ((x - a) ** 2 * (dx + 2 * da) + (b - x) ** 2 * (dx + 2 * db)) / (6 * (b - a))
    return _report(TheoremId.T21, lhs_weighted(fn, iv, x), rhs, hyp, Shape.CONVEX, enforce, x=x)


def bound_t22(fn: Fn1D, iv: Interval, x: float, hp: HolderPair,
              enforce: bool = True) -> BoundReport:
    """Hoelder bound, gated on convexity of ``|f'|**q`` with ``q = p/(p-1)``."""
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    p, q = hp.p, hp.q
    hyp = derivative_power_shape(fn, iv, q)
    da, dx, db = abs(fn.df(a)) ** q, abs(fn.df(x)) ** q, abs(fn.df(b)) ** q
    const = (1.0 / (p + 1.0)) ** (1.0 / p) * 0.5 ** (1.0 / q)
    bracket = (x - a) ** 2 * (da + dx) ** (1.0 / q) + (b - x) ** 2 * (dx + db) ** (1.0 / q)
    rhs = const * bracket / (b - a)
    return _report(TheoremId.T22, lhs_weighted(fn, iv, x), rhs, hyp, Shape.CONVEX, enforce,
                   x=x, p=p, q=q)


def _jensen_const(q: float) -> float:
    # ((q-1)/(2q-1))^((q-1)/q), the L^p norm of (1-t) with p = q/(q-1)
    return ((q - 1.0) / (2.0 * q - 1.0)) ** ((q - 1.0) / q)


def bound_t23(fn: Fn1D, iv: Interval, x: float, q: float, enforce: bool = True) -> BoundReport:
    """Bound from concavity of ``|f'|**q`` (``q > 1``), sampling ``|f'|`` at
    the midpoints of ``[a, x]`` and ``[x, b]``."""
    q = _check_q(q, strict=True)
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    hyp = derivative_power_shape(fn, iv, q)
    bracket = ((x - a) ** 2 * abs(fn.df(0.5 * (a + x)))
               + (b - x) ** 2 * abs(fn.df(0.5 * (b + x))))
    rhs = _jensen_const(q) * bracket / (b - a)
    return _report(TheoremId.T23, lhs_weighted(fn, iv, x), rhs, hyp, Shape.CONCAVE, enforce,
                   x=x, q=q)


def bound_t24(fn: Fn1D, iv: Interval, x: float, q: float, enforce: bool = True) -> BoundReport:
    """Power-mean bound, gated on convexity of ``|f'|**q`` (``q >= 1``)."""
    q = _check_q(q, strict=False)
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    hyp = derivative_power_shape(fn, iv, q)
    da, dx, db = abs(fn.df(a)) ** q, abs(fn.df(x)) ** q, abs(fn.df(b)) ** q
    bracket = (x - a) ** 2 * (dx + 2 * da) ** (1.0 / q) + (b - x) ** 2 * (dx + 2 * db) ** (1.0 / q)
    rhs = 0.5 * (1.0 / 3.0) ** (1.0 / q) * bracket / (b - a)
    return _report(TheoremId.T24, lhs_weighted(fn, iv, x), rhs, hyp, Shape.CONVEX, enforce,
                   x=x, q=q)


def bound_t25(fn: Fn1D, iv: Interval, x: float, q: float = 1.0,
              enforce: bool = True) -> BoundReport:
    """Bound sampling ``|f'|`` at ``(x+2a)/3`` and ``(x+2b)/3``.

    ``q`` only selects the hypothesis: concavity of ``|f'|**q`` for some
    ``q >= 1`` implies concavity of ``|f'|``, which the bound needs.
    """
    q = _check_q(q, strict=False)
    x = _check_x(iv, x)
    a, b = iv.a, iv.b
    hyp = derivative_power_shape(fn, iv, q)
    bracket = ((x - a) ** 2 * abs(fn.df((x + 2 * a) / 3.0))
               + (b - x) ** 2 * abs(fn.df((x + 2 * b) / 3.0)))
    rhs = 0.5 * bracket / (b - a)
    return _report(TheoremId.T25, lhs_weighted(fn, iv, x), rhs, hyp, Shape.CONCAVE, enforce,
                   x=x, q=q)


def midpoint_bound(fn: Fn1D, iv: Interval, variant, p: Optional[float] = None,
                   q: Optional[float] = None, enforce: bool = True) -> BoundReport:
    """Trapezoid-deviation bounds obtained at ``x = (a+b)/2``.

    Variants and the exponent each needs:

    ========  =========================================================
    C21, R21  none; gated on convexity of ``|f'|``
    C22       ``p`` (or ``q``), Hoelder pair; ``|f'|**q`` convex
    C23       ``q >= 1``; ``|f'|**q`` convex
    R22       ``q > 1``; ``|f'|**q`` concave
    C24       optional ``q >= 1`` (default 1); ``|f'|**q`` concave
    ========  =========================================================

    R21 is the relaxation of C21 by convexity of ``|f'|`` and reproduces
    :func:`endpoint_derivative_bound`; R22 reproduces
    :func:`quarter_point_bound`.
    """
    tid = TheoremId(variant.upper() if isinstance(variant, str) else variant)
    if tid not in MIDPOINT_VARIANTS:
        raise ValueError(f"{tid.value} is not a midpoint variant")
    fn.check_interval(iv)
    a, b, m, h = iv.a, iv.b, iv.mid, iv.length
    da, dm, db = abs(fn.df(a)), abs(fn.df(m)), abs(fn.df(b))
    lhs = trapezoid_deviation(fn, iv)
    relaxed = None

    if tid in (TheoremId.C21, TheoremId.R21):
        hyp = derivative_power_shape(fn, iv, 1.0)
        required = Shape.CONVEX
        if tid is TheoremId.C21:
            rhs = h / 12.0 * (da + dm + db)
        else:
            rhs = endpoint_derivative_bound(fn, iv)
        params = {}
    elif tid is TheoremId.C22:
        if p is not None:
            hp = HolderPair.from_p(p)
        elif q is not None:
            hp = HolderPair.from_q(q)
        else:
            raise InvalidExponent("C22 needs p or q")
        qq = hp.q
        hyp = derivative_power_shape(fn, iv, qq)
        required = Shape.CONVEX
        const = (1.0 / (hp.p + 1.0)) ** (1.0 / hp.p) * 0.5 ** (1.0 / qq)
        rhs = h / 4.0 * const * ((da**qq + dm**qq) ** (1.0 / qq) + (db**qq + dm**qq) ** (1.0 / qq))
        relaxed = h / 2.0 * const * (da + db)
        params = {"p": hp.p, "q": qq}
    elif tid is TheoremId.C23:
        if q is None:
            raise InvalidExponent("C23 needs q")
        q = _check_q(q, strict=False)
        hyp = derivative_power_shape(fn, iv, q)
        required = Shape.CONVEX
        rhs = h / 8.0 * (1.0 / 3.0) ** (1.0 / q) * (
            (2 * da**q + dm**q) ** (1.0 / q) + (2 * db**q + dm**q) ** (1.0 / q))
        relaxed = 3.0 ** (1.0 - 1.0 / q) / 8.0 * h * (da + db)
        params = {"q": q}
    elif tid is TheoremId.R22:
        if q is None:
            raise InvalidExponent("R22 needs q")
        q = _check_q(q, strict=True)
        hyp = derivative_power_shape(fn, iv, q)
        required = Shape.CONCAVE
        rhs = quarter_point_bound(fn, iv, q)
        params = {"q": q}
    else:
        q = _check_q(1.0 if q is None else q, strict=False)
        hyp = derivative_power_shape(fn, iv, q)
        required = Shape.CONCAVE
        rhs = h / 8.0 * (abs(fn.df((5 * a + b) / 6.0)) + abs(fn.df((a + 5 * b) / 6.0)))
        params = {"q": q}

    return _report(tid, lhs, rhs, hyp, required, enforce, x=m, relaxed_rhs=relaxed, **params)


def endpoint_derivative_bound(fn: Fn1D, iv: Interval) -> float:
    """``(b-a)(|f'(a)| + |f'(b)|)/8``, the classical bound for convex ``|f'|``."""
    fn.check_interval(iv)
    return iv.length * (abs(fn.df(iv.a)) + abs(fn.df(iv.b))) / 8.0


def quarter_point_bound(fn: Fn1D, iv: Interval, q: float) -> float:
    """Classical bound for concave ``|f'|**q`` sampling the quarter points.

    ``((b-a)/4) ((q-1)/(2q-1))^((q-1)/q) (|f'((a+3b)/4)| + |f'((3a+b)/4)|)``
    """
    q = _check_q(q, strict=True)
    fn.check_interval(iv)
    a, b = iv.a, iv.b
    return (iv.length / 4.0) * _jensen_const(q) * (
        abs(fn.df((a + 3 * b) / 4.0)) + abs(fn.df((3 * a + b) / 4.0)))


def power_subadditivity(as_: Sequence[float], bs: Sequence[float], s: float) -> bool:
    """Check ``sum (a_k + b_k)^s <= sum a_k^s + sum b_k^s`` for ``0 <= s < 1``."""
    s = float(s)
    if not 0.0 <= s < 1.0:
        raise InvalidExponent(f"s must lie in [0, 1), got {s}")
    if len(as_) != len(bs):
        raise ValueError("sequences must have equal length")
    if any(v < 0 for v in as_) or any(v < 0 for v in bs):
        raise ValueError("entries must be nonnegative")
    lhs = math.fsum((u + v) ** s for u, v in zip(as_, bs))
    rhs = math.fsum(u**s for u in as_) + math.fsum(v**s for v in bs)
    return lhs <= rhs + 1e-12
