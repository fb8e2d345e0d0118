"""Reference integration and numerical convexity/concavity classification.

The integrator here is adaptive Simpson, a different rule family from the
trapezoid sums being certified, so it can serve as an independent oracle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainViolation, NoConvergence
from .funcs import Fn1D, Interval

DEFAULT_GRID = 65
DEFAULT_TOL = 1e-10
DEFAULT_MAX_EVALS = 2**20


class Shape(enum.Enum):
    CONVEX = "Convex"
    CONCAVE = "Concave"
    BOTH = "Both"
    NEITHER = "Neither"


@dataclass(frozen=True)
class ShapeReport:
    """Outcome of the pairwise midpoint test.

    ``worst_violation`` is the largest observed excess for the reported
    verdict: ``g(mid) - avg`` for Convex, ``avg - g(mid)`` for Concave, the
    larger of the two for Both, and the smaller of the two for Neither.
    Non-positive values mean the verdict holds with margin.
    """

    shape: Shape
    worst_violation: float
    samples: int

    def admits(self, required: Shape) -> bool:
        return self.shape is Shape.BOTH or self.shape is required

    @property
    def verdict(self) -> str:
        return self.shape.value


def integrate(g: Callable[[float], float], a: float, b: float, tol: float = 1e-12,
              max_evals: int = DEFAULT_MAX_EVALS) -> tuple[float, float]:
    """Adaptive Simpson quadrature of ``g`` over ``[a, b]``.

    The tolerance is distributed over subintervals in proportion to their
    width, so the summed error estimate stays below ``tol``.

    Returns:
        ``(value, error_estimate)``.

    Raises:
        NoConvergence: if more than ``max_evals`` evaluations are needed.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if a == b:
        return 0.0, 0.0
    if a > b:
        value, err = integrate(g, b, a, tol, max_evals)
        return -value, err

    total_width = b - a
    fa, fm, fb = g(a), g(0.5 * (a + b)), g(b)
    evals = 3
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    stack = [(a, b, fa, fm, fb, whole)]
    pieces = []
    errors = []
    while stack:
        lo, hi, flo, fmid, fhi, s = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        if evals + 2 > max_evals:
            raise NoConvergence(f"adaptive Simpson exceeded {max_evals} evaluations")
        flm, frm = g(lm), g(rm)
        evals += 2
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - s
        local_tol = tol * (hi - lo) / total_width
        unsplittable = lm in (lo, mid) or rm in (mid, hi)
        if abs(delta) <= 15.0 * local_tol or unsplittable:
            pieces.append(left + right + delta / 15.0)
            errors.append(abs(delta) / 15.0)
        else:
            stack.append((mid, hi, fmid, frm, fhi, right))
            stack.append((lo, mid, flo, flm, fmid, left))
    return math.fsum(pieces), math.fsum(errors)


def reference_integral(fn: Fn1D, iv: Interval, tol: float = 1e-12,
                       max_evals: int = DEFAULT_MAX_EVALS) -> float:
    """Integral of ``fn`` over ``iv`` to absolute accuracy ``tol``."""
    fn.check_interval(iv)
    value, _ = integrate(fn.f, iv.a, iv.b, tol=tol, max_evals=max_evals)
    return value


def classify_shape(g: Callable[[float], float], iv: Interval, grid: int = DEFAULT_GRID,
                   tol: float = DEFAULT_TOL) -> ShapeReport:
    """Falsification test for convexity and concavity of ``g`` on ``iv``.

    Every pair ``u < v`` of a uniform ``grid``-point mesh is checked with
    ``g((u+v)/2)`` against ``(g(u)+g(v))/2``. Pair midpoints all fall on the
    half-step mesh, so ``g`` is evaluated ``2*grid - 1`` times. ``tol`` is
    scaled by ``max(1, max|g|)``.

    A Convex or Concave verdict only means no counterexample was found.
    """
    if grid < 3:
        raise ValueError("grid must be at least 3")
    fine = np.array(iv.grid(2 * grid - 1))
    vals = np.empty_like(fine)
    for k, u in enumerate(fine):
        vals[k] = g(float(u))
    if not np.all(np.isfinite(vals)):
        raise DomainViolation("shape test function returned a non-finite value")
    coarse = vals[::2]
    i, j = np.triu_indices(grid, k=1)
    excess = vals[i + j] - 0.5 * (coarse[i] + coarse[j])
    scale = max(1.0, float(np.max(np.abs(vals))))
    convex_excess = float(np.max(excess))
    concave_excess = float(np.max(-excess))
    is_convex = convex_excess <= tol * scale
    is_concave = concave_excess <= tol * scale
    if is_convex and is_concave:
        shape, worst = Shape.BOTH, max(convex_excess, concave_excess)
    elif is_convex:
        shape, worst = Shape.CONVEX, convex_excess
    elif is_concave:
        shape, worst = Shape.CONCAVE, concave_excess
    else:
        shape, worst = Shape.NEITHER, min(convex_excess, concave_excess)
    return ShapeReport(shape=shape, worst_violation=worst, samples=len(i))


@lru_cache(maxsize=4096)
def derivative_power_shape(fn: Fn1D, iv: Interval, q: float = 1.0, grid: int = DEFAULT_GRID,
                           tol: float = DEFAULT_TOL) -> ShapeReport:
    """Shape of ``|f'|**q`` on ``iv`` (cached; inputs are immutable)."""
    fn.check_interval(iv)
    # shape is invariant under positive scaling; dividing by max |f'| keeps
    # large q from overflowing
    peak = max(abs(fn.df(u)) for u in iv.grid(2 * grid - 1))
    if peak == 0:
        return classify_shape(lambda u: 0.0, iv, grid=grid, tol=tol)
    return classify_shape(lambda u: (abs(fn.df(u)) / peak) ** q, iv, grid=grid, tol=tol)
