"""Composite trapezoid rule with a priori error certificates.

Each certificate bounds ``|integral - T(f, d)|`` panel by panel from values
of ``|f'|`` at panel endpoints, quarter points or sixth points.  Which bound
applies depends on whether ``|f'|**q`` is convex or concave on ``[a, b]``;
that is tested once on the whole interval since convexity and concavity are
inherited by subintervals.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .analysis import Shape, derivative_power_shape
from .errors import BudgetExceeded, HypothesisFailed, InvalidExponent
from .funcs import Fn1D, Interval

P41_GRID = (1.1, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0)
P42_GRID = (1.5, 2.0, 3.0)


class Prop(str, enum.Enum):
    P41 = "P41"
    P42 = "P42"
    P43 = "P43"


@dataclass(frozen=True)
class Partition:
    """Strictly increasing nodes ``a = x_0 < x_1 < ... < x_n = b``."""

    nodes: tuple[float, ...]

    def __post_init__(self):
        nodes = tuple(float(x) for x in self.nodes)
        if len(nodes) < 2:
            raise ValueError("a partition needs at least 2 nodes")
        if any(not math.isfinite(x) for x in nodes):
            raise ValueError("partition nodes must be finite")
        if any(lo >= hi for lo, hi in zip(nodes, nodes[1:])):
            raise ValueError("partition nodes must be strictly increasing")
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def uniform(cls, iv: Interval, panels: int) -> "Partition":
        return cls(tuple(iv.grid(panels + 1)))

    @property
    def interval(self) -> Interval:
        return Interval(self.nodes[0], self.nodes[-1])

    @property
    def panels(self) -> list[tuple[float, float]]:
        return list(zip(self.nodes, self.nodes[1:]))

    def __len__(self):
        return len(self.nodes)


@dataclass(frozen=True)
class PanelBound:
    bound: float
    theorem_used: Prop
    param: Optional[float] = None


@dataclass(frozen=True)
class Certificate:
    per_interval: tuple[PanelBound, ...]
    total: float

    @classmethod
    def from_panels(cls, panels: Iterable[PanelBound]) -> "Certificate":
        panels = tuple(panels)
        return cls(panels, math.fsum(pb.bound for pb in panels))


def trapezoid_sum(fn: Fn1D, d: Partition) -> float:
    fn.check_interval(d.interval)
    vals = [fn.f(x) for x in d.nodes]
    return math.fsum(0.5 * (vals[i] + vals[i + 1]) * (d.nodes[i + 1] - d.nodes[i])
                     for i in range(len(vals) - 1))


def _holder_const(p: float) -> float:
    q = p / (p - 1.0)
    return (1.0 / (p + 1.0)) ** (1.0 / p) * 0.5 ** (1.0 / q)


def _jensen_const(q: float) -> float:
    return ((q - 1.0) / (2.0 * q - 1.0)) ** ((q - 1.0) / q)


def _p41_panel(fn: Fn1D, lo: float, hi: float, p: float) -> float:
    h = hi - lo
    return _holder_const(p) * 0.5 * h * h * (abs(fn.df(lo)) + abs(fn.df(hi)))


def _p42_panel(fn: Fn1D, lo: float, hi: float, q: float) -> float:
    h = hi - lo
    return _jensen_const(q) * 0.25 * h * h * (
        abs(fn.df((3 * lo + hi) / 4.0)) + abs(fn.df((lo + 3 * hi) / 4.0)))


def _p43_panel(fn: Fn1D, lo: float, hi: float, q: float = 1.0) -> float:
    h = hi - lo
    return 0.125 * h * h * (abs(fn.df((5 * lo + hi) / 6.0)) + abs(fn.df((lo + 5 * hi) / 6.0)))


_PANEL = {Prop.P41: _p41_panel, Prop.P42: _p42_panel, Prop.P43: _p43_panel}


def _gate(fn: Fn1D, iv: Interval, q: float, required: Shape, prop: Prop):
    hyp = derivative_power_shape(fn, iv, q)
    if not hyp.admits(required):
        raise HypothesisFailed(
            f"{prop.value}: |f'|^{q:g} must be {required.value} on [{iv.a}, {iv.b}], "
            f"grid test says {hyp.verdict}", hyp)
    return hyp


def _certify(fn: Fn1D, d: Partition, prop: Prop, param: float) -> Certificate:
    panel = _PANEL[prop]
    return Certificate.from_panels(PanelBound(panel(fn, lo, hi, param), prop, param)
                                   for lo, hi in d.panels)


def error_bound_p41(fn: Fn1D, d: Partition, p: float, enforce: bool = True) -> Certificate:
    """Endpoint-derivative certificate, valid when ``|f'|**(p/(p-1))`` is convex."""
    p = float(p)
    if not p > 1 or not math.isfinite(p):
        raise InvalidExponent(f"p must be > 1, got {p}")
    iv = fn.check_interval(d.interval)
    if enforce:
        _gate(fn, iv, p / (p - 1.0), Shape.CONVEX, Prop.P41)
    return _certify(fn, d, Prop.P41, p)


def error_bound_p42(fn: Fn1D, d: Partition, q: float, enforce: bool = True) -> Certificate:
    """Quarter-point certificate, valid when ``|f'|**q`` is concave (``q > 1``)."""
    q = float(q)
    if not q > 1 or not math.isfinite(q):
        raise InvalidExponent(f"q must be > 1, got {q}")
    iv = fn.check_interval(d.interval)
    if enforce:
        _gate(fn, iv, q, Shape.CONCAVE, Prop.P42)
    return _certify(fn, d, Prop.P42, q)


def error_bound_p43(fn: Fn1D, d: Partition, q: float = 1.0, enforce: bool = True) -> Certificate:
    """Sixth-point certificate, valid when ``|f'|**q`` is concave for the
    gating ``q >= 1``."""
    q = float(q)
    if not q >= 1 or not math.isfinite(q):
        raise InvalidExponent(f"q must be >= 1, got {q}")
    iv = fn.check_interval(d.interval)
    if enforce:
        _gate(fn, iv, q, Shape.CONCAVE, Prop.P43)
    return _certify(fn, d, Prop.P43, q)


def admissible_rules(fn: Fn1D, iv: Interval) -> list[tuple[Prop, float]]:
    """Every ``(rule, exponent)`` whose hypothesis survives on ``iv``, in
    tie-break order."""
    rules = []
    for p in P41_GRID:
        if derivative_power_shape(fn, iv, p / (p - 1.0)).admits(Shape.CONVEX):
            rules.append((Prop.P41, p))
    for q in P42_GRID:
        if derivative_power_shape(fn, iv, q).admits(Shape.CONCAVE):
            rules.append((Prop.P42, q))
    if derivative_power_shape(fn, iv, 1.0).admits(Shape.CONCAVE):
        rules.append((Prop.P43, 1.0))
    return rules


def _best_panel(fn: Fn1D, lo: float, hi: float, rules) -> PanelBound:
    best = None
    for prop, param in rules:
        bound = _PANEL[prop](fn, lo, hi, param)
        if best is None or bound < best.bound:
            best = PanelBound(bound, prop, param)
    return best


def _require_rules(fn: Fn1D, iv: Interval):
    rules = admissible_rules(fn, iv)
    if not rules:
        raise HypothesisFailed(
            f"{fn.id}: no certificate applies on [{iv.a}, {iv.b}]; |f'|^q is neither "
            "convex nor concave for the scanned exponents")
    return rules


def best_certificate(fn: Fn1D, d: Partition) -> Certificate:
    """Smallest admissible bound on each panel over the P41 p-grid, the P42
    q-grid and P43."""
    iv = fn.check_interval(d.interval)
    rules = _require_rules(fn, iv)
    return Certificate.from_panels(_best_panel(fn, lo, hi, rules) for lo, hi in d.panels)


def integrate_adaptive(fn: Fn1D, iv: Interval, eps: float,
                       max_nodes: int = 4096) -> tuple[float, Certificate, Partition]:
    """Trapezoid integral with a certified error of at most ``eps``.

    Starting from the single panel ``[a, b]``, the panel with the largest
    bound is bisected until the certificate total drops to ``eps``.

    Raises:
        BudgetExceeded: if ``max_nodes`` is reached first; the partial
            result is attached.
        HypothesisFailed: if no certificate rule applies on ``iv``.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    if max_nodes < 2:
        raise ValueError("max_nodes must be at least 2")
    fn.check_interval(iv)
    rules = _require_rules(fn, iv)

    first = _best_panel(fn, iv.a, iv.b, rules)
    heap = [(-first.bound, iv.a, iv.b, first)]
    total = first.bound
    n_nodes = 2
    stuck = False
    while n_nodes < max_nodes:
        if total <= eps:
            total = math.fsum(item[3].bound for item in heap)
            if total <= eps:
                break
        _, lo, hi, pb = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            heapq.heappush(heap, (-pb.bound, lo, hi, pb))
            stuck = True
            break
        left = _best_panel(fn, lo, mid, rules)
        right = _best_panel(fn, mid, hi, rules)
        heapq.heappush(heap, (-left.bound, lo, mid, left))
        heapq.heappush(heap, (-right.bound, mid, hi, right))
        total += left.bound + right.bound - pb.bound
        n_nodes += 1

    heap.sort(key=lambda item: item[1])
    partition = Partition((heap[0][1],) + tuple(item[2] for item in heap))
    cert = Certificate.from_panels(item[3] for item in heap)
    value = trapezoid_sum(fn, partition)
    if cert.total > eps:
        why = "panel width underflow" if stuck else f"{max_nodes} nodes"
        raise BudgetExceeded(
            f"certificate total {cert.total:.3e} > eps {eps:.3e} after {why}",
            value, cert, partition)
    return value, cert, partition


def dump_partition(d: Partition, out: TextIO) -> None:
    """Write one node per line with 17 significant digits."""
    for x in d.nodes:
        out.write(format(x, ".17g") + "\n")


def load_partition(src: TextIO) -> Partition:
    return Partition(tuple(float(line) for line in src if line.strip()))
