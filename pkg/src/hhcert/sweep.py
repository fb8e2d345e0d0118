"""Corpus-wide sweeps of the identity and of every bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bounds import (BoundReport, HolderPair, bound_t21, bound_t22, bound_t23,
                     bound_t24, bound_t25, identity_residual, midpoint_bound)
from .funcs import Fn1D, Interval, corpus

P_SET = (1.5, 2.0, 3.0)
Q_SET = (1.0, 1.5, 2.0, 3.0)
X_POINTS = 11

RECORD_FIELDS = ("theorem_id", "fn", "a", "b", "x", "p", "q", "lhs", "rhs", "relaxed_rhs",
                 "slack", "hypothesis_verdict", "admissible")


@dataclass(frozen=True)
class SweepRecord:
    fn_id: str
    iv: Interval
    report: BoundReport

    @property
    def failed(self) -> bool:
        return self.report.admissible and not self.report.holds

    def sort_key(self):
        r = self.report
        return (self.fn_id, self.iv.a, self.iv.b, r.x, r.theorem_id.value,
                -1.0 if r.p is None else r.p, -1.0 if r.q is None else r.q)

    def as_row(self) -> dict:
        r = self.report
        return {
            "theorem_id": r.theorem_id.value,
            "fn": self.fn_id,
            "a": self.iv.a,
            "b": self.iv.b,
            "x": r.x,
            "p": r.p,
            "q": r.q,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "relaxed_rhs": r.relaxed_rhs,
            "slack": r.slack,
            "hypothesis_verdict": r.verdict,
            "admissible": r.admissible,
        }


def bound_reports(fn: Fn1D, iv: Interval, x_points: int = X_POINTS,
                  p_set=P_SET, q_set=Q_SET) -> list[BoundReport]:
    """Every general-x bound on an ``x_points`` grid plus every midpoint
    variant, each for all applicable exponents.  Hypotheses are recorded,
    not enforced."""
    out = []
    for x in iv.grid(x_points):
        out.append(bound_t21(fn, iv, x, enforce=False))
        for p in p_set:
            out.append(bound_t22(fn, iv, x, HolderPair.from_p(p), enforce=False))
        for q in q_set:
            if q > 1:
                out.append(bound_t23(fn, iv, x, q, enforce=False))
            out.append(bound_t24(fn, iv, x, q, enforce=False))
            out.append(bound_t25(fn, iv, x, q, enforce=False))
    out.append(midpoint_bound(fn, iv, "C21", enforce=False))
    out.append(midpoint_bound(fn, iv, "R21", enforce=False))
    for p in p_set:
        out.append(midpoint_bound(fn, iv, "C22", p=p, enforce=False))
    for q in q_set:
        out.append(midpoint_bound(fn, iv, "C23", q=q, enforce=False))
        out.append(midpoint_bound(fn, iv, "C24", q=q, enforce=False))
        if q > 1:
            out.append(midpoint_bound(fn, iv, "R22", q=q, enforce=False))
    return out


def _targets(fns: Optional[Iterable[Fn1D]]):
    for fn in (corpus() if fns is None else fns):
        yield fn, fn.test_interval


def soundness_sweep(fns: Optional[Iterable[Fn1D]] = None,
                    x_points: int = X_POINTS) -> list[SweepRecord]:
    """All bound records for each function on its test interval, in
    canonical order ``(fn, a, b, x, theorem, p, q)``."""
    records = [SweepRecord(fn.id, iv, rep)
               for fn, iv in _targets(fns)
               for rep in bound_reports(fn, iv, x_points)]
    records.sort(key=SweepRecord.sort_key)
    return records


def failures(records: Iterable[SweepRecord]) -> list[SweepRecord]:
    """Admissible records whose slack is below ``-TOL_VERIFY``."""
    return [r for r in records if r.failed]


def identity_sweep(fns: Optional[Iterable[Fn1D]] = None, x_points: int = X_POINTS,
                   tol: float = 1e-10) -> list[dict]:
    rows = []
    for fn, iv in _targets(fns):
        for x in iv.grid(x_points):
            rows.append({"fn": fn.id, "a": iv.a, "b": iv.b, "x": x,
                         "residual": identity_residual(fn, iv, x, tol)})
    return rows


