import io
import math
import random

import pytest
from mpmath import mpf, sqrt as msqrt

import oracles
from hhcert.bounds import midpoint_bound
from hhcert.errors import BudgetExceeded, HypothesisFailed, InvalidExponent
from hhcert.funcs import CONST, EXP, LINEAR, SIN, SQRT_CUBE, Interval, corpus, pow_n
from hhcert.quad import (Certificate, Partition, Prop, best_certificate, dump_partition,
                         error_bound_p41, error_bound_p42, error_bound_p43, integrate_adaptive,
                         load_partition, trapezoid_sum)

SQ = pow_n(2)
UNIT = Interval(0, 1)
HALVES = Partition((0, 0.5, 1))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((0,))
    with pytest.raises(ValueError):
        Partition((0, 0.5, 0.5, 1))
    d = Partition.uniform(UNIT, 4)
    assert d.nodes == (0, 0.25, 0.5, 0.75, 1) and len(d) == 5
    assert d.interval == UNIT


def test_trapezoid_sum():
    assert trapezoid_sum(SQ, HALVES) == 0.375
    assert trapezoid_sum(LINEAR, Partition((0, 0.3, 1))) == pytest.approx(0.5, abs=1e-15)
    assert trapezoid_sum(SQ, Partition((0, 1))) == 0.5


def test_p41_values():
    cert = error_bound_p41(SQ, HALVES, 2)
    expected = oracles.holder_const(2) / 8 * (0 + 1) + oracles.holder_const(2) / 8 * (1 + 2)
    assert cert.total == pytest.approx(float(expected), abs=1e-15)
    assert abs(trapezoid_sum(SQ, HALVES) - 1 / 3) <= cert.total
    assert [pb.theorem_used for pb in cert.per_interval] == [Prop.P41, Prop.P41]
    assert error_bound_p41(CONST, HALVES, 2).total == 0
    finer = error_bound_p41(SQ, Partition.uniform(UNIT, 4), 2)
    assert finer.total == pytest.approx(cert.total / 2, abs=1e-15)
    with pytest.raises(InvalidExponent):
        error_bound_p41(SQ, HALVES, 1)


def test_p42_values():
    one = error_bound_p42(SQRT_CUBE, Partition((0, 1)), 2)
    expected = oracles.jensen_const(2) / 4 * (mpf(1) / 2 + msqrt(mpf(3) / 4))
    assert one.total == pytest.approx(float(expected), abs=1e-15)
    assert abs(trapezoid_sum(SQRT_CUBE, Partition((0, 1))) - 4 / 15) <= one.total
    lin = error_bound_p42(LINEAR, HALVES, 2)
    assert lin.total > 0 and trapezoid_sum(LINEAR, HALVES) == 0.5
    assert error_bound_p42(SQRT_CUBE, HALVES, 2).total < one.total
    with pytest.raises(HypothesisFailed):
        error_bound_p42(EXP, HALVES, 2)
    with pytest.raises(InvalidExponent):
        error_bound_p42(SQRT_CUBE, HALVES, 1)


def test_p43_values():
    cert = error_bound_p43(SQRT_CUBE, HALVES)
    h2 = mpf(1) / 4
    expected = h2 / 8 * (msqrt(mpf(1) / 12) + msqrt(mpf(5) / 12)) \
        + h2 / 8 * (msqrt(mpf("3.5") / 6) + msqrt(mpf("5.5") / 6))
    assert cert.total == pytest.approx(float(expected), abs=1e-15)
    true_err = abs(trapezoid_sum(SQRT_CUBE, HALVES) - 4 / 15)
    exact_err = abs(mpf(1) / 4 * (2 * (mpf(2) / 3) * msqrt(mpf(1) / 8) + mpf(2) / 3) - mpf(4) / 15)
    assert true_err == pytest.approx(float(exact_err), abs=1e-15)
    assert true_err <= cert.total
    single = error_bound_p43(SQRT_CUBE, Partition((0, 1))).total
    assert single == pytest.approx(float((msqrt(mpf(1) / 6) + msqrt(mpf(5) / 6)) / 8), abs=1e-15)
    assert error_bound_p43(CONST, HALVES).total == 0


def test_single_panel_matches_midpoint_forms():
    one = Partition((0, 1))
    assert error_bound_p42(SQRT_CUBE, one, 2).total == midpoint_bound(SQRT_CUBE, UNIT, "R22", q=2).rhs
    assert error_bound_p43(SQRT_CUBE, one).total == midpoint_bound(SQRT_CUBE, UNIT, "C24").rhs
    # away from unit length the certificate is (b - a) times the mean-scale bound
    iv = Interval(0.5, 2.5)
    d = Partition((0.5, 2.5))
    assert error_bound_p43(SQRT_CUBE, d).total == pytest.approx(
        2 * midpoint_bound(SQRT_CUBE, iv, "C24").rhs, rel=1e-15)


def test_best_certificate():
    cert = best_certificate(SQ, HALVES)
    assert cert.total <= 0.2041241452319315
    # |2x| is affine, so the concave-derivative rule P43 also applies and wins
    assert {pb.theorem_used for pb in cert.per_interval} == {Prop.P43}
    sq = best_certificate(SQRT_CUBE, Partition((0, 1)))
    assert sq.total <= 0.16513990245489249
    assert best_certificate(CONST, HALVES).total == 0
    with pytest.raises(HypothesisFailed):
        best_certificate(SIN, Partition((0, 3)))


def test_best_certificate_only_p41_for_cubic():
    cert = best_certificate(pow_n(3), HALVES)
    assert all(pb.theorem_used is Prop.P41 for pb in cert.per_interval)
    candidates = [error_bound_p41(pow_n(3), HALVES, p).per_interval[0].bound
                  for p in (1.1, 1.5, 2, 3, 5, 10, 50)]
    assert cert.per_interval[0].bound == min(candidates)


@pytest.mark.parametrize("fn, eps, exact", [(SQ, 0.01, 1 / 3), (SQRT_CUBE, 0.005, 4 / 15)])
def test_integrate_adaptive_examples(fn, eps, exact):
    value, cert, d = integrate_adaptive(fn, UNIT, eps, 4096)
    assert cert.total <= eps
    assert abs(value - exact) <= cert.total
    assert d.nodes[0] == 0 and d.nodes[-1] == 1
    assert len(cert.per_interval) == len(d) - 1


def test_integrate_adaptive_linear_exact():
    # the trapezoid rule is exact here, but the certificate still needs refining
    value, cert, d = integrate_adaptive(LINEAR, UNIT, 1e-3, 4096)
    assert value == pytest.approx(0.5, abs=1e-15)
    assert cert.total <= 1e-3


def test_integrate_adaptive_constant_single_panel():
    value, cert, d = integrate_adaptive(CONST, UNIT, 1e-12)
    assert len(d) == 2 and value == 1.0 and cert.total == 0


def test_budget_exceeded_carries_partial_result():
    with pytest.raises(BudgetExceeded) as info:
        integrate_adaptive(EXP, UNIT, 1e-6, max_nodes=64)
    exc = info.value
    assert len(exc.partition) == 64
    assert exc.certificate.total > 1e-6
    assert abs(exc.value - (math.e - 1)) <= exc.certificate.total


def test_adaptive_rejects_bad_input():
    with pytest.raises(HypothesisFailed):
        integrate_adaptive(SIN, SIN.test_interval, 1e-2)
    with pytest.raises(ValueError):
        integrate_adaptive(SQ, UNIT, 0.0)
    with pytest.raises(ValueError):
        integrate_adaptive(SQ, UNIT, 0.1, max_nodes=1)


def _bisect(d, k):
    lo, hi = d.nodes[k], d.nodes[k + 1]
    return Partition(d.nodes[:k + 1] + (0.5 * (lo + hi),) + d.nodes[k + 1:])


@pytest.mark.parametrize("rule", ["p41", "p43"])
def test_refinement_never_increases_total(rule):
    rng = random.Random(1234)
    cases = {
        "p41": [(fn, 2.0) for fn in corpus() if fn.id in ("pow:2", "pow:3", "exp_fn", "recip",
                                                          "neg_log", "sqrt_cube")],
        "p43": [(fn, 1.0) for fn in corpus() if fn.id in ("sqrt_cube", "x_log_x", "linear")],
    }[rule]
    for fn, param in cases:
        d = Partition(tuple(fn.test_interval.grid(2)))
        evaluate = (lambda d: error_bound_p41(fn, d, param)) if rule == "p41" else \
            (lambda d: error_bound_p43(fn, d, param))
        total = evaluate(d).total
        for _ in range(100):
            d = _bisect(d, rng.randrange(len(d) - 1))
            new_total = evaluate(d).total
            assert new_total <= total + 1e-15
            total = new_total


def test_certificate_additivity():
    cert = best_certificate(EXP, Partition.uniform(UNIT, 37))
    assert abs(cert.total - math.fsum(pb.bound for pb in cert.per_interval)) <= 1e-12
    assert all(pb.bound >= 0 for pb in cert.per_interval)
    assert Certificate.from_panels([]).total == 0


def test_partition_dump_round_trip():
    d = integrate_adaptive(EXP, UNIT, 1e-2)[2]
    buf = io.StringIO()
    dump_partition(d, buf)
    lines = buf.getvalue().splitlines()
    assert len(lines) == len(d)
    assert lines[1] == format(d.nodes[1], ".17g")
    buf.seek(0)
    assert load_partition(buf) == d
