"""Certified trapezoid quadrature and Hermite-Hadamard type bound checks."""

from .analysis import Shape, ShapeReport, classify_shape, reference_integral
from .bounds import (BoundReport, HolderPair, TheoremId, bound_t21, bound_t22, bound_t23,
                     bound_t24, bound_t25, hh_classic_check, identity_residual, lhs_weighted,
                     midpoint_bound, power_subadditivity)
from .errors import (BudgetExceeded, DomainViolation, HypothesisFailed, InvalidExponent,
                     InvalidMeanInput, MissingAntiderivative, NoConvergence)
from .funcs import Fn1D, Interval, corpus, exact_integral, fn_by_id, pow_n
from .means import (arithmetic_mean, gen_log_mean_pow, logarithmic_mean, prop31_check,
                    prop32_check)
from .quad import (Certificate, Partition, best_certificate, error_bound_p41, error_bound_p42,
                   error_bound_p43, integrate_adaptive, trapezoid_sum)

__version__ = "0.1.0"

__all__ = [
    "Shape",
    "ShapeReport",
    "classify_shape",
    "reference_integral",
    "BoundReport",
    "HolderPair",
    "TheoremId",
    "bound_t21",
    "bound_t22",
    "bound_t23",
    "bound_t24",
    "bound_t25",
    "hh_classic_check",
    "identity_residual",
    "lhs_weighted",
    "midpoint_bound",
    "power_subadditivity",
    "BudgetExceeded",
    "DomainViolation",
    "HypothesisFailed",
    "InvalidExponent",
    "InvalidMeanInput",
    "MissingAntiderivative",
    "NoConvergence",
    "Fn1D",
    "Interval",
    "corpus",
    "exact_integral",
    "fn_by_id",
    "pow_n",
    "arithmetic_mean",
    "gen_log_mean_pow",
    "logarithmic_mean",
    "prop31_check",
    "prop32_check",
    "Certificate",
    "Partition",
    "best_certificate",
    "error_bound_p41",
    "error_bound_p42",
    "error_bound_p43",
    "integrate_adaptive",
    "trapezoid_sum",
]

