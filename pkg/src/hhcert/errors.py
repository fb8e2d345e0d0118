"""Exception hierarchy shared by every module."""


class HHCertError(Exception):
    """Base class for all errors raised by hhcert."""


class DomainViolation(HHCertError, ValueError):
    """A point or interval lies outside where a function may be evaluated."""


class MissingAntiderivative(HHCertError):
    """An exact integral was requested from a function without an antiderivative."""


class NoConvergence(HHCertError, RuntimeError):
    """The reference integrator exhausted its evaluation budget."""


class HypothesisFailed(HHCertError):
    """A convexity/concavity hypothesis was falsified on the sample grid.

    The offending :class:`~hhcert.analysis.ShapeReport` is kept on ``report``.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvalidExponent(HHCertError, ValueError):
    """An exponent lies outside the range a bound requires."""


class InvalidMeanInput(HHCertError, ValueError):
    """Arguments for which a special mean is undefined."""


class BudgetExceeded(HHCertError):
    """Adaptive refinement hit its node budget before meeting the error target.

    The best result found so far is attached as ``value``, ``certificate``
    and ``partition``.
    """

    def __init__(self, message, value, certificate, partition):
        super().__init__(message)
        self.value = value
        self.certificate = certificate
        self.partition = partition
