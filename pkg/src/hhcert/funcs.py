"""Function model and the built-in corpus of test integrands.

Every corpus member carries a closed-form derivative and antiderivative, so
the integrals and slopes used as ground truth never come from the numerical
code being checked.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DomainViolation, MissingAntiderivative

RealFn = Callable[[float], float]


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[a, b]`` with ``a < b`` strictly."""

    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainViolation(f"interval endpoints must be finite, got [{a}, {b}]")
        if not a < b:
            raise DomainViolation(f"interval needs a < b, got [{a}, {b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def mid(self) -> float:
        return 0.5 * (self.a + self.b)

    def grid(self, n: int) -> list[float]:
        """``n`` equally spaced points including both endpoints."""
        if n < 2:
            raise ValueError("grid needs at least 2 points")
        h = self.length / (n - 1)
        pts = [self.a + i * h for i in range(n)]
        pts[-1] = self.b
        return pts


@dataclass(frozen=True)
class Fn1D:
    """A differentiable scalar function with exact derivative and antiderivative.

    ``eval``, ``deriv`` and ``antideriv`` are the raw callables. Use
    :meth:`f`, :meth:`df` and :meth:`F` to evaluate with domain checking.
    ``holes`` lists isolated points excluded from the domain (``0`` for 1/x).
    """

    id: str
    eval: RealFn
    deriv: RealFn
    antideriv: Optional[RealFn] = None
    domain_lo: float = -math.inf
    domain_hi: float = math.inf
    lo_open: bool = True
    hi_open: bool = True
    holes: tuple[float, ...] = ()
    test_interval: Optional[Interval] = field(default=None, compare=False)

    def contains(self, x: float) -> bool:
        if math.isnan(x):
            return False
        if x < self.domain_lo or (self.lo_open and x == self.domain_lo):
            return False
        if x > self.domain_hi or (self.hi_open and x == self.domain_hi):
            return False
        return x not in self.holes

    def check_point(self, x: float) -> float:
        x = float(x)
        if not self.contains(x):
            raise DomainViolation(f"{self.id}: x = {x!r} outside the domain")
        return x

    def check_interval(self, iv: Interval) -> Interval:
        self.check_point(iv.a)
        self.check_point(iv.b)
        for h in self.holes:
            if iv.a <= h <= iv.b:
                raise DomainViolation(f"{self.id}: [{iv.a}, {iv.b}] contains excluded point {h}")
        return iv

    def f(self, x: float) -> float:
        return self.eval(self.check_point(x))

    def df(self, x: float) -> float:
        return self.deriv(self.check_point(x))

    def F(self, x: float) -> float:
        if self.antideriv is None:
            raise MissingAntiderivative(f"{self.id} has no antiderivative")
        return self.antideriv(self.check_point(x))

    @property
    def has_antiderivative(self) -> bool:
        return self.antideriv is not None


@lru_cache(maxsize=None)
def pow_n(n: int) -> Fn1D:
    """``f(x) = x**n`` for integer ``n``; negative powers exclude 0."""
    n = int(n)
    if n == 0:
        return constant(1.0, id="pow:0")
    if n == -1:
        anti = lambda x: math.log(abs(x))
    else:
        anti = lambda x: x ** (n + 1) / (n + 1)
    holes = (0.0,) if n < 0 else ()
    iv = Interval(1.0, 2.0) if n < 0 else Interval(0.0, 1.0)
    return Fn1D(
        id=f"pow:{n}",
        eval=lambda x: x**n,
        deriv=lambda x: n * x ** (n - 1),
        antideriv=anti,
        holes=holes,
        test_interval=iv,
    )


def constant(c: float = 1.0, id: str = "const") -> Fn1D:
    return Fn1D(
        id=id,
        eval=lambda x: c,
        deriv=lambda x: 0.0,
        antideriv=lambda x: c * x,
        test_interval=Interval(0.0, 1.0),
    )


def linear(slope: float = 1.0, intercept: float = 0.0, id: str = "linear") -> Fn1D:
    return Fn1D(
        id=id,
        eval=lambda x: slope * x + intercept,
        deriv=lambda x: slope,
        antideriv=lambda x: 0.5 * slope * x * x + intercept * x,
        test_interval=Interval(0.0, 1.0),
    )


LINEAR = linear()
CONST = constant()

RECIP = Fn1D(
    id="recip",
    eval=lambda x: 1.0 / x,
    deriv=lambda x: -1.0 / (x * x),
    antideriv=lambda x: math.log(abs(x)),
    holes=(0.0,),
    test_interval=Interval(1.0, 2.0),
)

EXP = Fn1D(
    id="exp_fn",
    eval=math.exp,
    deriv=math.exp,
    antideriv=math.exp,
    test_interval=Interval(0.0, 1.0),
)

NEG_LOG = Fn1D(
    id="neg_log",
    eval=lambda x: -math.log(x),
    deriv=lambda x: -1.0 / x,
    antideriv=lambda x: x - x * math.log(x),
    domain_lo=0.0,
    test_interval=Interval(1.0, 2.0),
)

X_LOG_X = Fn1D(
    id="x_log_x",
    eval=lambda x: x * math.log(x),
    deriv=lambda x: math.log(x) + 1.0,
    antideriv=lambda x: 0.5 * x * x * math.log(x) - 0.25 * x * x,
    domain_lo=0.0,
    test_interval=Interval(1.0, 2.0),
)

# f' = sqrt(x): concave derivative, the natural member for the concavity bounds
SQRT_CUBE = Fn1D(
    id="sqrt_cube",
    eval=lambda x: (2.0 / 3.0) * x * math.sqrt(x),
    deriv=math.sqrt,
    antideriv=lambda x: (4.0 / 15.0) * x * x * math.sqrt(x),
    domain_lo=0.0,
    lo_open=False,
    test_interval=Interval(0.0, 1.0),
)

# |cos| on [0, 3] is neither convex nor concave; exercises hypothesis gating
SIN = Fn1D(
    id="sin",
    eval=math.sin,
    deriv=math.cos,
    antideriv=lambda x: -math.cos(x),
    test_interval=Interval(0.0, 3.0),
)


def corpus() -> list[Fn1D]:
    """Built-in test integrands, each with its default test interval."""
    return [
        pow_n(2),
        pow_n(3),
        pow_n(4),
        RECIP,
        EXP,
        NEG_LOG,
        X_LOG_X,
        SQRT_CUBE,
        LINEAR,
        CONST,
        SIN,
    ]


def fn_by_id(fn_id: str) -> Fn1D:
    """Look up a corpus member by id; ``pow:<n>`` builds any integer power."""
    key = fn_id.strip()
    if key.startswith("pow:") or key.startswith("pow_"):
        try:
            n = int(key[4:])
        except ValueError:
            raise KeyError(f"bad power in function id {fn_id!r}") from None
        return pow_n(n)
    for fn in corpus():
        if fn.id == key:
            return fn
    known = ", ".join(fn.id for fn in corpus())
    raise KeyError(f"unknown function id {fn_id!r}; known: {known}, pow:<n>")


def exact_integral(fn: Fn1D, iv: Interval) -> float:
    """``F(b) - F(a)`` from the closed-form antiderivative."""
    if fn.antideriv is None:
        raise MissingAntiderivative(f"{fn.id} has no antiderivative")
    fn.check_interval(iv)
    return fn.antideriv(iv.b) - fn.antideriv(iv.a)
