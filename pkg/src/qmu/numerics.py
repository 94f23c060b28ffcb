"""Summation and product kernels shared by every q-series evaluator.

All values are Python ``complex`` (binary64 components).  Kernels return a
:class:`CVal` carrying the value together with a conservative absolute error
estimate; higher-level evaluators usually unwrap it with ``complex(...)``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Union

EPS = 2.0**-52

Number = Union[int, float, complex]
TermSource = Union[Callable[[int], Number], Iterable[Number]]


class QSeriesError(ArithmeticError):
    """Base class for evaluation failures."""


class NonConvergent(QSeriesError):
    def __init__(self, message: str, direction: Optional[str] = None):
        if direction is not None:
            message = f"{message} (direction: {direction})"
        super().__init__(message)
        self.direction = direction


class PoleHit(QSeriesError):
    """A denominator vanishes (argument on or within tolerance of a q-lattice)."""


class Divergent(QSeriesError):
    """The requested series has zero radius of convergence."""


class NonFinite(QSeriesError):
    """A NaN or infinity was produced."""


@dataclass(frozen=True)
class CVal:
    value: complex
    err: float = 0.0
    # index of an exactly vanishing factor, set only by prod_infinite
    zero_factor: Optional[int] = None

    def __complex__(self) -> complex:
        return complex(self.value)

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag


@dataclass(frozen=True)
class SummationPolicy:
    """Truncation rule for series and products.

    A series stops once ``small_run`` consecutive terms satisfy
    ``|term| <= rel_tol * max|partial sum|``.  ``growth_run`` consecutive
    strictly growing terms are treated as divergence.
    """

    rel_tol: float = 2.0**-56
    max_terms: int = 4000
    small_run: int = 3
    growth_run: int = 16

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")
        if self.small_run < 2:
            raise ValueError("small_run must be at least 2")
        if self.growth_run < self.small_run:
            raise ValueError("growth_run must be at least small_run")

    def tighter(self, factor: float = 10.0) -> "SummationPolicy":
        return SummationPolicy(self.rel_tol / factor, self.max_terms, self.small_run, self.growth_run)


DEFAULT_POLICY = SummationPolicy()


@dataclass(frozen=True)
class Modulus:
    """The base ``q`` of a q-series, optionally tied to ``tau`` by q = exp(2 pi i tau)."""

    q: complex
    tau: Optional[complex] = None

    def __post_init__(self):
        if not abs(self.q) < 1:
            raise ValueError(f"|q| must be < 1, got |q| = {abs(self.q)!r}")

    @classmethod
    def from_tau(cls, tau: Number) -> "Modulus":
        tau = complex(tau)
        if tau.imag <= 0:
            raise ValueError("Im(tau) must be positive")
        return cls(cmath.exp(2j * math.pi * tau), tau)

    @classmethod
    def from_q(cls, q: Number) -> "Modulus":
        q = complex(q)
        if q == 0:
            return cls(q)
        return cls(q, cmath.log(q) / (2j * math.pi))

    def power(self, alpha: Number) -> complex:
        """Principal-branch ``q**alpha`` (``exp(2 pi i tau alpha)`` when tau is known)."""
        if self.tau is not None:
            return cmath.exp(2j * math.pi * self.tau * alpha)
        return qpow(self.q, alpha)

    def __complex__(self) -> complex:
        return complex(self.q)


def as_q(q) -> complex:
    return complex(q.q) if isinstance(q, Modulus) else complex(q)


def qpow(q, alpha: Number) -> complex:
    """``q**alpha`` on the principal branch of ``Log q``; exact for integer alpha."""
    if isinstance(q, Modulus):
        return q.power(alpha)
    q = complex(q)
    if isinstance(alpha, int) or (isinstance(alpha, float) and alpha.is_integer()):
        return q ** int(alpha)
    if q == 0:
        if complex(alpha).real > 0:
            return 0j
        raise PoleHit("non-positive power of q = 0")
    if q.imag == 0 and q.real > 0 and complex(alpha).imag == 0:
        return complex(q.real ** complex(alpha).real)
    return cmath.exp(alpha * cmath.log(q))


def check_finite(z: complex, what: str = "value") -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFinite(f"{what} is not finite: {z!r}")
    return z


def _iter_terms(terms: TermSource, start: int = 0, step: int = 1) -> Iterator[complex]:
    if callable(terms):
        return (terms(n) for n in itertools.count(start, step))
    return iter(terms)


def _sum_pass(it: Iterator[Number], policy: SummationPolicy, direction: str) -> CVal:
    total = 0j
    scale = 0.0
    small = 0
    growing = 0
    prev = None
    count = 0
    for term in it:
        term = complex(term)
        count += 1
        mag = abs(term)
        if not math.isfinite(mag):
            raise NonConvergent(f"term {count - 1} is not finite", direction)
        total += term
        scale = max(scale, abs(total))
        if scale == 0:
            # a leading run of exact zeros says nothing about convergence
            if count >= policy.max_terms:
                return CVal(0j, 0.0)
            prev = None
            continue
        if mag <= policy.rel_tol * scale:
            small += 1
            if small >= policy.small_run:
                # magnitude of the last (already tiny) term bounds the first omitted one
                err = 2.0 * mag + count * EPS * scale
                return CVal(check_finite(total), err)
        else:
            small = 0
        if prev is not None and mag > prev > 0:
            growing += 1
            if growing >= policy.growth_run:
                raise NonConvergent(f"terms grew for {growing} consecutive indices", direction)
        else:
            growing = 0
        prev = mag
        if count >= policy.max_terms:
            raise NonConvergent(f"no convergence within {policy.max_terms} terms", direction)
    # finite (terminating) source
    return CVal(check_finite(total), count * EPS * scale)


def sum_unilateral(terms: TermSource, policy: SummationPolicy = DEFAULT_POLICY) -> CVal:
    """Sum ``terms(0) + terms(1) + ...``.

    ``terms`` is either a callable on indices or an iterable of term values
    (a generator is the usual choice, since most q-series terms are cheapest
    to produce by a ratio recurrence).  A finite iterable is summed exactly.
    """
    return _sum_pass(_iter_terms(terms), policy, "positive")


def sum_bilateral(
    terms: Union[Callable[[int], Number], tuple],
    policy: SummationPolicy = DEFAULT_POLICY,
) -> CVal:
    """Sum over all integers as two independent passes, n >= 0 and n <= -1.

    ``terms`` is a callable on signed indices, or a pair ``(nonneg, neg)`` of
    iterables where ``neg`` yields the terms for n = -1, -2, ... in order.
    """
    if callable(terms):
        pos, neg = _iter_terms(terms, 0, 1), _iter_terms(terms, -1, -1)
    else:
        pos, neg = terms
    right = _sum_pass(iter(pos), policy, "positive")
    left = _sum_pass(iter(neg), policy, "negative")
    return CVal(right.value + left.value, right.err + left.err)


def prod_infinite(factors: TermSource, policy: SummationPolicy = DEFAULT_POLICY) -> CVal:
    """Product of ``factors(0) * factors(1) * ...`` with factors tending to 1.

    An exactly vanishing factor gives the value 0 with ``zero_factor`` set to
    its index; the remaining factors are not evaluated.
    """
    prod = 1 + 0j
    small = 0
    tail = 0.0
    prev_dev = None
    count = 0
    for f in _iter_terms(factors):
        f = complex(f)
        if f == 0:
            return CVal(0j, 0.0, zero_factor=count)
        count += 1
        prod *= f
        dev = abs(f - 1)
        if not math.isfinite(abs(prod)):
            raise NonConvergent("product overflowed")
        if dev <= policy.rel_tol:
            small += 1
            if small >= policy.small_run:
                # geometric estimate of sum |f - 1| over the omitted factors
                ratio = dev / prev_dev if prev_dev else 0.0
                tail = dev * (1.0 / (1.0 - ratio) if ratio < 0.9 else 10.0 * policy.max_terms)
                err = abs(prod) * (tail + count * EPS) + 5e-324
                return CVal(check_finite(prod), err)
        else:
            small = 0
        prev_dev = dev
        if count >= policy.max_terms:
            raise NonConvergent(f"product did not settle within {policy.max_terms} factors")
    return CVal(check_finite(prod), abs(prod) * count * EPS)


def near_lattice(x: Number, q, delta: float = 1e-10) -> Optional[int]:
    """Return n if ``x`` lies within relative distance ``delta`` of ``q**n``."""
    x = complex(x)
    q = as_q(q)
    if x == 0:
        raise ValueError("x must be nonzero")
    if q == 0 or abs(q) == 1:
        return None
    center = math.log(abs(x)) / math.log(abs(q))
    for n in range(math.floor(center) - 1, math.ceil(center) + 2):
        qn = q**n
        if abs(x - qn) < delta * abs(qn):
            return n
    return None


@dataclass(frozen=True)
class Residual:
    """A signed residual together with the magnitude it should be judged against."""

    value: complex
    scale: float

    @classmethod
    def between(cls, lhs: Number, rhs: Number) -> "Residual":
        lhs, rhs = complex(lhs), complex(rhs)
        return cls(lhs - rhs, max(abs(lhs), abs(rhs)))

    @classmethod
    def of_terms(cls, terms: Iterable[Number]) -> "Residual":
        terms = [complex(t) for t in terms]
        return cls(sum(terms), max((abs(t) for t in terms), default=0.0))

    @property
    def abs(self) -> float:
        return abs(self.value)

    @property
    def rel(self) -> float:
        if self.scale == 0:
            return 0.0 if self.value == 0 else math.inf
        return abs(self.value) / self.scale
