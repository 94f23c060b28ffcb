"""Formal power series, the q-Borel and q-Laplace transforms, and their composite.

The q-Laplace transform is the Jackson integral over the ray ``lambda q^Z``
against the kernel ``theta_q(z) = sum_n q^{n(n-1)/2} z^n = (q)_inf theta(-z)``.
With this kernel ``L_q B_q`` maps every monomial ``x^n`` to itself.
"""

from __future__ import annotations

import threading
from typing import Callable, Optional

from .numerics import (
    DEFAULT_POLICY,
    NonConvergent,
    Number,
    PoleHit,
    SummationPolicy,
    as_q,
    near_lattice,
    sum_bilateral,
    sum_unilateral,
)
from .qcore import INF, LATTICE_DELTA, qpoch, theta


class FormalSeries:
    """A power series ``sum_n c_n x^n`` given by a lazily evaluated coefficient rule.

    Coefficients are memoized; concurrent lookups of the same index return the
    same value.  ``degree`` marks a polynomial, summed exactly.  ``continuation`` optionally supplies the analytic continuation
    of the sum, used where the power series itself stops converging.
    ``borel_continuation`` does the same for the series' q-Borel transform,
    and ``borel_coeff`` gives that transform's coefficients in closed form
    (useful when ``c_n`` alone would overflow).
    """

    def __init__(self, coeff: Callable[[int], Number], name: str = "",
                 continuation: Optional[Callable[[complex], Number]] = None,
                 borel_continuation: Optional[Callable[[complex], Number]] = None,
                 degree: Optional[int] = None,
                 borel_coeff: Optional[Callable[[int], Number]] = None):
        self._rule = coeff
        self._memo: dict[int, complex] = {}
        self._lock = threading.Lock()
        self.name = name
        self.continuation = continuation
        self.borel_continuation = borel_continuation
        self.degree = degree
        self.borel_coeff = borel_coeff

    def coeff(self, n: int) -> complex:
        if n < 0:
            raise IndexError("coefficient index must be non-negative")
        if self.degree is not None and n > self.degree:
            return 0j
        try:
            return self._memo[n]
        except KeyError:
            pass
        value = complex(self._rule(n))
        with self._lock:
            return self._memo.setdefault(n, value)

    __getitem__ = coeff

    def coefficients(self, count: int) -> list[complex]:
        return [self.coeff(n) for n in range(count)]

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        return FormalSeries(lambda n: self.coeff(n) + other.coeff(n), degree=_max_degree(self, other))

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return FormalSeries(lambda n: self.coeff(n) - other.coeff(n), degree=_max_degree(self, other))

    def scale(self, c: Number) -> "FormalSeries":
        c = complex(c)
        return FormalSeries(lambda n: c * self.coeff(n), degree=self.degree)

    def __rmul__(self, c: Number) -> "FormalSeries":
        return self.scale(c)

    def __call__(self, z: Number, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
        """Sum the series at ``z``; a divergent series raises ``NonConvergent``.

        A continuation, when present, also covers coefficients that overflow
        before the terms have decayed.
        """
        z = complex(z)
        if self.degree is not None:
            return sum((self.coeff(n) * z**n for n in range(self.degree + 1)), 0j)

        def terms():
            zn = 1 + 0j
            n = 0
            while True:
                yield self.coeff(n) * zn
                zn *= z
                n += 1

        try:
            return complex(sum_unilateral(terms(), policy))
        except (NonConvergent, OverflowError):
            if self.continuation is None:
                raise
            return complex(self.continuation(z))

    def __repr__(self) -> str:
        return f"FormalSeries({self.name or self._rule!r})"


def _max_degree(a: FormalSeries, b: FormalSeries) -> Optional[int]:
    if a.degree is None or b.degree is None:
        return None
    return max(a.degree, b.degree)


def monomial(k: int) -> FormalSeries:
    return FormalSeries(lambda n: 1.0 if n == k else 0.0, f"x^{k}", degree=k)


def q_borel(g: FormalSeries, q) -> FormalSeries:
    """``B_q(g)``: the coefficient map ``a_n -> a_n q^{n(n-1)/2}``."""
    q = as_q(q)
    rule = g.borel_coeff or (lambda n: g.coeff(n) * q ** (n * (n - 1) // 2))
    return FormalSeries(rule, f"B_q({g.name})",
                        continuation=g.borel_continuation, degree=g.degree)


def jackson_theta(z: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The q-Laplace kernel ``theta_q(z) = (q)_inf theta(-z)``."""
    return qpoch(as_q(q), q, INF, policy) * theta(-complex(z), q, policy=policy)


def q_laplace(g_eval: Callable[[complex], Number], x: Number, lam: Number, q,
              policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """Jackson integral ``sum_n g(lam q^n) / theta_q(lam q^n / x)``."""
    x, lam, q = complex(x), complex(lam), as_q(q)
    if x == 0 or lam == 0:
        raise PoleHit("q-Laplace transform needs x != 0 and lambda != 0")
    if near_lattice(-lam / x, q, LATTICE_DELTA) is not None:
        raise PoleHit("-lambda/x lies on the q-lattice; the theta kernel vanishes")
    z = lam / x
    th0 = jackson_theta(z, q, policy)

    # theta_q(z q^n) = z^{-n} q^{-n(n-1)/2} theta_q(z) avoids one theta per term
    def pos():
        w = 1 + 0j  # z^n q^{n(n-1)/2}
        t = lam
        n = 0
        while True:
            yield complex(g_eval(t)) * w / th0
            w *= z * q**n
            t *= q
            n += 1

    def neg():
        w = 1 + 0j
        t = lam
        m = 1
        while True:
            w *= q**m / z  # z^{-m} q^{m(m+1)/2}
            t /= q
            yield complex(g_eval(t)) * w / th0
            m += 1

    return complex(sum_bilateral((pos(), neg()), policy))


def lb_composite(g: FormalSeries, x: Number, lam: Number, q,
                 policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``L_q B_q(g)(x; lam)``: sum the Borel transform on the ray, then integrate."""
    borel = q_borel(g, q)
    return q_laplace(lambda t: borel(t, policy), x, lam, q, policy)


def divergent_g1(a: Number, q) -> FormalSeries:
    """Coefficients ``(a)_n / (q)_n q^{-n(n+1)/2} (-1)^n`` of the divergent q-Hermite-Weber solution."""
    a, q = complex(a), as_q(q)
    return FormalSeries(
        lambda n: qpoch(a, q, n) / qpoch(q, q, n) * q ** (-(n * (n + 1) // 2)) * (-1) ** n,
        "g1",
        borel_coeff=lambda n: qpoch(a, q, n) / qpoch(q, q, n) * q ** (-n) * (-1) ** n,
    )


def divergent_f1(y: Number, q) -> FormalSeries:
    """``2phi0(0, 0; -; q, xy)`` as a series in x: coefficients ``(-y)^n q^{-n(n-1)/2} / (q)_n``.

    ``y = 1`` gives the stream in the combined variable ``xy``.
    """
    y, q = complex(y), as_q(q)
    # B_q(f1)(t) = sum (-yt)^n / (q)_n = 1 / (-yt)_inf  (q-binomial theorem)
    return FormalSeries(
        lambda n: (-y) ** n * q ** (-(n * (n - 1) // 2)) / qpoch(q, q, n), "f1",
        borel_continuation=lambda t: 1 / qpoch(-y * t, q),
        borel_coeff=lambda n: (-y) ** n / qpoch(q, q, n),
    )


def ginf(q) -> FormalSeries:
    """Coefficients ``q^{n(n+1)/2} / (q)_n`` of ``g_inf`` in the variable ``1/(xy)``."""
    q = as_q(q)
    return FormalSeries(lambda n: q ** (n * (n + 1) // 2) / qpoch(q, q, n), "g_inf")
