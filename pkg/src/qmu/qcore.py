"""q-shifted factorials, the Jacobi theta function, q-binomials and Dedekind eta."""

from __future__ import annotations

import math
from numbers import Integral
from typing import Iterable, Union

from .numerics import (
    DEFAULT_POLICY,
    Modulus,
    Number,
    PoleHit,
    SummationPolicy,
    as_q,
    near_lattice,
    prod_infinite,
    qpow,
    sum_bilateral,
)

INF = math.inf
LATTICE_DELTA = 1e-10

Index = Union[int, float, complex]


def _is_int(n) -> bool:
    if isinstance(n, Integral):
        return True
    if isinstance(n, float):
        return n.is_integer()
    if isinstance(n, complex):
        return n.imag == 0 and n.real.is_integer()
    return False


def _require_unit_disc(q: complex) -> None:
    if not abs(q) < 1:
        raise ValueError(f"infinite products need |q| < 1, got |q| = {abs(q)!r}")


def _poch_inf(x: complex, q: complex, policy: SummationPolicy) -> complex:
    if x == 0:
        return 1 + 0j
    _require_unit_disc(q)

    def factors():
        t = x
        while True:
            yield 1 - t
            t *= q

    return complex(prod_infinite(factors(), policy))


def qpoch(x: Number, q, n: Index = INF, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The q-shifted factorial ``(x; q)_n``.

    ``n`` may be any integer, ``math.inf``, or a non-integer (real or complex)
    exponent alpha, for which ``(x)_alpha = (x)_inf / (q**alpha x)_inf`` with the
    principal branch of ``q**alpha``.  Integer indices do not require ``|q| < 1``.
    """
    x = complex(x)
    if n == INF:
        return _poch_inf(x, as_q(q), policy)
    if _is_int(n):
        n = int(complex(n).real)
        q = as_q(q)
        out = 1 + 0j
        if n >= 0:
            t = x
            for _ in range(n):
                out *= 1 - t
                t *= q
            return out
        qi = 1 / q
        t = x * qi
        for _ in range(-n):
            f = 1 - t
            if abs(f) < LATTICE_DELTA:
                raise PoleHit(f"(x; q)_{n} has a vanishing denominator factor at x = {x!r}")
            out *= f
            t *= qi
        return 1 / out
    shifted = qpow(q, n) * x
    num = _poch_inf(x, as_q(q), policy)
    den = _poch_inf(shifted, as_q(q), policy)
    if abs(den) == 0 or (shifted != 0 and _on_neg_lattice(shifted, as_q(q))):
        raise PoleHit(f"(q^alpha x; q)_inf vanishes for alpha = {n!r}")
    return num / den


def _on_neg_lattice(z: complex, q: complex) -> bool:
    m = near_lattice(z, q, LATTICE_DELTA)
    return m is not None and m <= 0


def qpoch_multi(xs: Iterable[Number], q, n: Index = INF, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``(x_1, ..., x_r; q)_n`` as a product of single q-shifted factorials."""
    out = 1 + 0j
    for x in xs:
        out *= qpoch(x, q, n, policy)
    return out


def _theta_sum_terms(x: complex, q: complex):
    def pos():
        t = 1 + 0j
        n = 0
        while True:
            yield t
            t *= -x * q**n
            n += 1

    def neg():
        # (-x)^(-m) q^(m(m+1)/2), m = 1, 2, ...
        t = 1 + 0j
        m = 1
        while True:
            t *= -q**m / x
            yield t
            m += 1

    return pos(), neg()


def theta(x: Number, q, rep: str = "product", policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """Jacobi theta ``theta(x; q) = (x, q/x; q)_inf``.

    ``rep="sum"`` uses the triple-product series
    ``(q; q)_inf^{-1} sum_n (-x)^n q^{n(n-1)/2}`` instead.  The function
    vanishes exactly on ``q**Z``.
    """
    x = complex(x)
    qv = as_q(q)
    if x == 0:
        raise PoleHit("theta(x) is singular at x = 0")
    _require_unit_disc(qv)
    if rep == "product":
        return _poch_inf(x, qv, policy) * _poch_inf(qv / x, qv, policy)
    if rep == "sum":
        s = sum_bilateral(_theta_sum_terms(x, qv), policy)
        return complex(s) / _poch_inf(qv, qv, policy)
    raise ValueError(f"unknown theta representation {rep!r}")


def qbinom(alpha: Index, beta: Index, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``binom(alpha, beta)_q = (q)_alpha / ((q)_beta (q)_{alpha - beta})``.

    For integers this is the Gaussian binomial (zero outside 0 <= beta <= alpha)
    and needs no restriction on ``q``.
    """
    if _is_int(alpha) and _is_int(beta):
        a, b = int(complex(alpha).real), int(complex(beta).real)
        if a < 0:
            raise PoleHit(f"(q)_{a} is singular")
        if b < 0 or b > a:
            return 0j
        q = as_q(q)
        b = min(b, a - b)
        num = 1 + 0j
        den = 1 + 0j
        for k in range(1, b + 1):
            num *= 1 - q ** (a - b + k)
            den *= 1 - q**k
        return num / den
    qv = as_q(q)
    _require_unit_disc(qv)
    top = _poch_inf(qpow(q, alpha) * qv, qv, policy)
    if abs(top) == 0 or _on_neg_lattice(qpow(q, alpha) * qv, qv):
        raise PoleHit(f"(q)_alpha is singular at alpha = {alpha!r}")
    num = _poch_inf(qpow(q, beta) * qv, qv, policy) * _poch_inf(qpow(q, alpha) / qpow(q, beta) * qv, qv, policy)
    return num / (top * _poch_inf(qv, qv, policy))


def eta(q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """Dedekind eta ``q**(1/24) (q; q)_inf`` with q**(1/24) = exp(2 pi i tau / 24)."""
    m = q if isinstance(q, Modulus) else Modulus.from_q(q)
    return m.power(1 / 24) * qpoch(m.q, m.q, INF, policy)


def eta_ratio_5(q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``eta(5 tau) / eta(tau / 5)`` for the modulus ``q = exp(2 pi i tau)``."""
    m = q if isinstance(q, Modulus) else Modulus.from_q(q)
    q5 = Modulus.from_tau(5 * m.tau)
    q_fifth = Modulus.from_tau(m.tau / 5)
    return eta(q5, policy) / eta(q_fifth, policy)
