"""Unilateral and bilateral basic hypergeometric series and the named series
built from them (the Ramanujan entire function and Heine's equation)."""

from __future__ import annotations

from typing import Sequence

from .numerics import (
    DEFAULT_POLICY,
    Divergent,
    Number,
    PoleHit,
    Residual,
    SummationPolicy,
    as_q,
    near_lattice,
    sum_bilateral,
    sum_unilateral,
)
from .qcore import LATTICE_DELTA, qpoch_multi, theta


def _phi_terms(upper, lower, q, z, e):
    t = 1 + 0j
    qn = 1 + 0j
    while True:
        yield t
        num = 1 + 0j
        for a in upper:
            num *= 1 - a * qn
        den = 1 - q * qn
        for b in lower:
            den *= 1 - b * qn
        t = t * num / den * z * (-qn) ** e
        qn *= q


def phi(upper: Sequence[Number], lower: Sequence[Number], q, z: Number,
        policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The unilateral series r_phi_s(upper; lower; q, z).

    Zero parameters are allowed.  Series with ``r > s + 1`` have zero radius
    of convergence and are refused; use :mod:`qmu.formal` for those.
    """
    upper = [complex(a) for a in upper]
    lower = [complex(b) for b in lower]
    q, z = as_q(q), complex(z)
    e = len(lower) - len(upper) + 1
    if z == 0:
        return 1 + 0j
    if e < 0:
        raise Divergent(f"{len(upper)}phi{len(lower)} diverges for z != 0; evaluate it as a formal series")
    if e == 0 and not abs(z) < 1:
        raise Divergent(f"balanced {len(upper)}phi{len(lower)} needs |z| < 1, got |z| = {abs(z)!r}")
    for b in lower:
        for k in range(1, 200):
            if abs(1 - b * q ** (k - 1)) < LATTICE_DELTA:
                raise PoleHit(f"lower parameter {b!r} lies in q^(-N)")
            if abs(b * q ** (k - 1)) < 1e-3:
                break
    return complex(sum_unilateral(_phi_terms(upper, lower, q, z, e), policy))


def _psi_terms(upper, lower, q, z, e):
    def pos():
        t = 1 + 0j
        qn = 1 + 0j
        n = 0
        while True:
            yield t
            num = 1 + 0j
            for a in upper:
                num *= 1 - a * qn
            den = 1 + 0j
            for b in lower:
                den *= 1 - b * qn
            if abs(den) < LATTICE_DELTA:
                raise PoleHit(f"(b)_n vanishes at n = {n + 1}")
            t = t * num / den * z * (-qn) ** e
            qn *= q
            n += 1

    def neg():
        t = 1 + 0j
        qi = 1 / q
        qm = qi  # q^-(m+1) at step m
        m = 0
        while True:
            num = 1 + 0j
            for b in lower:
                num *= 1 - b * qm
            den = 1 + 0j
            for a in upper:
                den *= 1 - a * qm
            if abs(den) < LATTICE_DELTA:
                raise PoleHit(f"(a)_n is singular at n = {-(m + 1)}")
            t = t * num / den * (-q ** (m + 1)) ** e / z
            yield t
            if t == 0:
                while True:
                    yield 0j
            qm *= qi
            m += 1

    return pos(), neg()


def psi(upper: Sequence[Number], lower: Sequence[Number], q, z: Number,
        policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The bilateral series r_psi_s(upper; lower; q, z).

    Negative-index factorials are reciprocal finite products, and a zero
    parameter contributes ``(0)_n = 1`` for every integer n.  Convergence is
    not checked up front; a divergent side raises ``NonConvergent`` naming
    the direction.
    """
    upper = [complex(a) for a in upper]
    lower = [complex(b) for b in lower]
    q, z = as_q(q), complex(z)
    if z == 0:
        raise PoleHit("bilateral series need z != 0")
    e = len(lower) - len(upper)
    return complex(sum_bilateral(_psi_terms(upper, lower, q, z, e), policy))


def phi01(z: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``0phi1(-; 0; q, z) = sum_n q^{n(n-1)} z^n / (q)_n``."""
    return phi([], [0], q, z, policy)


def ramanujan_A(z: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The entire function ``A(z) = 0phi1(-; 0; q, z q^2) = theta(zq) f0(z)``.

    ``A(1/q) = G(q)`` and ``A(1) = H(q)``.
    """
    q = as_q(q)
    return phi01(complex(z) * q * q, q, policy)


def ramanujan_entire(z: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The convergent solution ``f0(z) = A(z) / theta(zq)`` of the Ramanujan equation."""
    q = as_q(q)
    z = complex(z)
    th = theta(z * q, q, policy=policy)
    if abs(th) == 0 or z == 0:
        raise PoleHit(f"f0 has a pole at z = {z!r}")
    if near_lattice(z * q, q, LATTICE_DELTA) is not None:
        raise PoleHit(f"f0 has a pole at z = {z!r}")
    return ramanujan_A(z, q, policy) / th


def phi21(a, b, c, q, x, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    return phi([a, b], [c], q, x, policy)


def heine_operator_residual(a, b, c, x, q, policy: SummationPolicy = DEFAULT_POLICY):
    """Residual of Heine's equation applied to ``2phi1(a, b; c; q, x)``.

    Returns ``(residual, scale)`` where scale is the largest of the three
    operator terms.
    """
    a, b, c, x = (complex(v) for v in (a, b, c, x))
    q = as_q(q)
    f = [phi21(a, b, c, q, x * q**k, policy) for k in range(3)]
    terms = [
        (c - a * b * q * x) * f[2],
        -(c + q - (a + b) * q * x) * f[1],
        q * (1 - x) * f[0],
    ]
    return sum(terms), max(abs(t) for t in terms)


def heine_identity_residual(a, b, c, x, q, policy: SummationPolicy = DEFAULT_POLICY):
    """Difference of the two expressions of Heine's second solution around x = 0.

    ``theta(x)/theta(xq/c) 2phi1(aq/c, bq/c; q^2/c; x)`` versus
    ``(q/x, abx/c)_inf / theta(xq/c) 2phi1(q/a, q/b; q^2/c; abx/c)``.
    Returns ``(residual, scale)``.
    """
    a, b, c, x = (complex(v) for v in (a, b, c, x))
    q = as_q(q)
    if x == 0:
        raise PoleHit("theta(x) is singular at x = 0")
    th = theta(x * q / c, q, policy=policy)
    if abs(th) == 0:
        raise PoleHit("theta(xq/c) vanishes")
    left = theta(x, q, policy=policy) / th * phi21(a * q / c, b * q / c, q * q / c, q, x, policy)
    right = (qpoch_multi([q / x, a * b * x / c], q, policy=policy) / th
             * phi21(q / a, q / b, q * q / c, q, a * b * x / c, policy))
    return left - right, max(abs(left), abs(right))


def heine_residual(a, b, c, x, q, policy: SummationPolicy = DEFAULT_POLICY) -> tuple[Residual, Residual]:
    """Both Heine checks as :class:`Residual` objects: (identity, operator)."""
    ident = heine_identity_residual(a, b, c, x, q, policy)
    oper = heine_operator_residual(a, b, c, x, q, policy)
    return Residual(*ident), Residual(*oper)
