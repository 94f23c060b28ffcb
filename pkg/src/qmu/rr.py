"""Rogers-Ramanujan functions, the continued fraction R(q), the eta-quotient
relation, and the Ismail-Zhang bilateral series u(a, x, q)."""

from __future__ import annotations

from .hyper import phi01
from .mu import little_mu
from .numerics import (
    DEFAULT_POLICY,
    Modulus,
    NonConvergent,
    Number,
    PoleHit,
    Residual,
    SummationPolicy,
    as_q,
    qpow,
    sum_bilateral,
)
from .qcore import LATTICE_DELTA, eta_ratio_5, qpoch, qpoch_multi, theta

CF_MAX_DEPTH = 500


def G(q, rep: str = "sum", policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``G(q) = sum q^{n^2} / (q)_n = 1 / (q, q^4; q^5)_inf``."""
    qv = as_q(q)
    if rep == "sum":
        return phi01(qv, qv, policy)
    if rep == "product":
        return 1 / qpoch_multi([qv, qv**4], qv**5, policy=policy)
    raise ValueError(f"unknown representation {rep!r}")


def H(q, rep: str = "sum", policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``H(q) = sum q^{n^2+n} / (q)_n = 1 / (q^2, q^3; q^5)_inf``."""
    qv = as_q(q)
    if rep == "sum":
        return phi01(qv * qv, qv, policy)
    if rep == "product":
        return 1 / qpoch_multi([qv**2, qv**3], qv**5, policy=policy)
    raise ValueError(f"unknown representation {rep!r}")


def cf_convergents(q, depth: int):
    """Successive convergents of ``1 / (1 + q / (1 + q^2 / (1 + ...)))``."""
    qv = as_q(q)
    a_prev, a = 1 + 0j, 0j  # A_{-1}, A_0
    b_prev, b = 0j, 1 + 0j
    partial = 1 + 0j  # numerator of level k: 1, q, q^2, ...
    for _ in range(depth):
        a_prev, a = a, a + partial * a_prev
        b_prev, b = b, b + partial * b_prev
        partial = qv if partial == 1 else partial * qv
        if b == 0:
            raise PoleHit("continued fraction convergent has a zero denominator")
        yield a / b


def R(q, rep: str = "ratio", policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The Rogers-Ramanujan continued fraction ``R(q) = q^{1/5} H(q) / G(q)``."""
    fifth = qpow(q, 1 / 5)
    if rep == "ratio":
        return fifth * H(q, policy=policy) / G(q, policy=policy)
    if rep in ("cf", "continued_fraction"):
        prev = None
        for k, c in enumerate(cf_convergents(q, CF_MAX_DEPTH)):
            if prev is not None and abs(c - prev) <= policy.rel_tol * abs(c):
                return fifth * c
            prev = c
        raise NonConvergent(f"continued fraction not settled after {CF_MAX_DEPTH} levels")
    raise ValueError(f"unknown representation {rep!r}")


def rr_quadratic(q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``eta(5 tau) / eta(tau / 5) (1/R - 1 - R)``, identically 1."""
    r = R(q, policy=policy)
    return eta_ratio_5(q, policy) * (1 / r - 1 - r)


def rr_quadratic_product(q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The same quantity as ``(q)_inf / (q^{1/5}; q^{1/5})_inf (G^2 - q^{1/5} G H - q^{2/5} H^2)``."""
    m = q if isinstance(q, Modulus) else Modulus.from_q(q)
    r = m.power(1 / 5)
    g, h = G(m.q, policy=policy), H(m.q, policy=policy)
    return qpoch(m.q, m.q, policy=policy) / qpoch(r, r, policy=policy) * (g * g - r * g * h - r * r * h * h)


# -- Ismail-Zhang --------------------------------------------------------------

def iz_u(a: Number, x: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``u(a, x, q) = sum_{n in Z} q^{n^2} x^n / (aq)_n``."""
    a, x, qv = complex(a), complex(x), as_q(q)
    if x == 0:
        raise PoleHit("u(a, x, q) needs x != 0")

    def pos():
        t = 1 + 0j
        qn = 1 + 0j
        while True:
            yield t
            den = 1 - a * qn * qv
            if abs(den) < LATTICE_DELTA:
                raise PoleHit("(aq)_n vanishes")
            t *= qn * qn * qv * x / den
            qn *= qv

    def neg():
        t = 1 + 0j
        qn = 1 + 0j  # q^n at the current index
        while True:
            # t_{n-1} = t_n (1 - a q^n) q^{1-2n} / x
            t *= (1 - a * qn) * qv / (qn * qn * x)
            yield t
            qn /= qv

    return complex(sum_bilateral((pos(), neg()), policy))


def iz_relation_residual(a: Number, x: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``iq^{-1/8} u(a, x, q)`` against ``(1/a)_inf (q)_inf theta(x/a) lmu(x/a, 1/(aq))``."""
    a, x, qv = complex(a), complex(x), as_q(q)
    lhs = 1j * qpow(q, -1 / 8) * iz_u(a, x, qv, policy)
    rhs = (qpoch_multi([1 / a, qv], qv, policy=policy) * theta(x / a, qv, policy=policy)
           * little_mu(x / a, 1 / (a * qv), qv, policy=policy))
    return Residual.between(lhs, rhs)


def iz_recursion_residual(a: Number, m: int, q, policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``q^{m+1} u_{m+2} + a u_{m+1} - u_m`` with ``u_k = u(a, q^k, q)``."""
    qv = as_q(q)
    u = lambda k: iz_u(a, qv**k, qv, policy)  # noqa: E731
    return Residual.of_terms([qv ** (m + 1) * u(m + 2), complex(a) * u(m + 1), -u(m)])


def iz_operator_residual(a: Number, x: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``[x q T^2 + a T - 1] u(a, x, q)``."""
    a, x, qv = complex(a), complex(x), as_q(q)
    u = lambda z: iz_u(a, z, qv, policy)  # noqa: E731
    return Residual.of_terms([x * qv * u(x * qv * qv), a * u(x * qv), -u(x)])
