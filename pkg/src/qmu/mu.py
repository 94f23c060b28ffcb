"""The little and generalized mu-functions, M_n, and the identities tying them
to the q,t-Fibonacci sequences.

Conventions: ``theta(x) = (x, q/x; q)_inf`` and ``iq^{-1/8}`` uses the principal
branch of ``q**(-1/8)``.  The little mu-function is

    lmu(x, y) = iq^{-1/8} / ((x)_inf (q)_inf theta(qy)) * 1psi2(x; 0, 0; q, 1/y)

for x, y off the lattice ``q**Z``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import fib
from .formal import divergent_f1, lb_composite
from .hyper import phi, phi01, psi
from .numerics import (
    DEFAULT_POLICY,
    Modulus,
    Number,
    PoleHit,
    Residual,
    SummationPolicy,
    as_q,
    near_lattice,
    qpow,
    sum_bilateral,
)
from .qcore import LATTICE_DELTA, qpoch, qpoch_multi, theta


class MuRep(str, Enum):
    DEFINITION = "definition"
    PSI02 = "psi02"
    VWP = "vwp"
    BOREL = "borel"


class MRep(str, Enum):
    SERIES = "series"
    PSI02 = "psi02"
    VWP = "vwp"
    THETA = "theta"


@dataclass(frozen=True)
class MuPoint:
    """A point (x, y) off the q-lattice, with an optional exponent m for ``a = q**m``."""

    x: complex
    y: complex
    q: complex
    m: Optional[Number] = None

    def __post_init__(self):
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "y", complex(self.y))
        object.__setattr__(self, "q", as_q(self.q))
        _off_lattice(self.q, x=self.x, y=self.y)


def _off_lattice(q, **args) -> None:
    for name, v in args.items():
        if v == 0 or near_lattice(v, q, LATTICE_DELTA) is not None:
            raise PoleHit(f"{name} = {v!r} lies on the q-lattice")


def _c8(q) -> complex:
    return 1j * qpow(q, -1 / 8)


def _rep(rep, kind):
    try:
        return kind(rep)
    except ValueError:
        raise ValueError(f"unknown representation {rep!r}; choose from {[r.value for r in kind]}") from None


# -- little mu ---------------------------------------------------------------

def _vwp_terms(x, y, q):
    # b_n = (x)_n / (1/y)_n q^{5n(n-1)/2} w^n, weighted by (1 - (x/y) q^{2n-1})
    w = -x * x / (y**3 * q)
    r = x / y

    def pos():
        b = 1 + 0j
        qn = 1 + 0j
        n = 0
        while True:
            yield (1 - r * qn * qn / q) * b
            b *= (1 - x * qn) / (1 - qn / y) * qn**5 * w
            qn *= q
            n += 1

    def neg():
        b = 1 + 0j
        qn = 1 + 0j  # q^n for the current (nonpositive) n
        while True:
            qn /= q
            # b_{n-1} / b_n with n-1 the new index, q^{n-1} = qn
            b *= (1 - qn / y) / (1 - x * qn) / (qn**5 * w)
            yield (1 - r * qn * qn / q) * b

    return pos(), neg()


def little_mu(x: Number, y: Number, q, rep="definition",
              policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``lmu(x, y)`` in one of four equivalent representations.

    ``definition``: the 1psi2 series.  ``psi02``: the 0psi2 form.
    ``vwp``: the very-well-poised bilateral sum.  ``borel``: iq^{-1/8} times
    the q-Borel-Laplace sum of the divergent series f1 along ``lambda = -x/y``.
    """
    x, y, qv = complex(x), complex(y), as_q(q)
    rep = _rep(rep, MuRep)
    _off_lattice(qv, x=x, y=y)
    c8 = _c8(q)
    if rep is MuRep.DEFINITION:
        den = qpoch(x, qv, policy=policy) * qpoch(qv, qv, policy=policy) * theta(qv * y, qv, policy=policy)
        return c8 * psi([x], [0, 0], qv, 1 / y, policy) / den
    if rep is MuRep.PSI02:
        den = qpoch(qv * y, qv, policy=policy) * qpoch(qv, qv, policy=policy) * theta(x, qv, policy=policy)
        return c8 * psi([], [1 / y, 0], qv, x / y, policy) / den
    if rep is MuRep.VWP:
        _off_lattice(qv, **{"x/(yq)": x / (y * qv)})
        den = (qpoch_multi([x, y * qv, qv], qv, policy=policy)
               * theta(x / (y * qv), qv, policy=policy))
        return c8 * complex(sum_bilateral(_vwp_terms(x, y, qv), policy)) / den
    return c8 * lb_composite(divergent_f1(y, qv), x, -x / y, qv, policy)


def little_mu_limit_rhs(x: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``lim_{y -> 1} theta(y) lmu(x, y) = iq^{-1/8} 0phi1(-; 0; q, xq^2) / theta(qx)``."""
    x, qv = complex(x), as_q(q)
    _off_lattice(qv, x=x)
    return _c8(q) * phi01(x * qv * qv, qv, policy) / theta(qv * x, qv, policy=policy)


def little_mu_limit(x: Number, q, h: float = 1e-3, rep="definition",
                    policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``lim_{y -> 1} theta(y) lmu(x, y)`` by Richardson extrapolation.

    The symmetric average over y = 1 +- h removes the odd error terms; one
    Richardson step on the pair (h, h/2) then leaves an O(h^4) error.
    """
    qv = as_q(q)

    def sym(step):
        total = 0j
        for y in (1 + step, 1 - step):
            total += theta(y, qv, policy=policy) * little_mu(x, y, q, rep, policy)
        return total / 2

    return (4 * sym(h / 2) - sym(h)) / 3


def connection_residuals(x: Number, y: Number, c1: Number, c2: Number, q,
                         policy: SummationPolicy = DEFAULT_POLICY) -> tuple[Residual, Residual]:
    """Residuals of the two connection formulas.

    The first expands ``lmu(x, y)`` over ``lmu(x/c_k, y c_k)``, k = 1, 2.  The
    second relates ``lmu(x, y)`` to ``lmu(x/c1, y c1)`` plus a 0phi1 term.
    """
    x, y, c1, c2, qv = (complex(v) for v in (x, y, c1, c2, as_q(q)))
    _off_lattice(qv, x=x, y=y, c1=c1, c2=c2, **{"c1/c2": c1 / c2, "c1 c2 y/x": c1 * c2 * y / x,
                                                "c1 y/x": c1 * y / x, "c2 y/x": c2 * y / x})
    th = lambda z: theta(z, qv, policy=policy)  # noqa: E731
    lmu = lambda a, b: little_mu(a, b, qv, policy=policy)  # noqa: E731
    base = lmu(x, y)
    denom = th(x) * th(y) * th(c1 * c2 * y / x)
    t1 = th(x / c1) * th(c1 * y) * th(c2 * y / x) * th(c2) / (denom * th(c2 / c1)) * lmu(x / c1, y * c1)
    t2 = th(x / c2) * th(c2 * y) * th(c1 * y / x) * th(c1) / (denom * th(c1 / c2)) * lmu(x / c2, y * c2)
    three_term = Residual.of_terms([base, -t1, -t2])
    inhom = (_c8(q) * th(c1) * th(y * c1 / x)
             / (th(x * qv) * th(y * qv) * th(c1 / x) * th(y * c1))
             * phi01(x * y * qv * qv, qv, policy))
    two_term = Residual.of_terms([base, -lmu(x / c1, y * c1), inhom])
    return three_term, two_term


def contiguous(x: Number, y: Number, n: int, q,
               policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``lmu(x q^{n-1}, y)`` against ``lmu(x/q, y) T_{n-1}(xy) + lmu(x, y) S_n(xy)``."""
    x, y, qv = complex(x), complex(y), as_q(q)
    lhs = little_mu(x * qv ** (n - 1), y, qv, policy=policy)
    t = x * y
    rhs = (little_mu(x / qv, y, qv, policy=policy) * fib.T(t, qv, n - 1)
           + little_mu(x, y, qv, policy=policy) * fib.S(t, qv, n))
    return Residual.between(lhs, rhs)


def q_difference_residual(x: Number, y: Number, q,
                          policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``lmu(x, y) = lmu(qx, y) - xy lmu(x/q, y)``."""
    x, y, qv = complex(x), complex(y), as_q(q)
    f = lambda a: little_mu(a, y, qv, policy=policy)  # noqa: E731
    return Residual.of_terms([f(x), -f(qv * x), x * y * f(x / qv)])


def _rr_pair(q, policy):
    qv = as_q(q)
    return phi01(qv, qv, policy), phi01(qv * qv, qv, policy)


def wronskians(x: Number, y: Number, c: Number, m: int, n: int, q,
               policy: SummationPolicy = DEFAULT_POLICY) -> dict[str, Residual]:
    """Residuals of the Wronskian relations between shifted little mu-functions.

    Keys: ``relation1`` (the c-dependent bilinear form), ``relation2`` (the
    0phi1-paired form), ``shifted1``/``shifted2`` (both at m = n + 1 with the
    given n), and ``n0_1``/``n0_2`` (both at n = 0).
    """
    x, y, c, qv = complex(x), complex(y), complex(c), as_q(q)
    _off_lattice(qv, x=x, y=y, c=c, **{"c/x": c / x, "yc": y * c, "yc/x": y * c / x})
    th = lambda z: theta(z, qv, policy=policy)  # noqa: E731
    lmu = lambda a, b: little_mu(a, b, qv, policy=policy)  # noqa: E731
    t = x * y
    P = qpow(q, -1 / 4) * th(c) * th(y * c / x) / (th(c / x) * th(y * c) * th(x) * th(y))
    c8 = _c8(q)

    def det(mm, nn):
        return fib.S(t, qv, mm) * fib.T(t, qv, nn - 1) - fib.S(t, qv, nn) * fib.T(t, qv, mm - 1)

    def rel1(mm, nn):
        lhs = (lmu(x / c * qv ** (nn - 1), y * c) * lmu(x * qv ** (mm - 1), y)
               - lmu(x / c * qv ** (mm - 1), y * c) * lmu(x * qv ** (nn - 1), y))
        return lhs

    def weight(k):
        return (-t) ** k * qv ** (k * (k - 1) // 2) * phi01(t * qv ** (k + 1), qv, policy)

    def rel2(mm, nn):
        return weight(nn) * lmu(x * qv ** (mm - 1), y) - weight(mm) * lmu(x * qv ** (nn - 1), y)

    out = {
        "relation1": Residual.between(rel1(m, n), P * det(m, n)),
        "relation2": Residual.between(rel2(m, n), c8 * det(m, n)),
        "shifted1": Residual.between(rel1(n + 1, n), (-t) ** n * qv ** (n * (n - 1) // 2) * P),
        "shifted2": Residual.of_terms([
            phi01(t * qv ** (n + 1), qv, policy) * lmu(x * qv**n, y),
            t * qv**n * phi01(t * qv ** (n + 2), qv, policy) * lmu(x * qv ** (n - 1), y),
            -c8,
        ]),
        "n0_1": Residual.between(lmu(x / (c * qv), y * c) * lmu(x, y) - lmu(x / c, y * c) * lmu(x / qv, y), P),
        "n0_2": Residual.of_terms([
            phi01(t * qv, qv, policy) * lmu(x, y),
            t * phi01(t * qv * qv, qv, policy) * lmu(x / qv, y),
            -c8,
        ]),
    }
    return out


# -- generalized mu ----------------------------------------------------------

def _half_power(xy: complex, alpha) -> complex:
    # (xy)^{alpha/2}; integer alpha goes through the principal square root
    if isinstance(alpha, int) or (isinstance(alpha, float) and alpha.is_integer()):
        return cmath.sqrt(xy) ** int(alpha)
    return cmath.exp(alpha / 2 * cmath.log(xy))


def generalized_mu(x: Number, y: Number, m: Number, q,
                   policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``mu(x, y; a)`` with ``a = q**m``.

    ``iq^{-1/8} (xy)^{m/2} (ax)_inf / ((x)_inf (q)_inf theta(y)) 1psi2(x; 0, ax; q, q/y)``.
    Integer m is the certified case; other exponents use principal branches.
    """
    x, y, qv = complex(x), complex(y), as_q(q)
    _off_lattice(qv, x=x, y=y)
    a = qpow(q, m)
    pre = (_c8(q) * _half_power(x * y, m) * qpoch(a * x, qv, policy=policy)
           / (qpoch_multi([x, qv], qv, policy=policy) * theta(y, qv, policy=policy)))
    return pre * psi([x], [0, a * x], qv, qv / y, policy)


def generalized_mu_psi02(x: Number, y: Number, m: Number, q,
                         policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The 0psi2 form ``iq^{-1/8} (xy)^{m/2} (a, ax)_inf / ((y)_inf (q)_inf theta(x)) 0psi2(-; q/y, ax; q, xq/y)``."""
    x, y, qv = complex(x), complex(y), as_q(q)
    _off_lattice(qv, x=x, y=y)
    a = qpow(q, m)
    pre = (_c8(q) * _half_power(x * y, m) * qpoch_multi([a, a * x], qv, policy=policy)
           / (qpoch_multi([y, qv], qv, policy=policy) * theta(x, qv, policy=policy)))
    return pre * psi([], [qv / y, a * x], qv, x * qv / y, policy)


def generalized_mu_vwp(x: Number, y: Number, m: Number, q,
                       policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The very-well-poised bilateral form.

    It reproduces ``generalized_mu`` only at m = 0; it is provided for
    exploration and is not part of the certified identities.
    """
    x, y, qv = complex(x), complex(y), as_q(q)
    _off_lattice(qv, x=x, y=y, **{"x/y": x / y})
    a = qpow(q, m)
    pre = (_c8(q) * _half_power(x * y, m) * qpoch_multi([a * x, y / a], qv, policy=policy)
           / (qpoch_multi([x, y, qv], qv, policy=policy) * theta(x / y, qv, policy=policy)))
    w = x * x / (a * y * y)

    def pos():
        b = 1 + 0j
        qn = 1 + 0j
        while True:
            yield (1 - x / y * qn * qn) * b
            b *= (1 - x * qn) * (1 - a * qv / y * qn) / ((1 - x / a * qn) * (1 - qv / y * qn)) * qn**4 * qv * w
            qn *= qv

    def neg():
        b = 1 + 0j
        qn = 1 + 0j
        while True:
            qn /= qv
            b *= (1 - x / a * qn) * (1 - qv / y * qn) / ((1 - x * qn) * (1 - a * qv / y * qn) * qn**4 * qv * w)
            yield (1 - x / y * qn * qn) * b

    return pre * complex(sum_bilateral((pos(), neg()), policy))


def zwegers_mu(x: Number, y: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``mu(x, y; q)`` as the Lerch-type sum
    ``iq^{-1/8} sqrt(xy) / ((q)_inf theta(y)) sum_n (-1)^n y^{-n} q^{n(n+1)/2} / (1 - x q^n)``."""
    x, y, qv = complex(x), complex(y), as_q(q)
    _off_lattice(qv, x=x, y=y)

    def pos():
        t = 1 + 0j  # (-1)^n y^{-n} q^{n(n+1)/2}
        qn = 1 + 0j
        while True:
            yield t / (1 - x * qn)
            qn *= qv
            t *= -qn / y

    def neg():
        t = 1 + 0j
        qn = 1 + 0j
        while True:
            t *= -y / qn
            qn /= qv
            yield t / (1 - x * qn)

    s = complex(sum_bilateral((pos(), neg()), policy))
    return _c8(q) * cmath.sqrt(x * y) / (qpoch(qv, qv, policy=policy) * theta(y, qv, policy=policy)) * s


def generalized_mu_formulas(x: Number, y: Number, m: Number, c: Number, c2: Number, q,
                            policy: SummationPolicy = DEFAULT_POLICY) -> dict[str, Residual]:
    """Residuals of the q-difference equation, symmetries, 0psi2 form and
    connection formulas of the generalized mu-function at ``a = q**m``."""
    x, y, c, c2, qv = complex(x), complex(y), complex(c), complex(c2), as_q(q)
    a = qpow(q, m)
    g = lambda s, t: generalized_mu(s, t, m, q, policy)  # noqa: E731
    th = lambda z: theta(z, qv, policy=policy)  # noqa: E731
    base = g(x, y)
    out = {
        "q_difference": Residual.of_terms([
            g(x * qv * qv, y), -cmath.sqrt(a) * (1 - a * x * y) * g(x * qv, y), -a * x * y * base]),
        "symmetry_swap": Residual.between(base, g(y, x)),
        "symmetry_shift": Residual.between(base, g(x / qv, y * qv)),
        "psi02": Residual.between(base, generalized_mu_psi02(x, y, m, q, policy)),
    }
    denom = th(x) * th(y) * th(c * c2 * y / x)
    t1 = th(x / c) * th(y * c) * th(c2) * th(c2 * y / x) / (denom * th(c2 / c)) * g(x / c, y * c)
    t2 = th(x / c2) * th(y * c2) * th(c) * th(c * y / x) / (denom * th(c / c2)) * g(x / c2, y * c2)
    out["connection_three_term"] = Residual.of_terms([base, -t1, -t2])
    axy = a * x * y
    inhom = (_c8(q) * _half_power(x * y, m) * th(c) * th(c * y / x)
             / (th(x) * th(y) * th(c / x) * th(c * y))
             * qpoch_multi([a, axy], qv, policy=policy) * phi([], [axy], qv, x * y * qv, policy))
    out["connection_two_term"] = Residual.of_terms([base, -g(x / c, y * c), -inhom])
    return out


def generalized_mu_limit_rhs(x: Number, m: Number, q,
                             policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``lim_{y -> 1} theta(y) mu(x, y; a) = iq^{-1/8} x^{m/2} (a, ax)_inf / theta(x) 0phi1(-; ax; q, xq)``."""
    x, qv = complex(x), as_q(q)
    _off_lattice(qv, x=x)
    a = qpow(q, m)
    return (_c8(q) * _half_power(x, m) * qpoch_multi([a, a * x], qv, policy=policy)
            / theta(x, qv, policy=policy) * phi([], [a * x], qv, x * qv, policy))


def degenerate_mu(x: Number, y: Number, m: int, q, shift: str = "x",
                  policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``(xy)^{-m/2} q^{-m/2} mu(qx, y; q^m)`` (or with ``qy`` when shift="y").

    Tends to ``lmu(x, y)`` as m grows; the gap is O(q^m).
    """
    x, y, qv = complex(x), complex(y), as_q(q)
    if shift == "x":
        g = generalized_mu(qv * x, y, m, q, policy)
    elif shift == "y":
        g = generalized_mu(x, qv * y, m, q, policy)
    else:
        raise ValueError("shift must be 'x' or 'y'")
    return g / (_half_power(x * y, m) * qpow(q, m / 2))


# -- M_n ---------------------------------------------------------------------

def M(n: int, x: Number, q, rep="series", policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``M_n(x; q) = -iq^{1/8} lmu(x, q^{n-1}/x)``.

    ``series`` and ``vwp`` go through :func:`little_mu`; ``psi02`` is
    ``0psi2(-; x q^{1-n}, 0; q, x^2 q^{1-n}) / ((q^n/x)_inf (q)_inf theta(x))``;
    ``theta`` combines the n = 0, 1 theta quotients with Schur's q-Fibonacci
    numbers: ``M_n = A(x) T_{n-1}(q) + B(x) S_n(q)``.
    """
    x, qv = complex(x), as_q(q)
    rep = _rep(rep, MRep)
    _off_lattice(qv, x=x)
    n = int(n)
    if rep in (MRep.SERIES, MRep.VWP):
        mu_rep = MuRep.DEFINITION if rep is MRep.SERIES else MuRep.VWP
        return -1j * qpow(q, 1 / 8) * little_mu(x, qv ** (n - 1) / x, q, mu_rep, policy)
    if rep is MRep.PSI02:
        den = qpoch_multi([qv**n / x, qv], qv, policy=policy) * theta(x, qv, policy=policy)
        s = qv ** (1 - n)
        return psi([], [x * s, 0], qv, x * x * s, policy) / den
    A, B = _m_theta_parts(x, qv, policy)
    return A * fib.T(1, qv, n - 1) + B * fib.S(1, qv, n)


def _m_theta_parts(x: complex, q: complex, policy) -> tuple[complex, complex]:
    _off_lattice(q, **{"x^2": x * x})
    q5 = q**5
    th = lambda z: theta(z, q, policy=policy)  # noqa: E731
    th5 = lambda z: theta(z, q5, policy=policy)  # noqa: E731
    G, H = _rr_pair(q, policy)
    x5 = x**5
    A = G * H * (th5(x5 * q * q) / (th(x * q) * th(x * x)) + th5(x5 * q**3) / (th(x) * th(x * x * q)))
    B = G * H * (th5(x5 * q) / (th(x) * th(x * x)) + th5(x5 * q**4) / (th(x * q) * th(x * x * q)))
    return A, B


def m_two_point(n: int, x: Number, y: Number, q,
                policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``0phi1(-; 0; q, q^{n+1})`` against
    ``(-1)^n q^{-n(n-1)/2} theta(x)^2 theta(y)^2 / (y theta(x/y) theta(xy)) (M_n(x) - M_n(y))``."""
    x, y, qv = complex(x), complex(y), as_q(q)
    _off_lattice(qv, **{"x/y": x / y, "xy": x * y})
    th = lambda z: theta(z, qv, policy=policy)  # noqa: E731
    lhs = phi01(qv ** (n + 1), qv, policy)
    rhs = ((-1) ** n * qv ** (-(n * (n - 1) // 2)) * th(x) ** 2 * th(y) ** 2
           / (y * th(x / y) * th(x * y)) * (M(n, x, qv, policy=policy) - M(n, y, qv, policy=policy)))
    return Residual.between(lhs, rhs)


def _schur_det(m: int, n: int, q: complex) -> complex:
    return fib.S(1, q, m) * fib.T(1, q, n - 1) - fib.S(1, q, n) * fib.T(1, q, m - 1)


def m_wronskian(x: Number, y: Number, m: int, n: int, q,
                policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``M_n(y) M_m(x) - M_m(y) M_n(x) = x theta(xy) theta(y/x) / (theta(x)^2 theta(y)^2) (S_m T_{n-1} - S_n T_{m-1})``."""
    x, y, qv = complex(x), complex(y), as_q(q)
    Mq = lambda k, z: M(k, z, qv, policy=policy)  # noqa: E731
    th = lambda z: theta(z, qv, policy=policy)  # noqa: E731
    lhs = Mq(n, y) * Mq(m, x) - Mq(m, y) * Mq(n, x)
    rhs = x * th(x * y) * th(y / x) / (th(x) ** 2 * th(y) ** 2) * _schur_det(m, n, qv)
    return Residual.between(lhs, rhs)


def m_phi01_relation(x: Number, m: int, n: int, q,
                     policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """The 0phi1-weighted relation between M_m and M_n at one point."""
    x, qv = complex(x), as_q(q)

    def w(k):
        return (-1) ** k * qv ** (k * (k - 1) // 2) * phi01(qv ** (k + 1), qv, policy)

    lhs = w(n) * M(m, x, qv, policy=policy) - w(m) * M(n, x, qv, policy=policy)
    return Residual.between(lhs, _schur_det(m, n, qv))


def m_shift_relation(x: Number, n: int, q, policy: SummationPolicy = DEFAULT_POLICY) -> Residual:
    """``0phi1(q^{n+1}) M_{n+1}(x) + q^n 0phi1(q^{n+2}) M_n(x) = 1``."""
    x, qv = complex(x), as_q(q)
    return Residual.of_terms([
        phi01(qv ** (n + 1), qv, policy) * M(n + 1, x, qv, policy=policy),
        qv**n * phi01(qv ** (n + 2), qv, policy) * M(n, x, qv, policy=policy),
        -1,
    ])


def rr_pseudo_constant(x: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``G(q) M_1(x) + H(q) M_0(x)``, which equals 1 for every admissible x."""
    G, H = _rr_pair(q, policy)
    return G * M(1, x, q, policy=policy) + H * M(0, x, q, policy=policy)


def m_at_fifth_root(q, policy: SummationPolicy = DEFAULT_POLICY) -> dict[str, tuple[complex, complex]]:
    """``M_0`` and ``M_1`` at ``x = q^{1/5}`` next to their closed eta/theta forms.

    ``M_0(q^{1/5}) = -(q)_inf / (q^{1/5}; q^{1/5})_inf (q^{1/5} G + q^{2/5} H)`` and
    ``M_1(q^{1/5}) = (q)_inf / (q^{1/5}; q^{1/5})_inf G``.
    """
    m = q if isinstance(q, Modulus) else Modulus.from_q(q)
    qv = m.q
    r = m.power(1 / 5)
    G, H = _rr_pair(qv, policy)
    k = qpoch(qv, qv, policy=policy) / qpoch(r, r, policy=policy)
    return {
        "M0": (M(0, r, qv, policy=policy), -k * (r * G + r * r * H)),
        "M1": (M(1, r, qv, policy=policy), k * G),
    }
