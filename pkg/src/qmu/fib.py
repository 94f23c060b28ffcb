"""q,t-Fibonacci sequences.

Both sequences solve ``F_n = F_{n-1} + t q^{n-2} F_{n-2}``: ``S_n`` with
``S_0 = 0, S_1 = 1`` and ``T_{n-1}`` with ``T_{-1} = 1, T_0 = 0`` (so the
recursion for T in its own index reads ``T_m = T_{m-1} + t q^{m-1} T_{m-2}``).
The recursion is definitional; the closed forms are finite q-binomial sums.
"""

from __future__ import annotations

from .hyper import phi01, ramanujan_A
from .numerics import Number, PoleHit, QSeriesError, Residual
from .qcore import qbinom, theta


class FibDivisionByZero(QSeriesError, ZeroDivisionError):
    """Backward recursion needs ``t != 0``."""


def _run(f0: complex, f1: complex, t: complex, q: complex, n: int) -> complex:
    # F_0 = f0, F_1 = f1 with F_n = F_{n-1} + t q^{n-2} F_{n-2}; returns F_n
    if n == 0:
        return f0
    if n == 1:
        return f1
    if n > 1:
        a, b = f0, f1
        for k in range(2, n + 1):
            a, b = b, b + t * q ** (k - 2) * a
        return b
    if t == 0:
        raise FibDivisionByZero("backward q,t-Fibonacci recursion needs t != 0")
    # F_{k-2} = (F_k - F_{k-1}) / (t q^{k-2})
    lo, hi = f0, f1  # F_{k-2}, F_{k-1} with k = 2 initially -> shift down
    k = 1
    while k > n:
        lo, hi = (hi - lo) / (t * q ** (k - 2)), lo
        k -= 1
    # now hi = F_k with k = n
    return hi


def S(t: Number, q: Number, n: int) -> complex:
    """``S_n(t, q)`` by the recursion (backward for n < 0)."""
    return _run(0j, 1 + 0j, complex(t), complex(q), n)


def T(t: Number, q: Number, n: int) -> complex:
    """``T_n(t, q)`` by the recursion; ``T_n`` is the shifted solution ``F_{n+1}``."""
    return _run(1 + 0j, 0j, complex(t), complex(q), n + 1)


def script_S(t: Number, q: Number, n: int) -> complex:
    """The finite sum ``sum_j q^{j^2} t^j binom(n-1-j, j)_q`` (zero for n <= 0)."""
    t, q = complex(t), complex(q)
    if n <= 0:
        return 0j
    return sum(q ** (j * j) * t**j * qbinom(n - 1 - j, j, q) for j in range((n - 1) // 2 + 1))


def S_closed(t: Number, q: Number, n: int) -> complex:
    t, q = complex(t), complex(q)
    if n >= 0:
        return script_S(t, q, n)
    return -((-t) ** n) * q ** (n * (n - 1) // 2) * script_S(t / q, 1 / q, -n)


def T_closed(t: Number, q: Number, n: int) -> complex:
    t, q = complex(t), complex(q)
    if n >= 0:
        return t * script_S(q * t, q, n)
    return (-t) ** (n + 1) * q ** (n * (n + 1) // 2) * script_S(t, 1 / q, -n)


def S_schur(q: Number, n: int) -> complex:
    """Schur's ``S_n(q) = S_n(1, q)`` by its explicit sum."""
    q = complex(q)
    if n > 0:
        return sum(q ** (j * j) * qbinom(n - j - 1, j, q) for j in range((n - 1) // 2 + 1))
    if n < 0:
        return (-1) ** (n - 1) * q ** (n * (n - 1) // 2) * sum(
            q ** (j * j + j * n) * qbinom(-n - j - 1, j, q) for j in range((-n - 1) // 2 + 1)
        )
    return 0j


def T_schur(q: Number, n: int) -> complex:
    """Schur's ``T_n(q) = T_n(1, q)`` by its explicit sum."""
    q = complex(q)
    if n > 0:
        return sum(q ** (j * j + j) * qbinom(n - j - 1, j, q) for j in range((n - 1) // 2 + 1))
    if n < 0:
        return (-1) ** (n - 1) * q ** (n * (n + 1) // 2) * sum(
            q ** (j * j + j * n + j) * qbinom(-n - j - 1, j, q) for j in range((-n - 1) // 2 + 1)
        )
    return 0j


def fib_det(t: Number, q: Number, n: int) -> tuple[complex, complex]:
    """``S_{n+1} T_{n-1} - S_n T_n`` and its closed value ``(-t)^n q^{n(n-1)/2}``."""
    t, q = complex(t), complex(q)
    det = S(t, q, n + 1) * T(t, q, n - 1) - S(t, q, n) * T(t, q, n)
    return det, (-t) ** n * q ** (n * (n - 1) // 2)


def reversal_residual(t: Number, q: Number, n: int) -> tuple[complex, complex]:
    """Both reversal relations, evaluated with the closed forms at ``1/q``.

    ``S_n(t,q) = (-t)^{n-1} q^{n(n-1)/2} T_{-n}(t,1/q)`` and
    ``T_{n-1}(t,q) = (-t)^n q^{n(n-1)/2} S_{1-n}(t,1/q)``.
    """
    t, q = complex(t), complex(q)
    w = q ** (n * (n - 1) // 2)
    r1 = S_closed(t, q, n) - (-t) ** (n - 1) * w * T_closed(t, 1 / q, -n)
    r2 = T_closed(t, q, n - 1) - (-t) ** n * w * S_closed(t, 1 / q, 1 - n)
    return r1, r2


# The Garrett-Ismail evaluation of f0 on the lattice q^{n-1}.  Read literally
# it divides by theta at lattice points, so three normalizations are compared.
GI_CANDIDATES = ("theta_plus", "theta_minus", "regularized")


def garrett_ismail_candidates(n: int, q: Number) -> dict[str, Residual | str]:
    """Residuals of the three readings of ``f0(q^{n-1}) = G T_{n-1} / theta(-q) + H S_n / theta(-q^2)``.

    ``theta_plus`` uses theta(q), theta(q^2) and f0(z) = A(z)/theta(zq), which
    all vanish on the lattice; ``theta_minus`` reads f0(z) as A(z)/theta(-zq);
    ``regularized`` clears the theta factors:
    ``(-1)^{n-1} q^{n(n-1)/2} A(q^{n-1}) = H S_n - G T_{n-1}``, judged against
    its largest term since the right side cancels heavily for large n.
    A candidate that cannot be evaluated maps to the reason.
    """
    q = complex(q)
    g, h = phi01(q, q), phi01(q * q, q)
    s_n, t_n = S(1, q, n), T(1, q, n - 1)
    a_val = ramanujan_A(q ** (n - 1), q)
    out: dict[str, Residual | str] = {}
    th_q, th_q2 = theta(q, q), theta(q * q, q)
    if th_q == 0 or th_q2 == 0 or theta(q**n, q) == 0:
        out["theta_plus"] = "pole: theta vanishes on q^Z"
    else:  # pragma: no cover - theta(q) is exactly zero
        out["theta_plus"] = Residual.between(a_val / theta(q**n, q), g * t_n / th_q + h * s_n / th_q2)
    try:
        lhs = a_val / theta(-(q**n), q)
        out["theta_minus"] = Residual.between(lhs, g * t_n / theta(-q, q) + h * s_n / theta(-q * q, q))
    except PoleHit as exc:
        out["theta_minus"] = f"pole: {exc}"
    out["regularized"] = Residual.of_terms(
        [(-1) ** (n - 1) * q ** (n * (n - 1) // 2) * a_val, -h * s_n, g * t_n])
    return out


def garrett_ismail_normalization(q: Number, tol: float = 1e-10) -> str:
    """Pick the candidate that reproduces ``A(1) = H(q)`` at n = 1."""
    for name, res in garrett_ismail_candidates(1, q).items():
        if isinstance(res, Residual) and res.rel <= tol:
            return name
    raise QSeriesError("no Garrett-Ismail normalization is consistent at n = 1")


def garrett_ismail_residual(n: int, q: Number) -> Residual:
    """The certified (regularized) Garrett-Ismail residual."""
    return garrett_ismail_candidates(n, q)["regularized"]
