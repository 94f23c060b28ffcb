"""Second-order q-difference operators of Laplace type,
``sum_{l=0}^{2} (c_l + d_l x) T^l`` with ``T f(x) = f(qx)``.

Includes the six most degenerate equations of this class, their gauge
transformations to the Ramanujan equation ``[T^2 - T - qx] v = 0``, and
Newton-Puiseux point sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .hyper import phi, ramanujan_entire
from .mu import little_mu
from .numerics import DEFAULT_POLICY, Number, Residual, SummationPolicy, as_q
from .qcore import qpoch, theta

Pair = tuple[complex, complex]
# a base solution v0(z, modulus) of [T^2 - T - zq] v0 = 0 at that modulus
BaseSolution = Callable[[complex, complex], complex]


@dataclass(frozen=True)
class LaplaceOperator:
    """Coefficient pairs ``(c_l, d_l)`` for l = 2, 1, 0."""

    coeffs: tuple[Pair, Pair, Pair]
    name: str = ""

    def __post_init__(self):
        if len(self.coeffs) != 3:
            raise ValueError("a Laplace operator has exactly three coefficient pairs (l = 2, 1, 0)")
        pairs = tuple((complex(c), complex(d)) for c, d in self.coeffs)
        if all(c == 0 and d == 0 for c, d in pairs):
            raise ValueError("all coefficients are zero")
        object.__setattr__(self, "coeffs", pairs)

    def terms(self, f: Callable[[complex], Number], x: Number, q) -> list[complex]:
        x, qv = complex(x), as_q(q)
        return [(c + d * x) * complex(f(x * qv**l)) for (c, d), l in zip(self.coeffs, (2, 1, 0))]


def residual(op: LaplaceOperator, f: Callable[[complex], Number], x: Number, q) -> Residual:
    """``sum_l a_l(x) f(q^l x)`` with the largest term as scale."""
    return Residual.of_terms(op.terms(f, x, q))


def newton_puiseux(op: LaplaceOperator) -> frozenset[tuple[int, int]]:
    """Exponent pairs (k, l) whose coefficient of ``x^k T^l`` is nonzero."""
    points = set()
    for (c, d), l in zip(op.coeffs, (2, 1, 0)):
        if c != 0:
            points.add((0, l))
        if d != 0:
            points.add((1, l))
    return frozenset(points)


def ramanujan_operator(y: Number = 1, q=None) -> LaplaceOperator:
    """``[T^2 - T - qxy]``; q is required since it enters a coefficient."""
    if q is None:
        raise ValueError("the Ramanujan operator needs q")
    return LaplaceOperator(((1, 0), (-1, 0), (0, -as_q(q) * complex(y))), "ramanujan")


def hermite_weber_operator(a: Number) -> LaplaceOperator:
    """The q-Hermite-Weber operator ``[T^2 - (1 - ax) T - x]``."""
    return LaplaceOperator(((1, 0), (-1, complex(a)), (0, -1)), "hermite_weber")


def hermite_weber_g0(x: Number, a: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The convergent solution ``(ax)_inf / theta(x) 0phi1(-; ax; q, xq)``."""
    x, a, qv = complex(x), complex(a), as_q(q)
    return qpoch(a * x, qv, policy=policy) / theta(x, qv, policy=policy) * phi([], [a * x], qv, x * qv, policy)


def heine_operator(a: Number, b: Number, c: Number, q) -> LaplaceOperator:
    """Heine's operator ``[(c - abqx) T^2 - (c + q - (a+b) qx) T + q(1 - x)]``."""
    a, b, c, qv = complex(a), complex(b), complex(c), as_q(q)
    return LaplaceOperator(((c, -a * b * qv), (-(c + qv), (a + b) * qv), (qv, -qv)), "heine")


def catalog(a: Number, b: Number, q) -> dict[int, LaplaceOperator]:
    """The six most degenerate Laplace-type operators v1..v6."""
    a, b, qv = complex(a), complex(b), as_q(q)
    if a == 0 or b == 0:
        raise ValueError("catalog operators need a, b != 0")
    spec = {
        1: ((a, 0), (-1, 0), (0, -b * qv)),
        2: ((0, a * qv), (-1, 0), (-b, 0)),
        3: ((0, a * qv), (-1, 0), (0, -b * qv)),
        4: ((a, 0), (0, -qv), (0, -b * qv)),
        5: ((0, a * qv), (0, -qv), (-b, 0)),
        6: ((a, 0), (0, -qv), (-b, 0)),
    }
    return {k: LaplaceOperator(v, f"v{k}") for k, v in spec.items()}


def gauge_solution(k: int, a: Number, b: Number, x: Number, q, base: BaseSolution,
                   policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """The solution of catalog operator k obtained from a Ramanujan solution v0.

    ``base(z, modulus)`` must solve ``[T^2 - T - zq] v0 = 0`` at the modulus it
    is given; cases 3 and 6 call it at modulus q^2.
    """
    a, b, x, qv = complex(a), complex(b), complex(x), as_q(q)
    th = lambda z: theta(z, qv, policy=policy)  # noqa: E731
    q2 = qv * qv
    if k == 1:
        return th(-a * x) / th(-x) * base(a * b * x, qv)
    if k == 2:
        return th(-a * x) * base(a * b * x / qv, qv)
    if k == 3:
        return th(-a * x) * base(a * b * x * x / qv, q2)
    if k == 4:
        return th(x / b) / th(-x) * base(a * b / x, qv)
    if k == 5:
        return th(x * qv / b) * base(a * b / (x * qv), qv)
    if k == 6:
        return th(x * qv / b) * base(a * b / (x * x * qv), q2)
    raise ValueError("k must be in 1..6")


def f0_base(policy: SummationPolicy = DEFAULT_POLICY) -> BaseSolution:
    """The convergent Ramanujan solution f0 as a base for :func:`gauge_solution`."""
    return lambda z, modulus: ramanujan_entire(z, modulus, policy)


def little_mu_base(y_aux: Number, policy: SummationPolicy = DEFAULT_POLICY) -> BaseSolution:
    """``z -> lmu(z / y_aux, y_aux)`` at the requested modulus, the second Ramanujan solution."""
    y_aux = complex(y_aux)
    return lambda z, modulus: little_mu(z / y_aux, y_aux, modulus, policy=policy)


def little_mu_solution(x: Number, y_aux: Number, q, policy: SummationPolicy = DEFAULT_POLICY) -> complex:
    """``lmu(x / y_aux, y_aux)``, a solution of ``[T^2 - T - xq] v = 0`` in x."""
    return little_mu_base(y_aux, policy)(complex(x), as_q(q))


def casoratian(f: Callable[[complex], Number], g: Callable[[complex], Number], x: Number, q) -> complex:
    """``f(x) g(qx) - f(qx) g(x)``."""
    x, qv = complex(x), as_q(q)
    return complex(f(x)) * complex(g(qv * x)) - complex(f(qv * x)) * complex(g(x))
