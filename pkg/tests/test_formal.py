import random

import pytest

from qmu import mu
from qmu.formal import (
    FormalSeries,
    divergent_f1,
    divergent_g1,
    ginf,
    jackson_theta,
    lb_composite,
    monomial,
    q_borel,
    q_laplace,
)
from qmu.numerics import NonConvergent, PoleHit
from qmu.qcore import qpoch

from conftest import assert_close, lmu_oracle, mpc, poch_inf, polar
from conftest import theta as theta_oracle


def test_borel_of_monomials():
    q = 0.3
    for k in range(6):
        b = q_borel(monomial(k), q)
        assert b.coeff(k) == pytest.approx(q ** (k * (k - 1) // 2))
        assert all(b.coeff(n) == 0 for n in range(8) if n != k)
    assert q_borel(monomial(0), q).coeff(0) == 1
    assert q_borel(monomial(1), q).coeff(1) == 1


def test_borel_of_g1_coefficients():
    a, q = 0.3, 0.2
    g = divergent_g1(a, q)
    b = q_borel(g, q)
    for n in range(11):
        direct = g.coeff(n) * q ** (n * (n - 1) // 2)
        expected = qpoch(a, q, n) / qpoch(q, q, n) * (-1) ** n * q ** (-n)
        assert_close(b.coeff(n), expected, 1e-13)
        assert_close(direct, expected, 1e-12)


def test_g1_first_coefficients():
    a, q = 0.3, 0.2
    g = divergent_g1(a, q)
    assert g.coeff(0) == 1
    assert g.coeff(1) == pytest.approx(-0.7 / 0.8 / 0.2)


def test_g1_degenerates_to_f1():
    # g1(xyq; a) -> f1 as a -> 0: coefficient of (xy)^n is g1_n q^n
    q = 0.2
    g, f = divergent_g1(q**8, q), divergent_f1(1, q)
    for n in range(9):
        assert_close(g.coeff(n) * q**n, f.coeff(n), 2e-5)


def test_borel_is_linear():
    q = 0.25
    g, h = divergent_g1(0.4, q), ginf(q)
    combo = q_borel(2 * g - (-3j) * h, q)
    bg, bh = q_borel(g, q), q_borel(h, q)
    for n in range(8):
        assert combo.coeff(n) == 2 * bg.coeff(n) + 3j * bh.coeff(n)


def test_coefficient_memo_is_stable():
    calls = []
    s = FormalSeries(lambda n: calls.append(n) or n * n)
    assert s.coeff(4) == s[4] == 16
    assert calls == [4]
    with pytest.raises(IndexError):
        s.coeff(-1)


def test_divergent_series_without_continuation():
    with pytest.raises(NonConvergent):
        divergent_g1(0.3, 0.2)(0.5)


def test_f1_borel_sum_continues_past_its_radius():
    q, y, t = 0.2, 1.3, 2.0  # |yt| > 1
    b = q_borel(divergent_f1(y, q), q)
    assert_close(b(t), complex(1 / poch_inf(-y * t, q)), 1e-13)
    assert_close(b(0.3), complex(1 / poch_inf(-y * 0.3, q)), 1e-14)


def test_jackson_theta():
    z, q = 0.6 + 0.2j, 0.3
    assert_close(jackson_theta(z, q), complex(poch_inf(q, q) * theta_oracle(-mpc(z), q)), 1e-14)


def test_laplace_of_constant_against_window():
    x, lam, q = 0.7, 0.3, 0.2
    window = sum(1 / (poch_inf(q, q) * theta_oracle(-mpc(lam) * mpc(q) ** n / mpc(x), q))
                 for n in range(-40, 41))
    assert_close(q_laplace(lambda t: 2.5, x, lam, q), 2.5 * complex(window), 1e-12)


def test_laplace_pole():
    with pytest.raises(PoleHit):
        q_laplace(lambda t: 1, 1.0, -0.2, 0.2)


@pytest.mark.parametrize("n", range(6))
def test_monomial_roundtrip(n):
    q, x = 0.2, 0.7
    for lam in (0.3, -1.1 + 0.4j):
        assert_close(lb_composite(monomial(n), x, lam, q), x**n, 1e-10)


def test_monomial_roundtrip_zero():
    assert_close(lb_composite(monomial(0), 0.7, 0.3, 0.2), 1, 1e-12)


def test_laplace_of_closed_integrand_is_little_mu():
    q = 0.2
    x, y = 0.6 + 0.3j, 1.4
    lhs = q_laplace(lambda t: 1 / qpoch(-t * y, q), x, -x / y, q)
    rhs = -1j * q ** (1 / 8) * lmu_oracle(x, y, q)
    assert_close(lhs, rhs, 1e-11)


def test_borel_laplace_image_on_random_grid():
    rng = random.Random(11)
    q = 0.25
    for _ in range(20):
        x, y = polar(rng, 0.2, 2.0), polar(rng, 0.5, 2.5)
        lhs = 1j * q ** (-1 / 8) * lb_composite(divergent_f1(y, q), x, -x / y, q)
        assert_close(lhs, mu.little_mu(x, y, q), 1e-9)


def test_borel_sum_with_overflowing_coefficients():
    # (-y)^n overflows long before the terms (yt)^n / (q)_n become negligible
    q, y, t = 0.35, 2.45, 0.4
    b = q_borel(divergent_f1(y, q), q)
    assert_close(b(t), complex(1 / poch_inf(-y * t, q)), 1e-12)
