import pytest

from qmu import mu, rr
from qmu.numerics import PoleHit

from conftest import assert_close, poch


def test_trivial_modulus():
    assert rr.G(0) == 1 and rr.H(0) == 1


@pytest.mark.parametrize("q", [0.1, 0.2, 0.3])
def test_rogers_ramanujan_identities(q):
    assert_close(rr.G(q), rr.G(q, "product"), 1e-12)
    assert_close(rr.H(q), rr.H(q, "product"), 1e-12)


def test_h_against_direct_sum():
    q = 0.2
    oracle = sum(q ** (n * n + n) / poch(q, q, n) for n in range(40))
    assert_close(rr.H(q), complex(oracle), 1e-15)


def test_unknown_rep():
    with pytest.raises(ValueError):
        rr.G(0.2, "nope")
    with pytest.raises(ValueError):
        rr.R(0.2, "nope")


def test_continued_fraction():
    q = 0.2
    assert_close(rr.R(q, "cf"), rr.R(q), 1e-11)
    assert_close(rr.R(1e-10), 1e-10 ** 0.2, 1e-9)


def test_convergents_alternate_around_the_limit():
    q = 0.3
    limit = rr.R(q) / q ** 0.2
    conv = list(rr.cf_convergents(q, 12))
    signs = [(c - limit).real > 0 for c in conv[:8]]
    assert all(a != b for a, b in zip(signs, signs[1:]))


@pytest.mark.parametrize("q", [0.1, 0.2, 0.3])
def test_quadratic_relation(q):
    assert abs(rr.rr_quadratic(q) - 1) <= 1e-10
    assert_close(rr.rr_quadratic(q), rr.rr_quadratic_product(q), 1e-11)


def test_pseudo_constancy_across_points():
    q = 0.25
    assert abs(mu.rr_pseudo_constant(0.5, q) - mu.rr_pseudo_constant(1.3 + 0.4j, q)) <= 1e-10


def test_iz_series_against_window():
    a, x, q = 0.5, 0.7, 0.2
    oracle = sum(q ** (n * n) * x**n / poch(a * q, q, n) for n in range(-40, 41))
    assert_close(rr.iz_u(a, x, q), complex(oracle), 1e-13)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_iz_recursion(m):
    assert rr.iz_recursion_residual(0.5, m, 0.2).rel <= 1e-10


def test_iz_operator():
    assert rr.iz_operator_residual(0.5, 0.7, 0.2).rel <= 1e-10


def test_iz_mu_relation():
    assert rr.iz_relation_residual(0.6, 0.9, 0.2).rel <= 1e-9


def test_iz_zero_argument():
    with pytest.raises(PoleHit):
        rr.iz_u(0.5, 0, 0.2)
