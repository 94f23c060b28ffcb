"""Shared helpers and independent mpmath oracles.

The oracles evaluate the defining series by brute-force windows at 30 digits,
sharing no code with the package.
"""

import cmath

import mpmath as mp
import pytest

mp.mp.dps = 30

WINDOW = 60


def rel_err(a, b):
    a, b = complex(a), complex(b)
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def assert_close(a, b, tol):
    err = rel_err(a, b)
    assert err <= tol, f"{a!r} vs {b!r}: relative error {err:.3e} > {tol:.1e}"


def mpc(z):
    z = complex(z)
    return mp.mpc(z.real, z.imag)


def poch(x, q, n):
    """(x; q)_n for any integer n, by finite products."""
    x, q = mpc(x), mpc(q)
    if n >= 0:
        out = mp.mpc(1)
        for k in range(n):
            out *= 1 - x * q**k
        return out
    out = mp.mpc(1)
    for k in range(1, -n + 1):
        out *= 1 - x * q ** (-k)
    return 1 / out


def poch_inf(x, q):
    return mp.qp(mpc(x), mpc(q))


def theta(x, q):
    return poch_inf(x, q) * poch_inf(mpc(q) / mpc(x), q)


def psi_window(upper, lower, q, z, window=WINDOW):
    q, z = mpc(q), mpc(z)
    e = len(lower) - len(upper)
    total = mp.mpc(0)
    for n in range(-window, window + 1):
        num = mp.mpc(1)
        for a in upper:
            num *= poch(a, q, n)
        den = mp.mpc(1)
        for b in lower:
            den *= poch(b, q, n)
        total += num / den * ((-1) ** n * q ** (n * (n - 1) // 2)) ** e * z**n
    return total


def c8(q):
    return 1j * mpc(q) ** (mp.mpf(-1) / 8)


def lmu_oracle(x, y, q):
    q_ = mpc(q)
    return complex(c8(q) * psi_window([x], [0, 0], q, 1 / mpc(y))
                   / (poch_inf(x, q) * poch_inf(q_, q) * theta(q_ * mpc(y), q)))


@pytest.fixture
def close():
    return assert_close


def polar(rng, lo, hi):
    return rng.uniform(lo, hi) * cmath.exp(1j * rng.uniform(0, 2 * cmath.pi))


_ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance_log(request):
    """Record one verdict line per acceptance criterion for the terminal summary."""
    log = request.config.stash.setdefault(_ACCEPTANCE, {})

    def record(number, passed, detail=""):
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}" + (f"  ({detail})" if detail else "")
        log[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_ACCEPTANCE, {})
    if log:
        terminalreporter.section("acceptance criteria")
        for number in sorted(log):
            terminalreporter.write_line(log[number])
