import random

import pytest

from qmu.numerics import Residual
from qmu.suite import (
    DEFAULT_Q,
    REGISTRY,
    Draw,
    Identity,
    IdentityReport,
    run_identity,
    run_suite,
)


def test_registry_covers_every_area():
    prefixes = {i.split(".")[0] for i in REGISTRY}
    assert {"theta", "qbinomial_theorem", "heine", "formal", "lmu", "gmu", "M", "rr", "fib", "qde"} <= prefixes


def test_draw_is_seeded_and_in_annulus():
    a = Draw(random.Random("s"), 0.2)
    b = Draw(random.Random("s"), 0.2)
    xs = [a.x() for _ in range(50)]
    assert xs == [b.x() for _ in range(50)]
    assert all(0.2 <= abs(x) <= 2.0 for x in xs)
    assert all(0.5 <= abs(a.y()) <= 2.5 for _ in range(50))


def test_status_rules():
    ok = Identity("t.ok", 1e-9, lambda d, q: Residual(1e-12, 1.0))
    bad = Identity("t.bad", 1e-9, lambda d, q: Residual(1e-6, 1.0))
    assert run_identity(ok, (0.2,), 4, 0).status == "pass"
    report = run_identity(bad, (0.2,), 4, 0)
    assert report.status == "fail" and report.failures
    assert run_identity(ok, (0.2,), 0, 0).status == "skip"


def test_too_many_skips_fail():
    from qmu.numerics import NonConvergent

    calls = iter(range(1000))

    def flaky(d, q):
        if next(calls) % 2:
            raise NonConvergent("test")
        return Residual(0, 1)

    report = run_identity(Identity("t.flaky", 1e-9, flaky), (0.2,), 10, 0)
    assert report.points_skipped == 5 and report.status == "fail"


def test_report_dict_omits_failures():
    d = IdentityReport("x").as_dict()
    assert "failures" not in d and d["status"] == "skip"


def test_unknown_profile():
    with pytest.raises(ValueError):
        run_suite(points=1, tol_profile="nope")


def test_garrett_ismail_note():
    _, reports = run_suite((0.2,), 1, 0, only=["fib.garrett_ismail"])
    assert reports[0].note == "normalization=regularized"


def test_default_q_values():
    assert DEFAULT_Q == (0.15, 0.25, 0.35)
