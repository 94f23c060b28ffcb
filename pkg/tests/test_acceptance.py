"""The fifteen acceptance criteria, each reported as one PASS/FAIL line.

Random-grid criteria run through the identity registry at q in
{0.15, 0.25, 0.35} with 20 seeded points per identity and q value.
"""

import json
import random

import pytest
from click.testing import CliRunner

from qmu import fib, mu, suite
from qmu.cli import cli
from qmu.numerics import Residual

ACCEPTANCE_Q = (0.15, 0.25, 0.35)
POINTS = 20
SEED = 2024

CRITERIA = {
    1: ["theta.triple_product"],
    2: ["theta.quasi_periodicity"],
    3: ["qbinomial_theorem"],
    4: ["formal.monomial_roundtrip"],
    5: ["lmu.borel_image", "gmu.zwegers", "gmu.formulas", "gmu.limit_y1"],
    6: ["lmu.q_difference", "lmu.symmetry", "lmu.rep_psi02", "lmu.rep_vwp", "lmu.limit_y1",
        "lmu.connection", "lmu.contiguous", "lmu.ramanujan_equation"],
    7: ["M.symmetry", "M.representations", "M.two_point"],
    8: ["lmu.wronskian_theta", "lmu.wronskian_phi01"],
    9: ["M.wronskian", "rr.quadratic", "rr.pseudo_constant"],
    10: ["M.fifth_root", "fib.determinant"],
    11: ["qde.gauge_solutions", "qde.newton_puiseux", "qde.hermite_weber", "rr.iz_relation", "rr.iz_recursion"],
    12: ["fib.closed_forms", "fib.reversal", "fib.garrett_ismail"],
    13: ["rr.identities", "rr.continued_fraction"],
    14: ["heine.identity", "heine.operator"],
}


@pytest.fixture(scope="module")
def reports():
    ids = sorted({i for group in CRITERIA.values() for i in group})
    _, reps = suite.run_suite(ACCEPTANCE_Q, POINTS, SEED, only=ids)
    return {r.identity_id: r for r in reps}


def summarize(group, reports):
    bad = [f"{i} {reports[i].status} max_rel={reports[i].max_rel_residual:.1e}"
           for i in group if reports[i].status != "pass"]
    worst = max(reports[i].max_rel_residual / reports[i].tolerance if reports[i].tolerance else
                reports[i].max_rel_residual for i in group)
    return not bad, "; ".join(bad) if bad else f"{len(group)} {'identity' if len(group) == 1 else 'identities'}, worst residual/tolerance {worst:.2g}"


@pytest.mark.parametrize("number", [1, 2, 3, 4, 6, 7, 8, 9, 11, 13, 14])
def test_registry_criteria(number, reports, acceptance_log):
    ok, detail = summarize(CRITERIA[number], reports)
    acceptance_log(number, ok, detail)
    assert ok, detail


# Criterion 5 has a second half: the a = q^8 degeneration at tolerance 5e-6.
# The gap to the limit is C(x, y) q^m with C up to ~60 on the sampling
# annuli, so q^8 is too coarse at the larger q values; the check is run as
# stated and expected to fail.
DEGENERATION_Q = (0.15, 0.2, 0.25, 0.35)


def degeneration_worst(m, tol):
    worst, failures, total = 0.0, 0, 0
    for q in DEGENERATION_Q:
        rng = suite.Draw(random.Random(f"{SEED}:degeneration:{q!r}"), q)
        for _ in range(POINTS):
            x, y = rng.x(), rng.y()
            ref = mu.little_mu(x, y, q)
            for shift in ("x", "y"):
                r = Residual.between(mu.degenerate_mu(x, y, m, q, shift), ref).rel
                worst = max(worst, r)
                failures += r > tol
                total += 1
    return worst, failures, total


def test_criterion_5_borel_image(reports):
    ok, detail = summarize(CRITERIA[5], reports)
    assert ok, detail


@pytest.mark.xfail(strict=True, reason="the a = q^8 gap is C q^8 with C up to ~60; 5e-6 is out of reach for q >= 0.2")
def test_criterion_5_degeneration(reports, acceptance_log):
    borel_ok, borel_detail = summarize(CRITERIA[5], reports)
    worst, failures, total = degeneration_worst(8, 5e-6)
    ok = borel_ok and failures == 0
    acceptance_log(5, ok, f"Borel image and generalized mu: {borel_detail}; degeneration at m=8: "
                          f"{failures}/{total} points above 5e-6, worst {worst:.1e}")
    assert ok


def test_criterion_10(reports, acceptance_log):
    ok, detail = summarize(CRITERIA[10], reports)
    worst = 0.0
    for q in ACCEPTANCE_Q:
        for t in (1, 0.7 + 0.3j):
            for n in range(9):
                det, closed = fib.fib_det(t, q, n)
                worst = max(worst, abs(det - closed))
    ok = ok and worst <= 1e-12
    acceptance_log(10, ok, f"{detail}; determinant max abs error {worst:.1e}")
    assert ok


def test_criterion_12(reports, acceptance_log):
    ok, detail = summarize(CRITERIA[12], reports)
    note = reports["fib.garrett_ismail"].note
    ok = ok and note == "normalization=regularized"
    acceptance_log(12, ok, f"{detail}; {note}")
    assert ok


def test_criterion_15(tmp_path, monkeypatch, acceptance_log):
    runner = CliRunner()
    run = lambda *a: runner.invoke(cli, list(a))  # noqa: E731
    problems = []

    args = ("suite", "--q", "0.2", "--points", "20", "--seed", "42", "--report", "json")
    first, second = run(*args), run(*args)
    if first.exit_code != 0 or first.output != second.output:
        problems.append("suite run not deterministic or not passing")
    else:
        doc = json.loads(first.output)
        if any(r["status"] != "pass" for r in doc["identities"]):
            problems.append("suite json reports a non-pass")

    if run("suite", "--points", "0").exit_code != 0:
        problems.append("vacuous suite run should exit 0")
    if run("eval", "theta", "--q", "0.2", "--x", "q").exit_code != 3:
        problems.append("pole should exit 3")
    if run("eval", "S", "--t", "1", "--q", "0.3", "--n", "x").exit_code != 2:
        problems.append("parse error should exit 2")
    if run("suite", "--points", "many").exit_code != 2:
        problems.append("malformed suite flag should exit 2")
    broken = suite.Identity("test.broken", 1e-9, lambda d, q: Residual(1.0, 1.0))
    monkeypatch.setitem(suite.REGISTRY, "test.broken", broken)
    if run("suite", "--q", "0.2", "--points", "1", "--only", "test.broken").exit_code != 1:
        problems.append("failing identity should exit 1")

    out = tmp_path / "grid.csv"
    res = run("grid", "M", "--n", "0", "--q", "0.2", "--var", "x", "--from", "0.1", "--to", "2",
              "--steps", "50", "--out", str(out))
    lines = out.read_text(encoding="utf-8").splitlines() if res.exit_code == 0 else []
    if len(lines) != 51:
        problems.append(f"grid should have 50 data rows, got {len(lines) - 1}")
    pole = tmp_path / "pole.csv"
    run("grid", "theta", "--q", "0.2", "--var", "x", "--from", "0.1", "--to", "0.3", "--steps", "3",
        "--out", str(pole))
    if pole.read_text(encoding="utf-8").splitlines()[2].split(",")[2:] != ["", "", "", "pole"]:
        problems.append("lattice row should be emitted with status pole and empty numbers")
    if run("grid", "theta", "--q", "0.2", "--var", "x", "--from", "0.1", "--to", "0.3", "--steps", "3",
           "--out", str(tmp_path / "no" / "dir.csv")).exit_code != 2:
        problems.append("unwritable path should exit 2")

    acceptance_log(15, not problems, "; ".join(problems) or "determinism, exit codes 0/1/2/3, grid rows and pole rows")
    assert not problems
