import csv
import json

import pytest
from click.testing import CliRunner

from qmu import fib, mu
from qmu.cli import cli, format_complex, parse_complex


@pytest.fixture
def run():
    runner = CliRunner()
    return lambda *args, **kw: runner.invoke(cli, list(args), **kw)


def value_of(output):
    return parse_complex(output.split("\t")[0])


def test_parse_complex():
    assert parse_complex("1.5+0.3i") == 1.5 + 0.3j
    assert parse_complex("-2") == -2
    assert parse_complex("0.5i") == 0.5j
    assert parse_complex("q", 0.2) == 0.2
    assert parse_complex("q^3", 0.5) == pytest.approx(0.125)
    with pytest.raises(ValueError):
        parse_complex("abc")


def test_format_complex_real():
    assert format_complex(0.3 + 0j) == repr(0.3)


def test_eval_little_mu(run):
    res = run("eval", "little_mu", "--q", "0.2", "--x", "0.5", "--y", "1.7", "--rep", "definition")
    assert res.exit_code == 0
    assert "err=" in res.output
    assert value_of(res.output) == pytest.approx(mu.little_mu(0.5, 1.7, 0.2), rel=1e-12)


def test_eval_equals_syntax(run):
    res = run("eval", "S", "--t=1", "--q=0.3", "--n=-1")
    assert res.exit_code == 0
    assert value_of(res.output) == pytest.approx(0.3)


def test_eval_backward_fibonacci(run):
    res = run("eval", "S", "--t", "1", "--q", "0.3", "--n", "-1")
    assert res.exit_code == 0
    assert value_of(res.output) == pytest.approx(fib.S(1, 0.3, -1))


def test_eval_pole_exit_code(run):
    res = run("eval", "theta", "--q", "0.2", "--x", "q")
    assert res.exit_code == 3
    assert "PoleHit" in res.output


def test_eval_parse_errors(run):
    assert run("eval", "S", "--t", "1", "--q", "0.3", "--n", "1.5").exit_code == 2
    assert run("eval", "theta", "--q", "0.2", "--x", "zz").exit_code == 2
    assert run("eval", "nosuch", "--q", "0.2").exit_code == 2
    assert run("eval", "theta", "--q", "0.2", "--x", "0.5", "--bogus", "1").exit_code == 2


def test_precision_variable(run):
    assert run("eval", "theta", "--q", "0.2", "--x", "0.5", env={"QMU_PRECISION": "f128"}).exit_code == 2
    assert run("eval", "theta", "--q", "0.2", "--x", "0.5", env={"QMU_PRECISION": "f64"}).exit_code == 0


def test_suite_json_is_deterministic(run):
    args = ("suite", "--q", "0.2", "--points", "3", "--seed", "42", "--report", "json")
    first, second = run(*args), run(*args)
    assert first.exit_code == 0
    assert first.output == second.output
    doc = json.loads(first.output)
    assert doc["header"] == {"q_values": [0.2], "points": 3, "seed": 42, "tol_profile": "default"}
    ids = [r["identity_id"] for r in doc["identities"]]
    assert ids == sorted(ids)
    fields = {"identity_id", "points_tested", "points_skipped", "max_abs_residual", "max_rel_residual", "status"}
    assert all(fields <= set(r) for r in doc["identities"])


def test_suite_zero_points_is_vacuous(run):
    res = run("suite", "--points", "0", "--report", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert all(r["status"] == "skip" and r["points_tested"] == 0 for r in doc["identities"])


def test_suite_text_report(run):
    res = run("suite", "--q", "0.2,0.3", "--points", "2", "--only", "theta.triple_product")
    assert res.exit_code == 0
    assert "PASS" in res.output and "theta.triple_product" in res.output


def test_suite_failure_exit_code(run, monkeypatch):
    from qmu import suite
    from qmu.numerics import Residual

    broken = suite.Identity("test.broken", 1e-9, lambda d, q: Residual(1e-3, 1.0))
    monkeypatch.setitem(suite.REGISTRY, "test.broken", broken)
    res = run("suite", "--q", "0.2", "--points", "2", "--only", "test.broken")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_suite_strict_profile(run):
    res = run("suite", "--q", "0.2", "--points", "2", "--tol-profile", "strict",
              "--only", "theta.triple_product", "--report", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["identities"][0]["tolerance"] == pytest.approx(1e-13)


def test_suite_bad_flags(run):
    assert run("suite", "--points", "-1").exit_code == 2
    assert run("suite", "--q", "1.5").exit_code == 2
    assert run("suite", "--tol-profile", "loose").exit_code == 2
    assert run("suite", "--only", "no.such.identity").exit_code == 2


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


def test_grid_rows(run, tmp_path):
    out = tmp_path / "m.csv"
    res = run("grid", "M", "--n", "0", "--q", "0.2", "--var", "x", "--from", "0.1", "--to", "2",
              "--steps", "50", "--out", str(out))
    assert res.exit_code == 0
    rows = read_csv(out)
    assert rows[0] == ["x_re", "x_im", "result_re", "result_im", "err", "status"]
    assert len(rows) == 51


def test_grid_single_step_equals_eval(run, tmp_path):
    out = tmp_path / "one.csv"
    res = run("grid", "theta", "--q", "0.2", "--var", "x", "--from", "0.7", "--to", "0.9",
              "--steps", "1", "--out", str(out))
    assert res.exit_code == 0
    rows = read_csv(out)
    assert len(rows) == 2
    ev = run("eval", "theta", "--q", "0.2", "--x", "0.7")
    assert complex(float(rows[1][2]), float(rows[1][3])) == value_of(ev.output)


def test_grid_pole_row(run, tmp_path):
    out = tmp_path / "pole.csv"
    res = run("grid", "theta", "--q", "0.2", "--var", "x", "--from", "0.1", "--to", "0.3",
              "--steps", "3", "--out", str(out))
    assert res.exit_code == 0
    rows = read_csv(out)[1:]
    assert [r[5] for r in rows] == ["ok", "pole", "ok"]
    assert rows[1][2:5] == ["", "", ""]


def test_grid_bad_inputs(run, tmp_path):
    assert run("grid", "theta", "--q", "0.2", "--var", "x", "--from", "0.1", "--to", "0.3",
               "--steps", "3", "--out", str(tmp_path / "missing" / "f.csv")).exit_code == 2
    assert run("grid", "theta", "--q", "0.2", "--var", "q", "--from", "0.1", "--to", "0.3",
               "--steps", "3", "--out", str(tmp_path / "f.csv")).exit_code == 2
