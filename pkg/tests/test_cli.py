import json
import subprocess
import sys

import pytest

from lpstab.cli import main, resolve_tolerance

PAIR_CSV = "weight,f,g\n0.5,1,2\n0.5,1,0\n"


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def pair(tmp_path):
    path = tmp_path / "pair.csv"
    path.write_text(PAIR_CSV)
    return str(path)


@pytest.fixture
def write_json(tmp_path):
    def _write(obj, name="in.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    return _write


def test_holder_ok(pair, capsys):
    code, out, _ = run(["holder", "--p", "1.3333333333333333", "--input", pair], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["violations"] == []
    assert rep["payload"]["bound"]["actual"] == 1.0
    assert rep["input_digest"].startswith("sha256:")


def test_holder_equality(write_json, capsys):
    path = write_json({"weights": [0.3, 0.7], "functions": {"f": [1, 2], "g": [1, 2]}})
    code, out, _ = run(["holder", "--p", "2", "--input", path], capsys)
    b = json.loads(out)["payload"]["bound"]
    assert code == 0
    assert b["lower_slack"] == pytest.approx(0, abs=1e-14)
    assert b["upper_slack"] == pytest.approx(0, abs=1e-14)


def test_modified_holder_violation(pair, capsys):
    code, out, _ = run(
        ["holder", "--p", "1.3333333333333333", "--c-lo", "0.5", "--c-hi", "0.25", "--input", pair],
        capsys,
    )
    rep = json.loads(out)
    assert code == 1
    assert rep["violations"]
    assert rep["payload"]["bound"]["lower"] == pytest.approx(2**0.25, abs=1e-12)


def test_usage_and_input_errors(tmp_path, pair, capsys):
    assert run(["holder", "--input", pair], capsys)[0] == 2
    bad = tmp_path / "bad.csv"
    bad.write_text("weight,f,g\n0.5,1,nan\n")
    code, _, err = run(["holder", "--p", "2", "--input", str(bad)], capsys)
    assert code == 2 and "line 2" in err
    assert run(["verify"], capsys)[0] == 2
    assert run(["holder", "--p", "2", "--input", str(tmp_path / "missing.json")], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 2


def test_complex_gate(write_json, capsys):
    doc = {"weights": [0.5, 0.5], "functions": {"f": [1, 1], "h": {"re": [0, 1], "im": [1, 0]}}}
    path = write_json(doc)
    assert run(["minkowski", "--p", "1.5", "--input", path], capsys)[0] == 0
    assert run(["cancel", "--p", "2", "--t", "0.9", "--input", path], capsys)[0] == 0
    # the open complex case is refused
    assert run(["cancel", "--p", "1.5", "--t", "0.9", "--input", path], capsys)[0] == 2


def test_young(capsys):
    code, out, _ = run(["young", "--u", "2", "--v", "3", "--p", "1.5"], capsys)
    assert code == 0 and json.loads(out)["operation"] == "young"
    assert run(["young", "--u", "2", "--v", "3", "--p", "3"], capsys)[0] == 2


def test_interp_commands(write_json, capsys):
    path = write_json({"weights": [0.01, 0.99], "functions": {"f": [10, 0]}})
    code, out, _ = run(["interp", "--r", "1.5", "--s", "2", "--input", path], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["payload"]["containment"]["lower_bracket"] == pytest.approx(-0.35, abs=1e-12)
    path = write_json({"weights": [0.5, 0.5], "functions": {"f": [2, 1], "h": [3, 3]}}, "two.json")
    code, out, _ = run(["interp2", "--p0", "1", "--p", "1.5", "--p1", "3", "--input", path], capsys)
    rep = json.loads(out)
    assert code == 0 and "bound" in rep["payload"] and "midpoint" in rep["payload"]


def test_cancel_unit_pair(write_json, capsys):
    path = write_json({"weights": [0.5, 0.5], "functions": {"f": [1, 1], "h": [-1, 1]}})
    code, out, _ = run(["cancel", "--p", "2", "--t", "0.5", "--input", path], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["payload"]["midpoint"]["regime"] == "cancellation"


def test_fixtures_command(capsys):
    code, out, _ = run(["fixtures"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert all(fx["passed"] for fx in rep["payload"]["fixtures"])
    assert len(rep["payload"]["fixtures"]) >= 8


def test_convexity_command(capsys):
    code, out, _ = run(["convexity", "--p", "2", "--eps", "1", "--restarts", "4", "--seed", "1"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["payload"]["delta_estimate"] == pytest.approx(1 - 0.75**0.5, abs=1e-9)


def test_verify_small_is_deterministic(capsys):
    argv = ["verify", "--seed", "5", "--cases", "30"]
    a = run(argv, capsys)
    b = run(argv, capsys)
    assert a[0] == 0 and a[1] == b[1]
    c = run(["verify", "--seed", "6", "--cases", "30"], capsys)
    assert c[0] == 0 and c[1] != a[1]


def test_tolerance_resolution(monkeypatch):
    monkeypatch.delenv("LPSTAB_REL_TOL", raising=False)
    assert resolve_tolerance(None) == 1e-12
    monkeypatch.setenv("LPSTAB_REL_TOL", "1e-6")
    assert resolve_tolerance(None) == 1e-6
    assert resolve_tolerance(1e-3) == 1e-3
    monkeypatch.setenv("LPSTAB_REL_TOL", "abc")
    with pytest.raises(ValueError):
        resolve_tolerance(None)


def test_rel_tol_can_absorb_violation(pair, capsys, monkeypatch):
    argv = ["holder", "--p", "1.3333333333333333", "--c-lo", "0.5", "--c-hi", "0.25", "--input", pair]
    assert run(argv + ["--rel-tol", "0.5"], capsys)[0] == 0
    monkeypatch.setenv("LPSTAB_REL_TOL", "0.5")
    assert run(argv, capsys)[0] == 0
    assert run(argv + ["--rel-tol", "0"], capsys)[0] == 1


def test_stdin_and_console_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "lpstab.cli", "holder", "--p", "2", "--input-format", "csv"],
        input=PAIR_CSV,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["operation"] == "holder"
