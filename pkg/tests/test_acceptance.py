"""Acceptance checks, one test per criterion, at the stated sizes and tolerances."""

import json
import math
import subprocess
import sys
import time

import pytest

from lpstab import fixtures
from lpstab.convexity import delta_lower_bound
from lpstab.modulus import estimate_modulus, hanner_modulus
from lpstab.sweeps import run_suite

SEED = 2024


def verdict(n, ok, detail):
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def timed(name, cases):
    t0 = time.perf_counter()
    res = run_suite(name, SEED, cases)
    return res, time.perf_counter() - t0


def test_criterion_01_young_sandwich():
    res, dt = timed("young", 100_000)
    verdict(1, res.violations == 0 and res.checked == 100_000 and dt < 10,
            f"{res.checked} cases, {res.violations} violations, {dt:.1f}s (limit 10s)")


def test_criterion_02_holder_sandwich():
    res, dt = timed("holder", 100_000)
    verdict(2, res.violations == 0 and res.checked == 100_000 and dt < 60,
            f"{res.checked} cases, {res.violations} violations, {dt:.1f}s (limit 60s) {res.examples}")


def test_criterion_03_parallelogram_collapse():
    res, _ = timed("parallelogram", 10_000)
    verdict(3, res.violations == 0, f"{res.checked} cases at p=2, band 1e-10, {res.violations} violations")


def test_criterion_04_counterexample_fixtures():
    low = fixtures.modified_lower_violation()
    up = fixtures.modified_upper_violation()
    ok = (
        low["passed"] and up["passed"]
        and abs(low["lower"] - 2**0.25) <= 1e-12 and low["actual"] == 1.0
        and abs(up["upper"] - 2**-0.25) <= 1e-12 and up["actual"] == 1.0
    )
    verdict(4, ok, f"modified lower {low['lower']!r} > 1, modified upper {up['upper']!r} < 1")


def test_criterion_05_containment_exact_at_s_2r():
    res, _ = timed("containment_exact", 10_000)
    verdict(5, res.violations == 0, f"{res.checked} cases, band 1e-10, {res.violations} violations")


def test_criterion_06_negative_bracket():
    fx = fixtures.negative_bracket()
    ok = fx["passed"] and abs(fx["lower_bracket"] + 0.35) <= 1e-12 and fx["lower"] == 0.0
    verdict(6, ok, f"bracket {fx['lower_bracket']!r}, reported lower {fx['lower']!r}")


def test_criterion_07_two_exponent():
    fx = fixtures.two_exponent_example()
    targets = {"lower": 1.5137, "actual": 1.5419, "upper": 1.5538}
    close = all(abs(fx[k] - fx["oracle"][k]) <= 1e-3 for k in targets)
    near_stated = all(abs(fx[k] - v) <= 1e-3 for k, v in targets.items())
    res, _ = timed("two_exponent", 10_000)
    ok = fx["passed"] and close and near_stated and res.violations == 0 and res.checked >= 9_900
    verdict(7, ok, f"fixture {fx['lower']:.5f} <= {fx['actual']:.5f} <= {fx['upper']:.5f}; "
                   f"{res.checked} random cases, {res.violations} violations")


def test_criterion_08_midpoint_fixtures():
    rev = fixtures.midpoint_reversal()
    end = fixtures.midpoint_endpoint_11()
    # Directions: at p1 = 11 the endpoint norms are ordered (f below h) while
    # the angle condition fails, and the order at the midpoint 6 is reversed.
    ok = rev["passed"] and end["passed"]
    verdict(8, ok, f"||f||_6={rev['norm_f_6']:.6f} > ||h||_6={rev['norm_h_6']:.6f}; "
                   f"endpoint 11: {end['norms']['f_11']:.6f} < {end['norms']['h_11']:.6f}, "
                   f"angle hypothesis {end['hypotheses']['angle']}")


def test_criterion_09_mazur():
    res, _ = timed("mazur", 100_000)
    verdict(9, res.violations == 0 and res.checked >= 99_000,
            f"{res.checked} pairs, {res.violations} violations {res.examples}")


def test_criterion_10_minkowski_and_trianpos():
    res, _ = timed("minkowski", 100_000)
    ok = res.violations == 0 and res.counts == {"p<=2": 100_000, "p>=2": 100_000}
    verdict(10, ok, f"{res.counts}, {res.violations} violations {res.examples}")


def test_criterion_11_cancellation():
    real, _ = timed("cancellation_real", 100_000)
    cplx, _ = timed("cancellation_complex", 10_000)
    # the complex suite also checks that p < 2 is refused
    ok = real.violations == 0 and cplx.violations == 0 and real.checked == 100_000
    verdict(11, ok, f"real {real.counts}, complex {cplx.counts}, "
                    f"violations {real.violations}+{cplx.violations}")


def test_criterion_12_convexity_per_pair():
    res, _ = timed("convexity", 100_000)
    per = {}
    for key, n in res.counts.items():
        per[key.split(",")[0]] = per.get(key.split(",")[0], 0) + n
    ok = res.violations == 0 and per == {"cancellation": 100_000, "modulus": 100_000}
    verdict(12, ok, f"{res.counts}, {res.violations} violations {res.examples}")


def test_criterion_13_modulus_estimator():
    t0 = time.perf_counter()
    errs = {}
    for eps in (0.2, 0.5, 1.0, 1.5):
        est = estimate_modulus(2, 2, eps, seed=SEED, restarts=32)
        errs[eps] = abs(est.delta_estimate - (1 - math.sqrt(1 - eps * eps / 4)))
    est4 = estimate_modulus(4, 2, 0.5, seed=SEED, restarts=32)
    dt = time.perf_counter() - t0
    oracle = hanner_modulus(4, 0.5)
    rel = abs(est4.delta_estimate - oracle) / oracle
    lower = delta_lower_bound(4, 0.5)
    ok = (
        max(errs.values()) <= 1e-3
        and rel <= 0.02
        and est4.delta_estimate >= lower
        and abs(lower - 7.8125e-4) <= 1e-15
        and dt < 120
    )
    verdict(13, ok, f"p=2 max error {max(errs.values()):.2e}; p=4 estimate {est4.delta_estimate:.6e} "
                    f"vs oracle {oracle:.6e} (rel {rel:.1e}), bound {lower:.6e}; {dt:.1f}s (limit 120s)")


def _cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "lpstab.cli", *args], input=stdin, capture_output=True, text=True
    )


def test_criterion_14_cli_determinism_and_exit_codes(tmp_path):
    a = _cli("verify", "--seed", "42")
    b = _cli("verify", "--seed", "42")
    same = a.returncode == b.returncode == 0 and a.stdout == b.stdout and a.stdout
    pair = tmp_path / "pair.csv"
    pair.write_text("weight,f,g\n0.5,1,2\n0.5,1,0\n")
    bad = tmp_path / "bad.csv"
    bad.write_text("weight,f,g\n0.5,1,2\n0,1,0\n")
    cplx = tmp_path / "cplx.json"
    cplx.write_text(json.dumps(
        {"weights": [0.5, 0.5], "functions": {"f": [1, 1], "h": {"re": [0, 1], "im": [1, 0]}}}
    ))
    p43 = repr(4 / 3)
    matrix = [
        (("holder", "--p", p43, "--input", str(pair)), 0),
        (("holder", "--p", "2", "--input", str(pair), "--format", "table"), 0),
        (("holder", "--p", p43, "--c-lo", "0.5", "--c-hi", "0.25", "--input", str(pair)), 1),
        (("holder", "--p", p43, "--c-lo", "0.75", "--c-hi", "0.5", "--input", str(pair)), 0),
        (("holder", "--p", "2", "--input", str(bad)), 2),
        (("holder", "--input", str(pair)), 2),
        (("holder", "--p", "0.5", "--input", str(pair)), 2),
        (("young", "--u", "1", "--v", "2", "--p", "1.5"), 0),
        (("cancel", "--p", "2", "--t", "0.5", "--input", str(cplx)), 0),
        (("cancel", "--p", "1.5", "--t", "0.5", "--input", str(cplx)), 2),
        (("fixtures",), 0),
        (("verify",), 2),
        (("bogus",), 2),
    ]
    got = [(args, _cli(*args).returncode, want) for args, want in matrix]
    wrong = [(args[0], code, want) for args, code, want in got if code != want]
    verdict(14, bool(same) and not wrong,
            f"verify byte-identical: {bool(same)}; exit-code mismatches: {wrong}")
