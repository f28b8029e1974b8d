"""Worked examples with known values and a known inequality direction.

Each fixture returns a dict with the computed quantities, the closed-form
values they are compared against, the expected direction, and ``passed``.
"""

from __future__ import annotations

import math

from .convexity import refined_minkowski
from .holder import holder_modified, holder_report
from .interpolation import containment_bounds, midpoint_compare, two_exponent_bounds
from .measure import MeasureSpace, SimpleFunction, norm, unit_interval_grid

EXACT = 1e-12
GRID_ATOMS = 100_000
GRID_TOL = 1e-3


def _half():
    return MeasureSpace([0.5, 0.5])


def modified_lower_violation():
    """f = 1, g = 2 on one half: raising the lower coefficient to 1/2 breaks the bound."""
    sp = _half()
    rep = holder_modified(SimpleFunction(sp, [1, 1]), SimpleFunction(sp, [2, 0]), 4 / 3, 0.5, 0.25)
    expected = 2 ** 0.25
    return {
        "name": "modified_lower_violation",
        "direction": "lower > actual",
        "lower": rep.lower,
        "actual": rep.actual,
        "expected_lower": expected,
        "passed": rep.lower > rep.actual and abs(rep.lower - expected) <= EXACT,
    }


def modified_upper_violation():
    """f = 2 on one half, g = 1: raising the upper coefficient to 1/2 breaks the bound."""
    sp = _half()
    rep = holder_modified(SimpleFunction(sp, [2, 0]), SimpleFunction(sp, [1, 1]), 4 / 3, 0.75, 0.5)
    expected = 2 ** -0.25
    return {
        "name": "modified_upper_violation",
        "direction": "upper < actual",
        "upper": rep.upper,
        "actual": rep.actual,
        "expected_upper": expected,
        "passed": rep.upper < rep.actual and abs(rep.upper - expected) <= EXACT,
    }


def holder_example_sandwich():
    """The same pair with the correct coefficients is a valid sandwich."""
    sp = _half()
    f, g = SimpleFunction(sp, [1, 1]), SimpleFunction(sp, [2, 0])
    rep = holder_report(f, g, 4 / 3)
    exp_norm = 2 ** (1 - 1 / 4)  # ||g||_4 on half weights
    return {
        "name": "holder_example_sandwich",
        "direction": "lower <= actual <= upper",
        "lower": rep.lower,
        "actual": rep.actual,
        "upper": rep.upper,
        "norm_g": norm(g, 4.0),
        "expected_norm_g": exp_norm,
        "passed": rep.holds() and abs(norm(g, 4.0) - exp_norm) <= EXACT,
    }


def disjoint_support():
    """Disjoint supports: theta^2 = 2, the product vanishes, the upper bound stays nonnegative."""
    sp = _half()
    f, g = SimpleFunction(sp, [1, 0]), SimpleFunction(sp, [0, 1])
    rep = holder_report(f, g, 1.5)
    n = rep.scale
    return {
        "name": "disjoint_support",
        "direction": "0 = lower = actual <= upper",
        "theta_sq": rep.theta_sq,
        "lower": rep.lower,
        "actual": rep.actual,
        "upper": rep.upper,
        "expected_upper": n * (1 - 2 / 3),
        "passed": rep.theta_sq == 2.0
        and rep.lower == 0.0
        and rep.actual == 0.0
        and abs(rep.upper - n / 3) <= EXACT * n,
    }


def negative_bracket():
    """The lower bracket can be negative; the reported bound is then 0."""
    sp = MeasureSpace([0.01, 0.99])
    rep = containment_bounds(SimpleFunction(sp, [10, 0]), 1.5, 2)
    return {
        "name": "negative_bracket",
        "direction": "lower bracket < 0, lower = 0",
        "lower_bracket": rep.lower_bracket,
        "expected_lower_bracket": -0.35,
        "lower": rep.lower,
        "actual": rep.actual,
        "upper": rep.upper,
        "passed": abs(rep.lower_bracket + 0.35) <= EXACT and rep.lower == 0.0 and rep.holds(),
    }


def two_exponent_example():
    """f = (2, 1) on half weights between exponents 1 and 3 at p = 3/2."""
    sp = _half()
    rep = two_exponent_bounds(SimpleFunction(sp, [2, 1]), 1, 1.5, 3)
    # Direct arithmetic: t = 1/2, coefficients (3/2, 1/2), ratio = 2.5/sqrt(1.5 * 4.5).
    ratio = 2.5 / math.sqrt(6.75)
    scale = 1.5**0.5 * 4.5 ** (1 / 6)
    oracle = {
        "lower": scale * (1 - 1.5 * (1 - ratio)) ** (2 / 3),
        "actual": ((2**1.5 + 1) / 2) ** (2 / 3),
        "upper": scale * (1 - 0.5 * (1 - ratio)) ** (2 / 3),
    }
    got = {"lower": rep.lower, "actual": rep.actual, "upper": rep.upper}
    return {
        "name": "two_exponent_example",
        "direction": "lower <= actual <= upper",
        **got,
        "oracle": oracle,
        "passed": rep.holds() and all(abs(got[k] - oracle[k]) <= GRID_TOL for k in got),
    }


def _midpoint_pair(n_atoms=GRID_ATOMS):
    space, f = unit_interval_grid(lambda x: (5 / 6) * (x < 0.5), n_atoms)
    _, h = unit_interval_grid(lambda x: x, n_atoms)
    return space, f, h


def midpoint_reversal():
    """f = (5/6) 1_[0,1/2), h = x on [0,1]: smaller in L^1 and L^inf, larger in L^6."""
    _, f, h = _midpoint_pair()
    nf6, nh6 = norm(f, 6.0), norm(h, 6.0)
    exp_f, exp_h = ((5 / 6) ** 6 / 2) ** (1 / 6), (1 / 7) ** (1 / 6)
    return {
        "name": "midpoint_reversal",
        "direction": "||f||_1 < ||h||_1, ||f||_inf < ||h||_inf, ||f||_6 > ||h||_6",
        "norm_f_1": norm(f, 1.0),
        "norm_h_1": norm(h, 1.0),
        "norm_f_6": nf6,
        "norm_h_6": nh6,
        "expected_norm_f_6": exp_f,
        "expected_norm_h_6": exp_h,
        "passed": norm(f, 1.0) < norm(h, 1.0)
        and norm(f, math.inf) < norm(h, math.inf)
        and nf6 > nh6
        and abs(nf6 - exp_f) <= GRID_TOL
        and abs(nh6 - exp_h) <= GRID_TOL,
    }


def midpoint_endpoint_11():
    """The same pair with endpoints 1 and 11: the norm ordering holds at both
    endpoints, the angle condition fails, and the ordering reverses at the midpoint 6.
    """
    _, f, h = _midpoint_pair()
    dec = midpoint_compare(f, h, 1.0, 11.0)
    exp = {
        "f_11": (5 / 6) * 0.5 ** (1 / 11),
        "h_11": (1 / 12) ** (1 / 11),
        "f_6": ((5 / 6) ** 6 / 2) ** (1 / 6),
        "h_6": (1 / 7) ** (1 / 6),
    }
    got = {
        "f_11": dec.norms_f["p1"],
        "h_11": dec.norms_h["p1"],
        "f_6": dec.norms_f["p"],
        "h_6": dec.norms_h["p"],
    }
    return {
        "name": "midpoint_endpoint_11",
        "direction": "endpoint norms ordered, angle condition fails, ||f||_6 > ||h||_6",
        "hypotheses": dec.hypotheses,
        "conclusion_asserted": dec.conclusion_asserted,
        "norms": got,
        "expected_norms": exp,
        "passed": dec.hypotheses["norm_p0"]
        and dec.hypotheses["norm_p1"]
        and not dec.hypotheses["angle"]
        and not dec.conclusion_asserted
        and not dec.conclusion_holds
        and all(abs(got[k] - exp[k]) <= GRID_TOL for k in got),
    }


def minkowski_orthogonal():
    """f = (1, 0), h = (0, 1) at p = 2: the refined bound is attained."""
    sp = _half()
    rep = refined_minkowski(SimpleFunction(sp, [1, 0]), SimpleFunction(sp, [0, 1]), 2.0)
    return {
        "name": "minkowski_orthogonal",
        "direction": "actual <= upper <= sum",
        "actual": rep.actual,
        "upper": rep.upper,
        "sum_of_norms": rep.sum_of_norms,
        "passed": rep.holds() and abs(rep.upper - 1.0) <= EXACT and abs(rep.actual - 1.0) <= EXACT,
    }


FIXTURES = (
    modified_lower_violation,
    modified_upper_violation,
    holder_example_sandwich,
    disjoint_support,
    negative_bracket,
    two_exponent_example,
    midpoint_reversal,
    midpoint_endpoint_11,
    minkowski_orthogonal,
)


def run_fixtures() -> list[dict]:
    return [fx() for fx in FIXTURES]
