"""Hypothesis-driven checks of the sandwich inequalities."""

import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from lpstab.convexity import refined_minkowski, sign_cancellation, trianpos_bound
from lpstab.holder import holder_report, young_bounds
from lpstab.interpolation import containment_bounds, two_exponent_bounds
from lpstab.measure import MeasureSpace, SimpleFunction, dual_norm, norm

mag = st.floats(1e-3, 1e3)
signed = st.one_of(mag, mag.map(lambda x: -x), st.just(0.0))


@st.composite
def pairs(draw, min_atoms=1, max_atoms=12, values=signed):
    n = draw(st.integers(min_atoms, max_atoms))
    w = draw(st.lists(st.floats(1e-3, 1e3), min_size=n, max_size=n))
    f = draw(st.lists(values, min_size=n, max_size=n).filter(any))
    g = draw(st.lists(values, min_size=n, max_size=n).filter(any))
    sp = MeasureSpace(w)
    return SimpleFunction(sp, f), SimpleFunction(sp, g)


exponent = st.floats(1.01, 10.0)


@settings(max_examples=300, deadline=None)
@given(st.floats(0, 1e4), st.floats(0, 1e4), st.floats(1.001, 2.0))
def test_young(u, v, p):
    assert not young_bounds(u, v, p).violations()


@settings(max_examples=300, deadline=None)
@given(pairs(), exponent)
def test_holder_sandwich(fg, p):
    rep = holder_report(*fg, p)
    assert not rep.violations()
    assert rep.upper <= rep.scale * (1 + 1e-12)
    assert rep.upper >= -1e-12 * rep.scale


@settings(max_examples=200, deadline=None)
@given(pairs(values=mag))
def test_parallelogram_collapse(fg):
    rep = holder_report(*fg, 2.0)
    assert abs(rep.upper - rep.lower) <= 1e-10 * rep.scale


@settings(max_examples=200, deadline=None)
@given(pairs(), exponent, st.floats(1e-3, 1e3))
def test_holder_scale_invariance(fg, p, c):
    f, g = fg
    a = holder_report(f, g, p)
    b = holder_report(f * c, g, p)
    assert math.isclose(a.theta_sq, b.theta_sq, abs_tol=1e-12)
    assert math.isclose(b.upper, c * a.upper, rel_tol=1e-9, abs_tol=1e-12 * c * a.scale)


@settings(max_examples=200, deadline=None)
@given(pairs(), st.floats(0.2, 6.0))
def test_containment_probability(fg, r):
    f, _ = fg
    sp = MeasureSpace(f.weights / f.weights.sum())
    f = SimpleFunction(sp, f.values)
    for s in (2 * r, 1.7 * r, 3.5 * r):
        assert not containment_bounds(f, r, s).violations()


@settings(max_examples=200, deadline=None)
@given(pairs(), st.lists(st.floats(0.1, 12), min_size=3, max_size=3, unique=True))
def test_two_exponent(fg, ps):
    p0, p, p1 = sorted(ps)
    assert not two_exponent_bounds(fg[0], p0, p, p1).violations()


@settings(max_examples=200, deadline=None)
@given(pairs(), exponent)
def test_triangle(fg, p):
    f, h = fg
    if not (f + h).is_zero():
        assert refined_minkowski(f, h, p).holds()
    assert trianpos_bound(f, h, p).holds()


@settings(max_examples=200, deadline=None)
@given(pairs(), st.floats(1.0, 10.0), st.floats(0.01, 0.99))
def test_cancellation_no_false_assertions(fg, p, t):
    f, h = fg
    assert not sign_cancellation(f, -h, p, t).violations()


@settings(max_examples=200, deadline=None)
@given(pairs(), exponent)
def test_dual_norm(fg, p):
    f = fg[0]
    assert math.isclose(dual_norm(f, p), norm(f, p), rel_tol=1e-10)
    assert np.isfinite(norm(f, p))
