"""Randomized property suites.

Every suite draws from its own stream ``default_rng([seed, index])`` where
``index`` is the suite's fixed position in :data:`SUITES`, so results do
not depend on which other suites run. Atom counts are 1-64, weights and
moduli are log-uniform, and signs are random.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .convexity import (
    conditional_midpoint_bounds,
    mazur_map,
    power_triangle_lemma,
    refined_minkowski,
    sign_cancellation,
    trianpos_bound,
)
from .errors import UnsupportedCaseError
from .holder import INEQ_SLACK, holder_general, holder_report, young_bounds
from .interpolation import containment_bounds, midpoint_compare, two_exponent_bounds, variance_bounds
from .measure import MeasureSpace, SimpleFunction, dual_norm, norm, normalized_variance

MAX_EXAMPLES = 3


@dataclass
class SuiteResult:
    name: str
    cases: int
    checked: int = 0
    violations: int = 0
    examples: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    def record(self, problems: list[str]) -> None:
        self.checked += 1
        if problems:
            self.violations += 1
            if len(self.examples) < MAX_EXAMPLES:
                self.examples.append(f"case {self.checked - 1}: " + "; ".join(problems))

    def bump(self, key: str) -> None:
        self.counts[key] = self.counts.get(key, 0) + 1

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return asdict(self)


# -- generators ----------------------------------------------------------


def random_space(rng, probability=False, min_atoms=1):
    n = int(rng.integers(min_atoms, 65))
    w = 10.0 ** rng.uniform(-3, 3, n)
    if probability:
        w = w / math.fsum(w)
    return MeasureSpace(w)


def random_moduli(rng, n, decades=3.0):
    return 10.0 ** rng.uniform(-decades, decades, n)


def random_real(rng, n, decades=3.0):
    return random_moduli(rng, n, decades) * rng.choice([-1.0, 1.0], n)


def random_complex(rng, n, decades=3.0):
    return random_moduli(rng, n, decades) * np.exp(1j * rng.uniform(0, 2 * math.pi, n))


def _open_unit(rng):
    """Uniform on (0, 1]."""
    return 1.0 - rng.uniform()


def _exponent(rng, lo, hi):
    """Uniform on (lo, hi]."""
    return lo + (hi - lo) * _open_unit(rng)


def _fsum_norm(w, a, p):
    m = a.max()
    return m * math.fsum(w * (a / m) ** p) ** (1 / p) if m > 0 else 0.0


def _unit(f: SimpleFunction, p: float) -> SimpleFunction:
    return SimpleFunction(f.space, f.values / norm(f, p))


def _near_pair(rng, space, values, p, antipodal, complex_=False):
    """A unit pair (f, h) with h a perturbation of -f (antipodal) or of f."""
    n = space.n_atoms
    noise = random_complex(rng, n) if complex_ else random_real(rng, n)
    sigma = 10.0 ** rng.uniform(-3, 0.5)
    nv = np.abs(values).max()
    base = -values if antipodal else values
    h = base + sigma * nv * noise / np.abs(noise).max()
    f = _unit(SimpleFunction(space, values), p)
    hf = SimpleFunction(space, h)
    if hf.is_zero():
        hf = SimpleFunction(space, base)
    return f, _unit(hf, p)


# -- suites --------------------------------------------------------------


def suite_young(rng, cases, slack):
    res = SuiteResult("young", cases)
    for _ in range(cases):
        u, v = 10.0 ** rng.uniform(-4, 4, 2)
        res.record(young_bounds(u, v, _exponent(rng, 1.0, 2.0)).violations(slack))
    return res


def suite_holder(rng, cases, slack):
    res = SuiteResult("holder", cases)
    for _ in range(cases):
        space = random_space(rng)
        n = space.n_atoms
        f = SimpleFunction(space, random_real(rng, n))
        g = SimpleFunction(space, random_real(rng, n))
        rep = holder_report(f, g, _exponent(rng, 1.0, 10.0))
        probs = rep.violations(slack)
        tol = slack * rep.scale
        oracle = math.fsum(space.weights * np.abs(f.values) * np.abs(g.values))
        if abs(oracle - rep.actual) > tol:
            probs.append(f"actual {rep.actual!r} differs from direct sum {oracle!r}")
        if rep.upper > rep.scale + tol:
            probs.append(f"upper {rep.upper!r} exceeds ||f|| ||g|| = {rep.scale!r}")
        if rep.upper < -tol:
            probs.append(f"negative upper {rep.upper!r}")
        if not rep.theta_sq <= rep.angle_rad**2 + 1e-12 or not rep.angle_rad <= math.pi / 2 * math.sqrt(
            rep.theta_sq
        ) + 1e-12:
            probs.append(f"angle {rep.angle_rad!r} not comparable to theta^2 {rep.theta_sq!r}")
        res.record(probs)
    return res


def suite_parallelogram(rng, cases, slack, band=1e-10):
    res = SuiteResult("parallelogram", cases)
    for _ in range(cases):
        space = random_space(rng)
        n = space.n_atoms
        f = SimpleFunction(space, random_moduli(rng, n))
        g = SimpleFunction(space, random_moduli(rng, n))
        rep = holder_report(f, g, 2.0)
        probs = []
        if abs(rep.upper - rep.lower) > band * rep.scale:
            probs.append(f"upper - lower = {rep.upper - rep.lower!r}")
        if abs(rep.actual - rep.lower) > band * rep.scale:
            probs.append(f"actual - lower = {rep.actual - rep.lower!r}")
        res.record(probs)
    return res


def suite_disjoint(rng, cases, slack):
    res = SuiteResult("disjoint_support", cases)
    for _ in range(cases):
        space = random_space(rng, min_atoms=2)
        n = space.n_atoms
        mask = rng.random(n) < 0.5
        mask[0], mask[1] = True, False
        f = SimpleFunction(space, np.where(mask, random_real(rng, n), 0.0))
        g = SimpleFunction(space, np.where(mask, 0.0, random_real(rng, n)))
        p = _exponent(rng, 1.0, 10.0)
        rep = holder_report(f, g, p)
        probs = rep.violations(slack)
        if rep.theta_sq != 2.0:
            probs.append(f"theta^2 = {rep.theta_sq!r}, expected 2")
        if rep.actual != 0.0:
            probs.append(f"actual = {rep.actual!r}, expected 0")
        res.record(probs)
    return res


def suite_holder_general(rng, cases, slack):
    res = SuiteResult("holder_general", cases)
    for _ in range(cases):
        space = random_space(rng)
        n = space.n_atoms
        r = rng.uniform(0.2, 3.0)
        x = rng.uniform(1 / 512, 1 - 1 / 512)
        f = SimpleFunction(space, random_real(rng, n))
        g = SimpleFunction(space, random_real(rng, n))
        res.record(holder_general(f, g, r / x, r / (1 - x), r).violations(slack))
    return res


def suite_containment(rng, cases, slack):
    res = SuiteResult("containment", cases)
    for _ in range(cases):
        space = random_space(rng, probability=True)
        f = SimpleFunction(space, random_real(rng, space.n_atoms))
        s = rng.uniform(0.2, 12.0)
        r = s * rng.uniform(0.01, 0.99)
        probs = []
        for rep in (containment_bounds(f, r, s), variance_bounds(f, r, s)):
            probs += rep.violations(slack)
            if rep.upper > rep.scale * (1 + slack):
                probs.append(f"upper {rep.upper!r} exceeds ||f||_s = {rep.scale!r}")
        # V/2 <= 1 - ratio <= V for u = |f|^(s/2), by direct sums
        a = np.abs(f.values)
        u = (a / a.max()) ** (s / 2)
        w = space.weights
        ratio = math.fsum(w * u) / math.sqrt(math.fsum(w * u * u))
        dev = 1 - ratio
        var = normalized_variance(SimpleFunction(space, u))
        if not (var / 2 - 1e-12 <= dev <= var + 1e-12):
            probs.append(f"1 - ratio = {dev!r} outside [V/2, V] with V = {var!r}")
        res.record(probs)
    return res


def suite_containment_exact(rng, cases, slack, band=1e-10):
    res = SuiteResult("containment_exact", cases)
    for _ in range(cases):
        space = random_space(rng, probability=True)
        f = SimpleFunction(space, random_real(rng, space.n_atoms))
        r = rng.uniform(0.1, 6.0)
        rep = containment_bounds(f, r, 2 * r)
        probs = []
        if abs(rep.upper - rep.actual) > band or abs(rep.lower - rep.actual) > band:
            probs.append(f"bounds ({rep.lower!r}, {rep.upper!r}) not equal to {rep.actual!r}")
        res.record(probs)
    return res


def suite_two_exponent(rng, cases, slack):
    res = SuiteResult("two_exponent", cases)
    for _ in range(cases):
        space = random_space(rng)
        f = SimpleFunction(space, random_real(rng, space.n_atoms))
        p0, p, p1 = np.sort(rng.uniform(0.1, 12.0, 3))
        if not p0 < p < p1:
            continue
        rep = two_exponent_bounds(f, p0, p, p1)
        probs = rep.violations(slack)
        oracle = _fsum_norm(space.weights, np.abs(f.values), p)
        if abs(oracle - rep.actual) > 1e-12 * oracle:
            probs.append(f"actual {rep.actual!r} differs from direct sum {oracle!r}")
        res.record(probs)
    return res


def suite_midpoint(rng, cases, slack):
    res = SuiteResult("midpoint", cases)
    for _ in range(cases):
        space = random_space(rng)
        n = space.n_atoms
        fv = random_real(rng, n)
        hv = fv * (1 + rng.uniform(0, 1, n) ** 3) if rng.random() < 0.5 else random_real(rng, n)
        p0 = rng.uniform(0.5, 5.0)
        p1 = p0 + rng.uniform(0.5, 6.0)
        dec = midpoint_compare(SimpleFunction(space, fv), SimpleFunction(space, hv), p0, p1)
        res.bump("asserted" if dec.conclusion_asserted else "not_asserted")
        res.record(dec.violations())
    return res


def suite_mazur(rng, cases, slack):
    res = SuiteResult("mazur", cases)
    for _ in range(cases):
        space = random_space(rng)
        n = space.n_atoms
        s = rng.uniform(1.0, 10.0)
        r = rng.uniform(1.0, s)
        if not 1 < r < s:
            continue
        probs = []
        # Hölder side: unit pairs in L^r mapped into L^s.
        f = _unit(SimpleFunction(space, random_moduli(rng, n)), r)
        h = _unit(SimpleFunction(space, random_moduli(rng, n)), r)
        lhs = norm(mazur_map(f, r, s) - mazur_map(h, r, s), s)
        rhs = norm(f - h, r) ** (r / s)
        if lhs > rhs + slack:
            probs.append(f"Hölder bound: {lhs!r} > {rhs!r}")
        # Lipschitz side: unit pairs in L^s mapped into L^r.
        f = _unit(SimpleFunction(space, random_moduli(rng, n)), s)
        h = _unit(SimpleFunction(space, random_moduli(rng, n)), s)
        lhs = norm(mazur_map(f, s, r) - mazur_map(h, s, r), r)
        rhs = (s / r) * norm(f - h, s)
        if lhs > rhs + slack:
            probs.append(f"Lipschitz bound: {lhs!r} > {rhs!r}")
        res.record(probs)
    return res


def _minkowski_case(rng, p, slack):
    space = random_space(rng)
    n = space.n_atoms
    f = SimpleFunction(space, random_real(rng, n))
    h = SimpleFunction(space, random_real(rng, n))
    a = refined_minkowski(f, h, p)
    b = trianpos_bound(f, h, p)
    probs = a.violations(slack) + b.violations(slack)
    if b.deduction < 0:
        probs.append(f"negative deduction {b.deduction!r}")
    oracle = _fsum_norm(space.weights, np.abs(f.values + h.values), p)
    if abs(oracle - a.actual) > 1e-12 * a.sum_of_norms:
        probs.append(f"actual {a.actual!r} differs from direct sum {oracle!r}")
    return probs


def suite_minkowski(rng, cases, slack):
    res = SuiteResult("minkowski", cases)
    for regime, (lo, hi) in (("p<=2", (1.0, 2.0)), ("p>=2", (2.0, 10.0))):
        for _ in range(cases):
            p = 2.0 if (lo == 2.0 and rng.random() < 0.01) else _exponent(rng, lo, hi)
            res.bump(regime)
            res.record(_minkowski_case(rng, p, slack))
    return res


def _cancellation_case(rng, p, complex_, slack):
    space = random_space(rng)
    n = space.n_atoms
    make = random_complex if complex_ else random_real
    fv = make(rng, n)
    mode = rng.integers(3)
    if mode == 0:
        hv = make(rng, n)
    else:
        hv = -fv if mode == 1 else fv * rng.choice([-1.0, 1.0], n)
        hv = hv * (1 + 0.1 * rng.standard_normal(n))
    h = SimpleFunction(space, hv)
    if h.is_zero():
        h = SimpleFunction(space, -fv)
    rep = sign_cancellation(SimpleFunction(space, fv), h, p, rng.uniform(0.01, 0.99))
    return rep


def suite_cancellation_real(rng, cases, slack):
    res = SuiteResult("cancellation_real", cases)
    for _ in range(cases):
        rep = _cancellation_case(rng, rng.uniform(1.0, 10.0), False, slack)
        res.bump("hypothesis" if rep.hypothesis_holds else "no_hypothesis")
        res.record(rep.violations(slack))
    return res


def suite_cancellation_complex(rng, cases, slack):
    res = SuiteResult("cancellation_complex", cases)
    for _ in range(cases):
        rep = _cancellation_case(rng, rng.uniform(2.0, 10.0), True, slack)
        res.bump("hypothesis" if rep.hypothesis_holds else "no_hypothesis")
        res.record(rep.violations(slack))
    # The open case must be refused, not evaluated.
    space = MeasureSpace.uniform(2)
    try:
        sign_cancellation(SimpleFunction(space, [1, 1j]), SimpleFunction(space, [1j, 1]), 1.5, 0.5)
        res.record(["complex p < 2 was not rejected"])
    except UnsupportedCaseError:
        res.record([])
    return res


def suite_convexity(rng, cases, slack):
    """Draw pairs until each regime has ``cases`` checks (half with p <= 2)."""
    res = SuiteResult("convexity", cases)
    got = {"cancellation": 0, "modulus": 0}
    limit = 20 * cases + 100
    draws = 0
    while min(got.values()) < cases and draws < limit:
        draws += 1
        want = "cancellation" if got["cancellation"] < got["modulus"] else "modulus"
        if got[want] >= cases:
            want = "modulus" if want == "cancellation" else "cancellation"
        p = _exponent(rng, 1.0, 2.0) if rng.random() < 0.5 else _exponent(rng, 2.0, 10.0)
        t = rng.uniform(0.01, 0.99)
        space = random_space(rng, min_atoms=2)
        f, h = _near_pair(rng, space, random_real(rng, space.n_atoms), p, want == "cancellation")
        chk = conditional_midpoint_bounds(f, h, p, t)
        if got[chk.regime] >= cases:
            continue
        got[chk.regime] += 1
        res.bump(f"{chk.regime}, {'p<=2' if p <= 2 else 'p>2'}")
        res.record(chk.violations())
    if min(got.values()) < cases:
        res.record([f"could not fill both regimes: {got}"])
    return res


def suite_baseline(rng, cases, slack):
    """Plain Hölder, homogeneity, the norming functional and the power-triangle lemma."""
    res = SuiteResult("baseline", cases)
    for _ in range(cases):
        space = random_space(rng)
        n = space.n_atoms
        f = SimpleFunction(space, random_real(rng, n))
        g = SimpleFunction(space, random_real(rng, n))
        p = _exponent(rng, 1.0, 10.0)
        q = p / (p - 1)
        probs = []
        nf, ng = norm(f, p), norm(g, q)
        pair = float(space.weights @ np.abs(f.values * g.values))
        if pair > nf * ng * (1 + slack):
            probs.append(f"|<f,g>| = {pair!r} exceeds {nf * ng!r}")
        c = 10.0 ** rng.uniform(-3, 3)
        if abs(norm(SimpleFunction(space, c * f.values), p) - c * nf) > 1e-12 * c * nf:
            probs.append("norm is not homogeneous")
        if abs(dual_norm(f, p) - nf) > 1e-10 * nf:
            probs.append(f"norming functional gives {dual_norm(f, p)!r}, norm {nf!r}")
        z = SimpleFunction(space, random_real(rng, n))
        if not power_triangle_lemma(f, g, z, p).holds:
            probs.append("power triangle lemma fails")
        res.record(probs)
    return res


SUITES = {
    "young": suite_young,
    "holder": suite_holder,
    "parallelogram": suite_parallelogram,
    "disjoint_support": suite_disjoint,
    "holder_general": suite_holder_general,
    "containment": suite_containment,
    "containment_exact": suite_containment_exact,
    "two_exponent": suite_two_exponent,
    "midpoint": suite_midpoint,
    "mazur": suite_mazur,
    "minkowski": suite_minkowski,
    "cancellation_real": suite_cancellation_real,
    "cancellation_complex": suite_cancellation_complex,
    "convexity": suite_convexity,
    "baseline": suite_baseline,
}


def run_suite(name: str, seed: int, cases: int, slack: float = INEQ_SLACK) -> SuiteResult:
    index = list(SUITES).index(name)
    rng = np.random.default_rng([int(seed), index])
    return SUITES[name](rng, int(cases), float(slack))


def run_suites(seed: int, cases: int, slack: float = INEQ_SLACK, names=None) -> dict:
    names = list(SUITES) if names is None else list(names)
    return {n: run_suite(n, seed, cases, slack) for n in names}
