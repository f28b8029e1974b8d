"""Two-sided stability bounds for Young's and Hölder's inequalities.

The deviation from the equality case is measured in L^2: f and g are
normalized and pushed through the Mazur maps |f|^(p/2), |g|^(q/2), and
the squared chordal distance between the images (``theta_sq``) enters both
sides of the Hölder sandwich.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DomainError
from .measure import (
    P_MAX,
    SimpleFunction,
    check_exponent,
    check_nonzero,
    check_same_space,
    conjugate,
    norm,
)

#: Default slack for inequality checks, relative to the natural scale.
INEQ_SLACK = 1e-12


@dataclass(frozen=True)
class BoundReport:
    """Lower bound, actual value and upper bound for one sandwich inequality."""

    lower: float
    actual: float
    upper: float
    theta_sq: float
    angle_rad: float
    lower_coeff: float
    upper_coeff: float
    positive_part_applied: bool
    scale: float = 1.0
    lower_bracket: float = math.nan
    upper_bracket: float = math.nan

    @property
    def lower_slack(self) -> float:
        return self.actual - self.lower

    @property
    def upper_slack(self) -> float:
        return self.upper - self.actual

    def violations(self, slack: float = INEQ_SLACK) -> list[str]:
        tol = slack * max(self.scale, abs(self.actual), abs(self.upper))
        out = []
        if self.lower > self.actual + tol:
            out.append(f"lower bound {self.lower!r} exceeds actual {self.actual!r}")
        if self.actual > self.upper + tol:
            out.append(f"actual {self.actual!r} exceeds upper bound {self.upper!r}")
        return out

    def holds(self, slack: float = INEQ_SLACK) -> bool:
        return not self.violations(slack)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class YoungGap:
    """Young gap u^p/p + v^q/q - uv and its two bounds.

    With a = u^(p/2), b = v^(q/2) every term is homogeneous of degree 2
    in (a, b), so the comparison is made on (a, b)/max(a, b); the
    ``rel_*`` fields are in units of exp(log_scale) = max(a, b)^2. The
    absolute fields overflow to inf when that unit does.
    """

    u: float
    v: float
    p: float
    gap: float
    lower: float
    upper: float
    log_scale: float
    rel_gap: float
    rel_lower: float
    rel_upper: float
    rel_terms: float

    def violations(self, slack: float = INEQ_SLACK) -> list[str]:
        tol = slack * max(self.rel_terms, 1e-300)
        out = []
        if self.rel_lower > self.rel_gap + tol:
            out.append(f"lower {self.lower!r} exceeds gap {self.gap!r}")
        if self.rel_gap > self.rel_upper + tol:
            out.append(f"gap {self.gap!r} exceeds upper {self.upper!r}")
        if self.rel_gap < -tol:
            out.append(f"negative gap {self.gap!r}")
        return out

    def to_dict(self) -> dict:
        return asdict(self)


def young_bounds(u: float, v: float, p: float) -> YoungGap:
    """Refined Young inequality for 1 < p <= 2.

    (1/q)(u^(p/2) - v^(q/2))^2 <= u^p/p + v^q/q - uv <= (1/p)(u^(p/2) - v^(q/2))^2.
    For p > 2 swap the roles of (u, p) and (v, q).
    """
    p = check_exponent(p, hi=2.0)
    u, v = float(u), float(v)
    if not (u >= 0 and v >= 0 and math.isfinite(u) and math.isfinite(v)):
        raise DomainError("u and v must be finite and nonnegative")
    q = p / (p - 1.0)
    if u == 0 and v == 0:
        return YoungGap(u, v, p, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    la = p / 2 * math.log(u) if u > 0 else -math.inf
    lb = q / 2 * math.log(v) if v > 0 else -math.inf
    lm = max(la, lb)
    a, b = math.exp(la - lm), math.exp(lb - lm)
    d2 = (a - b) ** 2
    cross = a ** (2 / p) * b ** (2 / q)
    terms = a * a / p + b * b / q
    gap = terms - cross
    log_scale = 2 * lm

    def absolute(x):
        if x == 0:
            return 0.0
        with np.errstate(over="ignore"):
            return float(x * np.exp(log_scale))

    return YoungGap(
        u, v, p, absolute(gap), absolute(d2 / q), absolute(d2 / p),
        log_scale, gap, d2 / q, d2 / p, max(terms, cross),
    )


def _l2_angle_sq(w: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    """theta^2 = 2(1 - <a,b>/(|a||b|)) for nonnegative a, b in weighted L^2."""
    ratio = (w @ (a * b)) / math.sqrt((w @ (a * a)) * (w @ (b * b)))
    return 2.0 * (1.0 - min(1.0, max(0.0, ratio)))


def _scaled_power(values: np.ndarray, e: float) -> np.ndarray:
    a = np.abs(values)
    return (a / a.max()) ** e


def angle_sq(f: SimpleFunction, a: float, g: SimpleFunction, b: float) -> float:
    """Squared chordal distance between |f|^a and |g|^b after L^2 normalization."""
    check_same_space(f, g)
    check_nonzero(f, g)
    return _l2_angle_sq(f.weights, _scaled_power(f.values, a), _scaled_power(g.values, b))


def theta_sq(f: SimpleFunction, g: SimpleFunction, p: float) -> float:
    """Angle term of the refined Hölder inequality, a value in [0, 2]."""
    pq = conjugate(p)
    return angle_sq(f, pq.p / 2.0, g, pq.q / 2.0)


def angle_from_theta_sq(t2: float) -> float:
    return math.acos(min(1.0, max(-1.0, 1.0 - t2 / 2.0)))


def sandwich(
    scale: float,
    actual: float,
    t2: float,
    c_lo: float,
    c_hi: float,
    power: float = 1.0,
    clamp_upper: bool = False,
) -> BoundReport:
    """Build ``scale*[1 - c_lo*t2]_+^power <= actual <= scale*[1 - c_hi*t2]^power``."""
    lo_br = 1.0 - c_lo * t2
    hi_br = 1.0 - c_hi * t2
    clamped = lo_br < 0
    scale, actual = float(scale), float(actual)
    lo_br, hi_br = float(lo_br), float(hi_br)
    lower = scale * max(lo_br, 0.0) ** power
    if clamp_upper or power != 1.0:
        upper = scale * max(hi_br, 0.0) ** power
        clamped = clamped or hi_br < 0
    else:
        upper = scale * hi_br
    return BoundReport(
        lower=lower,
        actual=actual,
        upper=upper,
        theta_sq=float(t2),
        angle_rad=angle_from_theta_sq(t2),
        lower_coeff=c_lo,
        upper_coeff=c_hi,
        positive_part_applied=bool(clamped),
        scale=scale,
        lower_bracket=lo_br,
        upper_bracket=hi_br,
    )


def _holder_parts(f: SimpleFunction, g: SimpleFunction, p: float):
    check_same_space(f, g)
    pq = conjugate(p)
    check_nonzero(f, g)
    scale = norm(f, pq.p) * norm(g, pq.q)
    actual = float(f.weights @ (np.abs(f.values) * np.abs(g.values)))
    t2 = theta_sq(f, g, pq.p)
    return pq, scale, actual, t2


def holder_report(f: SimpleFunction, g: SimpleFunction, p: float) -> BoundReport:
    """Refined Hölder sandwich for ||fg||_1.

    lower = ||f||_p ||g||_q (1 - theta^2/min(p,q))_+,
    upper = ||f||_p ||g||_q (1 - theta^2/max(p,q)).
    """
    pq, scale, actual, t2 = _holder_parts(f, g, p)
    return sandwich(scale, actual, t2, 1.0 / min(pq.p, pq.q), 1.0 / max(pq.p, pq.q))


def holder_modified(
    f: SimpleFunction, g: SimpleFunction, p: float, c_lo: float, c_hi: float
) -> BoundReport:
    """Hölder sandwich with caller-chosen coefficients.

    Nothing guarantees the result is a valid sandwich; use
    :meth:`BoundReport.violations` to see which side fails.
    """
    _, scale, actual, t2 = _holder_parts(f, g, p)
    return sandwich(scale, actual, t2, float(c_lo), float(c_hi))


def holder_general(
    f: SimpleFunction, g: SimpleFunction, p: float, q: float, r: float
) -> BoundReport:
    """Stability version of ||fg||_r <= ||f||_p ||g||_q when 1/p + 1/q = 1/r.

    Reduces to :func:`holder_report` for |f|^r, |g|^r with exponents p/r,
    q/r and takes r-th roots (positive part first).
    """
    p, q, r = float(p), float(q), float(r)
    if not r > 0 or not (p > r and q > r):
        raise DomainError("need p, q > r > 0")
    if abs(1.0 / p + 1.0 / q - 1.0 / r) > 1e-12:
        raise DomainError(f"1/p + 1/q = {1/p + 1/q!r} differs from 1/r = {1/r!r}")
    check_same_space(f, g)
    check_nonzero(f, g)
    big_p = check_exponent(p / r, "p/r")
    fr = SimpleFunction(f.space, np.abs(f.values) ** r)
    gr = SimpleFunction(g.space, np.abs(g.values) ** r)
    reduced = holder_report(fr, gr, big_p)
    scale = norm(f, p) * norm(g, q)
    actual = norm(SimpleFunction(f.space, np.abs(f.values) * np.abs(g.values)), r)
    inv = 1.0 / r
    return BoundReport(
        lower=scale * max(reduced.lower_bracket, 0.0) ** inv,
        actual=actual,
        upper=scale * max(reduced.upper_bracket, 0.0) ** inv,
        theta_sq=reduced.theta_sq,
        angle_rad=reduced.angle_rad,
        lower_coeff=reduced.lower_coeff,
        upper_coeff=reduced.upper_coeff,
        positive_part_applied=reduced.positive_part_applied,
        scale=scale,
        lower_bracket=reduced.lower_bracket,
        upper_bracket=reduced.upper_bracket,
    )


@dataclass(frozen=True)
class DragoBounds:
    """0 <= deficit <= middle <= right, all dimensionless."""

    deficit: float
    middle: float
    right: float

    def violations(self, slack: float = INEQ_SLACK) -> list[str]:
        chain = [("zero", 0.0), ("deficit", self.deficit), ("middle", self.middle), ("right", self.right)]
        return _chain_violations(chain, slack)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PecaricBounds:
    """left <= ||f||_p ||g||_q - ||fg||_1 <= right; ``right`` may be +inf."""

    left: float
    deficit: float
    right: float
    scale: float

    def violations(self, slack: float = INEQ_SLACK) -> list[str]:
        chain = [("left", self.left), ("deficit", self.deficit), ("right", self.right)]
        return _chain_violations(chain, slack, self.scale)

    def to_dict(self) -> dict:
        return asdict(self)


def _chain_violations(chain, slack, scale=1.0):
    out = []
    for (n1, a), (n2, b) in zip(chain, chain[1:]):
        if math.isfinite(a) and math.isfinite(b) and a > b + slack * max(scale, abs(a), abs(b)):
            out.append(f"{n1} {a!r} exceeds {n2} {b!r}")
    return out


def drago_bounds(f: SimpleFunction, g: SimpleFunction, p: float) -> DragoBounds:
    """The logarithmic comparison chain for 1 - (|f|,|g|)/(||f||_p ||g||_q).

    Requires strictly positive moduli: the chain involves log|f| and
    negative powers of |f| and |g|.
    """
    check_same_space(f, g)
    pq = conjugate(p)
    p, q = pq.p, pq.q
    a = np.abs(f.values)
    b = np.abs(g.values)
    if np.any(a <= 0) or np.any(b <= 0):
        raise DomainError("the logarithmic chain needs |f|, |g| > 0 on every atom")
    w = f.weights
    a = a / norm(f, p)
    b = b / norm(g, q)
    deficit = 1.0 - float(w @ (a * b))
    middle = float(w @ ((a**p - b**q) * (np.log(a) / q - np.log(b) / p)))
    right = math.log(
        float(w @ (a ** (p + 1.0 / q) * b ** (-1.0 / p)))
        * float(w @ (b ** (q + 1.0 / p) * a ** (-1.0 / q)))
    )
    return DragoBounds(deficit, middle, right)


def pecaric_bounds(f: SimpleFunction, g: SimpleFunction, p: float) -> PecaricBounds:
    """Two-sided bound on ||f||_p ||g||_q - ||fg||_1 for f, g >= 0 and p >= 2.

    When p > 2 and g is positive somewhere f vanishes, the right member is
    reported as ``math.inf``.
    """
    check_same_space(f, g)
    p = float(p)
    if not 2.0 <= p <= P_MAX:
        raise DomainError(f"p={p!r} must lie in [2, {P_MAX}]")
    if f.is_complex or g.is_complex or np.any(f.values < 0) or np.any(g.values < 0):
        raise DomainError("this comparison chain is stated for f, g >= 0")
    check_nonzero(f, g)
    q = p / (p - 1.0)
    w = f.weights
    nf, ng = norm(f, p), norm(g, q)
    scale = nf * ng
    a = f.values / nf
    b = g.values / ng
    # Both members are homogeneous of degree one in f and in g.
    left = 0.5 * float(w @ (b ** (2.0 - q) * (a - b ** (q - 1.0)) ** 2)) * scale
    on = a > 0
    if p > 2 and np.any(b[~on] > 0):
        right = math.inf
    else:
        term = np.zeros_like(a)
        term[on] = a[on] ** (2.0 - p) * (b[on] - a[on] ** (p - 1.0)) ** 2
        if p == 2:
            term[~on] = b[~on] ** 2
        right = 0.5 * float(w @ term) * scale
    deficit = scale * (1.0 - float(w @ (a * b)))
    return PecaricBounds(left, deficit, right, scale)
