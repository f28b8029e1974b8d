"""Stability versions of L^r ⊂ L^s containment and of norm interpolation.

All bounds here come from the refined Hölder sandwich applied to powers
of |f|. The deviation from equality is the angle between |f|^(s/2) and
the constant 1 (containment), or between |f|^(p0/2) and |f|^(p1/2)
(two-exponent interpolation).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .errors import DomainError
from .holder import BoundReport, angle_from_theta_sq, angle_sq, sandwich
from .measure import SimpleFunction, check_nonzero, check_same_space, norm


@dataclass(frozen=True)
class InterpParams:
    """Exponents p0 < p < p1 with the interpolation weight t derived from them."""

    p0: float
    p: float
    p1: float
    t: float = field(init=False)

    def __post_init__(self):
        p0, p, p1 = float(self.p0), float(self.p), float(self.p1)
        if not (0 < p0 < p < p1 and math.isfinite(p1)):
            raise DomainError(f"need 0 < p0 < p < p1 < inf, got {p0}, {p}, {p1}")
        t = (1.0 / p0 - 1.0 / p) / (1.0 / p0 - 1.0 / p1)
        object.__setattr__(self, "t", t)

    @property
    def coefficients(self) -> tuple[float, float]:
        """(A, B): the coefficients multiplying (1 - ratio) on the two sides."""
        t, p0, p1 = self.t, self.p0, self.p1
        den = (1 - t) * p1 + t * p0
        return 2 * (1 - t) * p1 / den, 2 * t * p0 / den


def _check_containment(f: SimpleFunction, r: float, s: float) -> tuple[float, float]:
    r, s = float(r), float(s)
    if not (0 < r < s and math.isfinite(s)):
        raise DomainError(f"need 0 < r < s < inf, got r={r}, s={s}")
    if not f.space.is_probability():
        raise DomainError("containment bounds need a probability space")
    check_nonzero(f)
    return r, s


def _mean_ratio(f: SimpleFunction, e: float) -> float:
    """||u||_1 / ||u||_2 for u = |f|^e on a probability space."""
    a = np.abs(f.values)
    u = (a / a.max()) ** e
    w = f.weights
    return min(1.0, float(w @ u) / math.sqrt(float(w @ (u * u))))


def _report(scale, actual, deviation, t2, c_lo, c_hi, power) -> BoundReport:
    rep = sandwich(scale, actual, deviation, c_lo, c_hi, power=power, clamp_upper=True)
    return replace(rep, theta_sq=t2, angle_rad=angle_from_theta_sq(t2))


def containment_bounds(f: SimpleFunction, r: float, s: float) -> BoundReport:
    """Two-sided bound for ||f||_r in terms of ||f||_s on a probability space.

    With ratio = |||f|^(s/2)||_1 / |||f|^(s/2)||_2 the brackets are
    1 - c (1 - ratio) for c in {2r/s, 2(s-r)/s}; the larger coefficient
    gives the lower bound. Both brackets are raised to 1/r.
    """
    r, s = _check_containment(f, r, s)
    ratio = _mean_ratio(f, s / 2.0)
    c1, c2 = 2 * r / s, 2 * (s - r) / s
    return _report(
        norm(f, s), norm(f, r), 1.0 - ratio, 2.0 * (1.0 - ratio), max(c1, c2), min(c1, c2), 1.0 / r
    )


def variance_bounds(f: SimpleFunction, r: float, s: float) -> BoundReport:
    """Like :func:`containment_bounds`, with the normalized variance V of |f|^(s/2).

    Uses V/2 <= 1 - ratio <= V: the lower coefficient is unchanged and
    the upper one is halved, which gives (2r/s, (s-r)/s) for s <= 2r and
    (2(s-r)/s, r/s) for s >= 2r.
    """
    r, s = _check_containment(f, r, s)
    ratio = _mean_ratio(f, s / 2.0)
    var = max(0.0, 1.0 - ratio * ratio)
    c1, c2 = 2 * r / s, 2 * (s - r) / s
    return _report(
        norm(f, s), norm(f, r), var, 2.0 * (1.0 - ratio), max(c1, c2), min(c1, c2) / 2, 1.0 / r
    )


def _two_exponent_ratio(f: SimpleFunction, p0: float, p1: float) -> float:
    a = np.abs(f.values)
    a = a / a.max()
    w = f.weights
    num = float(w @ a ** ((p0 + p1) / 2))
    return min(1.0, num / math.sqrt(float(w @ a**p0) * float(w @ a**p1)))


def two_exponent_bounds(f: SimpleFunction, p0: float, p: float, p1: float) -> BoundReport:
    """Bound ||f||_p by ||f||_p0^(1-t) ||f||_p1^t times a bracket in the angle
    between |f|^(p0/2) and |f|^(p1/2). Works on any finite measure space.
    """
    params = InterpParams(p0, p, p1)
    check_nonzero(f)
    t = params.t
    a, b = params.coefficients
    ratio = _two_exponent_ratio(f, params.p0, params.p1)
    scale = norm(f, params.p0) ** (1 - t) * norm(f, params.p1) ** t
    return _report(
        scale, norm(f, params.p), 1.0 - ratio, 2.0 * (1.0 - ratio), max(a, b), min(a, b), 1.0 / params.p
    )


@dataclass(frozen=True)
class MidpointDecision:
    """Outcome of comparing ||f||_p and ||h||_p at p = (p0 + p1)/2."""

    p0: float
    p1: float
    p: float
    t: float
    norms_f: dict
    norms_h: dict
    theta_f: float
    theta_h: float
    hypotheses: dict
    chained_f: float
    chained_h: float
    conclusion_asserted: bool
    conclusion_holds: bool
    strict_angle: bool

    def violations(self, slack: float = 1e-10) -> list[str]:
        if not self.conclusion_asserted:
            return []
        nf, nh = self.norms_f["p"], self.norms_h["p"]
        if nf > nh + slack * max(1.0, nh):
            return [f"||f||_p = {nf!r} exceeds ||h||_p = {nh!r} under all hypotheses"]
        return []

    def to_dict(self) -> dict:
        return asdict(self)


def midpoint_compare(f: SimpleFunction, h: SimpleFunction, p0: float, p1: float) -> MidpointDecision:
    """Decide whether ||f||_p <= ||h||_p follows at the midpoint p = (p0 + p1)/2.

    The conclusion is asserted only when ||f|| <= ||h|| at both p0 and p1
    and the angle between |h|^(p0/2) and |h|^(p1/2) is at most the one
    for f. ``strict_angle`` flags the strict case, where the ordering also
    holds near the midpoint; it is a diagnostic only.
    """
    check_same_space(f, h)
    check_nonzero(f, h)
    p0, p1 = float(p0), float(p1)
    p = (p0 + p1) / 2.0
    params = InterpParams(p0, p, p1)

    def norms(u):
        return {"p0": norm(u, p0), "p1": norm(u, p1), "p": norm(u, p), "max": norm(u, math.inf)}

    nf, nh = norms(f), norms(h)
    th_f = math.sqrt(angle_sq(f, p0 / 2, f, p1 / 2))
    th_h = math.sqrt(angle_sq(h, p0 / 2, h, p1 / 2))
    hyp = {
        "norm_p0": nf["p0"] <= nh["p0"],
        "norm_p1": nf["p1"] <= nh["p1"],
        "angle": th_h <= th_f,
    }
    t = params.t

    # At the midpoint both coefficients equal 1, so the chained bound is
    # N * (1 - theta^2/2)^(1/p), which is exact.
    def chained(n, th):
        return n["p0"] ** (1 - t) * n["p1"] ** t * max(0.0, 1 - th * th / 2) ** (1 / p)

    asserted = all(hyp.values())
    return MidpointDecision(
        p0=p0,
        p1=p1,
        p=p,
        t=t,
        norms_f=nf,
        norms_h=nh,
        theta_f=th_f,
        theta_h=th_h,
        hypotheses=hyp,
        chained_f=chained(nf, th_f),
        chained_h=chained(nh, th_h),
        conclusion_asserted=asserted,
        conclusion_holds=nf["p"] <= nh["p"],
        strict_angle=th_h < th_f,
    )
