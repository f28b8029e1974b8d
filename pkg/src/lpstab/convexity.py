"""Refined triangle inequalities and uniform convexity bounds for L^p.

Sign conventions: sign(0) := 1 everywhere, so |sign| is identically 1.
Complex values are accepted only where a result is proved for them:
moduli-only bounds (refined Minkowski, trianpos) and the cancellation
estimates for p >= 2.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DegenerateSumError, DomainError, UnsupportedCaseError
from .holder import INEQ_SLACK, angle_sq
from .measure import (
    P_MAX,
    SimpleFunction,
    check_exponent,
    check_nonzero,
    check_same_space,
    norm,
    sign,
)

#: Tolerance on ||f||_p = 1 preconditions.
UNIT_TOL = 1e-10


def mazur_map(f: SimpleFunction, r: float, s: float) -> SimpleFunction:
    """psi_{r,s}(f) = |f|^(r/s) sign f on the unit sphere of L^r, extended by
    positive homogeneity, so ||psi(f)||_s = ||f||_r.
    """
    r = check_exponent(r, "r")
    s = check_exponent(s, "s")
    check_nonzero(f)
    n = norm(f, r)
    u = f.values / n
    return SimpleFunction(f.space, n * np.abs(u) ** (r / s) * sign(u))


@dataclass(frozen=True)
class TriangleReport:
    """||f + h||_p <= upper <= ||f||_p + ||h||_p, with upper = sum - deduction."""

    actual: float
    upper: float
    sum_of_norms: float
    deduction: float
    coeff: float
    theta_sq_f: float = math.nan
    theta_sq_h: float = math.nan
    modulus_distance: float = math.nan

    def violations(self, slack: float = INEQ_SLACK) -> list[str]:
        tol = slack * self.sum_of_norms
        out = []
        if self.actual > self.upper + tol:
            out.append(f"||f+h|| = {self.actual!r} exceeds refined bound {self.upper!r}")
        if self.upper > self.sum_of_norms + tol:
            out.append(f"refined bound {self.upper!r} exceeds ||f|| + ||h|| = {self.sum_of_norms!r}")
        return out

    def holds(self, slack: float = INEQ_SLACK) -> bool:
        return not self.violations(slack)

    def to_dict(self) -> dict:
        return asdict(self)


def _pair(f: SimpleFunction, h: SimpleFunction, p: float):
    check_same_space(f, h)
    p = check_exponent(p)
    check_nonzero(f, h)
    return p, norm(f, p), norm(h, p)


def refined_minkowski(f: SimpleFunction, h: SimpleFunction, p: float) -> TriangleReport:
    """Triangle inequality with angle deductions measured against f + h.

    upper = ||f|| (1 - c theta^2(|f+h|^(p/2), |f|^(p/2)))
          + ||h|| (1 - c theta^2(|f+h|^(p/2), |h|^(p/2))),  c = 1/max(p, q).

    Raises :class:`DegenerateSumError` when f + h vanishes identically.
    """
    p, nf, nh = _pair(f, h, p)
    s = f + h
    if s.is_zero():
        raise DegenerateSumError("f + h is identically zero")
    q = p / (p - 1.0)
    c = 1.0 / max(p, q)
    tf = angle_sq(s, p / 2, f, p / 2)
    th = angle_sq(s, p / 2, h, p / 2)
    upper = float(nf * (1 - c * tf) + nh * (1 - c * th))
    return TriangleReport(
        actual=norm(s, p),
        upper=upper,
        sum_of_norms=nf + nh,
        deduction=nf + nh - upper,
        coeff=c,
        theta_sq_f=tf,
        theta_sq_h=th,
    )


def trianpos_bound(f: SimpleFunction, h: SimpleFunction, p: float) -> TriangleReport:
    """Triangle inequality with a deduction in the p-norm of |f|/||f|| - |h|/||h||.

    deduction = min(||f||, ||h||) * p(p-1)/8 * d^2   for 1 < p <= 2,
                min(||f||, ||h||) * d^p / (2p)       for p >= 2.
    """
    p, nf, nh = _pair(f, h, p)
    d = norm(SimpleFunction(f.space, np.abs(f.values) / nf - np.abs(h.values) / nh), p)
    if p <= 2:
        coeff = p * (p - 1) / 8
        ded = float(min(nf, nh) * coeff * d * d)
    else:
        coeff = 1 / (2 * p)
        ded = float(min(nf, nh) * coeff * d**p)
    return TriangleReport(
        actual=norm(f + h, p),
        upper=nf + nh - ded,
        sum_of_norms=nf + nh,
        deduction=ded,
        coeff=coeff,
        modulus_distance=d,
    )


@dataclass(frozen=True)
class PowerTriangleCheck:
    lhs: float
    rhs: float
    p: float

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs + INEQ_SLACK * max(self.rhs, 1e-300)

    def to_dict(self) -> dict:
        return {**asdict(self), "holds": self.holds}


def power_triangle_lemma(
    x: SimpleFunction, y: SimpleFunction, z: SimpleFunction, p: float
) -> PowerTriangleCheck:
    """||x - y||^p <= 2^(p-1) (||x - z||^p + ||y - z||^p) in the L^p norm."""
    check_same_space(x, y)
    check_same_space(x, z)
    p = check_exponent(p)
    lhs = norm(x - y, p) ** p
    rhs = 2 ** (p - 1) * (norm(x - z, p) ** p + norm(y - z, p) ** p)
    return PowerTriangleCheck(lhs, rhs, p)


def _check_cancellation_case(f: SimpleFunction, h: SimpleFunction, p: float) -> float:
    check_same_space(f, h)
    p = float(p)
    if not (1.0 <= p <= P_MAX):
        raise DomainError(f"p={p!r} must lie in [1, {P_MAX}]")
    if (f.is_complex or h.is_complex) and p < 2:
        raise UnsupportedCaseError(
            "sign cancellation for complex functions is only established for p >= 2"
        )
    return p


def _check_t(t: float) -> float:
    t = float(t)
    if not 0 < t < 1:
        raise DomainError(f"t={t!r} must lie in (0, 1)")
    return t


@dataclass(frozen=True)
class CancellationReport:
    """If || |f|-|h| ||^p < t ||f-h||^p then ||f+h|| < bound."""

    t: float
    p: float
    hypothesis_holds: bool
    bound: float
    actual: float
    modulus_gap: float
    difference: float

    def violations(self, slack: float = INEQ_SLACK) -> list[str]:
        if self.hypothesis_holds and self.actual >= self.bound + slack * self.bound:
            return [f"||f+h|| = {self.actual!r} is not below {self.bound!r}"]
        return []

    def to_dict(self) -> dict:
        return asdict(self)


def sign_cancellation(f: SimpleFunction, h: SimpleFunction, p: float, t: float) -> CancellationReport:
    """Bound ||f + h||_p when f and h mostly differ in sign (phase, for complex p >= 2).

    ``modulus_gap`` is || |f| - |h| ||_p^p and ``difference`` is ||f - h||_p^p.
    """
    p = _check_cancellation_case(f, h, p)
    t = _check_t(t)
    gap = norm(SimpleFunction(f.space, np.abs(f.values) - np.abs(h.values)), p) ** p
    diff = norm(f - h, p) ** p
    bound = ((norm(f, p) + norm(h, p)) ** p - (1 - t) * diff) ** (1 / p)
    return CancellationReport(
        t=t,
        p=p,
        hypothesis_holds=gap < t * diff,
        bound=bound,
        actual=norm(f + h, p),
        modulus_gap=gap,
        difference=diff,
    )


def _check_unit(*fs_and_p):
    *fs, p = fs_and_p
    for f in fs:
        n = norm(f, p)
        if abs(n - 1.0) > UNIT_TOL:
            raise DomainError(f"expected a unit vector in L^{p}, got norm {n!r}")


@dataclass(frozen=True)
class MidpointCheck:
    """1 - ||(f+h)/2||_p compared against a per-pair lower bound."""

    p: float
    t: float
    regime: str
    distance: float
    midpoint_norm: float
    deficit: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.deficit >= self.bound - INEQ_SLACK

    def violations(self) -> list[str]:
        if self.holds:
            return []
        return [f"1 - ||(f+h)/2|| = {self.deficit!r} is below {self.bound!r} ({self.regime})"]

    def to_dict(self) -> dict:
        return {**asdict(self), "holds": self.holds}


def taylor_midpoint(f: SimpleFunction, h: SimpleFunction, p: float, t: float) -> MidpointCheck:
    """For unit f, h with || |f|-|h| ||^p < t ||f-h||^p:
    ||(f+h)/2||_p <= 1 - (1-t)/(p 2^p) ||f-h||_p^p.
    """
    p = check_exponent(p)
    rep = sign_cancellation(f, h, p, t)
    _check_unit(f, h, p)
    if not rep.hypothesis_holds:
        raise DomainError("the cancellation hypothesis does not hold for this t")
    mid = norm(f + h, p) / 2
    bound = (1 - rep.t) / (p * 2**p) * rep.difference
    return MidpointCheck(p, rep.t, "cancellation", rep.difference ** (1 / p), mid, 1 - mid, bound)


def conditional_midpoint_bounds(
    f: SimpleFunction, h: SimpleFunction, p: float, t: float
) -> MidpointCheck:
    """Per-pair lower bound on 1 - ||(f+h)/2||_p for unit vectors f, h.

    Regime "cancellation" (|| |f|-|h| ||^p < t ||f-h||^p):
        (1-t) ||f-h||^p / (p 2^p).
    Regime "modulus", p >= 2:  t ||f-h||^p / (4p).
    Regime "modulus", p <= 2:  t^(2/p) p(p-1) ||f-h||^2 / 16.
    """
    p = check_exponent(p)
    rep = sign_cancellation(f, h, p, t)
    _check_unit(f, h, p)
    t = rep.t
    d = rep.difference ** (1 / p)
    mid = norm(f + h, p) / 2
    if rep.hypothesis_holds:
        regime = "cancellation"
        bound = (1 - t) * d**p / (p * 2**p)
    elif p >= 2:
        regime = "modulus"
        bound = t * d**p / (4 * p)
    else:
        regime = "modulus"
        bound = t ** (2 / p) * p * (p - 1) * d * d / 16
    return MidpointCheck(p, t, regime, d, mid, 1 - mid, bound)


def delta_lower_bound(p: float, eps: float, t: float = 0.5) -> float:
    """Lower bound on the modulus of convexity of L^p(X, R) at eps.

    p >= 2: eps^p / (p 2^p + 4p).
    1 < p < 2: min((1-t) eps^p / (p 2^p), t^(2/p) p(p-1) eps^2 / 16).
    """
    p = check_exponent(p)
    eps = _check_eps(eps)
    if p >= 2:
        return eps**p / (p * 2**p + 4 * p)
    t = _check_t(t)
    return min((1 - t) * eps**p / (p * 2**p), t ** (2 / p) * p * (p - 1) * eps**2 / 16)


def asymptotic_small_p_bound(p: float, eps: float, c: float) -> float:
    """p(p-1) eps^2 / (16c), valid for 1 < p <= 2 only when eps <= eps(c).

    The threshold eps(c) is not quantified, so this value is a diagnostic
    and is never asserted.
    """
    p = check_exponent(p, hi=2.0)
    if not c > 1:
        raise DomainError("c must exceed 1")
    return p * (p - 1) * _check_eps(eps) ** 2 / (16 * c)


def hanner_asymptotic(p: float, eps: float) -> float:
    """Leading term of the exact modulus: (p-1) eps^2/8 for p <= 2, eps^p/(p 2^p) for p >= 2."""
    p = check_exponent(p)
    eps = _check_eps(eps)
    if p <= 2:
        return (p - 1) * eps**2 / 8
    return eps**p / (p * 2**p)


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not 0 < eps <= 2:
        raise DomainError(f"eps={eps!r} must lie in (0, 2]")
    return eps
