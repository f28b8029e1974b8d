"""Numerical estimation of the modulus of convexity of l_p^n.

delta(eps) = inf { 1 - ||(f+h)/2||_p : ||f||_p = ||h||_p = 1, ||f - h||_p = eps }

The estimator runs a multi-start penalized local descent over real pairs
(f, h). Unit norms are enforced by normalizing inside the objective, the
distance constraint by a quadratic penalty whose weight grows between
stages, and every candidate is finally moved onto the constraint set
exactly by bisection before it is scored. Scores are therefore values of
feasible configurations, i.e. upper bounds on the true infimum.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import optimize

from .convexity import _check_eps, delta_lower_bound, hanner_asymptotic
from .errors import DomainError
from .measure import check_exponent

PENALTY_SCHEDULE = (1e2, 1e4, 1e6, 1e8)


def _lp(x: np.ndarray, p: float, w: float) -> float:
    a = np.abs(x)
    m = a.max()
    if m == 0:
        return 0.0
    return float(m * (w * np.sum((a / m) ** p)) ** (1 / p))


def _bisect(fun, lo: float, hi: float, xtol: float = 1e-15) -> float:
    return optimize.bisect(fun, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=200)


def swap_configuration_delta(p: float, eps: float) -> float:
    """delta of the pair f = (x + eps/2, x - eps/2), h = (x - eps/2, x + eps/2).

    Solves (1 - delta + eps/2)^p + |1 - delta - eps/2|^p = 2 by bisection.
    """
    p = check_exponent(p)
    eps = _check_eps(eps)
    a = eps / 2

    def g(d):
        x = 1 - d
        return (x + a) ** p + abs(x - a) ** p - 2

    return _bisect(g, 0.0, 1.0)


def reflect_configuration_delta(p: float, eps: float) -> float:
    """delta of the pair f = (a, b), h = (a, -b): solves (1 - delta)^p + (eps/2)^p = 1."""
    p = check_exponent(p)
    eps = _check_eps(eps)
    a = (eps / 2) ** p
    return _bisect(lambda d: (1 - d) ** p + a - 1, 0.0, 1.0)


def hanner_modulus(p: float, eps: float) -> float:
    """Exact modulus of convexity of L^p (and of l_p^n, n >= 2), by bisection."""
    if float(p) <= 2:
        return swap_configuration_delta(p, eps)
    return reflect_configuration_delta(p, eps)


def _unit_circle_point(phi: float, p: float) -> np.ndarray:
    v = np.array([math.cos(phi), math.sin(phi)])
    return v / _lp(v, p, 0.5)


def _partner(f: np.ndarray, phi: float, p: float, eps: float) -> np.ndarray:
    """Unit vector h counter-clockwise from f with ||f - h|| = eps."""

    def dist(psi):
        return _lp(f - _unit_circle_point(psi, p), p, 0.5) - eps

    if eps >= 2:
        return -f
    psi = _bisect(dist, phi, phi + math.pi, xtol=1e-14)
    return _unit_circle_point(psi, p)


def _two_point_delta(phi: float, p: float, eps: float) -> tuple[float, np.ndarray, np.ndarray]:
    f = _unit_circle_point(phi, p)
    h = _partner(f, phi, p, eps)
    return 1 - _lp((f + h) / 2, p, 0.5), f, h


def two_point_search(p: float, eps: float, grid: int = 256) -> tuple[float, np.ndarray, np.ndarray]:
    """Minimize delta over pairs supported on two coordinates.

    f runs over the unit circle of l_p^2; for each f the partner h is the
    point at distance eps, found by bisection. Returns (delta, f, h) with
    f, h in l_p^2 under uniform weights 1/2.
    """
    p = check_exponent(p)
    eps = _check_eps(eps)
    phis = np.linspace(0, 2 * math.pi, grid, endpoint=False)
    vals = [_two_point_delta(phi, p, eps)[0] for phi in phis]
    k = int(np.argmin(vals))
    step = phis[1] - phis[0]
    res = optimize.minimize_scalar(
        lambda phi: _two_point_delta(phi, p, eps)[0],
        bounds=(phis[k] - step, phis[k] + step),
        method="bounded",
        options={"xatol": 1e-12},
    )
    best = min((vals[k], phis[k]), (float(res.fun), float(res.x)))
    return _two_point_delta(best[1], p, eps)


@dataclass(frozen=True)
class ModulusEstimate:
    p: float
    n_dims: int
    eps: float
    delta_estimate: float
    paper_lower_bound: float
    two_point_upper: float
    search_seed: int
    restarts: int
    feasibility_error: float
    best_f: list = field(repr=False)
    best_h: list = field(repr=False)
    diagnostics: dict = field(default_factory=dict)

    def violations(self, tol: float = 1e-9) -> list[str]:
        out = []
        if self.paper_lower_bound > self.delta_estimate + tol:
            out.append(
                f"estimate {self.delta_estimate!r} is below the lower bound {self.paper_lower_bound!r}"
            )
        if self.delta_estimate > self.two_point_upper + tol:
            out.append(
                f"estimate {self.delta_estimate!r} exceeds the two-point value {self.two_point_upper!r}"
            )
        if not 0 <= self.delta_estimate <= 1:
            out.append(f"estimate {self.delta_estimate!r} outside [0, 1]")
        return out

    def to_dict(self) -> dict:
        return asdict(self)


class _Problem:
    def __init__(self, p: float, n: int, eps: float):
        self.p, self.n, self.eps, self.w = p, n, eps, 1.0 / n

    def norm(self, x):
        return _lp(x, self.p, self.w)

    def split(self, x):
        u, v = x[: self.n], x[self.n :]
        return u / self.norm(u), v / self.norm(v)

    def penalized(self, x, mu):
        nu, nv = self.norm(x[: self.n]), self.norm(x[self.n :])
        if nu == 0 or nv == 0:
            return 1e6
        f, h = x[: self.n] / nu, x[self.n :] / nv
        gap = self.norm(f - h) - self.eps
        return 1 - self.norm((f + h) / 2) + mu * gap * gap

    def delta(self, f, h):
        return 1 - self.norm((f + h) / 2)

    def repair(self, f, h):
        """Slide h along normalize(f + s (h - f)) until ||f - h|| = eps exactly."""
        d = h - f
        if not np.any(d):
            return None

        def gap(s):
            g = f + s * d
            ng = self.norm(g)
            if ng == 0:
                return 2.0 - self.eps
            return self.norm(f - g / ng) - self.eps

        hi = 1.0
        while gap(hi) < 0:
            hi *= 2
            if hi > 1e8:
                return None
        s = _bisect(gap, 0.0, hi)
        g = f + s * d
        return g / self.norm(g)

    def feasible_start(self, f, direction):
        return self.repair(f, f + 1e-3 * direction)


def estimate_modulus(
    p: float,
    n_dims: int,
    eps: float,
    seed: int = 0,
    restarts: int = 32,
    max_iter: int = 2000,
    t: float = 0.5,
) -> ModulusEstimate:
    """Estimate delta(eps) for l_p^{n_dims} with uniform weights 1/n_dims.

    Restart 0 starts from the symmetric pair f = (a, b, 0, ...),
    h = (a, -b, 0, ...); restart 1 from the best two-coordinate pair found
    by :func:`two_point_search`; the rest from random feasible pairs, each
    with its own stream derived from (seed, restart index).
    """
    p = check_exponent(p)
    eps = _check_eps(eps)
    if int(n_dims) != n_dims or n_dims < 2:
        raise DomainError("n_dims must be an integer >= 2")
    n = int(n_dims)
    if restarts < 1:
        raise DomainError("restarts must be positive")
    prob = _Problem(p, n, eps)

    two_delta, f2, h2 = two_point_search(p, eps)

    def embed(v):
        out = np.zeros(n)
        out[:2] = v
        return out / prob.norm(out)

    b = eps * n ** (1 / p) / 2
    a = (n - b**p) ** (1 / p) if b**p < n else 0.0
    warm = (embed(np.array([a, b])), embed(np.array([a, -b])))

    best = (math.inf, None, None)
    worst_feas = 0.0
    for k in range(restarts):
        if k == 0:
            f, h = warm
        elif k == 1:
            f, h = embed(f2), embed(h2)
        else:
            rng = np.random.default_rng([seed, k])
            f = rng.standard_normal(n)
            f = f / prob.norm(f)
            h = None
            while h is None:
                h = prob.feasible_start(f, rng.standard_normal(n))
        start = prob.repair(f, h)
        if start is None:
            continue
        candidates = [(f, start)]
        x = np.concatenate([f, start])
        for mu in PENALTY_SCHEDULE:
            res = optimize.minimize(
                prob.penalized, x, args=(mu,), method="L-BFGS-B", options={"maxiter": max_iter}
            )
            x = res.x
        fx, hx = prob.split(x)
        hx = prob.repair(fx, hx)
        if hx is not None:
            candidates.append((fx, hx))
        for cf, ch in candidates:
            feas = abs(prob.norm(cf - ch) - eps)
            val = prob.delta(cf, ch)
            if feas > 1e-8:
                continue
            worst_feas = max(worst_feas, feas)
            if val < best[0]:
                best = (val, cf, ch)

    delta, bf, bh = best
    lower = delta_lower_bound(p, eps, t)
    lead = hanner_asymptotic(p, eps)
    ratio = delta / lead if lead > 0 else math.nan
    diagnostics = {
        "hanner_modulus": hanner_modulus(p, eps),
        "asymptotic_leading_term": lead,
        "asymptotic_ratio": ratio,
        "asymptotic_within_25pct": bool(abs(ratio - 1) <= 0.25),
    }
    return ModulusEstimate(
        p=p,
        n_dims=n,
        eps=eps,
        delta_estimate=float(delta),
        paper_lower_bound=lower,
        two_point_upper=float(two_delta),
        search_seed=int(seed),
        restarts=int(restarts),
        feasibility_error=worst_feas,
        best_f=bf.tolist(),
        best_h=bh.tolist(),
        diagnostics=diagnostics,
    )
