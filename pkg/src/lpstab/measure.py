"""Finite weighted measure spaces and the scalar functions living on them.

Every integral in the package is a weighted sum over atoms, so the
inequalities hold exactly (up to rounding) on these spaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, InputError, ZeroFunctionError

#: Largest exponent accepted by operations that need a conjugate pair.
P_MAX = 1024.0

#: Tolerance for ``total_mass == 1`` checks.
PROBABILITY_TOL = 1e-12


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class MeasureSpace:
    """A finite list of atoms with strictly positive weights."""

    __slots__ = ("weights", "total_mass")

    def __init__(self, weights):
        w = np.array(weights, dtype=float).ravel()
        if w.size == 0:
            raise InputError("a measure space needs at least one atom")
        if not np.all(np.isfinite(w)):
            raise InputError("weights must be finite")
        if np.any(w <= 0):
            bad = int(np.argmax(w <= 0))
            raise InputError(f"weight {bad} is not strictly positive: {w[bad]!r}")
        self.weights = _readonly(w)
        self.total_mass = float(math.fsum(w))

    @classmethod
    def uniform(cls, n_atoms: int, total_mass: float = 1.0) -> "MeasureSpace":
        if n_atoms < 1:
            raise InputError("n_atoms must be positive")
        return cls(np.full(n_atoms, total_mass / n_atoms))

    @property
    def n_atoms(self) -> int:
        return self.weights.size

    def is_probability(self, tol: float = PROBABILITY_TOL) -> bool:
        return abs(self.total_mass - 1.0) <= tol

    def function(self, values) -> "SimpleFunction":
        return SimpleFunction(self, values)

    def same_as(self, other: "MeasureSpace") -> bool:
        return self is other or (
            self.weights.shape == other.weights.shape
            and np.array_equal(self.weights, other.weights)
        )

    def __repr__(self):
        return f"MeasureSpace(n_atoms={self.n_atoms}, total_mass={self.total_mass!r})"


class SimpleFunction:
    """One real or complex value per atom of a :class:`MeasureSpace`."""

    __slots__ = ("space", "values")

    def __init__(self, space: MeasureSpace, values):
        v = np.array(values).ravel()
        if v.dtype.kind in "iub":
            v = v.astype(float)
        elif v.dtype.kind == "f":
            v = v.astype(float, copy=False)
        elif v.dtype.kind == "c":
            v = v.astype(complex, copy=False)
            if not np.any(v.imag):
                v = v.real.copy()
        else:
            raise InputError(f"unsupported value type {v.dtype}")
        if v.size != space.n_atoms:
            raise InputError(
                f"expected {space.n_atoms} values, got {v.size}"
            )
        if not np.all(np.isfinite(v)):
            raise InputError("function values must be finite")
        self.space = space
        self.values = _readonly(v)

    @property
    def is_complex(self) -> bool:
        return self.values.dtype.kind == "c"

    @property
    def weights(self) -> np.ndarray:
        return self.space.weights

    def modulus(self) -> "SimpleFunction":
        return SimpleFunction(self.space, np.abs(self.values))

    def is_zero(self) -> bool:
        return not np.any(self.values)

    def support(self) -> np.ndarray:
        return self.values != 0

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, SimpleFunction):
            check_same_space(self, other)
            return other.values
        return other

    def __add__(self, other):
        return SimpleFunction(self.space, self.values + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return SimpleFunction(self.space, self.values - self._coerce(other))

    def __rsub__(self, other):
        return SimpleFunction(self.space, self._coerce(other) - self.values)

    def __mul__(self, other):
        return SimpleFunction(self.space, self.values * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return SimpleFunction(self.space, self.values / self._coerce(other))

    def __neg__(self):
        return SimpleFunction(self.space, -self.values)

    def __repr__(self):
        return f"SimpleFunction({self.values.tolist()!r})"


@dataclass(frozen=True)
class ConjugateExponents:
    p: float
    q: float

    def __post_init__(self):
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-14:
            raise DomainError(f"({self.p}, {self.q}) are not conjugate exponents")


def check_same_space(f: SimpleFunction, g: SimpleFunction) -> None:
    if not f.space.same_as(g.space):
        raise InputError("functions live on different measure spaces")


def check_nonzero(*fs: SimpleFunction) -> None:
    for f in fs:
        if f.is_zero():
            raise ZeroFunctionError("function must not vanish identically")


def check_exponent(p: float, name: str = "p", lo: float = 1.0, hi: float = P_MAX) -> float:
    """Validate ``lo < p <= hi`` and return ``p`` as a float."""
    p = float(p)
    if not math.isfinite(p) or not lo < p <= hi:
        raise DomainError(f"{name}={p!r} must lie in ({lo}, {hi}]")
    return p


def conjugate(p: float) -> ConjugateExponents:
    """Return the pair (p, p/(p-1))."""
    p = check_exponent(p)
    return ConjugateExponents(p, p / (p - 1.0))


def power_integral(f: SimpleFunction, p: float) -> float:
    """Sum of w_i |f_i|^p, without rescaling."""
    return float(f.weights @ np.abs(f.values) ** p)


def norm(f: SimpleFunction, p: float) -> float:
    """Weighted p-norm; ``p = math.inf`` gives the max norm.

    Exponents in (0, 1) are accepted and return the usual quasi-norm.
    Values are rescaled by their maximum modulus before powering, so
    large exponents do not overflow.
    """
    a = np.abs(f.values)
    m = a.max()
    if p == math.inf:
        return float(m)
    if not p > 0:
        raise DomainError(f"norm exponent must be positive, got {p!r}")
    if m == 0:
        return 0.0
    return float(m * (f.weights @ (a / m) ** p) ** (1.0 / p))


def inner(f: SimpleFunction, g: SimpleFunction):
    """Bilinear pairing sum of w_i f_i g_i (no conjugation)."""
    check_same_space(f, g)
    val = f.weights @ (f.values * g.values)
    return complex(val) if np.iscomplexobj(val) else float(val)


def normalized_variance(f: SimpleFunction) -> float:
    """Variance of |f|/||f||_2 on a probability space, i.e. 1 - (||f||_1/||f||_2)^2."""
    if not f.space.is_probability():
        raise DomainError("normalized variance needs a probability space")
    check_nonzero(f)
    x = norm(f, 1.0) / norm(f, 2.0)
    return min(1.0, max(0.0, 1.0 - x * x))


def sign(values: np.ndarray) -> np.ndarray:
    """Unimodular sign with sign(0) := 1, for real or complex arrays."""
    a = np.abs(values)
    out = np.ones_like(values)
    nz = a != 0
    out[nz] = values[nz] / a[nz]
    return out


def dual_norm(f: SimpleFunction, p: float) -> float:
    """Evaluate the pairing of f with its explicit norming functional.

    The maximizer is |f|^(p-1) conj(sign f) / ||f||_p^(p-1), with
    sign(0) := 1; the pairing equals ||f||_p.
    """
    p = check_exponent(p)
    check_nonzero(f)
    nf = norm(f, p)
    a = np.abs(f.values) / nf
    g = a ** (p - 1.0) * np.conj(sign(f.values))
    val = f.weights @ (f.values * g)
    return float(np.real(val))


def unit_interval_grid(rule: Callable, n_atoms: int):
    """Midpoint-rule discretization of a function on [0, 1] with Lebesgue measure.

    Returns ``(space, f)`` with atoms at (i + 1/2)/n_atoms, each of weight
    1/n_atoms. ``rule`` is called once on the array of midpoints.
    """
    if int(n_atoms) != n_atoms or n_atoms < 1:
        raise InputError("n_atoms must be a positive integer")
    n_atoms = int(n_atoms)
    x = (np.arange(n_atoms) + 0.5) / n_atoms
    vals = np.asarray(rule(x))
    if vals.shape != x.shape:
        vals = np.broadcast_to(vals, x.shape)
    space = MeasureSpace.uniform(n_atoms)
    return space, SimpleFunction(space, vals)
