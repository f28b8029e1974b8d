import math

import numpy as np
import pytest

from lpstab.errors import DomainError, InputError, ZeroFunctionError
from lpstab.measure import (
    MeasureSpace,
    SimpleFunction,
    check_nonzero,
    conjugate,
    dual_norm,
    inner,
    norm,
    normalized_variance,
    sign,
    unit_interval_grid,
)


def test_space_validation():
    with pytest.raises(InputError):
        MeasureSpace([])
    with pytest.raises(InputError):
        MeasureSpace([1.0, 0.0])
    with pytest.raises(InputError):
        MeasureSpace([1.0, math.nan])
    sp = MeasureSpace.uniform(4)
    assert sp.is_probability()
    assert not MeasureSpace([1, 1]).is_probability()


def test_weights_are_read_only(half):
    with pytest.raises(ValueError):
        half.weights[0] = 3.0


def test_function_validation(half):
    with pytest.raises(InputError):
        SimpleFunction(half, [1.0])
    with pytest.raises(InputError):
        SimpleFunction(half, [1.0, math.inf])
    f = SimpleFunction(half, [1 + 0j, 2 + 0j])
    assert not f.is_complex
    assert SimpleFunction(half, [1, 1j]).is_complex


def test_mixed_spaces_rejected(half):
    other = MeasureSpace([0.25, 0.75])
    with pytest.raises(InputError):
        SimpleFunction(half, [1, 2]) + SimpleFunction(other, [1, 2])
    with pytest.raises(InputError):
        inner(SimpleFunction(half, [1, 2]), SimpleFunction(other, [1, 2]))


def test_norm_values(half):
    f = SimpleFunction(half, [2, 0])
    assert norm(f, 4) == pytest.approx(2 ** 0.75, rel=1e-15)
    assert norm(f, 1) == 1.0
    assert norm(f, math.inf) == 2.0
    assert norm(SimpleFunction(half, [0, 0]), 3) == 0.0
    # quasi-norm below 1
    assert norm(SimpleFunction(half, [1, 4]), 0.5) == pytest.approx(2.25)
    with pytest.raises(DomainError):
        norm(f, 0)


def test_norm_no_overflow():
    sp = MeasureSpace.uniform(3)
    f = SimpleFunction(sp, [1e200, 1e199, 1.0])
    assert norm(f, 50) == pytest.approx(1e200 * (1 / 3) ** (1 / 50) * (1 + 1e-50) ** (1 / 50))


def test_norm_against_loop(rng):
    w = rng.uniform(0.1, 2, 7)
    v = rng.normal(size=7)
    sp = MeasureSpace(w)
    for p in (1.0, 1.5, 3.0, 7.5):
        expect = math.fsum(wi * abs(vi) ** p for wi, vi in zip(w, v)) ** (1 / p)
        assert norm(SimpleFunction(sp, v), p) == pytest.approx(expect, rel=1e-13)


def test_conjugate():
    pq = conjugate(4 / 3)
    assert pq.q == pytest.approx(4.0)
    with pytest.raises(DomainError):
        conjugate(1.0)


def test_sign_convention():
    s = sign(np.array([0.0, -2.0, 3.0]))
    assert s.tolist() == [1.0, -1.0, 1.0]
    z = sign(np.array([0j, 3j]))
    assert np.allclose(z, [1, 1j])


def test_dual_norm_real_and_complex(half):
    for vals in ([2.0, -1.0], [0.0, 3.0], [1 + 1j, -2j]):
        f = SimpleFunction(half, vals)
        for p in (1.2, 2.0, 5.0):
            assert dual_norm(f, p) == pytest.approx(norm(f, p), rel=1e-13)


def test_inner_bilinear(half):
    f = SimpleFunction(half, [1j, 1])
    assert inner(f, f) == pytest.approx(0.0)


def test_normalized_variance():
    sp = MeasureSpace.uniform(2)
    assert normalized_variance(SimpleFunction(sp, [1, 1])) == pytest.approx(0.0, abs=1e-15)
    # |f| = (2, 0): ||f||_1 = 1, ||f||_2 = sqrt(2) -> 1 - 1/2
    assert normalized_variance(SimpleFunction(sp, [2, 0])) == pytest.approx(0.5)
    with pytest.raises(DomainError):
        normalized_variance(SimpleFunction(MeasureSpace([1, 1]), [1, 2]))


def test_zero_function_rejected(half):
    with pytest.raises(ZeroFunctionError):
        check_nonzero(SimpleFunction(half, [0, 0]))


def test_unit_interval_grid():
    sp, f = unit_interval_grid(lambda x: x, 1000)
    assert sp.n_atoms == 1000
    assert norm(f, 1) == pytest.approx(0.5, abs=1e-12)
    assert norm(f, 2) ** 2 == pytest.approx(1 / 3, abs=1e-6)
