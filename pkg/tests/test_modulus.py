import math

import pytest

from lpstab.convexity import delta_lower_bound
from lpstab.errors import DomainError
from lpstab.modulus import (
    estimate_modulus,
    hanner_modulus,
    reflect_configuration_delta,
    swap_configuration_delta,
    two_point_search,
)


def hilbert(eps):
    return 1 - math.sqrt(1 - eps * eps / 4)


@pytest.mark.parametrize("eps", [0.1, 0.7, 1.9])
def test_configurations_agree_at_p2(eps):
    assert swap_configuration_delta(2, eps) == pytest.approx(hilbert(eps), abs=1e-14)
    assert reflect_configuration_delta(2, eps) == pytest.approx(hilbert(eps), abs=1e-14)


def test_hanner_p4_oracle():
    d = hanner_modulus(4, 0.5)
    # (1 - d)^4 + (1/4)^4 = 1
    assert (1 - d) ** 4 + 0.25**4 == pytest.approx(1.0, abs=1e-15)
    assert d == pytest.approx(0.0009779962798832642, rel=1e-12)
    # the other configuration is feasible, so it only bounds the modulus from above
    assert swap_configuration_delta(4, 0.5) > d


@pytest.mark.parametrize("p", [1.3, 2.0, 3.0, 5.0])
@pytest.mark.parametrize("eps", [0.3, 1.2])
def test_two_point_matches_hanner(p, eps):
    d, f, h = two_point_search(p, eps)
    assert d == pytest.approx(hanner_modulus(p, eps), rel=1e-8)


@pytest.mark.parametrize("eps", [0.2, 1.0])
def test_estimate_p2(eps):
    est = estimate_modulus(2, 2, eps, seed=3, restarts=6)
    assert est.delta_estimate == pytest.approx(hilbert(eps), abs=1e-9)
    assert est.violations() == []
    assert est.feasibility_error < 1e-8


def test_estimate_deterministic():
    a = estimate_modulus(3, 3, 0.8, seed=11, restarts=5)
    b = estimate_modulus(3, 3, 0.8, seed=11, restarts=5)
    assert a == b
    assert a.delta_estimate >= delta_lower_bound(3, 0.8) - 1e-9


def test_estimate_more_dims_not_larger():
    two = estimate_modulus(1.5, 2, 0.6, seed=0, restarts=8)
    four = estimate_modulus(1.5, 4, 0.6, seed=0, restarts=8)
    assert four.delta_estimate <= two.delta_estimate + 1e-9


def test_estimate_domain():
    with pytest.raises(DomainError):
        estimate_modulus(2, 1, 0.5)
    with pytest.raises(DomainError):
        estimate_modulus(2, 2, 2.5)
