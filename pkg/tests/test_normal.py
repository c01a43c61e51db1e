"""Tests for the standard normal CDF and quantile.

Quadrature-oracle values are recomputed in-test by adaptive Simpson
integration of the normal density (conftest.quad), which shares no code
with the erfc-based implementation under test.
"""

import numpy as np
import pytest
from conftest import bisect, geometric_tail_grid, normal_cdf_oracle, normal_pdf

from lambertq import DomainError, std_normal_cdf, std_normal_quantile


# ---------------------------------------------------------------------------
# CDF

def test_cdf_at_zero_is_half():
    assert std_normal_cdf(0.0) == 0.5


def test_cdf_saturates_in_far_tails():
    assert std_normal_cdf(40.0) == 1.0
    assert std_normal_cdf(-40.0) == 0.0


def test_cdf_at_one_matches_quadrature_oracle():
    oracle = normal_cdf_oracle(1.0)
    assert oracle == pytest.approx(0.8413447460685429, abs=2e-15)  # frozen oracle value
    assert std_normal_cdf(1.0) == pytest.approx(oracle, abs=1e-12)


def test_cdf_matches_quadrature_on_grid():
    for x in np.linspace(-8.0, 8.0, 33):
        assert std_normal_cdf(float(x)) == pytest.approx(
            normal_cdf_oracle(float(x)), abs=1e-12
        )


def test_cdf_monotone_and_bounded():
    x = np.linspace(-12.0, 12.0, 4001)
    p = std_normal_cdf(x)
    assert np.all(np.diff(p) >= 0)
    assert p.min() >= 0.0 and p.max() <= 1.0


def test_cdf_density_consistency():
    # central difference of the CDF against the closed-form density; for
    # x > 0 the CDF output is pinned near 1.0 where doubles resolve only
    # 1.1e-16 absolute, so difference the mirror point in the lower tail
    # (same density, full relative resolution)
    for x in np.linspace(-6.0, 6.0, 121):
        y = -abs(float(x))
        h = 1e-6
        num = (std_normal_cdf(y + h) - std_normal_cdf(y - h)) / (2.0 * h)
        assert num == pytest.approx(normal_pdf(float(x)), rel=1e-6)


def test_cdf_rejects_nan():
    with pytest.raises(DomainError):
        std_normal_cdf(float("nan"))


def test_cdf_array_shape():
    x = np.array([[-1.0, 0.0], [1.0, 2.0]])
    p = std_normal_cdf(x)
    assert p.shape == x.shape
    assert p[0, 1] == 0.5


# ---------------------------------------------------------------------------
# quantile

def test_quantile_at_half_is_exact_zero():
    assert std_normal_quantile(0.5) == 0.0


def test_quantile_0975_matches_bisection_oracle():
    oracle = bisect(lambda t: normal_cdf_oracle(t) - 0.975, 0.0, 10.0)
    assert oracle == pytest.approx(1.9599639845400545, abs=4e-15)  # frozen oracle value
    assert std_normal_quantile(0.975) == pytest.approx(oracle, abs=1e-12)


def test_quantile_forward_inverse_at_minus_three():
    p = normal_cdf_oracle(-3.0)
    assert p == pytest.approx(0.0013498980316300933, abs=3e-15)  # frozen oracle value
    assert std_normal_cdf(-3.0) == pytest.approx(p, abs=1e-12)
    assert std_normal_quantile(0.0013498980316301) == pytest.approx(-3.0, abs=1e-12)


def test_quantile_roundtrip_geometric_grid():
    p = geometric_tail_grid(tail=1e-12, points=80)
    q = std_normal_quantile(p)
    back = std_normal_cdf(q)
    assert np.abs(back - p).max() <= 1e-10


def test_quantile_antisymmetry():
    # p and 1-p are exact complements only away from the rounding floor
    p = geometric_tail_grid(tail=1e-6, points=50)
    q = std_normal_quantile(p)
    q_mirror = std_normal_quantile(1.0 - p)
    assert np.abs(q + q_mirror).max() <= 1e-10


def test_quantile_monotone():
    p = np.linspace(1e-9, 1.0 - 1e-9, 2001)
    q = std_normal_quantile(p)
    assert np.all(np.diff(q) > 0)


def test_quantile_domain_errors():
    for bad in (0.0, 1.0, -0.5, 1.5, float("nan")):
        with pytest.raises(DomainError):
            std_normal_quantile(bad)


def test_quantile_array_shape():
    p = np.array([0.25, 0.5, 0.75])
    q = std_normal_quantile(p)
    assert q.shape == p.shape
    assert q[1] == 0.0
    assert q[0] == pytest.approx(-q[2], abs=1e-13)
