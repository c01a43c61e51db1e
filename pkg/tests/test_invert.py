"""Tests for bracketed numeric CDF inversion (the quantile oracle)."""

import math

import numpy as np
import pytest
from conftest import bisect

from lambertq import (
    BracketError,
    DomainError,
    QuantilePath,
    cdf,
    invert_cdf,
    numeric_quantile,
    quantile_values,
    validate,
)

NUMERIC_ONLY = ("additive_weibull", "nadarajah_kotz", "phani5", "xie_lai3")


def test_weibull2_median_certified():
    spec = validate("weibull2", a=1.0, b=1.0)
    res = numeric_quantile(spec, 0.5, tol=1e-12)
    assert res.t == pytest.approx(math.log(2.0), abs=1e-12)
    assert res.path is QuantilePath.NUMERIC
    assert res.roundtrip_residual <= 1e-12


def test_additive_weibull_median_matches_bisection_oracle():
    # a=1,b=2,c=1,d=0.5 gives SF = exp(-t^2 - sqrt(t)), so the median
    # solves t^2 + sqrt(t) = ln 2
    root = bisect(lambda t: t * t + math.sqrt(t) - math.log(2.0), 0.0, 1.0)
    assert root == pytest.approx(0.3363884162826468, abs=1e-15)  # frozen oracle value
    spec = validate("additive_weibull", a=1.0, b=2.0, c=1.0, d=0.5)
    assert numeric_quantile(spec, 0.5, tol=1e-12).t == pytest.approx(root, abs=1e-12)


def test_xie_lai3_self_certifying_residuals():
    spec = validate("xie_lai3", a=1.0, b=2.0, c=1.0)
    u = np.linspace(0.01, 0.99, 99)
    res = numeric_quantile(spec, u, tol=1e-12)
    assert np.max(res.roundtrip_residual) <= 1e-12
    assert np.all(np.diff(res.t) > 0)


def test_numeric_only_families_invert_cleanly():
    params = {
        "additive_weibull": dict(a=1.0, b=2.0, c=1.0, d=0.5),
        "nadarajah_kotz": dict(a=1.0, b=1.0, c=1.0, d=1.0),
        "phani5": dict(a=0.0, b=2.0, c=1.0, d=1.0, e=1.0),
        "xie_lai3": dict(a=1.0, b=2.0, c=1.0),
    }
    for name in NUMERIC_ONLY:
        spec = validate(name, **params[name])
        u = np.array([0.001, 0.1, 0.5, 0.9, 0.999])
        res = numeric_quantile(spec, u, tol=1e-12)
        assert np.max(res.roundtrip_residual) <= 1e-12, name


def test_matches_analytic_path():
    spec = validate("lai_weibull3", a=1.0, b=0.5, c=2.0)
    u = np.linspace(0.05, 0.95, 19)
    t_num = numeric_quantile(spec, u, tol=1e-12).t
    t_ana = quantile_values(spec, u)
    rel = np.abs(t_num - t_ana) / np.maximum(1.0, np.abs(t_ana))
    assert rel.max() <= 1e-8


def test_two_sided_support_brackets_negative_roots():
    # location a=3, scale b=2: low u give negative quantiles
    spec = validate("trunc_log_weibull", a=3.0, b=2.0)
    res = numeric_quantile(spec, 0.001, tol=1e-12)
    assert res.t < 0.0
    assert abs(cdf(spec, res.t) - 0.001) <= 1e-12


def test_finite_upper_support_bracket():
    spec = validate("kies4", a=0.5, b=2.0, c=1.0, d=0.7)
    res = numeric_quantile(spec, 0.999, tol=1e-12)
    assert 0.5 < res.t < 2.0
    assert res.roundtrip_residual <= 1e-12


def test_tolerance_floor_enforced():
    spec = validate("weibull2", a=1.0, b=1.0)
    with pytest.raises(ValueError):
        numeric_quantile(spec, 0.5, tol=1e-15)


def test_u_endpoints_rejected():
    spec = validate("weibull2", a=1.0, b=1.0)
    for bad in (0.0, 1.0):
        with pytest.raises(DomainError):
            numeric_quantile(spec, bad)


def test_defective_mass_raises_bracket_error():
    # Gompertz with b < 0 saturates F at u_max < 1; asking invert_cdf
    # directly for u above that can never find an upper bracket
    spec = validate("gompertz2", a=1.0, b=-1.0)
    assert spec.u_max < 0.9
    with pytest.raises(BracketError):
        invert_cdf(spec, np.array([0.9]), tol=1e-12)


def test_defective_mass_guarded_at_quantile_level():
    spec = validate("gompertz2", a=1.0, b=-1.0)
    with pytest.raises(DomainError):
        numeric_quantile(spec, 0.9)
