"""Registry of 28 lifetime distribution families.

Each family carries its survival function, parameter constraints,
support, and -- where one exists -- a closed-form quantile.  Ten
quantiles are elementary closed forms, fourteen involve the principal
branch of the Lambert W function, and four families have no analytic
inverse at all (callers use the numeric inverter for those).

Six catalogued closed forms do not actually invert their own CDF (wrong
prefactor, swapped symbols, survival function inverted instead of the
CDF, and so on).  For those families the registry stores both the form
exactly as printed in the source catalog (``printed_quantile``, kept for
the verification harness) and a corrected derivation (``quantile``,
used for evaluation).  The two are never silently merged; the harness
measures both and reports the discrepancy.

Formulas are evaluated with ``log1p``/``expm1`` throughout so roundtrip
residuals |F(Q(u)) - u| stay near machine precision across the u range,
and every Lambert W argument is asserted nonnegative (principal branch,
single-valued) in debug mode.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NoAnalyticFormError, ParamError
from .lambertw import w_principal, w_principal_from_log
from .normal import std_normal_cdf, std_normal_quantile

__all__ = [
    "DistributionSpec",
    "QuantilePath",
    "QuantileResult",
    "HazardShape",
    "family_ids",
    "family_info",
    "validate",
    "survival",
    "cdf",
    "quantile",
    "gm_subtractive_quantile",
    "wl_hazard",
]

_INF = math.inf


class QuantilePath(Enum):
    """How a quantile value was obtained."""

    ANALYTIC_VERIFIED = "AnalyticVerified"    # printed closed form, confirmed correct
    ANALYTIC_CORRECTED = "AnalyticCorrected"  # corrected derivation (printed form is wrong)
    NUMERIC = "Numeric"                       # bracketed numeric inversion


@dataclass(frozen=True)
class QuantileResult:
    """Quantile value plus provenance and the roundtrip residual |F(t) - u|."""

    t: float
    path: QuantilePath
    roundtrip_residual: float


@dataclass(frozen=True)
class DistributionSpec:
    """A validated family/parameter combination.

    ``support`` is the half-open interval [lo, hi).  ``u_max`` is below 1
    only for defective parameterizations (Gompertz with b < 0), where the
    distribution places mass 1 - u_max at infinity and quantiles are only
    defined for u < u_max.
    """

    family: str
    params: dict
    support: tuple
    u_max: float = 1.0


class HazardShape(Enum):
    INCREASING = "Increasing"
    BATHTUB = "Bathtub"


# --------------------------------------------------------------------------
# small numeric helpers

def _L(u):
    """-ln(1 - u), accurate for small u."""
    return -np.log1p(-u)


def _pow1m(u, r):
    """1 - u**r, accurate when u**r is close to 1."""
    return -np.expm1(np.log(u) * r)


# --------------------------------------------------------------------------
# family record

@dataclass(frozen=True)
class Family:
    name: str
    label: str
    params: tuple
    check: Callable                      # raises ParamError on bad params
    support: Callable                    # params -> (lo, hi)
    support_desc: str
    sf: Callable                         # (t array, params) -> SF array
    quantile: Optional[Callable]         # (u array, params) -> t array; None => numeric only
    printed_quantile: Optional[Callable] = None  # catalogued form when it differs
    corrected: bool = False
    note: str = ""
    u_max: Optional[Callable] = None     # params -> valid u upper bound


def _pos(*names):
    def check(fam, p):
        for n in names:
            if not p[n] > 0.0:
                raise ParamError("%s: %s must be positive (got %r)" % (fam, n, p[n]))
    return check


_FAMILIES = {}


def _register(fam):
    _FAMILIES[fam.name] = fam


# --------------------------------------------------------------------------
# closed-form families

def _sf_weibull2(t, p):
    return np.exp(-p["a"] * t ** p["b"])


def _q_weibull2(u, p):
    return (_L(u) / p["a"]) ** (1.0 / p["b"])


_register(Family(
    name="weibull2",
    label="Weibull",
    params=("a", "b"),
    check=lambda p: _pos("a", "b")("weibull2", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_weibull2,
    quantile=_q_weibull2,
))


def _sf_gompertz2(t, p):
    return np.exp(-(p["a"] / p["b"]) * np.expm1(p["b"] * t))


def _q_gompertz2(u, p):
    return np.log1p((p["b"] / p["a"]) * _L(u)) / p["b"]


def _check_gompertz2(p):
    if not p["a"] > 0.0:
        raise ParamError("gompertz2: a must be positive (got %r)" % p["a"])
    if p["b"] == 0.0:
        raise ParamError(
            "gompertz2: b must be nonzero; the b = 0 limit is the exponential, "
            "use weibull2 with b = 1"
        )


_register(Family(
    name="gompertz2",
    label="Gompertz",
    params=("a", "b"),
    check=_check_gompertz2,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_gompertz2,
    quantile=_q_gompertz2,
    # b < 0 leaves survival mass exp(a/b) at infinity: quantiles exist only
    # for u below 1 - exp(a/b)
    u_max=lambda p: -math.expm1(p["a"] / p["b"]) if p["b"] < 0.0 else 1.0,
))


def _sf_trunc_log_weibull(t, p):
    return np.exp(-np.exp((t - p["a"]) / p["b"]))


def _q_trunc_log_weibull(u, p):
    return p["a"] + p["b"] * np.log(_L(u))


def _check_trunc_log_weibull(p):
    if not p["b"] > 0.0:
        raise ParamError("trunc_log_weibull: b must be positive (got %r)" % p["b"])


_register(Family(
    name="trunc_log_weibull",
    label="log-Weibull (Gumbel minimum)",
    params=("a", "b"),
    check=_check_trunc_log_weibull,
    support=lambda p: (-_INF, _INF),
    support_desc="(-inf, inf)",
    sf=_sf_trunc_log_weibull,
    quantile=_q_trunc_log_weibull,
))


def _sf_flexible_weibull(t, p):
    return np.exp(-np.exp(p["a"] * t - p["b"] / t))


def _q_flexible_weibull(u, p):
    # a t - b/t = y  =>  a t^2 - y t - b = 0, positive root; written in the
    # form that avoids cancellation for either sign of y
    a, b = p["a"], p["b"]
    y = np.log(_L(u))
    root = np.sqrt(y * y + 4.0 * a * b)
    return np.where(y > 0.0, (y + root) / (2.0 * a), (2.0 * b) / (root - y))


def _q_flexible_weibull_printed(u, p):
    # catalogued form: t = -ln(-ln(1-u) +- sqrt(ln(-ln(1-u))^2 + 4ab)) / (2a);
    # evaluated for both signs, the harness keeps the better one per point
    a, b = p["a"], p["b"]
    ell = _L(u)
    root = np.sqrt(np.log(ell) ** 2 + 4.0 * a * b)
    tp = -np.log(ell + root) / (2.0 * a)
    tm = -np.log(ell - root) / (2.0 * a)
    return np.stack([tp, tm])


_register(Family(
    name="flexible_weibull",
    label="flexible Weibull",
    params=("a", "b"),
    check=lambda p: _pos("a", "b")("flexible_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="(0, inf)",
    sf=_sf_flexible_weibull,
    quantile=_q_flexible_weibull,
    printed_quantile=_q_flexible_weibull_printed,
    corrected=True,
    note=(
        "printed inverse takes the logarithm of the quadratic-root expression "
        "instead of solving it: the exponent satisfies a*t^2 - y*t - b = 0 with "
        "y = ln(-ln(1-u)), so t = (y + sqrt(y^2 + 4ab)) / (2a)"
    ),
))


def _sf_pham(t, p):
    return np.exp(-np.expm1(t ** p["b"] * math.log(p["a"])))


def _q_pham(u, p):
    return (np.log1p(_L(u)) / math.log(p["a"])) ** (1.0 / p["b"])


def _check_pham(p):
    if not p["a"] > 1.0:
        raise ParamError("pham: a must exceed 1 (got %r)" % p["a"])
    if not p["b"] > 0.0:
        raise ParamError("pham: b must be positive (got %r)" % p["b"])


_register(Family(
    name="pham",
    label="Pham loglog",
    params=("a", "b"),
    check=_check_pham,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_pham,
    quantile=_q_pham,
))


def _sf_exp_weibull(t, p):
    inner = -np.expm1(-p["a"] * t ** p["b"])  # 1 - exp(-a t^b)
    return -np.expm1(p["c"] * np.log(inner))


def _q_exp_weibull(u, p):
    inner = _pow1m(u, 1.0 / p["c"])  # 1 - u^(1/c)
    return (-np.log(inner) / p["a"]) ** (1.0 / p["b"])


_register(Family(
    name="exp_weibull",
    label="exponentiated Weibull",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("exp_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_exp_weibull,
    quantile=_q_exp_weibull,
))


def _sf_mod_weibull_ext(t, p):
    return np.exp(-p["a"] * p["b"] * np.expm1((t / p["b"]) ** p["c"]))


def _q_mod_weibull_ext(u, p):
    return p["b"] * np.log1p(_L(u) / (p["a"] * p["b"])) ** (1.0 / p["c"])


def _q_mod_weibull_ext_printed(u, p):
    # catalogued form carries prefactor a where the inversion yields b
    return p["a"] * np.log1p(_L(u) / (p["a"] * p["b"])) ** (1.0 / p["c"])


_register(Family(
    name="mod_weibull_ext",
    label="modified Weibull extension",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("mod_weibull_ext", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_mod_weibull_ext,
    quantile=_q_mod_weibull_ext,
    printed_quantile=_q_mod_weibull_ext_printed,
    corrected=True,
    note=(
        "printed inverse swaps the roles of a and b: the scale outside the "
        "bracket must be b (the same b that divides t inside the survival "
        "function), not a"
    ),
))


def _sf_exp_inv_weibull(t, p):
    inner = -np.expm1(-p["a"] * t ** -p["c"])  # 1 - exp(-a t^-c)
    return np.exp(p["b"] * np.log(inner))


def _q_exp_inv_weibull(u, p):
    inner = -np.expm1(np.log1p(-u) / p["b"])  # 1 - (1-u)^(1/b)
    return (p["a"] / -np.log(inner)) ** (1.0 / p["c"])


_register(Family(
    name="exp_inv_weibull",
    label="exponentiated inverse Weibull",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("exp_inv_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="(0, inf)",
    sf=_sf_exp_inv_weibull,
    quantile=_q_exp_inv_weibull,
))


def _sf_gen_weibull(t, p):
    inner = np.maximum(1.0 - p["a"] * p["c"] * t ** p["b"], 0.0)
    return inner ** (1.0 / p["c"])


def _q_gen_weibull(u, p):
    c = p["c"]
    num = -np.expm1(c * np.log1p(-u))  # 1 - (1-u)^c
    return (num / (p["a"] * c)) ** (1.0 / p["b"])


_register(Family(
    name="gen_weibull",
    label="generalized Weibull",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("gen_weibull", p),
    # the survival function hits zero where a*c*t^b = 1, i.e. t = (a c)^(-1/b)
    support=lambda p: (0.0, (p["a"] * p["c"]) ** (-1.0 / p["b"])),
    support_desc="[0, (a*c)^(-1/b))",
    sf=_sf_gen_weibull,
    quantile=_q_gen_weibull,
))


def _sf_ext_weibull(t, p):
    a = p["a"]
    e = np.exp(-((p["b"] * t) ** p["c"]))
    return a * e / (1.0 - (1.0 - a) * e)


def _q_ext_weibull(u, p):
    # F = u  <=>  (b t)^c = ln[(1 - u(1-a)) / (1-u)] = ln[1 + a u/(1-u)]
    val = np.log1p(p["a"] * u / (1.0 - u))
    return val ** (1.0 / p["c"]) / p["b"]


def _q_ext_weibull_printed(u, p):
    # catalogued form: t = (1/b) * ( ln[((2a-1) + u(1-a)) / u] )^(1/c)
    a = p["a"]
    val = np.log(((2.0 * a - 1.0) + u * (1.0 - a)) / u)
    return val ** (1.0 / p["c"]) / p["b"]


_register(Family(
    name="ext_weibull",
    label="extended Weibull (Marshall-Olkin)",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("ext_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_ext_weibull,
    quantile=_q_ext_weibull,
    printed_quantile=_q_ext_weibull_printed,
    corrected=True,
    note=(
        "printed inverse has numerator (2a-1) + u(1-a) over u, which does not "
        "invert the CDF; solving survival = 1-u gives (b t)^c = "
        "ln[(1 - u(1-a))/(1-u)] = ln[1 + a u/(1-u)]"
    ),
))


def _sf_gen_power_weibull(t, p):
    return np.exp(-np.expm1(np.log1p(p["a"] * t ** p["b"]) / p["c"]))


def _q_gen_power_weibull(u, p):
    num = np.expm1(p["c"] * np.log1p(_L(u)))  # (1 - ln(1-u))^c - 1
    return (num / p["a"]) ** (1.0 / p["b"])


_register(Family(
    name="gen_power_weibull",
    label="generalized power Weibull",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("gen_power_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_gen_power_weibull,
    quantile=_q_gen_power_weibull,
))


def _sf_odd_weibull(t, p):
    return 1.0 / (1.0 + np.expm1(p["a"] * t ** p["b"]) ** p["c"])


def _q_odd_weibull(u, p):
    inner = np.log1p((u / (1.0 - u)) ** (1.0 / p["c"]))
    return (inner / p["a"]) ** (1.0 / p["b"])


_register(Family(
    name="odd_weibull",
    label="odd Weibull",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("odd_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_odd_weibull,
    quantile=_q_odd_weibull,
))


def _sf_kies4(t, p):
    return np.exp(-p["c"] * ((t - p["a"]) / (p["b"] - t)) ** p["d"])


def _q_kies4(u, p):
    m = (_L(u) / p["c"]) ** (1.0 / p["d"])
    return (p["a"] + p["b"] * m) / (1.0 + m)


def _check_kies4(p):
    if not 0.0 <= p["a"] < p["b"]:
        raise ParamError(
            "kies4: endpoints must satisfy 0 <= a < b (got a=%r, b=%r)" % (p["a"], p["b"])
        )
    _pos("c", "d")("kies4", p)


_register(Family(
    name="kies4",
    label="Kies",
    params=("a", "b", "c", "d"),
    check=_check_kies4,
    support=lambda p: (p["a"], p["b"]),
    support_desc="[a, b)",
    sf=_sf_kies4,
    quantile=_q_kies4,
))


def _sf_exp_kum_weibull5(t, p):
    g = -np.expm1(-p["d"] * t ** p["e"])          # 1 - exp(-d t^e)
    h = np.exp(p["a"] * np.log(g))                # g^a
    inner = -np.expm1(p["b"] * np.log1p(-h))      # 1 - (1-h)^b
    return -np.expm1(p["c"] * np.log(inner))     # 1 - inner^c


def _ekw5_chain(s1, p):
    # shared tail of the inversion: s1 = 1 - (outer power of the probability)
    s2 = -np.expm1(np.log(s1) / p["b"])           # 1 - s1^(1/b)
    s3 = np.exp(np.log(s2) / p["a"])              # s2^(1/a)
    return (-np.log1p(-s3) / p["d"]) ** (1.0 / p["e"])


def _q_exp_kum_weibull5(u, p):
    return _ekw5_chain(_pow1m(u, 1.0 / p["c"]), p)          # 1 - u^(1/c)


def _q_exp_kum_weibull5_printed(u, p):
    # catalogued form starts from (1-u)^(1/c): it inverts the survival
    # function, i.e. F(t(u)) = 1 - u instead of u
    return _ekw5_chain(-np.expm1(np.log1p(-u) / p["c"]), p)  # 1 - (1-u)^(1/c)


_register(Family(
    name="exp_kum_weibull5",
    label="exponentiated Kumaraswamy Weibull",
    params=("a", "b", "c", "d", "e"),
    check=lambda p: _pos("a", "b", "c", "d", "e")("exp_kum_weibull5", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_exp_kum_weibull5,
    quantile=_q_exp_kum_weibull5,
    printed_quantile=_q_exp_kum_weibull5_printed,
    corrected=True,
    note=(
        "printed inverse substitutes (1-u)^(1/c) where u^(1/c) is required: "
        "as printed it solves SF(t) = u, returning the (1-u)-quantile; the "
        "corrected form inverts the CDF"
    ),
))


# --------------------------------------------------------------------------
# Lambert-W families

def _w0(arg):
    assert np.all(arg >= 0.0), "lambert argument must be nonnegative"
    return w_principal(arg).value


def _sf_lai_weibull3(t, p):
    return np.exp(-p["a"] * t ** p["b"] * np.exp(p["c"] * t))


def _q_lai_weibull3(u, p):
    b, c = p["b"], p["c"]
    arg = (c / b) * (_L(u) / p["a"]) ** (1.0 / b)
    return (b / c) * _w0(arg)


def _check_lai_weibull3(p):
    _pos("a", "b")("lai_weibull3", p)
    if not p["c"] > 0.0:
        raise ParamError(
            "lai_weibull3: c must be positive; the c = 0 limit has no "
            "exponential tilt and is exactly weibull2(a, b)"
        )


_register(Family(
    name="lai_weibull3",
    label="modified Weibull (exponential tilt)",
    params=("a", "b", "c"),
    check=_check_lai_weibull3,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_lai_weibull3,
    quantile=_q_lai_weibull3,
))


def _sf_inv_mod_weibull(t, p):
    return -np.expm1(-((p["a"] / t) ** p["b"]) * np.exp(p["c"] / t))


def _q_inv_mod_weibull(u, p):
    b, c = p["b"], p["c"]
    arg = (c / (p["a"] * b)) * (-np.log(u)) ** (1.0 / b)
    return (c / b) / _w0(arg)


def _check_inv_mod_weibull(p):
    _pos("a", "b")("inv_mod_weibull", p)
    if not p["c"] > 0.0:
        raise ParamError(
            "inv_mod_weibull: c must be positive; the c = 0 limit is the "
            "inverse Weibull, use exp_inv_weibull with b = 1"
        )


_register(Family(
    name="inv_mod_weibull",
    label="inverse modified Weibull",
    params=("a", "b", "c"),
    check=_check_inv_mod_weibull,
    support=lambda p: (0.0, _INF),
    support_desc="(0, inf)",
    sf=_sf_inv_mod_weibull,
    quantile=_q_inv_mod_weibull,
))


def _sf_xie_lai3(t, p):
    at = p["a"] * t
    return np.exp(-at ** p["b"] - at ** (1.0 / p["b"]) - p["c"] * t)


def _check_xie_lai3(p):
    if not p["a"] >= 0.0:
        raise ParamError("xie_lai3: a must be nonnegative (got %r)" % p["a"])
    if not p["b"] > 1.0:
        raise ParamError("xie_lai3: b must exceed 1 (got %r)" % p["b"])
    if not p["c"] > 0.0:
        raise ParamError("xie_lai3: c must be positive (got %r)" % p["c"])


_register(Family(
    name="xie_lai3",
    label="Xie-Lai conjugate-shape Weibull",
    params=("a", "b", "c"),
    check=_check_xie_lai3,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_xie_lai3,
    quantile=None,
    note=(
        "no closed-form inverse: t enters through (a t)^b, (a t)^(1/b) and a "
        "linear term at once, which no substitution reduces to w*exp(w)"
    ),
))


def _sf_gen_mod_weibull(t, p):
    inner = -np.expm1(-p["a"] * t ** p["c"] * np.exp(p["b"] * t))
    return -np.expm1(p["d"] * np.log(inner))


def _q_gen_mod_weibull(u, p):
    b, c = p["b"], p["c"]
    base = -np.log(_pow1m(u, 1.0 / p["d"]))       # -ln(1 - u^(1/d))
    arg = (b / c) * (base / p["a"]) ** (1.0 / c)
    return (c / b) * _w0(arg)


def _check_gen_mod_weibull(p):
    _pos("a", "c", "d")("gen_mod_weibull", p)
    if not p["b"] > 0.0:
        raise ParamError(
            "gen_mod_weibull: b must be positive; the b = 0 limit has no "
            "exponential tilt and is exactly exp_weibull(a, c, d)"
        )


_register(Family(
    name="gen_mod_weibull",
    label="generalized modified Weibull",
    params=("a", "b", "c", "d"),
    check=_check_gen_mod_weibull,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_gen_mod_weibull,
    quantile=_q_gen_mod_weibull,
))


def _sf_shifted_mod_weibull(t, p):
    tau = t - p["d"]
    return np.exp(-((p["a"] * tau) ** p["b"]) * np.exp(p["c"] * tau))


def _q_shifted_mod_weibull(u, p):
    a, b, c = p["a"], p["b"], p["c"]
    arg = (c / (a * b)) * _L(u) ** (1.0 / b)
    return p["d"] + (b / c) * _w0(arg)


def _check_shifted_mod_weibull(p):
    _pos("a", "b")("shifted_mod_weibull", p)
    if not p["c"] > 0.0:
        raise ParamError(
            "shifted_mod_weibull: c must be positive; the c = 0 limit has no "
            "exponential tilt and is a shifted weibull2(a^b, b)"
        )
    if not p["d"] >= 0.0:
        raise ParamError("shifted_mod_weibull: d must be nonnegative (got %r)" % p["d"])


_register(Family(
    name="shifted_mod_weibull",
    label="shifted modified Weibull",
    params=("a", "b", "c", "d"),
    check=_check_shifted_mod_weibull,
    support=lambda p: (p["d"], _INF),
    support_desc="[d, inf)",
    sf=_sf_shifted_mod_weibull,
    quantile=_q_shifted_mod_weibull,
))


def _sf_additive_weibull(t, p):
    return np.exp(-p["a"] * t ** p["b"] - p["c"] * t ** p["d"])


_register(Family(
    name="additive_weibull",
    label="additive Weibull",
    params=("a", "b", "c", "d"),
    check=lambda p: _pos("a", "b", "c", "d")("additive_weibull", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_additive_weibull,
    quantile=None,
    note=(
        "no closed-form inverse: the two Weibull exponents b and d cannot be "
        "untangled into a single w*exp(w) pattern"
    ),
))


def _sf_nadarajah_kotz(t, p):
    return np.exp(-p["a"] * t ** p["b"] * np.expm1(p["c"] * t ** p["d"]))


def _check_nadarajah_kotz(p):
    _pos("a", "d")("nadarajah_kotz", p)
    if not p["b"] >= 0.0:
        raise ParamError("nadarajah_kotz: b must be nonnegative (got %r)" % p["b"])
    if not p["c"] > 0.0:
        raise ParamError(
            "nadarajah_kotz: c must be positive; c = 0 makes the survival "
            "function identically 1"
        )


_register(Family(
    name="nadarajah_kotz",
    label="Nadarajah-Kotz Weibull extension",
    params=("a", "b", "c", "d"),
    check=_check_nadarajah_kotz,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_nadarajah_kotz,
    quantile=None,
    note="no closed-form inverse is available for this survival function",
))


def _sf_kum_mod_weibull(t, p):
    e = np.exp(-p["c"] * t ** p["d"] * np.exp(p["mu"] * t))
    inner = -np.expm1(p["a"] * np.log1p(-e))      # 1 - (1-e)^a
    return np.exp(p["b"] * np.log(inner))


def _q_kum_mod_weibull(u, p):
    d, mu = p["d"], p["mu"]
    r1 = -np.expm1(np.log1p(-u) / p["b"])          # 1 - (1-u)^(1/b)
    r2 = np.exp(np.log(r1) / p["a"])               # r1^(1/a)
    base = (-np.log1p(-r2) / p["c"]) ** (1.0 / d)
    arg = (mu / d) * base
    return (d / mu) * _w0(arg)


def _check_kum_mod_weibull(p):
    _pos("a", "b", "c", "d")("kum_mod_weibull", p)
    if not p["mu"] > 0.0:
        raise ParamError(
            "kum_mod_weibull: mu must be positive; the mu = 0 limit has no "
            "exponential tilt (a plain Kumaraswamy-Weibull, not registered here)"
        )


_register(Family(
    name="kum_mod_weibull",
    label="Kumaraswamy modified Weibull",
    params=("a", "b", "c", "d", "mu"),
    check=_check_kum_mod_weibull,
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_kum_mod_weibull,
    quantile=_q_kum_mod_weibull,
))


def _sf_phani5(t, p):
    return np.exp(-p["c"] * (t - p["a"]) ** p["d"] / (p["b"] - t) ** p["e"])


def _check_phani5(p):
    if not 0.0 <= p["a"] < p["b"]:
        raise ParamError(
            "phani5: endpoints must satisfy 0 <= a < b (got a=%r, b=%r)" % (p["a"], p["b"])
        )
    _pos("c", "d", "e")("phani5", p)


_register(Family(
    name="phani5",
    label="Phani five-parameter Kies extension",
    params=("a", "b", "c", "d", "e"),
    check=_check_phani5,
    support=lambda p: (p["a"], p["b"]),
    support_desc="[a, b)",
    sf=_sf_phani5,
    quantile=None,
    note=(
        "no closed-form inverse: the numerator and denominator carry distinct "
        "exponents d and e, so the defining equation is not reducible to w*exp(w)"
    ),
))


def _sf_lomax_like(t, p, d):
    return np.exp(-d * np.log1p((p["a"] * t) ** p["b"] * np.exp(p["c"] * t)))


def _q_lomax_like(u, p, d):
    # (a t)^b e^(c t) = (1-u)^(-1/d) - 1 = g  =>  t = (b/c) W((c/(a b)) g^(1/b))
    a, b, c = p["a"], p["b"], p["c"]
    g = np.expm1(-np.log1p(-u) / d)
    arg = (c / (a * b)) * g ** (1.0 / b)
    return (b / c) * _w0(arg)


_register(Family(
    name="mod_log_logistic",
    label="modified log-logistic",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("mod_log_logistic", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=lambda t, p: _sf_lomax_like(t, p, 1.0),
    quantile=lambda u, p: _q_lomax_like(u, p, 1.0),
))


def _sf_gompertz_makeham(t, p):
    return np.exp(-p["a"] * t - (p["b"] / p["c"]) * np.expm1(p["c"] * t))


def _gm_w(u, p):
    """W(A) with A = (b/a) * exp((b - c ln(1-u))/a), evaluated from ln(A)."""
    a, b, c = p["a"], p["b"], p["c"]
    log_arg = math.log(b / a) + (b + c * _L(u)) / a
    return w_principal_from_log(log_arg)


def _q_gompertz_makeham(u, p):
    # final catalogued form: t = (1/c) ln[(a/b) W(A)]
    a, b, c = p["a"], p["b"], p["c"]
    return (np.log(_gm_w(u, p)) + math.log(a / b)) / c


def gm_subtractive_quantile(spec, u):
    """Algebraically equivalent Gompertz-Makeham quantile written without the
    outer logarithm: t = (b - c ln(1-u))/(a c) - W(A)/c, same W argument A.

    Kept alongside the primary form as a regression check on the derivation;
    the two must agree to ~1e-10 over the whole u range.
    """
    if spec.family != "gompertz_makeham":
        raise ParamError("gm_subtractive_quantile: spec must be gompertz_makeham")
    arr = np.asarray(u, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    _check_u_open(v, spec)
    p = spec.params
    a, c = p["a"], p["c"]
    t = (p["b"] + c * _L(v)) / (a * c) - _gm_w(v, p) / c
    return float(t[0]) if scalar else t


_register(Family(
    name="gompertz_makeham",
    label="Gompertz-Makeham",
    params=("a", "b", "c"),
    check=lambda p: _pos("a", "b", "c")("gompertz_makeham", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=_sf_gompertz_makeham,
    quantile=_q_gompertz_makeham,
))


_register(Family(
    name="mod_power_lomax",
    label="modified power Lomax",
    params=("a", "b", "c", "d"),
    check=lambda p: _pos("a", "b", "c", "d")("mod_power_lomax", p),
    support=lambda p: (0.0, _INF),
    support_desc="[0, inf)",
    sf=lambda t, p: _sf_lomax_like(t, p, p["d"]),
    quantile=lambda u, p: _q_lomax_like(u, p, p["d"]),
))


def _sf_mod_pareto4(t, p):
    tau = t - p["mu"]
    return np.exp(-p["d"] * np.log1p((p["a"] * tau) ** (1.0 / p["b"]) * np.exp(p["c"] * tau)))


def _q_mod_pareto4(u, p):
    # (a tau)^(1/b) e^(c tau) = g  =>  b c tau e^(b c tau) = (b c / a) g^b
    a, b, c = p["a"], p["b"], p["c"]
    g = np.expm1(-np.log1p(-u) / p["d"])
    arg = (b * c / a) * g ** b
    return p["mu"] + _w0(arg) / (b * c)


def _q_mod_pareto4_printed(u, p):
    # catalogued form omits the b*c/a factor inside W
    b, c = p["b"], p["c"]
    g = np.expm1(-np.log1p(-u) / p["d"])
    return p["mu"] + _w0(g ** b) / (c * b)


def _check_mod_pareto4(p):
    _pos("a", "b", "c", "d")("mod_pareto4", p)
    if not p["mu"] >= 0.0:
        raise ParamError("mod_pareto4: mu must be nonnegative (got %r)" % p["mu"])


_register(Family(
    name="mod_pareto4",
    label="modified Pareto IV",
    params=("a", "b", "c", "d", "mu"),
    check=_check_mod_pareto4,
    support=lambda p: (p["mu"], _INF),
    support_desc="[mu, inf)",
    sf=_sf_mod_pareto4,
    quantile=_q_mod_pareto4,
    printed_quantile=_q_mod_pareto4_printed,
    corrected=True,
    note=(
        "printed W argument is g^b alone; inverting the survival function "
        "requires the factor b*c/a inside W so the shift and scale cancel: "
        "t = mu + W((b c / a) g^b)/(b c) with g = (1-u)^(-1/d) - 1"
    ),
))


def _sf_mod_lognormal(t, p):
    z = (p["b"] * np.log(p["a"] * t) + p["c"] * t - p["d"]) / p["mu"]
    return 1.0 - std_normal_cdf(z)


def _q_mod_lognormal(u, p):
    # b ln(a t) + c t = mu*z + d with z the standard normal quantile of u
    a, b, c = p["a"], p["b"], p["c"]
    z = std_normal_quantile(u)
    log_arg = math.log(c / (a * b)) + (p["mu"] * z + p["d"]) / b
    return (b / c) * w_principal_from_log(log_arg)


def _q_mod_lognormal_printed(u, p):
    # catalogued form relies on a normal "CDF" integrated from 0 rather than
    # -inf; its inverse only exists for u < 1/2 (as Phi^-1(u + 1/2))
    a, b, c = p["a"], p["b"], p["c"]
    out = np.full(np.shape(u), np.nan)
    mask = u < 0.5
    if mask.any():
        z = std_normal_quantile(u[mask] + 0.5)
        log_arg = math.log(c / (a * b)) + (p["mu"] * z + p["d"]) / b
        out[mask] = (b / c) * w_principal_from_log(log_arg)
    return out


def _check_mod_lognormal(p):
    _pos("a", "b", "c", "mu")("mod_lognormal", p)
    if not p["d"] >= 0.0:
        raise ParamError("mod_lognormal: d must be nonnegative (got %r)" % p["d"])


_register(Family(
    name="mod_lognormal",
    label="modified lognormal",
    params=("a", "b", "c", "d", "mu"),
    check=_check_mod_lognormal,
    support=lambda p: (0.0, _INF),
    support_desc="(0, inf)",
    sf=_sf_mod_lognormal,
    quantile=_q_mod_lognormal,
    printed_quantile=_q_mod_lognormal_printed,
    corrected=True,
    note=(
        "printed form inherits a normal CDF integrated from 0 (a half "
        "integral), whose inverse is undefined for u >= 1/2; implemented with "
        "the standard normal CDF and ln[(a t)^b e^(c t)] expanded as "
        "b ln(a t) + c t"
    ),
))


# --------------------------------------------------------------------------
# public operations

def family_ids():
    """All 28 family identifiers, in registry order."""
    return tuple(_FAMILIES)


def family_info(name):
    """The registry record for one family (parameters, support, notes)."""
    if name not in _FAMILIES:
        raise ParamError("unknown family %r; valid ids: %s" % (name, ", ".join(_FAMILIES)))
    return _FAMILIES[name]


def has_analytic_quantile(name):
    return family_info(name).quantile is not None


def validate(family, **params):
    """Check parameters against the family's constraints and build a spec.

    Raises ParamError naming the violated constraint; the returned
    DistributionSpec carries the normalized support interval (and, for
    defective parameterizations, the valid quantile range u_max).
    """
    fam = family_info(family)
    missing = [n for n in fam.params if n not in params]
    extra = [k for k in params if k not in fam.params]
    if missing or extra:
        problems = []
        if missing:
            problems.append("missing parameter(s) %s" % ", ".join(missing))
        if extra:
            problems.append("unknown parameter(s) %s" % ", ".join(sorted(extra)))
        raise ParamError(
            "%s: %s; expected %s"
            % (family, "; ".join(problems), ", ".join(fam.params))
        )
    p = {k: float(params[k]) for k in fam.params}
    for k, v in p.items():
        if not math.isfinite(v):
            raise ParamError("%s: %s must be finite (got %r)" % (family, k, v))
    fam.check(p)
    lo, hi = fam.support(p)
    u_max = fam.u_max(p) if fam.u_max is not None else 1.0
    spec = DistributionSpec(family=family, params=p, support=(lo, hi), u_max=u_max)
    _endpoint_consistency(fam, spec)
    return spec


def _endpoint_consistency(fam, spec):
    """Sanity gate: SF must be ~1 just inside lo and fall toward 0 at finite hi."""
    lo, hi = spec.support
    with np.errstate(all="ignore"):
        if math.isfinite(lo):
            s_lo = float(fam.sf(np.array([lo], dtype=float), spec.params)[0])
            if not (np.isfinite(s_lo) and abs(s_lo - 1.0) <= 1e-9):
                raise ParamError(
                    "%s: survival at the lower endpoint is %r, expected 1 "
                    "(support/SF inconsistency)" % (spec.family, s_lo)
                )
        if math.isfinite(hi):
            span = hi - (lo if math.isfinite(lo) else 0.0)
            ts = hi - span * np.array([1e-3, 1e-6, 1e-9, 1e-13])
            s_hi = fam.sf(ts, spec.params)
            if not (np.all(np.isfinite(s_hi)) and float(np.min(s_hi)) < 0.5):
                raise ParamError(
                    "%s: survival does not vanish toward the upper endpoint %r "
                    "(support/SF inconsistency)" % (spec.family, hi)
                )


def survival(spec, t):
    """SF(t) = P(X > t); clamps to 1 below the support and 0 at/above hi."""
    fam = family_info(spec.family)
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    lo, hi = spec.support
    out = np.full(v.shape, np.nan)
    inside = (v >= lo) & (v < hi)
    with np.errstate(all="ignore"):
        if inside.any():
            out[inside] = np.clip(fam.sf(v[inside], spec.params), 0.0, 1.0)
    out[v < lo] = 1.0
    out[v >= hi] = 0.0
    return float(out[0]) if scalar else out


def cdf(spec, t):
    """F(t) = 1 - survival(t), exactly."""
    return 1.0 - survival(spec, t)


def _check_u_open(v, spec):
    if not (np.all(v > 0.0) and np.all(v < 1.0)):
        raise DomainError("quantile: u must lie strictly inside (0, 1)")
    if spec.u_max < 1.0 and np.any(v >= spec.u_max):
        raise DomainError(
            "%s: defective for these parameters -- survival mass %r remains at "
            "infinity, so u must stay below u_max = %r"
            % (spec.family, 1.0 - spec.u_max, spec.u_max)
        )


def quantile(spec, u):
    """Analytic quantile Q(u) with provenance and roundtrip residual.

    Uses the family's closed form (corrected derivation where the
    catalogued form is wrong).  Families without an analytic inverse
    raise NoAnalyticFormError; use numeric_quantile for those.
    """
    fam = family_info(spec.family)
    if fam.quantile is None:
        raise NoAnalyticFormError(
            "%s has no analytic quantile; use numeric_quantile" % spec.family
        )
    arr = np.asarray(u, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    _check_u_open(v, spec)
    with np.errstate(all="ignore"):
        t = fam.quantile(v, spec.params)
    res = np.abs((1.0 - survival(spec, t)) - v)
    path = QuantilePath.ANALYTIC_CORRECTED if fam.corrected else QuantilePath.ANALYTIC_VERIFIED
    if scalar:
        return QuantileResult(float(t[0]), path, float(res[0]))
    return QuantileResult(t, path, res)


def quantile_values(spec, u):
    """Vectorized analytic quantile values without result metadata.

    Fast path for the sampler; same preconditions as ``quantile``.
    """
    fam = family_info(spec.family)
    if fam.quantile is None:
        raise NoAnalyticFormError(
            "%s has no analytic quantile; use numeric_quantile" % spec.family
        )
    v = np.asarray(u, dtype=float)
    _check_u_open(v, spec)
    with np.errstate(all="ignore"):
        return fam.quantile(v, spec.params)


def wl_hazard(a, b, c, t):
    """Hazard rate a(b + c t) t^(b-1) e^(c t) of the tilted Weibull, with its
    shape class: increasing for b >= 1, bathtub (down, then up) for 0 < b < 1.
    """
    a, b, c, t = float(a), float(b), float(c), float(t)
    if not (a > 0.0 and b > 0.0):
        raise ParamError("wl_hazard: a and b must be positive")
    if not c >= 0.0:
        raise ParamError("wl_hazard: c must be nonnegative")
    if not t > 0.0:
        raise DomainError("wl_hazard: t must be positive (got %r)" % t)
    rate = a * (b + c * t) * t ** (b - 1.0) * math.exp(c * t)
    shape = HazardShape.INCREASING if b >= 1.0 else HazardShape.BATHTUB
    return rate, shape
