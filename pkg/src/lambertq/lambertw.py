"""Real branches of the Lambert W function.

Solves w * exp(w) = x by Halley iteration from regime-specific initial
guesses: a truncated Taylor series near 0, the asymptotic form
ln(x) - ln(ln(x)) for large x, ln(-x) - ln(-ln(-x)) on the lower branch
toward 0-, and the square-root expansion in p = sqrt(2*(e*x + 1)) near
the branch point -1/e.  Every evaluation reports the defining-identity
residual |w*exp(w) - x| / max(|x|, 1e-300) and the iteration count
alongside the value, so callers can audit precision directly.

The principal branch W0 covers x >= -1/e with W0 >= -1; the lower branch
W-1 covers -1/e <= x < 0 with W-1 <= -1.  Inputs up to 1e-15 below the
branch point are clamped to -1/e rather than rejected, because quantile
formulas can land an ulp below it at extreme probabilities.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = ["Branch", "WEvaluation", "w_principal", "w_lower", "w_series", "tree_t"]

_BRANCH_POINT = -math.exp(-1.0)  # -1/e, where both real branches meet at w = -1
_CLAMP_BELOW = 1e-15             # tolerated undershoot below -1/e from roundoff
_EXPANSION_WINDOW = 1e-5         # |x + 1/e| below this: branch expansion alone
_MAX_ITER = 50
_CONVERGENCE = 1e-15

# Taylor coefficients of W0 about 0: W0(x) = sum_{n>=1} (-n)^(n-1)/n! * x^n.
# Exact rationals keep each coefficient within one rounding of true.
_SERIES_COEFFS = tuple(
    float(Fraction((-n) ** (n - 1), math.factorial(n))) for n in range(1, 31)
)


class Branch(Enum):
    """Real branch selector: PRINCIPAL is W0 (w >= -1), LOWER is W-1 (w <= -1)."""

    PRINCIPAL = "principal"
    LOWER = "lower"


@dataclass(frozen=True)
class WEvaluation:
    """A Lambert W value with its identity residual and iteration count."""

    value: float
    residual: float
    iterations: int


def _series_sum(x, n_terms):
    """Horner evaluation of the n_terms-term Taylor partial sum."""
    s = np.full_like(x, _SERIES_COEFFS[n_terms - 1])
    for k in range(n_terms - 2, -1, -1):
        s = s * x + _SERIES_COEFFS[k]
    return s * x


def _branch_expansion(p):
    """Expansion about the branch point: w = -1 + p - p^2/3 + ..., p = +-sqrt(2(e*x+1))."""
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0
                 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))))


def _halley(x, w, active):
    """Refine w*exp(w) = x in place; returns (w, per-element iteration counts)."""
    iters = np.zeros(w.shape, dtype=np.int64)
    active = active.copy()
    for _ in range(_MAX_ITER):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        wa = w[idx]
        xa = x[idx]
        ew = np.exp(wa)
        f = wa * ew - xa
        f1 = ew * (1.0 + wa)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
            den = 2.0 * f1 * f1 - f * ew * (2.0 + wa)
            dw = 2.0 * f * f1 / den
            # f1*f1 overflows for x beyond ~1e154: the quotient then reads 0
            # or NaN, so fall back to the still-finite Newton step there
            bad = ~np.isfinite(dw) | ~np.isfinite(den)
            if bad.any():
                dw[bad] = f[bad] / f1[bad]
            dw = np.where(np.isfinite(dw) & (f != 0.0), dw, 0.0)
        wn = wa - dw
        w[idx] = wn
        iters[idx] += 1
        done = np.abs(dw) <= _CONVERGENCE * (1.0 + np.abs(wn))
        active[idx[done]] = False
    return w, iters


def _identity_residual(w, x):
    with np.errstate(over="ignore", invalid="ignore", under="ignore"):
        return np.abs(w * np.exp(w) - x) / np.maximum(np.abs(x), 1e-300)


def _evaluate(x, branch):
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    if not np.all(np.isfinite(v)):
        raise DomainError("lambert w: input must be finite")
    if np.any(v < _BRANCH_POINT - _CLAMP_BELOW):
        raise DomainError(
            "lambert w: x must be >= -1/e (%r); got %r" % (_BRANCH_POINT, float(v.min()))
        )
    if branch is Branch.LOWER and np.any(v >= 0.0):
        raise DomainError(
            "w_lower: x must be < 0; got %r" % float(v.max())
        )
    v = np.maximum(v, _BRANCH_POINT)  # absorb sub-branch-point roundoff

    delta = v - _BRANCH_POINT  # = x + 1/e >= 0
    with np.errstate(over="ignore"):  # p is only consumed near the branch point
        p = np.sqrt(2.0 * math.e * delta)
    if branch is Branch.LOWER:
        p = -p

    w0 = np.empty_like(v)
    near = delta <= _EXPANSION_WINDOW  # expansion alone is already ~1e-12 accurate
    w0[near] = _branch_expansion(p[near])
    far = ~near
    if branch is Branch.PRINCIPAL:
        r_exp = far & (v < -0.27)
        r_ser = far & (v >= -0.27) & (v <= 0.3)
        r_mid = far & (v > 0.3) & (v <= math.e)
        r_log = far & (v > math.e)
        w0[r_exp] = _branch_expansion(p[r_exp])
        w0[r_ser] = _series_sum(v[r_ser], 10)
        w0[r_mid] = np.log1p(v[r_mid])
        lx = np.log(v[r_log])
        llx = np.log(lx)
        w0[r_log] = lx - llx + llx / lx
    else:
        r_exp = far & (v < -0.27)
        r_log = far & (v >= -0.27)
        w0[r_exp] = _branch_expansion(p[r_exp])
        lx = np.log(-v[r_log])
        w0[r_log] = lx - np.log(-lx)

    w, iters = _halley(v, w0, far)
    res = _identity_residual(w, v)
    if scalar:
        return WEvaluation(float(w[0]), float(res[0]), int(iters[0]))
    return WEvaluation(w, res, iters)


def w_principal(x):
    """Principal branch W0: the w >= -1 solving w*exp(w) = x, for x >= -1/e.

    Accepts a scalar or array; returns a WEvaluation whose fields mirror
    the input shape.  w_principal(0) is exactly 0.
    """
    return _evaluate(x, Branch.PRINCIPAL)


def w_lower(x):
    """Lower branch W-1: the w <= -1 solving w*exp(w) = x, for -1/e <= x < 0."""
    return _evaluate(x, Branch.LOWER)


def w_series(x, n_terms):
    """Partial sum of the Taylor series of W0 about 0: sum (-n)^(n-1)/n! x^n.

    Valid for |x| < 1/e (the series radius); n_terms is capped at 30 to
    keep the coefficients exactly representable in double precision.
    """
    n = int(n_terms)
    if n < 1 or n > 30:
        raise ValueError("w_series: n_terms must be between 1 and 30; got %r" % n_terms)
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    if np.any(~np.isfinite(v)) or np.any(np.abs(v) >= -_BRANCH_POINT):
        raise DomainError("w_series: |x| must be < 1/e (series radius)")
    s = _series_sum(v, n)
    return float(s[0]) if scalar else s


def tree_t(x):
    """Tree function T(x) = -W0(-x), defined for x <= 1/e."""
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    if np.any(~np.isfinite(v)):
        raise DomainError("tree_t: input must be finite")
    if np.any(v > -_BRANCH_POINT + _CLAMP_BELOW):
        raise DomainError("tree_t: x must be <= 1/e; got %r" % float(v.max()))
    v = np.minimum(v, -_BRANCH_POINT)
    out = -_evaluate(-v, Branch.PRINCIPAL).value
    return float(out[0]) if scalar else out


_LOG_DIRECT = 700.0  # below this, exp(log_x) is representable and W0 is direct


def w_principal_from_log(log_x):
    """W0(exp(log_x)) without forming exp(log_x), safe for arbitrarily large log_x.

    For log_x > 700 solves w + ln(w) = log_x by Newton iteration from
    w0 = log_x - ln(log_x); otherwise defers to w_principal.  Returns the
    value only (no residual metadata) -- this is plumbing for quantile
    formulas whose W argument overflows double precision.
    """
    arr = np.asarray(log_x, dtype=float)
    scalar = arr.ndim == 0
    v = np.atleast_1d(arr).astype(float)
    out = np.empty_like(v)
    small = v <= _LOG_DIRECT
    if small.any():
        out[small] = _evaluate(np.exp(v[small]), Branch.PRINCIPAL).value
    big = ~small
    if big.any():
        ell = v[big]
        w = ell - np.log(ell)
        for _ in range(5):
            w -= (w + np.log(w) - ell) / (1.0 + 1.0 / w)
        out[big] = w
    return float(out[0]) if scalar else out
