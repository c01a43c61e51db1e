"""
A tour of the real Lambert W branches
=====================================

W(x) is the inverse of w * exp(w): every evaluation below comes back
with the residual |W e^W - x| so you can see the identity holding.
"""

import numpy as np

from lambertq import tree_t, w_lower, w_principal, w_series

# ---------------------------------------------------------------------------
# 1. The principal branch W0 covers x >= -1/e and returns W >= -1.

for x in (0.0, 1.0, np.e, 10.0, 1e6):
    res = w_principal(x)
    print("W0(%-8g) = %-22.17g residual=%.2e iterations=%d"
          % (x, res.value, res.residual, res.iterations))

# W0(1) is the omega constant: omega * exp(omega) = 1.
omega = w_principal(1.0).value
print("omega * exp(omega) =", omega * np.exp(omega))

# ---------------------------------------------------------------------------
# 2. The lower branch W_-1 lives on [-1/e, 0) and returns W <= -1.
#    Both branches meet at the branch point x = -1/e with value -1.

branch_point = -1.0 / np.e
print("\nW0(-1/e)  =", w_principal(branch_point).value)
print("W-1(-1/e) =", w_lower(branch_point).value)
print("W-1(-0.1) =", w_lower(-0.1).value)  # approx -3.577152063957297

# ---------------------------------------------------------------------------
# 3. Vectorized evaluation: pass an array, get arrays back.

x = np.geomspace(1e-6, 1e8, 15)
res = w_principal(x)
print("\nworst identity residual over %d points: %.3e"
      % (x.size, float(np.max(res.residual))))

# ---------------------------------------------------------------------------
# 4. The defining power series x - x^2 + (3/2) x^3 - ... converges for
#    |x| < 1/e; 20 terms already match the full evaluation to ~1e-14
#    on |x| <= 0.05.

for n in (1, 3, 10, 20):
    print("series(0.04, n=%2d) = %.17g" % (n, w_series(0.04, n)))
print("W0(0.04)           = %.17g" % w_principal(0.04).value)

# ---------------------------------------------------------------------------
# 5. The tree function T(x) = -W0(-x) solves T = x * e^T; it shows up
#    when a quantile needs the inverse of t * e^(-t).

for x in (0.0, 0.25, 1.0 / np.e):
    t = tree_t(x)
    print("T(%-8g) = %-20.17g check t - x e^t = %.2e"
          % (x, t, t - x * np.exp(t)))
