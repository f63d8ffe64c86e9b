"""Small-argument series kernels for the cancellation-prone integrands.

Every improper integrand in this project is a difference of terms that
agree to several orders at t = 0; evaluated literally they lose
O(log10(1/t)) digits per cancelled order.  The route and log-Gamma modules
rebuild each integrand from the helpers below so that the subtraction is
performed exactly in the series coefficients instead of in floating point.

All helpers are adaptive: terms are accumulated until they drop below the
current working precision (read from ``mp.dps`` at call time), so the same
code serves 20-digit and 200-digit contexts.  The series here converge for
|t| <= 0.5, which covers every near-zero threshold used in the project
(default 2^-8) with a large margin.
"""

from __future__ import annotations

import mpmath
from mpmath import mp, mpf


def _eps() -> mpf:
    return mpf(10) ** (-(mp.dps + 5))


def cancellation_guard(t, digits_per_decade: int) -> int:
    """Extra decimal digits a raw integrand form needs at abscissa t.

    ``digits_per_decade`` is how many digits per decade of smallness the
    form loses (the order gap between its raw terms and their cancelled
    sum); the constant 10 covers the O(1) bookkeeping losses.
    """
    if t >= 1:
        return 10
    return 10 + digits_per_decade * int(mpmath.ceil(-mpmath.log10(t)))


def t_minus_log1p(t: mpf) -> mpf:
    """t - log(1+t) = sum_{k>=2} (-1)^k t^k / k, exact to working precision.

    Forming log(1+t) directly costs absolute accuracy ~10^-dps from the
    rounding of 1+t, which is fatal when the result ~ t^2/2 is itself tiny.
    """
    if abs(t) > mpf("0.5"):
        return t - mpmath.log(1 + t)
    eps = _eps()
    acc = mpf(0)
    power = t
    k = 1
    while True:
        k += 1
        power *= t
        piece = power / k
        acc = acc + piece if (k % 2 == 0) else acc - piece
        if abs(piece) < eps * max(1, abs(acc)):
            break
    return acc


def expm1_minus_x(z: mpf) -> mpf:
    """expm1(z) - z = sum_{k>=2} z^k / k!  (no cancellation for small z)."""
    if abs(z) > mpf("0.5"):
        return mpmath.expm1(z) - z
    eps = _eps()
    acc = mpf(0)
    term = z
    k = 1
    while True:
        k += 1
        term = term * z / k
        acc += term
        if abs(term) < eps * max(1, abs(acc)):
            break
    return acc


def one_plus_em1z_over_z(z: mpf) -> mpf:
    """1 + expm1(-z)/z = sum_{j>=1} (-1)^{j+1} z^j / (j+1)!.

    Appears in the Feaux integrand where expm1(-x L)/L cancels against the
    x e^{-t} term; value z/2 - z^2/6 + ... near zero.
    """
    if abs(z) > mpf("0.5"):
        return 1 + mpmath.expm1(-z) / z
    eps = _eps()
    acc = mpf(0)
    power = mpf(1)         # z^j
    fact = mpf(1)          # (j+1)!
    j = 0
    while True:
        j += 1
        power *= z
        fact *= j + 1
        piece = power / fact
        acc = acc + piece if (j % 2 == 1) else acc - piece
        if abs(piece) < eps * max(1, abs(acc)) and j > 3:
            break
    return acc
