"""Reference log Gamma plus three integral/series representations of it.

The oracle ``log_gamma_ref`` is a Stirling asymptotic series after an
upward recurrence shift; it is the yardstick every quadrature-based
representation is tested against (the integrals under test must not be
their own oracle).

The representations:

* Feaux:   log Gamma(x+1) = int_0^inf [x e^-t
               + ((1+t)^{-x-1} - (1+t)^{-1}) / log(1+t)] dt/t
* Kummer:  log Gamma(x)   = (log pi)/2 - (1/2) log sin(pi x)
               + (1/2) int_0^inf [sinh((1/2-x)t)/sinh(t/2)
                                  - (1-2x) e^-t] dt/t,  0 < x < 1
* Fourier: log Gamma(x)   = (log pi)/2 - (1/2) log sin(pi x)
               + 2 sum_{n>=1} a_n sin(2 pi n x),
  with a_n = (gamma + log(2 pi) + log n) / (2 n pi), equal to the integral
  int_0^inf [2 n pi/(t^2 + 4 n^2 pi^2) - e^-t/(2 n pi)] dt/t.

Each improper integrand cancels near t = 0 (both bracket terms approach
the same constant), so each carries a ``near_zero`` series built from the
:mod:`glaisher.smallt` kernels; the raw form compensates with extra digits
scaled to the observed cancellation, which keeps the mandatory
raw-vs-series consistency check meaningful.

Also here: the Dirichlet integral for Euler's constant (the quadrature
cross-check of the context's reference gamma) and the Barnes-G identity
log G(1+z) = z(1-z)/2 + (z/2) log 2pi + z log Gamma(z) - int_0^z log Gamma.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from mpmath import mp, mpf

from .context import ComputeContext, Real
from .quadrature import (
    Integrand,
    QuadratureResult,
    integrate_finite,
    integrate_zero_to_inf,
)
from .smallt import (
    cancellation_guard,
    expm1_minus_x,
    one_plus_em1z_over_z,
    t_minus_log1p,
)


class DomainError(ValueError):
    """Argument outside the domain a representation is valid on."""


# ---------------------------------------------------------------------------
# Stirling oracle
# ---------------------------------------------------------------------------

def log_gamma_ref(x: Real, ctx: ComputeContext) -> Real:
    """log Gamma(x) for x > 0 via Stirling's series with recurrence shift.

    The argument is shifted upward until it exceeds 10 P / 7 (P = context
    digits), where the asymptotic series reaches the target accuracy in
    ~P/4 terms; the shifted logs are subtracted back out.
    """
    if not x > 0:
        raise DomainError(f"log_gamma_ref requires x > 0, got {mpmath.nstr(mpf(x), 8)}")
    digits = ctx.precision_digits
    with mp.workdps(digits + 15):
        z = mpf(x)
        z_min = mpf(10) * digits / 7
        shift = mpf(0)
        while z < z_min:
            shift += mpmath.log(z)
            z += 1
        acc = (z - mpf(1) / 2) * mpmath.log(z) - z + mpmath.log(2 * mpmath.pi) / 2
        eps = mpf(10) ** (-(digits + 12))
        k = 0
        while True:
            k += 1
            term = mpmath.bernoulli(2 * k) / ((2 * k) * (2 * k - 1) * z ** (2 * k - 1))
            acc += term
            if abs(term) < eps:
                break
        return +(acc - shift)


# ---------------------------------------------------------------------------
# Feaux representation of log Gamma(x+1)
# ---------------------------------------------------------------------------

def feaux_integrand(x: Real, ctx: ComputeContext) -> Integrand:
    """Integrand of the Feaux formula at parameter x.

    Near-zero form: the bracket equals x e^{-L} [expm1(L-t) + (1 + expm1(-xL)/L)]
    with L = log(1+t); both pieces are O(t^2) and O(t) series with no
    subtractive cancellation.  Note the log(1+t) denominator (the
    literature form with a bare 1+t is a known typo).
    """
    with ctx.workdps(20):
        x = mpf(x)

    def raw(t):
        with mp.extradps(cancellation_guard(t, 2)):
            L = mpmath.log(1 + t)
            bracket = x * mpmath.exp(-t) + ((1 + t) ** (-x - 1) - 1 / (1 + t)) / L
            return +(bracket / t)

    def series(t):
        lmt = t_minus_log1p(t)          # t - log(1+t) = O(t^2)
        L = t - lmt
        inner = mpmath.expm1(-lmt) + one_plus_em1z_over_z(x * L)
        return x * mpmath.exp(-L) * inner / t

    return Integrand(
        eval=raw,
        near_zero=series,
        label=f"feaux(x={mpmath.nstr(x, 8)})",
        decay_class="algebraic",
    )


def feaux_log_gamma1p(
    x: Real, ctx: ComputeContext, full: bool = False
) -> Real | tuple[Real, QuadratureResult]:
    """log Gamma(x+1) by the Feaux integral; exercised on 0 <= x <= 1/2."""
    if not x > -1:
        raise DomainError(f"feaux_log_gamma1p requires x > -1, got {mpmath.nstr(mpf(x), 8)}")
    result = integrate_zero_to_inf(feaux_integrand(x, ctx), ctx=ctx)
    result.require_converged("feaux")
    return (result.value, result) if full else result.value


# ---------------------------------------------------------------------------
# Kummer representation of log Gamma(x), 0 < x < 1
# ---------------------------------------------------------------------------

def kummer_integrand(x: Real, ctx: ComputeContext) -> Integrand:
    """Integrand of the Kummer formula at parameter x.

    Both bracket terms approach 1-2x at t = 0.  The near-zero form expands
    sinh(at) - 2a e^-t sinh(t/2) (a = 1/2 - x) as a single power series
    whose O(t) coefficients cancel exactly, then divides by t sinh(t/2).
    """
    with ctx.workdps(20):
        x = mpf(x)
        a = +(mpf(1) / 2 - x)

    def raw(t):
        # 1 - 2x is written as 2a so both evaluation paths share the one
        # stored parameter; recomputing it would introduce a rounding
        # mismatch that 1/t amplifies near the origin.
        with mp.extradps(cancellation_guard(t, 1)):
            bracket = mpmath.sinh(a * t) / mpmath.sinh(t / 2) - 2 * a * mpmath.exp(-t)
            return +(bracket / t)

    def series(t):
        eps = mpf(10) ** (-(mp.dps + 5))
        # numerator N(t) = sum_{k>=2} (s_k - a c_k) t^k, with
        # s_k = a^k/k! (k odd), c_k = ((-1/2)^k - (-3/2)^k)/k!
        acc = mpf(0)
        a_pow = a                      # a^k
        half_pow = mpf(-1) / 2         # (-1/2)^k
        three_pow = mpf(-3) / 2        # (-3/2)^k
        fact = mpf(1)                  # k!
        t_pow = t                      # t^k
        k = 1
        while True:
            k += 1
            a_pow *= a
            half_pow *= mpf(-1) / 2
            three_pow *= mpf(-3) / 2
            fact *= k
            t_pow *= t
            s_k = a_pow if (k % 2 == 1) else mpf(0)
            piece = (s_k - a * (half_pow - three_pow)) / fact * t_pow
            acc += piece
            if abs(piece) < eps * max(abs(acc), t * t) and k > 4:
                break
        return acc / (t * mpmath.sinh(t / 2))

    return Integrand(
        eval=raw,
        near_zero=series,
        label=f"kummer(x={mpmath.nstr(x, 8)})",
        decay_class="exponential",
    )


def kummer_log_gamma(
    x: Real, ctx: ComputeContext, full: bool = False
) -> Real | tuple[Real, QuadratureResult]:
    """log Gamma(x) by the Kummer integral, valid for 0 < x < 1."""
    with ctx.workdps(10):
        x = mpf(x)     # cast at working precision; ambient would round it
    if not (0 < x < 1):
        raise DomainError(f"kummer_log_gamma requires 0 < x < 1, got {mpmath.nstr(x, 8)}")
    result = integrate_zero_to_inf(kummer_integrand(x, ctx), ctx=ctx)
    result.require_converged("kummer")
    consts = ctx.constants
    with ctx.workdps(10):
        value = consts.log_pi / 2 - mpmath.log(mpmath.sin(consts.pi * x)) / 2 + result.value / 2
        value = +value
    return (value, result) if full else value


# ---------------------------------------------------------------------------
# Fourier-series representation and its coefficients
# ---------------------------------------------------------------------------

@dataclass
class FourierCoefficient:
    """a_n evaluated both ways; the pair must agree within quadrature error."""

    n: int
    integral_value: Real
    closed_form_value: Real
    quad_error: Real


def fourier_a_n_integrand(n: int, ctx: ComputeContext) -> Integrand:
    """Integrand of the a_n integral form.

    Near zero the two bracket terms both approach 1/(2 n pi); the rewrite
    -t/(2 n pi (t^2 + 4 n^2 pi^2)) - expm1(-t)/(2 n pi t) subtracts them
    analytically.  (That split itself cancels for large t, so it is used
    only below the threshold.)
    """
    with ctx.workdps(10):
        two_n_pi = 2 * n * (+mpmath.pi)
        four_n2_pi2 = two_n_pi ** 2

    def raw(t):
        with mp.extradps(cancellation_guard(t, 1)):
            bracket = two_n_pi / (t * t + four_n2_pi2) - mpmath.exp(-t) / two_n_pi
            return +(bracket / t)

    def series(t):
        return -t / (two_n_pi * (t * t + four_n2_pi2)) - mpmath.expm1(-t) / (two_n_pi * t)

    return Integrand(
        eval=raw,
        near_zero=series,
        label=f"fourier_a_n(n={n})",
        decay_class="algebraic",
    )


def fourier_a_n(n: int, ctx: ComputeContext) -> FourierCoefficient:
    """Fourier sine coefficient a_n: quadrature and closed form together."""
    if n < 1:
        raise DomainError(f"fourier_a_n requires n >= 1, got {n}")
    result = integrate_zero_to_inf(fourier_a_n_integrand(n, ctx), ctx=ctx)
    result.require_converged(f"fourier_a_n(n={n})")
    consts = ctx.constants
    with ctx.workdps(10):
        closed = (consts.euler_gamma + consts.log_2pi + mpmath.log(n)) / (2 * n * consts.pi)
        closed = +closed
    return FourierCoefficient(
        n=n,
        integral_value=result.value,
        closed_form_value=closed,
        quad_error=result.error_estimate,
    )


def kummer_fourier_log_gamma(x: Real, n_terms: int, ctx: ComputeContext) -> Real:
    """Partial Fourier sum for log Gamma(x) with closed-form coefficients.

    Converges like log(N)/N (the coefficients decay only as log n / n), so
    this is the slow member of the representation family; it exists to
    validate the expansion, not to compute with.
    """
    with ctx.workdps(10):
        x = mpf(x)
    if not (0 < x < 1):
        raise DomainError(f"kummer_fourier_log_gamma requires 0 < x < 1, got {mpmath.nstr(x, 8)}")
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    consts = ctx.constants
    with ctx.workdps(10):
        gamma_plus_log2pi = consts.euler_gamma + consts.log_2pi
        two_pi_x = 2 * consts.pi * x
        acc = mpf(0)
        for n in range(1, n_terms + 1):
            a_n = (gamma_plus_log2pi + mpmath.log(n)) / (2 * n * consts.pi)
            acc += a_n * mpmath.sin(n * two_pi_x)
        value = consts.log_pi / 2 - mpmath.log(mpmath.sin(consts.pi * x)) / 2 + 2 * acc
        return +value


# ---------------------------------------------------------------------------
# Dirichlet integral for Euler's constant
# ---------------------------------------------------------------------------

def dirichlet_integrand(ctx: ComputeContext) -> Integrand:
    """(1/(1+t) - e^-t)/t, rewritten near zero as e^-t (expm1(t) - t)/(t(1+t))."""

    def raw(t):
        with mp.extradps(cancellation_guard(t, 2)):
            return +((1 / (1 + t) - mpmath.exp(-t)) / t)

    def series(t):
        return mpmath.exp(-t) * expm1_minus_x(t) / (t * (1 + t))

    return Integrand(
        eval=raw,
        near_zero=series,
        label="dirichlet_gamma",
        decay_class="algebraic",
    )


def dirichlet_gamma(
    ctx: ComputeContext, full: bool = False
) -> Real | tuple[Real, QuadratureResult]:
    """Euler's constant by the Dirichlet integral (cross-checks the reference)."""
    result = integrate_zero_to_inf(dirichlet_integrand(ctx), ctx=ctx)
    result.require_converged("dirichlet_gamma")
    return (result.value, result) if full else result.value


# ---------------------------------------------------------------------------
# Barnes G
# ---------------------------------------------------------------------------

def log_barnes_g(
    z: Real, ctx: ComputeContext, full: bool = False
) -> Real | tuple[Real, QuadratureResult]:
    """log G(1+z) for 0 < z <= 1 via the Alexejewsky identity.

    The integral of log Gamma over [0, z] runs on the Stirling oracle (one
    trusted code path); the integrable log singularity at 0 is the
    tanh-sinh transform's job.
    """
    with ctx.workdps(10):
        z = mpf(z)
    if not (0 < z <= 1):
        raise DomainError(f"log_barnes_g requires 0 < z <= 1, got {mpmath.nstr(z, 8)}")
    integrand = Integrand(
        eval=lambda x: log_gamma_ref(x, ctx),
        label=f"int_log_gamma(z={mpmath.nstr(z, 8)})",
    )
    result = integrate_finite(integrand, mpf(0), z, ctx=ctx)
    result.require_converged("log_barnes_g")
    consts = ctx.constants
    with ctx.workdps(10):
        value = (
            z * (1 - z) / 2
            + z / 2 * consts.log_2pi
            + z * log_gamma_ref(z, ctx)
            - result.value
        )
        value = +value
    return (value, result) if full else value
