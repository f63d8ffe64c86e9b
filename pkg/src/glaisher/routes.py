"""Seven independent estimators of log A and the identity residual checks.

A is the Glaisher-Kinkelin constant.  No literature value of log A is ever
used as ground truth: the only oracle is mutual agreement between routes
derived from unrelated representations.  The expected consensus is
log A = 0.2487544770... (documentation only).

Routes
------
limit           log of the defining limit ratio at n, 2n, 4n, ...,
                Richardson-extrapolated.  The raw sequence error is
                empirically c/n^2 (measured c ~ 1/240), so the
                extrapolation assumes an expansion in powers of n^-2.
pain1, pain2    the two direct integral identities:
                  int (1-e^{-x/2}) (x coth(x/2) - 2) / x^3 dx
                      = 3 log A - (1/3) log 2 - 1/8
                  int ((8-3x) e^x - 8 e^{x/2} - x) / (4 x^2 e^x (e^x-1)) dx
                      = 3 log A - (7/12) log 2 + (log pi)/2 - 1
feaux           log A = 1/3 + (7/36) log 2 - (log pi)/6 + (2/3) I, where I
                integrates [e^-t/8 - (1+t)^{-3/2}/log^2(1+t)
                - (log(1+t)-2)/(2 (1+t) log^2(1+t))] dt/t.
kummer          log A = (log 2)/36 + (1/3) int [tanh(t/4)/t - e^-t/4] dt/t.
                The source's final display drops the /t measure next to a
                dangling minus sign; re-deriving the inner x-integral
                (int_0^1/2 sinh((1/2-x)t) dx = (cosh(t/2)-1)/t, and
                (cosh(t/2)-1)/sinh(t/2) = tanh(t/4)) confirms dt/t.  The
                dt variant diverges logarithmically; it stays available
                behind ``measure="dt"`` as the numerical negative control
                (evaluated over a fixed truncation so the comparison is a
                concrete, reproducible number).
fourier_series  log A = (log 2)/36 + (gamma + log 2pi)/12
                + (2/(3 pi^2)) sum_{n>=0} log(2n+1)/(2n+1)^2; raw partial
                sums converge like log N / N, so an Euler-Maclaurin tail
                correction (Bernoulli terms through B6, derivatives of
                f(n) = log(2n+1)/(2n+1)^2 computed analytically) makes the
                series usable at desk scale.
hasse           log A = 1/8 - (1/2) sum_n 1/(n+1)
                sum_k (-1)^k C(n,k) (k+1)^2 log(k+1).  The inner
                alternating binomial sums cancel ~ 2^n, i.e. 0.302 n
                decimal digits, so the context must carry that many digits
                above the requested output accuracy.

Identity residuals: the Glaisher half-integral identity, its Gamma(x)
variant, the log-sin integral, and the dt-measure control.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import ceil
from typing import Literal

import mpmath
from mpmath import mp, mpf

from .context import ComputeContext, PrecisionError, Real
from .loggamma import DomainError, log_gamma_ref
from .quadrature import Integrand, integrate_finite, integrate_zero_to_inf
from .smallt import cancellation_guard, t_minus_log1p

ROUTE_IDS = ("limit", "pain1", "pain2", "feaux", "kummer", "fourier_series", "hasse")
IDENTITY_IDS = ("glaisher_half", "gla2", "log_sin", "res2_measure_check")

Res2Measure = Literal["dt_over_t", "dt"]

# Fixed truncation for the (divergent) dt-measure control integral.
DT_CONTROL_UPPER = 100

# Disagreement floor the dt control must exceed.
DT_CONTROL_TOLERANCE = 0.01


class ConsensusError(RuntimeError):
    """The feaux and kummer routes failed to agree; no oracle available."""


@dataclass
class RouteEstimate:
    route_id: str
    value: Real
    error_estimate: Real
    parameters: dict = field(default_factory=dict)
    evaluations: int = 0
    elapsed: float = 0.0


@dataclass
class IdentityResidual:
    identity_id: str
    residual: Real
    tolerance_used: Real


def _clock():
    return time.perf_counter()


# ---------------------------------------------------------------------------
# Integrands of the four integral routes
# ---------------------------------------------------------------------------

def res1_integrand(ctx: ComputeContext) -> Integrand:
    """Feaux-route integrand; three terms of size t^-2 cancelling to O(t).

    With L = log(1+t) the bracket collapses to
        e^-L [ expm1(L-t)/8 + psi(L) ],
    psi(z) = sum_{j>=1} -(-1/2)^{j+2} z^j/(j+2)! = z/48 - z^2/384 + ...,
    which is the near-zero form (limit of the integrand at 0 is 1/48).
    Decay at infinity is only 1/(t^2 log t); the exp-sinh transform still
    wins because the transformed tail dies double-exponentially.
    """

    def raw(t):
        with mp.extradps(cancellation_guard(t, 3)):
            L = mpmath.log(1 + t)
            bracket = (
                mpmath.exp(-t) / 8
                - 1 / ((1 + t) ** (mpf(3) / 2) * L * L)
                - (L - 2) / (2 * (1 + t) * L * L)
            )
            return +(bracket / t)

    def psi(z):
        eps = mpf(10) ** (-(mp.dps + 5))
        acc = mpf(0)
        coeff = mpf(-1) / 8            # (-1/2)^{j+2} at j = 1
        power = z                      # z^j
        fact = mpf(6)                  # (j+2)!
        j = 1
        while True:
            piece = -coeff * power / fact
            acc += piece
            if abs(piece) < eps * max(abs(acc), abs(z)) and j > 3:
                break
            j += 1
            coeff *= mpf(-1) / 2
            power *= z
            fact *= j + 2
        return acc

    def series(t):
        lmt = t_minus_log1p(t)         # t - log(1+t), O(t^2), exact series
        L = t - lmt
        return mpmath.exp(-L) * (mpmath.expm1(-lmt) / 8 + psi(L)) / t

    return Integrand(
        eval=raw,
        near_zero=series,
        label="res1",
        decay_class="algebraic",
    )


def res2_integrand(ctx: ComputeContext, measure: Res2Measure = "dt_over_t") -> Integrand:
    """Kummer-route integrand [tanh(t/4)/t - e^-t/4] / t (or without /t).

    Near zero the bracket is t/4 - (25/192) t^2 + ...; the series form
    subtracts the Taylor coefficients of 4 tanh(t/4) and t e^-t exactly
    (the O(t) parts are equal), then divides by 4 t^2.
    """

    def raw_bracket(t):
        return mpmath.tanh(t / 4) / t - mpmath.exp(-t) / 4

    def series_bracket_over_t2(t):
        # [4 tanh(t/4) - t e^-t] / (4 t^2) as one power series in t;
        # coefficients tau_j from 4 tanh(t/4) (odd j only), e_j from t e^-t.
        eps = mpf(10) ** (-(mp.dps + 5))
        acc = mpf(0)
        t_pow = mpf(1)                 # t^{j-2}
        fact = mpf(1)                  # (j-1)!
        j = 1
        k = 1
        while True:
            j += 1
            fact *= j - 1
            e_j = (mpf(-1) ** (j - 1)) / fact
            tau_j = mpf(0)
            if j % 2 == 1:
                k += 1
                four_k = mpf(4) ** k
                bern = mpmath.bernoulli(2 * k)
                fact2k = mpmath.factorial(2 * k)
                # coefficient of t^j in 4 tanh(t/4), j = 2k-1
                tau_j = 4 * four_k * (four_k - 1) * bern / (fact2k * mpf(4) ** j)
            piece = (tau_j - e_j) / 4 * t_pow
            acc += piece
            if abs(piece) < eps * max(abs(acc), mpf(1) / 4) and j > 4:
                break
            t_pow *= t
        return acc

    if measure == "dt_over_t":

        def raw(t):
            with mp.extradps(cancellation_guard(t, 2)):
                return +(raw_bracket(t) / t)

        def series(t):
            return series_bracket_over_t2(t)

        label = "res2[dt/t]"
    else:

        def raw(t):
            with mp.extradps(cancellation_guard(t, 2)):
                return +raw_bracket(t)

        def series(t):
            return t * series_bracket_over_t2(t)

        label = "res2[dt]"

    return Integrand(
        eval=raw,
        near_zero=series,
        label=label,
        decay_class="exponential" if measure == "dt_over_t" else "algebraic",
    )


def pain1_integrand(ctx: ComputeContext) -> Integrand:
    """(1 - e^{-x/2}) (x coth(x/2) - 2) / x^3; limit 1/12 at zero.

    x coth(x/2) - 2 = x^3 S(x^2) / sinh(x/2) with
    S(y) = sum_{j>=1} 2j / (4^j (2j+1)!) y^{j-1}; no subtraction survives.
    """

    def raw(x):
        with mp.extradps(cancellation_guard(x, 2)):
            return +((1 - mpmath.exp(-x / 2)) * (x * mpmath.coth(x / 2) - 2) / x ** 3)

    def series(x):
        eps = mpf(10) ** (-(mp.dps + 5))
        y = x * x
        acc = mpf(0)
        power = mpf(1)                 # y^{j-1}
        fact = mpf(6)                  # (2j+1)!
        four = mpf(4)                  # 4^j
        j = 1
        while True:
            piece = 2 * j / (four * fact) * power
            acc += piece
            if abs(piece) < eps * abs(acc) and j > 2:
                break
            j += 1
            power *= y
            fact *= (2 * j) * (2 * j + 1)
            four *= 4
        return -mpmath.expm1(-x / 2) * acc / mpmath.sinh(x / 2)

    return Integrand(
        eval=raw,
        near_zero=series,
        label="pain1",
        decay_class="algebraic",
    )


def pain2_integrand(ctx: ComputeContext) -> Integrand:
    """((8-3x) e^x - 8 e^{x/2} - x) / (4 x^2 e^x (e^x - 1)); limit -1/12.

    Numerator Taylor coefficients n_k = 8/k! - 3/(k-1)! - 8/(2^k k!)
    (minus 1 at k = 1) vanish identically for k <= 2; the series starts at
    -x^3/3.  The denominator is 4 x^3 e^x (expm1(x)/x), all stable factors.
    """

    def raw(x):
        with mp.extradps(cancellation_guard(x, 3)):
            ex = mpmath.exp(x)
            return +(((8 - 3 * x) * ex - 8 * mpmath.exp(x / 2) - x)
                     / (4 * x * x * ex * (ex - 1)))

    def series(x):
        eps = mpf(10) ** (-(mp.dps + 5))
        acc = mpf(0)
        power = mpf(1)                 # x^{k-3}
        fact = mpf(1)                  # (k-1)!, seeded at k = 2
        two_pow = mpf(4)               # 2^k, seeded at k = 2
        k = 2
        while True:
            k += 1
            fact *= k - 1
            two_pow *= 2
            n_k = 8 / (fact * k) - 3 / fact - 8 / (two_pow * fact * k)
            piece = n_k * power
            acc += piece
            if abs(piece) < eps * abs(acc) and k > 5:
                break
            power *= x
        return acc / (4 * mpmath.exp(x) * (mpmath.expm1(x) / x))

    return Integrand(
        eval=raw,
        near_zero=series,
        label="pain2",
        decay_class="exponential",
    )


# ---------------------------------------------------------------------------
# The seven routes
# ---------------------------------------------------------------------------

def route_feaux(ctx: ComputeContext) -> RouteEstimate:
    """log A from the Feaux-derived integral (first main identity)."""
    start = _clock()
    result = integrate_zero_to_inf(res1_integrand(ctx), ctx=ctx)
    result.require_converged("feaux")
    c = ctx.constants
    with ctx.workdps(10):
        value = +(mpf(1) / 3 + mpf(7) / 36 * c.log2 - c.log_pi / 6
                  + mpf(2) / 3 * result.value)
        err = +(mpf(2) / 3 * result.error_estimate)
    return RouteEstimate(
        route_id="feaux",
        value=value,
        error_estimate=err,
        parameters={},
        evaluations=result.evaluations,
        elapsed=_clock() - start,
    )


def route_kummer(ctx: ComputeContext, measure: Res2Measure = "dt_over_t") -> RouteEstimate:
    """log A from the Kummer-derived integral (second main identity).

    ``measure="dt"`` is the deliberate negative control: that variant of
    the integral diverges, so it is evaluated over the fixed truncation
    [0, 100] and must disagree with every honest route by far more than
    the 0.01 control threshold.
    """
    start = _clock()
    integrand = res2_integrand(ctx, measure)
    if measure == "dt_over_t":
        result = integrate_zero_to_inf(integrand, ctx=ctx)
        result.require_converged("kummer")
        params = {"measure": "dt_over_t"}
    elif measure == "dt":
        result = integrate_finite(integrand, mpf(0), mpf(DT_CONTROL_UPPER), ctx=ctx)
        result.require_converged("kummer[dt control]")
        params = {"measure": "dt", "truncation": DT_CONTROL_UPPER}
    else:
        raise ValueError(f"unknown res2 measure {measure!r}")
    c = ctx.constants
    with ctx.workdps(10):
        value = +(c.log2 / 36 + result.value / 3)
        err = +(result.error_estimate / 3)
    return RouteEstimate(
        route_id="kummer",
        value=value,
        error_estimate=err,
        parameters=params,
        evaluations=result.evaluations,
        elapsed=_clock() - start,
    )


def route_pain1(ctx: ComputeContext) -> RouteEstimate:
    """log A from the cotanh integral identity."""
    start = _clock()
    result = integrate_zero_to_inf(pain1_integrand(ctx), ctx=ctx)
    result.require_converged("pain1")
    c = ctx.constants
    with ctx.workdps(10):
        value = +((result.value + c.log2 / 3 + mpf(1) / 8) / 3)
        err = +(result.error_estimate / 3)
    return RouteEstimate(
        route_id="pain1",
        value=value,
        error_estimate=err,
        parameters={},
        evaluations=result.evaluations,
        elapsed=_clock() - start,
    )


def route_pain2(ctx: ComputeContext) -> RouteEstimate:
    """log A from the exponential-kernel integral identity."""
    start = _clock()
    result = integrate_zero_to_inf(pain2_integrand(ctx), ctx=ctx)
    result.require_converged("pain2")
    c = ctx.constants
    with ctx.workdps(10):
        value = +((result.value + mpf(7) / 12 * c.log2 - c.log_pi / 2 + 1) / 3)
        err = +(result.error_estimate / 3)
    return RouteEstimate(
        route_id="pain2",
        value=value,
        error_estimate=err,
        parameters={},
        evaluations=result.evaluations,
        elapsed=_clock() - start,
    )


def _limit_sequence_value(n: int, log_fact_sum: Real, ctx: ComputeContext) -> Real:
    # log of the defining ratio at index n; log_fact_sum = sum log Gamma(k+1), k<n.
    c = ctx.constants
    with ctx.workdps(10):
        nn = mpf(n)
        return +(
            nn / 2 * c.log_2pi
            + (nn * nn / 2 - mpf(1) / 12) * mpmath.log(nn)
            - 3 * nn * nn / 4
            + mpf(1) / 12
            - log_fact_sum
        )


def route_limit(ctx: ComputeContext, n: int = 64, richardson_order: int = 3) -> RouteEstimate:
    """log A from the defining limit, Richardson-extrapolated.

    Evaluates the log-ratio at n, 2n, ..., 2^order n (log space throughout;
    the factorial product becomes a running sum of log Gamma values).  One
    extra point at 2^{order+1} n feeds the error estimate: the difference
    between the order-r extrapolations with and without it.
    """
    if n < 2:
        raise DomainError(f"route_limit requires n >= 2, got {n}")
    if richardson_order < 0:
        raise DomainError(f"richardson_order must be >= 0, got {richardson_order}")
    start = _clock()
    points = [n * 2 ** i for i in range(richardson_order + 2)]
    evaluations = 0
    values = []
    with ctx.workdps(10):
        log_fact_sum = mpf(0)
        k = 1
        for m in sorted(points):
            while k < m:
                log_fact_sum += log_gamma_ref(mpf(k + 1), ctx)
                evaluations += 1
                k += 1
            values.append(_limit_sequence_value(m, log_fact_sum, ctx))

        def richardson(seq):
            # error expansion in n^-2 (measured; see module docstring)
            diag = list(seq)
            for j in range(1, len(seq)):
                factor = mpf(2) ** (2 * j)
                diag = [
                    (factor * diag[i + 1] - diag[i]) / (factor - 1)
                    for i in range(len(diag) - 1)
                ]
            return diag[0]

        extrapolated = richardson(values[: richardson_order + 1])
        shifted = richardson(values[1 : richardson_order + 2])
        # The shifted table tracks the true error closely; double it so the
        # estimate stays conservative rather than coincidental.
        err = 2 * abs(shifted - extrapolated)
        floor = mpf(10) ** (-(ctx.precision_digits + 1)) * max(mpf(1), abs(extrapolated))
        err = +(err + floor)
        value = +extrapolated
    return RouteEstimate(
        route_id="limit",
        value=value,
        error_estimate=err,
        parameters={"n": n, "richardson_order": richardson_order},
        evaluations=evaluations,
        elapsed=_clock() - start,
    )


def _fourier_term(n: int) -> mpf:
    u = mpf(2 * n + 1)
    return mpmath.log(u) / (u * u)


def _em_tail(n_from: int) -> tuple[mpf, mpf]:
    """Euler-Maclaurin tail of sum_{n>=N} log(2n+1)/(2n+1)^2 and its error.

    With u = 2N+1 and derivatives of f(n) = log(2n+1)/(2n+1)^2 taken
    analytically (f^{(k)}(n) = 2^k (a_k + b_k log u)/u^{k+2}):

        tail = (log u + 1)/(2u) + f(N)/2 - B2/2! f'(N)
               - B4/4! f'''(N) - B6/6! f^{(5)}(N)

    The returned error bound is the magnitude of the first omitted
    (B8/8! f^{(7)}) term.
    """
    u = mpf(2 * n_from + 1)
    lu = mpmath.log(u)
    tail = (lu + 1) / (2 * u) + lu / (2 * u * u)
    # -B2/2! f' = -(1/6)/2 * 2 (1 - 2 log u)/u^3
    tail -= mpf(1) / 12 * 2 * (1 - 2 * lu) / u ** 3
    # -B4/4! f''' = +(1/30)/24 * 8 (26 - 24 log u)/u^5
    tail += mpf(1) / 720 * 8 * (26 - 24 * lu) / u ** 5
    # -B6/6! f^{(5)} = -(1/42)/720 * 32 (1044 - 720 log u)/u^7
    tail -= mpf(1) / 30240 * 32 * (1044 - 720 * lu) / u ** 7
    # first omitted term: B8/8! f^{(7)} with f^{(7)} = 128 (69264 - 40320 log u)/u^9
    omitted = abs(mpf(1) / 1209600 * 128 * (69264 - 40320 * lu) / u ** 9)
    return tail, omitted


def route_fourier_series(
    ctx: ComputeContext, n_terms: int = 100, accelerate: bool = True
) -> RouteEstimate:
    """log A from the appendix series over odd integers.

    ``accelerate=False`` returns the raw partial sum over n < N (error
    estimate: an upper bound on the dropped tail, which really is the
    error -- the raw series converges like log N / N).  With acceleration
    the Euler-Maclaurin tail correction is added and the estimate is the
    first omitted Bernoulli term.
    """
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    start = _clock()
    c = ctx.constants
    with ctx.workdps(10):
        partial = mpf(0)
        for n in range(n_terms):
            partial += _fourier_term(n)
        series_coeff = 2 / (3 * (+mpmath.pi) ** 2)
        if accelerate:
            tail, omitted = _em_tail(n_terms)
            series_sum = partial + tail
            err = series_coeff * omitted
        else:
            series_sum = partial
            u = mpf(2 * n_terms + 1)
            tail_bound = (mpmath.log(u) + 1) / (2 * u) + _fourier_term(n_terms)
            err = series_coeff * tail_bound
        floor = mpf(10) ** (-(ctx.precision_digits + 1))
        value = +(c.log2 / 36 + (c.euler_gamma + c.log_2pi) / 12
                  + series_coeff * series_sum)
        err = +(err + floor)
    return RouteEstimate(
        route_id="fourier_series",
        value=value,
        error_estimate=err,
        parameters={"n_terms": n_terms, "accelerate": accelerate},
        evaluations=n_terms,
        elapsed=_clock() - start,
    )


def hasse_required_digits(n_terms: int, output_digits: int = 20) -> int:
    """Context digits needed for N Hasse terms: the 2^n binomial growth
    burns ceil(0.302 N) digits of cancellation before any output digit."""
    return ceil(0.302 * n_terms) + output_digits


def route_hasse(ctx: ComputeContext, n_terms: int = 80) -> RouteEstimate:
    """log A from the alternating binomial double sum.

    Refuses to run when the context precision cannot absorb the
    cancellation (result would be silent garbage).  The error estimate is
    the magnitude of the last outer term scaled by the measured tail
    profile: outer terms decay like n^{-5/2}, so the tail beyond N is
    about (2N/3) times the last term.
    """
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    needed = hasse_required_digits(n_terms)
    if ctx.precision_digits < needed:
        raise PrecisionError(
            f"insufficient precision for hasse with N={n_terms}: context has "
            f"{ctx.precision_digits} digits, needs >= {needed} "
            f"(ceil(0.302 N) + 20)"
        )
    start = _clock()
    evaluations = 0
    with ctx.workdps(10):
        logs = [mpmath.log(mpf(k + 1)) for k in range(n_terms + 1)]
        total = mpf(0)
        last_outer = mpf(0)
        for n in range(n_terms + 1):
            inner = mpf(0)
            binom = 1                  # C(n, k), exact integer recurrence
            for k in range(n + 1):
                term = mpf(binom * (k + 1) ** 2) * logs[k]
                inner += -term if (k % 2) else term
                binom = binom * (n - k) // (k + 1)
            evaluations += n + 1
            last_outer = inner / (n + 1)
            total += last_outer
        value = +(mpf(1) / 8 - total / 2)
        floor = mpf(10) ** (-(ctx.precision_digits + 1))
        err = +(abs(last_outer) / 2 * max(1, 2 * n_terms // 3) + floor)
    return RouteEstimate(
        route_id="hasse",
        value=value,
        error_estimate=err,
        parameters={"n_terms": n_terms, "required_digits": needed},
        evaluations=evaluations,
        elapsed=_clock() - start,
    )


def hasse_first_n(
    ctx: ComputeContext,
    digits: int,
    n_max: int,
    consensus: Real,
) -> tuple[int | None, Real]:
    """First N <= n_max whose Hasse partial sum agrees with consensus to
    ``digits`` relative digits, plus the best relative gap seen.

    One incremental pass (the partial sums nest), so the scan costs the
    same as a single route_hasse run at n_max.  Returns (None, best_gap)
    when no N qualifies: the outer terms decay only like n^{-5/2}, so the
    tail shrinks like N^{-3/2} and small digit targets need large N.
    """
    needed = hasse_required_digits(n_max)
    if ctx.precision_digits < needed:
        raise PrecisionError(
            f"insufficient precision for hasse scan to N={n_max}: context has "
            f"{ctx.precision_digits} digits, needs >= {needed}"
        )
    with ctx.workdps(10):
        target = mpf(10) ** (-digits)
        logs = [mpmath.log(mpf(k + 1)) for k in range(n_max + 1)]
        total = mpf(0)
        best = mpmath.inf
        for n in range(n_max + 1):
            inner = mpf(0)
            binom = 1
            for k in range(n + 1):
                term = mpf(binom * (k + 1) ** 2) * logs[k]
                inner += -term if (k % 2) else term
                binom = binom * (n - k) // (k + 1)
            total += inner / (n + 1)
            value = mpf(1) / 8 - total / 2
            gap = abs(value - consensus) / abs(consensus)
            best = min(best, gap)
            if gap < target:
                return n, +best
        return None, +best


# ---------------------------------------------------------------------------
# Consensus and identity residuals
# ---------------------------------------------------------------------------

def consensus_log_a(
    ctx: ComputeContext,
    feaux: RouteEstimate | None = None,
    kummer: RouteEstimate | None = None,
) -> Real:
    """The project's only oracle for log A: feaux and kummer in agreement.

    Raises :class:`ConsensusError` when the two disagree beyond
    10^-(P-10); no literature decimal ever substitutes for this check.
    """
    feaux = feaux if feaux is not None else route_feaux(ctx)
    kummer = kummer if kummer is not None else route_kummer(ctx)
    with ctx.workdps(10):
        gap = abs(feaux.value - kummer.value)
        bound = mpf(10) ** (-(ctx.precision_digits - 10))
        if gap > bound:
            raise ConsensusError(
                f"feaux and kummer disagree by {mpmath.nstr(gap, 5)} "
                f"(allowed {mpmath.nstr(bound, 3)})"
            )
        return +((feaux.value + kummer.value) / 2)


def glaisher_identity_residual(
    ctx: ComputeContext,
    log_a: Real | None = None,
    log2_coefficient: Real | None = None,
) -> IdentityResidual:
    """Residual of int_0^1/2 log Gamma(x+1) dx
    = -1/2 - (7/24) log 2 + (log pi)/4 + (3/2) log A.

    ``log2_coefficient`` overrides the exact 7/24 for negative-control
    tests (a wrong coefficient must create a visible residual).
    """
    if log_a is None:
        log_a = route_feaux(ctx).value
    integrand = Integrand(
        eval=lambda x: log_gamma_ref(x + 1, ctx),
        label="int_log_gamma1p_half",
    )
    result = integrate_finite(integrand, mpf(0), mpf(1) / 2, ctx=ctx)
    result.require_converged("glaisher_half")
    c = ctx.constants
    with ctx.workdps(10):
        coeff = mpf(7) / 24 if log2_coefficient is None else mpf(log2_coefficient)
        rhs = -mpf(1) / 2 - coeff * c.log2 + c.log_pi / 4 + mpf(3) / 2 * log_a
        residual = +(result.value - rhs)
    return IdentityResidual(
        identity_id="glaisher_half",
        residual=residual,
        tolerance_used=ctx.target_tolerance,
    )


def gla2_residual(ctx: ComputeContext, log_a: Real | None = None) -> IdentityResidual:
    """Residual of log A = (2/3) int_0^1/2 log Gamma(x) dx
    - (5/36) log 2 - (log pi)/6 against the feaux route value."""
    if log_a is None:
        log_a = route_feaux(ctx).value
    integrand = Integrand(
        eval=lambda x: log_gamma_ref(x, ctx),
        label="int_log_gamma_half",
    )
    result = integrate_finite(integrand, mpf(0), mpf(1) / 2, ctx=ctx)
    result.require_converged("gla2")
    c = ctx.constants
    with ctx.workdps(10):
        lhs = mpf(2) / 3 * result.value - mpf(5) / 36 * c.log2 - c.log_pi / 6
        residual = +(lhs - log_a)
    return IdentityResidual(
        identity_id="gla2",
        residual=residual,
        tolerance_used=ctx.target_tolerance,
    )


def log_sin_check(ctx: ComputeContext) -> IdentityResidual:
    """Residual of int_0^1/2 log sin(pi x) dx = -(log 2)/2."""
    pi_local = ctx.constants.pi
    integrand = Integrand(
        eval=lambda x: mpmath.log(mpmath.sin(pi_local * x)),
        label="log_sin",
    )
    result = integrate_finite(integrand, mpf(0), mpf(1) / 2, ctx=ctx)
    result.require_converged("log_sin")
    with ctx.workdps(10):
        residual = +(result.value + ctx.constants.log2 / 2)
    return IdentityResidual(
        identity_id="log_sin",
        residual=residual,
        tolerance_used=ctx.target_tolerance,
    )


def res2_measure_check(
    ctx: ComputeContext, consensus: Real | None = None
) -> IdentityResidual:
    """Negative control for the dt-vs-dt/t measure question.

    The residual is the gap between the dt-variant value (over the fixed
    control truncation) and consensus; the control PASSES when the gap
    exceeds the 0.01 tolerance, demonstrating that the dt reading of the
    identity is wrong.
    """
    if consensus is None:
        consensus = consensus_log_a(ctx)
    dt_route = route_kummer(ctx, measure="dt")
    with ctx.workdps(10):
        residual = +abs(dt_route.value - consensus)
    return IdentityResidual(
        identity_id="res2_measure_check",
        residual=residual,
        tolerance_used=mpf(DT_CONTROL_TOLERANCE),
    )
