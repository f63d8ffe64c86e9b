"""Precision management, shared exact constants, and decimal serialization.

Everything downstream (quadrature, log-Gamma representations, the seven
routes) computes with mpmath arbitrary-precision reals bound to a
``ComputeContext``.  The context owns the working precision in decimal
digits, the target tolerance used by the quadrature engine, and a
write-once cache of the constants that appear in the closed-form parts of
the route identities (pi, log 2, log pi, log 2pi, Euler's gamma).

The reference value of Euler's constant is computed independently of the
Dirichlet-integral route (which lives in :mod:`glaisher.loggamma`), so the
two can cross-check each other.  The algorithm here is the classical
alternating exponential-integral series

    gamma = sum_{k>=1} (-1)^{k+1} n^k / (k * k!)  -  log n  -  E1(n),

with n chosen so that the neglected tail E1(n) < e^{-n}/n is below the
target accuracy.  The partial sums cancel to ~ e^n before settling, so the
summation runs at an inflated precision of roughly n*log10(e) extra digits.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import mpmath
from mpmath import mp, mpf

# Arbitrary-precision real number.  mpf values are immutable and carry
# their own mantissa; the context precision governs every operation.
Real = mpmath.mpf

MIN_PRECISION_DIGITS = 20

# Accepted decimal syntax: optional sign, digits with optional fractional
# part (or a bare fractional part), optional e/E exponent.  No locale
# separators.
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


class PrecisionError(ValueError):
    """Requested precision is too low for the cancellation-heavy integrands."""


class DecimalParseError(ValueError):
    """Malformed decimal string; carries the offending character position."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(
            f"invalid decimal literal {text!r} at position {position}"
        )


@dataclass(frozen=True)
class ConstantsSet:
    """Exact constants shared by the route identities, at full precision."""

    pi: Real
    log2: Real
    log_pi: Real
    log_2pi: Real
    euler_gamma: Real


@dataclass
class ComputeContext:
    """Working precision plus cached constants for one computation run.

    The context is immutable after construction except for the constants
    cache, which is write-once: concurrent first accesses may race to
    compute but install equal values (all constant computations are
    deterministic at fixed precision).
    """

    precision_digits: int
    target_tolerance: Real
    quad_max_level: int = 12
    _constants: ConstantsSet | None = field(default=None, repr=False)

    @property
    def constants(self) -> ConstantsSet:
        if self._constants is None:
            self._constants = compute_constants(self)
        return self._constants

    def workdps(self, extra: int = 0):
        """Context manager running mpmath at ``precision_digits + extra``."""
        return mp.workdps(self.precision_digits + extra)


def make_context(precision_digits: int = 50, quad_max_level: int = 12) -> ComputeContext:
    """Build a context; constants stay unevaluated until first access.

    The default target tolerance is 10^-(P-10): ten guard digits between
    the working precision and what the quadrature engine promises.
    """
    if precision_digits < MIN_PRECISION_DIGITS:
        raise PrecisionError(
            f"precision too low: {precision_digits} digits requested, "
            f"minimum is {MIN_PRECISION_DIGITS}"
        )
    with mp.workdps(precision_digits + 5):
        tol = mpf(10) ** (-(precision_digits - 10))
    return ComputeContext(
        precision_digits=precision_digits,
        target_tolerance=tol,
        quad_max_level=quad_max_level,
    )


def compute_constants(ctx: ComputeContext) -> ConstantsSet:
    """Evaluate the constant set at the context precision (plus guard)."""
    with ctx.workdps(10):
        pi = +mpmath.pi
        log2 = mpmath.log(mpf(2))
        log_pi = mpmath.log(pi)
        return ConstantsSet(
            pi=pi,
            log2=log2,
            log_pi=log_pi,
            log_2pi=log2 + log_pi,
            euler_gamma=euler_gamma_ref(ctx),
        )


def euler_gamma_ref(ctx: ComputeContext) -> Real:
    """Euler's constant via the alternating exponential-integral series.

    Independent of the Dirichlet integral evaluated by
    :func:`glaisher.loggamma.dirichlet_gamma`, which serves as the
    cross-check.  Deterministic: same context precision, same bits.
    """
    digits = ctx.precision_digits
    # e^-n / n below 10^-(digits+8) bounds the dropped tail.
    n = math.ceil((digits + 8) * math.log(10))
    # Partial sums grow to ~ e^n = 10^(0.4343 n) before cancelling back.
    guard = math.ceil(n * math.log10(math.e)) + 12
    with mp.workdps(digits + guard):
        nn = mpf(n)
        term = nn            # n^k / k!  at k = 1
        acc = nn             # series term k=1 is +n/1
        eps = mpf(10) ** (-(digits + guard - 2))
        k = 1
        while term > eps or k < n:
            k += 1
            term = term * nn / k
            piece = term / k
            acc = acc + piece if (k % 2 == 1) else acc - piece
        value = acc - mpmath.log(nn)
    with ctx.workdps(10):
        return +value


def recompute_constants(ctx: ComputeContext) -> ConstantsSet:
    """Fresh evaluation, bypassing the cache (idempotence checks)."""
    return compute_constants(ctx)


def real_to_decimal(x: Real, digits: int) -> str:
    """Render ``x`` as a plain decimal string with ``digits`` significant digits."""
    if digits < 1:
        raise ValueError(f"digits must be positive, got {digits}")
    return mpmath.nstr(x, digits)


def real_from_decimal(s: str, ctx: ComputeContext) -> Real:
    """Parse a signed decimal literal at the context precision.

    Raises :class:`DecimalParseError` with the position of the first
    offending character when the string is malformed.
    """
    if not isinstance(s, str):
        raise DecimalParseError(str(s), 0)
    text = s.strip()
    if not _DECIMAL_RE.match(text):
        raise DecimalParseError(text, _first_bad_position(text))
    with ctx.workdps(5):
        return mpf(text)


def _first_bad_position(text: str) -> int:
    """Longest valid prefix of the decimal grammar; index of the first mismatch."""
    for end in range(len(text), 0, -1):
        prefix = text[:end]
        if _DECIMAL_RE.match(prefix) or _is_decimal_prefix(prefix):
            return end if end < len(text) else len(text) - 1
    return 0


def _is_decimal_prefix(prefix: str) -> bool:
    # A string that could still become valid with more characters.
    partial = re.compile(r"^[+-]?(\d*(\.\d*)?)([eE][+-]?\d*)?$")
    return bool(partial.match(prefix))
