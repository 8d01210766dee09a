"""Overflow-safe scalar special functions.

Modified Bessel functions I0 and I1 (plain and exponentially scaled),
the complementary error function, the Gaussian tail-difference helpers
built on it, and a reference evaluator for the first-order Marcum Q
integral

    Q(a, b) = integral_b^inf x exp(-(x^2 + a^2)/2) I0(a x) dx.

Everything here is a pure function of its scalar arguments; the scaled
variants exp(-x) I0(x), exp(-x) I1(x) keep all downstream formulas
finite at large SNR where exp(a b) overflows a double.

NaN inputs are rejected with ValueError rather than propagated: every
consumer of this module produces deterministic tables.
"""

from __future__ import annotations

import math
from typing import Iterator

from scipy.integrate import quad

# Series/asymptotic crossover for I0 and I1. The power series is
# near-exact on the whole left side; the truncated asymptotic expansion
# first reaches ~1e-16 relative error at x = 18 (measured against a
# 30-digit oracle; at x = 15 it only manages ~2e-13).
_BESSEL_CROSSOVER = 18.0

# Truncation threshold for the positive-term power series.
_SERIES_EPS = 1e-18

# Relative accuracy requested from the adaptive quadrature.
_QUAD_EPSREL = 1e-12

# Marcum series: drop terms below this fraction of the running sum.
_MARCUM_TERM_EPS = 1e-16

_SQRT2 = math.sqrt(2.0)


def _check_real(x: float, name: str) -> float:
    x = float(x)
    if math.isnan(x):
        raise ValueError(f"{name} must not be NaN")
    return x


def _check_nonneg(x: float) -> float:
    x = _check_real(x, "x")
    if x < 0.0:
        raise ValueError("x must be >= 0")
    return x


def _i0_series(x: float) -> float:
    # I0(x) = sum_k (x/2)^(2k) / (k!)^2, all terms positive
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    k = 0
    while term > _SERIES_EPS * total:
        k += 1
        term *= q / (k * k)
        total += term
    return total


def _i1_series(x: float) -> float:
    # I1(x) = sum_k (x/2)^(2k+1) / (k! (k+1)!)
    q = 0.25 * x * x
    term = 0.5 * x
    total = term
    k = 0
    while term > _SERIES_EPS * total:
        k += 1
        term *= q / (k * (k + 1))
        total += term
    return total


def _i_asymptotic_factor(x: float, nu: int) -> float:
    # Truncated asymptotic expansion of sqrt(2 pi x) exp(-x) I_nu(x):
    #   sum_k c_k with c_0 = 1, c_k = c_{k-1} ((2k-1)^2 - 4 nu^2) / (8 k x).
    # Divergent series: stop at the smallest term.
    mu = 4.0 * nu * nu
    term = 1.0
    total = 1.0
    for k in range(1, 40):
        term *= ((2 * k - 1) ** 2 - mu) / (8.0 * k * x)
        if abs(term) < 1e-17 * abs(total):
            break
        total += term
    return total


def bessel_i0(x: float) -> float:
    """Modified Bessel function of the first kind, order zero.

    Power series below the crossover, asymptotic expansion
    exp(x)/sqrt(2 pi x) (1 + 1/(8x) + 9/(128 x^2) + ...) above it.
    Relative error <= 1e-13. Raises OverflowError where the true value
    exceeds the double range (x > ~709.7).
    """
    x = _check_nonneg(x)
    if x <= _BESSEL_CROSSOVER:
        return _i0_series(x)
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * _i_asymptotic_factor(x, 0)


def bessel_i0_scaled(x: float) -> float:
    """exp(-x) I0(x); strictly decreasing, in (0, 1], never overflows."""
    x = _check_nonneg(x)
    if x <= _BESSEL_CROSSOVER:
        return math.exp(-x) * _i0_series(x)
    return _i_asymptotic_factor(x, 0) / math.sqrt(2.0 * math.pi * x)


def bessel_i1(x: float) -> float:
    """Modified Bessel function of the first kind, order one.

    Same series/asymptotic split as :func:`bessel_i0`; relative error
    <= 1e-13.
    """
    x = _check_nonneg(x)
    if x <= _BESSEL_CROSSOVER:
        return _i1_series(x)
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * _i_asymptotic_factor(x, 1)


def bessel_i1_scaled(x: float) -> float:
    """exp(-x) I1(x); finite for every representable x >= 0."""
    x = _check_nonneg(x)
    if x <= _BESSEL_CROSSOVER:
        return math.exp(-x) * _i1_series(x)
    return _i_asymptotic_factor(x, 1) / math.sqrt(2.0 * math.pi * x)


def erfc(x: float) -> float:
    """Complementary error function (2/sqrt(pi)) integral_x^inf exp(-t^2) dt.

    Delegates to the C library implementation, which meets the 1e-13
    relative-error contract across the full double range.
    """
    x = _check_real(x, "x")
    return math.erfc(x)


def e_fn(a: float, b: float) -> float:
    """Gaussian tail weight erfc((b - a)/sqrt(2)) of the channel pair (a, b)."""
    a = _check_real(a, "a")
    b = _check_real(b, "b")
    return math.erfc((b - a) / _SQRT2)


def E_fn(a: float, b: float) -> float:
    """erfc((b-a)/sqrt(2)) - erfc((b+a)/sqrt(2)).

    Equals (2/sqrt(pi)) integral of exp(-t^2) over
    [(b-a)/sqrt(2), (b+a)/sqrt(2)]; positive for a > 0.
    """
    a = _check_real(a, "a")
    b = _check_real(b, "b")
    return math.erfc((b - a) / _SQRT2) - math.erfc((b + a) / _SQRT2)


def _bessel_i_scaled_series(k: int, x: float) -> float:
    # exp(-x) I_k(x) by direct summation of the order-k power series; the
    # leading term is built in log space so large k or x cannot overflow
    # before the exp(-x) scaling is applied.
    if x == 0.0:
        return 1.0 if k == 0 else 0.0
    log_t0 = k * math.log(0.5 * x) - math.lgamma(k + 1) - x
    if log_t0 < -745.0:
        return 0.0
    term = math.exp(log_t0)
    total = term
    q = 0.25 * x * x
    m = 0
    while term > _SERIES_EPS * total:
        m += 1
        term *= q / (m * (m + k))
        total += term
    return total


def _scaled_order_iter(x: float) -> Iterator[float]:
    # Yields exp(-x) I_k(x) for k = 0, 1, 2, ... Upward recurrence
    #   I_{k+1} = I_{k-1} - (2k/x) I_k
    # seeded from the order-0/1 kernels. The recurrence is unstable in k
    # for small x, so a running error-amplification estimate switches to
    # per-order series evaluation once three digits would be lost (the
    # estimate tracks the dominant error solution of the recurrence).
    seed_scale = bessel_i0_scaled(x)
    i_prev = seed_scale
    i_curr = bessel_i1_scaled(x)
    yield i_prev
    yield i_curr
    amp_prev, amp = 1.0, 1.0
    k = 1
    while True:
        cand = i_prev - (2.0 * k / x) * i_curr
        amp_prev, amp = amp, amp * (2.0 * k / x) + amp_prev
        if cand <= 0.0 or cand >= i_curr or amp * seed_scale > 1e3 * cand:
            break
        yield cand
        i_prev, i_curr = i_curr, cand
        k += 1
    j = k + 1
    while True:
        yield _bessel_i_scaled_series(j, x)
        j += 1


def marcum_q_series(a: float, b: float) -> float:
    """Marcum Q by the canonical series exp(-(a^2+b^2)/2) sum (a/b)^k I_k(ab).

    Evaluated in scaled form exp(-(b-a)^2/2) sum (a/b)^k [exp(-ab) I_k(ab)],
    truncated when a term drops below 1e-16 of the running sum. Intended
    as the cross-check route for the b >= a regime the error-rate formulas
    live in; marcum_q_quad is the general evaluator.
    """
    a, b = _check_marcum_args(a, b)
    if b == 0.0:
        return 1.0
    ratio = a / b
    kmax = 200 + int(4.0 * a * b)
    total = 0.0
    weight = 1.0
    for k, order in enumerate(_scaled_order_iter(a * b)):
        term = weight * order
        total += term
        if k >= 1 and term < _MARCUM_TERM_EPS * total:
            break
        if k > kmax:
            raise RuntimeError("Marcum series did not converge")
        weight *= ratio
    return math.exp(-0.5 * (b - a) ** 2) * total


def marcum_q_quad(a: float, b: float) -> float:
    """Marcum Q by adaptive quadrature of the defining integral.

    Uses the scaled integrand x exp(-(x-a)^2/2) [exp(-ax) I0(ax)], which
    never overflows; the integral is truncated at b + a + 12 where the
    Gaussian factor bounds the remainder below 1e-15 of the value.
    """
    a, b = _check_marcum_args(a, b)

    def integrand(x: float) -> float:
        return x * math.exp(-0.5 * (x - a) ** 2) * bessel_i0_scaled(a * x)

    value, _ = quad(integrand, b, b + a + 12.0, epsabs=0.0, epsrel=_QUAD_EPSREL, limit=200)
    return value


def marcum_q(a: float, b: float) -> float:
    """Reference Marcum Q value; relative error <= 1e-10.

    The adaptive-quadrature route is the exported value; the series route
    is kept as an independent cross-check (the two agree to 1e-9 relative
    over the supported SNR range, enforced by the test suite).
    """
    return marcum_q_quad(a, b)


def _check_marcum_args(a: float, b: float) -> tuple[float, float]:
    a = _check_real(a, "a")
    b = _check_real(b, "b")
    if a <= 0.0:
        raise ValueError("a must be > 0")
    if b < 0.0:
        raise ValueError("b must be >= 0")
    return a, b
