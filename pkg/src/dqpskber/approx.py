"""Closed-form approximations to the DQPSK error rate.

Seven approximations: three fixed-weight means of the bracketing bounds
(ber1, ber2, ber3, each with an equivalent closed form), one standalone
closed form (ber4), and three variable-weight means (ber5, ber6, ber7)
driven by the piecewise weight functions omega5..omega7.

Weight-argument convention: the weight functions take the LINEAR bit
SNR. This was fixed empirically by evaluating the relative errors of
ber5..ber7 under both the linear and the decibel reading and keeping
the one that reproduces the reference error tables; the choice is
pinned by regression tests.

The weights are intentionally discontinuous at their breakpoints; no
smoothing is applied. omega7 applies its high-SNR branch from 8
onward, which is what the reference tabulation used at that point;
the reading is pinned by a regression test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import specfun
from .bounds import SnrPoint, bound_set, channel_params, exact_ber, solve_rho0

_SQRT_PI_8 = math.sqrt(math.pi / 8.0)


@dataclass(frozen=True)
class ApproxSet:
    """All seven approximations plus the relative errors of the last three."""

    ber1: float
    ber2: float
    ber3: float
    ber4: float
    ber5: float
    ber6: float
    ber7: float
    eps5: float
    eps6: float
    eps7: float


def weighted_mean(x: float, y: float, w: float) -> float:
    """w x + (1 - w) y; lies in [min(x, y), max(x, y)] for w in [0, 1]."""
    return w * x + (1.0 - w) * y


def _check_gamma(gamma: float, minimum_exclusive: bool) -> float:
    gamma = float(gamma)
    if math.isnan(gamma):
        raise ValueError("gamma must not be NaN")
    if minimum_exclusive:
        if gamma <= 0.0:
            raise ValueError("gamma must be positive")
    elif gamma < 0.0:
        raise ValueError("gamma must be >= 0")
    return gamma


def omega5(gamma: float) -> float:
    """Weight for the ber5 mean, two branches split at gamma = 1 (linear SNR)."""
    gamma = _check_gamma(gamma, minimum_exclusive=True)
    if gamma < 1.0:
        return 0.65 * gamma**0.25
    return 0.5 + 1.1 * math.exp(-math.pi / (2.0 * math.sqrt(gamma))) / gamma**1.5 * math.sqrt(0.5)


def omega6(gamma: float) -> float:
    """Weight for the ber6 mean, three branches split at gamma = 1 and 5."""
    gamma = _check_gamma(gamma, minimum_exclusive=False)
    if gamma < 1.0:
        return math.exp(-gamma * gamma / 2.9) * 0.25 + 0.5
    if gamma < 5.0:
        return (
            math.exp(-1.0 / (2.0 * gamma + 1.0))
            / (gamma + 0.5) ** 1.5
            * math.sqrt(1.0 / (2.0 * math.pi))
            * 1.15
            + 0.5
        )
    return (1.0 / math.pi) / (1.0 + gamma) * 0.65 + 0.5


def omega7(gamma: float) -> float:
    """Weight for the ber7 mean, three branches split at gamma = 1 and 8."""
    gamma = _check_gamma(gamma, minimum_exclusive=False)
    if gamma < 1.0:
        return (1.0 - gamma) ** 2 * 0.95
    if gamma < 8.0:
        return 0.5 - 1.4 * math.exp(-(gamma**1.2)) + 0.02
    return 1.0 / (5.2 * gamma) + 0.5


def ber1(snr: SnrPoint) -> float:
    """Midpoint of (l1, u1): sqrt(pi/8) (a+b) e^{-ab} I0(ab) e(a,b)."""
    p = channel_params(snr)
    ab = p.a * p.b
    return _SQRT_PI_8 * (p.a + p.b) * specfun.bessel_i0_scaled(ab) * specfun.e_fn(p.a, p.b)


def ber2(snr: SnrPoint) -> float:
    """Midpoint of (l2, u2), in scaled form.

    sqrt(pi/8) I0(ab) E(a,b) [(a+b) e^{ab} - (a-b) e^{-ab}] / (e^{2ab} - e^{-2ab}).
    """
    p = channel_params(snr)
    ab = p.a * p.b
    q2 = math.exp(-2.0 * ab)
    num = (p.a + p.b) - (p.a - p.b) * q2
    return (
        _SQRT_PI_8
        * specfun.bessel_i0_scaled(ab)
        * specfun.E_fn(p.a, p.b)
        * num
        / (1.0 - q2 * q2)
    )


def ber3(snr: SnrPoint) -> float:
    """Midpoint of (l2, u3), in scaled form.

    sqrt(pi/8) I0(ab) [b E(a,b)/(e^{ab} - e^{-ab}) + a e(a,b)/(e^{ab} + lambda0)].
    """
    p = channel_params(snr)
    ab = p.a * p.b
    lam = solve_rho0().lambda0
    lower_part = p.b * specfun.E_fn(p.a, p.b) / (1.0 - math.exp(-2.0 * ab))
    upper_part = p.a * specfun.e_fn(p.a, p.b) / (1.0 + lam * math.exp(-ab))
    return _SQRT_PI_8 * specfun.bessel_i0_scaled(ab) * (lower_part + upper_part)


def ber4(snr: SnrPoint) -> float:
    """Standalone closed form e^{-(b+a)^2/2}/sqrt(8 pi ab) + (1/4)(sqrt(a/b)+sqrt(b/a)) E(a,b).

    Diverges like 1/sqrt(ab) as gamma -> 0; inputs below 1e-12 linear are
    rejected.
    """
    if snr.gamma_lin < 1e-12:
        raise ValueError("gamma too small for ber4 (diverges as gamma -> 0)")
    p = channel_params(snr)
    head = math.exp(-0.5 * (p.b + p.a) ** 2) / math.sqrt(8.0 * math.pi * p.a * p.b)
    tail = 0.25 * (math.sqrt(p.a / p.b) + math.sqrt(p.b / p.a)) * specfun.E_fn(p.a, p.b)
    return head + tail


def ber5(snr: SnrPoint) -> float:
    """Variable-weight mean omega5 l1 + (1 - omega5) u1."""
    bs = bound_set(snr)
    return weighted_mean(bs.l1, bs.u1, omega5(snr.gamma_lin))


def ber6(snr: SnrPoint) -> float:
    """Variable-weight mean omega6 l2 + (1 - omega6) u2."""
    bs = bound_set(snr)
    return weighted_mean(bs.l2, bs.u2, omega6(snr.gamma_lin))


def ber7(snr: SnrPoint) -> float:
    """Variable-weight mean omega7 l2 + (1 - omega7) u3."""
    bs = bound_set(snr)
    return weighted_mean(bs.l2, bs.u3, omega7(snr.gamma_lin))


def relative_error(approx: float, exact: float) -> float:
    """Signed relative error (approx - exact) / exact; requires exact > 0."""
    if not exact > 0.0:
        raise ValueError("exact must be positive")
    return (approx - exact) / exact


def approx_set(snr: SnrPoint) -> ApproxSet:
    """All seven approximations and eps5..eps7 from one consistent evaluation."""
    bs = bound_set(snr)
    exact = exact_ber(snr)
    g = snr.gamma_lin
    b5 = weighted_mean(bs.l1, bs.u1, omega5(g))
    b6 = weighted_mean(bs.l2, bs.u2, omega6(g))
    b7 = weighted_mean(bs.l2, bs.u3, omega7(g))
    return ApproxSet(
        ber1=ber1(snr),
        ber2=ber2(snr),
        ber3=ber3(snr),
        ber4=ber4(snr),
        ber5=b5,
        ber6=b6,
        ber7=b7,
        eps5=relative_error(b5, exact),
        eps6=relative_error(b6, exact),
        eps7=relative_error(b7, exact),
    )
