"""Channel parameterization, exact error rate, and its five analytic bounds.

The bit error rate of Gray-coded DQPSK over AWGN at linear bit SNR g is

    BER = Q(a, b) - (1/2) I0(ab) exp(-(a^2 + b^2)/2),

with a = sqrt(g (2 - sqrt(2))), b = sqrt(g (2 + sqrt(2))). This module
evaluates that expression through the reference Marcum Q, plus two
lower bounds (l1, l2) and three upper bounds (u1, u2, u3) that bracket
it, all in exponentially scaled arithmetic so results stay finite far
beyond the SNR range anyone tabulates.

The sharp constant in u3 is computed on first use by solving
(x + 1) I1(x) = x I0(x); the solver result is cached and also exercised
by the test suite against reference digits.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from . import specfun

_SQRT2 = math.sqrt(2.0)
_A_COEF = 2.0 - _SQRT2
_B_COEF = 2.0 + _SQRT2
_HALF_PI_SQRT = math.sqrt(0.5 * math.pi)


@dataclass(frozen=True)
class SnrPoint:
    """A bit SNR carried in both decibel and linear form."""

    gamma_db: float
    gamma_lin: float

    def __post_init__(self) -> None:
        if math.isnan(self.gamma_db) or math.isinf(self.gamma_db):
            raise ValueError("gamma_db must be finite")
        if not (0.0 < self.gamma_lin < math.inf):
            raise ValueError("gamma_lin must be positive and finite")
        expected = 10.0 ** (self.gamma_db / 10.0)
        if abs(expected - self.gamma_lin) > 1e-12 * self.gamma_lin:
            raise ValueError("gamma_db and gamma_lin disagree")

    @classmethod
    def from_db(cls, gamma_db: float) -> "SnrPoint":
        gamma_db = float(gamma_db)
        if math.isnan(gamma_db) or math.isinf(gamma_db):
            raise ValueError("gamma_db must be finite")
        return cls(gamma_db, 10.0 ** (gamma_db / 10.0))

    @classmethod
    def from_linear(cls, gamma_lin: float) -> "SnrPoint":
        gamma_lin = float(gamma_lin)
        if math.isnan(gamma_lin) or not (0.0 < gamma_lin < math.inf):
            raise ValueError("gamma_lin must be positive and finite")
        return cls(10.0 * math.log10(gamma_lin), gamma_lin)


@dataclass(frozen=True)
class ChannelParams:
    """Noncoherent detection parameters (a, b) derived from one SNR point."""

    a: float
    b: float


@dataclass(frozen=True)
class LambdaConstants:
    """Root rho0 of (x+1) I1(x) = x I0(x) and the sharp constant lambda0."""

    rho0: float
    lambda0: float


@dataclass(frozen=True)
class BoundSet:
    """The five bounds evaluated at one SNR point (l1 < l2 <= BER <= u2, u3 <= u1)."""

    l1: float
    l2: float
    u1: float
    u2: float
    u3: float


def channel_params(snr: SnrPoint) -> ChannelParams:
    """Map an SNR point to (a, b); b/a is the fixed constant 1 + sqrt(2)."""
    g = snr.gamma_lin
    return ChannelParams(math.sqrt(g * _A_COEF), math.sqrt(g * _B_COEF))


def _rho_equation(x: float) -> float:
    return (x + 1.0) * specfun.bessel_i1(x) - x * specfun.bessel_i0(x)


def _rho_equation_prime(x: float) -> float:
    i0 = specfun.bessel_i0(x)
    i1 = specfun.bessel_i1(x)
    return x * i0 - x * i1 - i1 / x


@functools.cache
def solve_rho0() -> LambdaConstants:
    """Unique positive root of (x+1) I1(x) = x I0(x) and the derived constant.

    Bracketing bisection on [1, 2] followed by Newton refinement to
    |f(rho0)| <= 1e-14; the result is cached after the first call (pure
    computation, so concurrent first calls are harmless).
    """
    lo, hi = 1.0, 2.0
    flo = _rho_equation(lo)
    if flo * _rho_equation(hi) >= 0.0:
        raise RuntimeError("root bracket [1, 2] failed")
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if flo * _rho_equation(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            flo = _rho_equation(lo)
    root = 0.5 * (lo + hi)
    for _ in range(4):
        root -= _rho_equation(root) / _rho_equation_prime(root)
    if abs(_rho_equation(root)) > 1e-14:
        raise RuntimeError("root refinement did not reach 1e-14 residual")
    lam = math.exp(root) * (specfun.bessel_i0(root) / specfun.bessel_i1(root) - 1.0)
    return LambdaConstants(rho0=root, lambda0=lam)


def _scaled_pieces(p: ChannelParams) -> tuple[float, float, float, float, float]:
    # Shared scaled quantities: ive = exp(-ab) I0(ab), the tail weights
    # e and E, and half = (1/2) I0(ab) exp(-(a^2+b^2)/2) via the identity
    # (a^2+b^2)/2 - ab = (b-a)^2/2.
    ab = p.a * p.b
    ive = specfun.bessel_i0_scaled(ab)
    e = specfun.e_fn(p.a, p.b)
    big_e = specfun.E_fn(p.a, p.b)
    half = 0.5 * ive * math.exp(-0.5 * (p.b - p.a) ** 2)
    return ab, ive, e, big_e, half


def exact_ber(snr: SnrPoint) -> float:
    """Exact bit error rate Q(a, b) - (1/2) I0(ab) exp(-(a^2+b^2)/2).

    Underflows to 0.0 at extreme SNR (beyond roughly 31 dB) where the true
    value drops out of the double range.
    """
    p = channel_params(snr)
    _, _, _, _, half = _scaled_pieces(p)
    return specfun.marcum_q(p.a, p.b) - half


def bound_set(snr: SnrPoint) -> BoundSet:
    """All five bounds from one shared channel parameterization.

    Reciprocals of e^{ab} +- e^{-ab} and e^{ab} + lambda0 are evaluated as
    e^{-ab}/(1 +- e^{-2ab}) and e^{-ab}/(1 + lambda0 e^{-ab}) so every
    member stays finite at arbitrarily large SNR.
    """
    p = channel_params(snr)
    ab, ive, e, big_e, half = _scaled_pieces(p)
    lam = solve_rho0().lambda0
    q2 = math.exp(-2.0 * ab)
    common = _HALF_PI_SQRT * ive
    return BoundSet(
        l1=common * p.b * e - half,
        l2=common * p.b * big_e / (1.0 - q2) - half,
        u1=common * p.a * e + half,
        u2=common * p.a * big_e / (1.0 + q2) + half,
        u3=common * p.a * e / (1.0 + lam * math.exp(-ab)) + half,
    )


def bound_l1(snr: SnrPoint) -> float:
    """Lower bound I0(ab) [sqrt(pi/2) (b/e^{ab}) e(a,b) - (1/2) e^{-(a^2+b^2)/2}]."""
    return bound_set(snr).l1


def bound_u1(snr: SnrPoint) -> float:
    """Upper bound: as bound_l1 with a in place of b and the opposite sign."""
    return bound_set(snr).u1


def bound_l2(snr: SnrPoint) -> float:
    """Tighter lower bound, using b E(a,b)/(e^{ab} - e^{-ab})."""
    return bound_set(snr).l2


def bound_u2(snr: SnrPoint) -> float:
    """Tighter upper bound, using a E(a,b)/(e^{ab} + e^{-ab})."""
    return bound_set(snr).u2


def bound_u3(snr: SnrPoint) -> float:
    """Best upper bound, via the sharp constant: a e(a,b)/(e^{ab} + lambda0)."""
    return bound_set(snr).u3
