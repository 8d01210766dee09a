"""Exact DQPSK/AWGN bit error rate, analytic bounds, approximations, and a Monte-Carlo oracle."""

from .approx import (
    ApproxSet,
    approx_set,
    ber1,
    ber2,
    ber3,
    ber4,
    ber5,
    ber6,
    ber7,
    omega5,
    omega6,
    omega7,
    relative_error,
    weighted_mean,
)
from .bounds import (
    BoundSet,
    ChannelParams,
    LambdaConstants,
    SnrPoint,
    bound_l1,
    bound_l2,
    bound_set,
    bound_u1,
    bound_u2,
    bound_u3,
    channel_params,
    exact_ber,
    solve_rho0,
)
from .montecarlo import McConfig, McResult, simulate
from .specfun import (
    E_fn,
    bessel_i0,
    bessel_i0_scaled,
    bessel_i1,
    bessel_i1_scaled,
    e_fn,
    erfc,
    marcum_q,
    marcum_q_quad,
    marcum_q_series,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxSet",
    "BoundSet",
    "ChannelParams",
    "E_fn",
    "LambdaConstants",
    "McConfig",
    "McResult",
    "SnrPoint",
    "approx_set",
    "ber1",
    "ber2",
    "ber3",
    "ber4",
    "ber5",
    "ber6",
    "ber7",
    "bessel_i0",
    "bessel_i0_scaled",
    "bessel_i1",
    "bessel_i1_scaled",
    "bound_l1",
    "bound_l2",
    "bound_set",
    "bound_u1",
    "bound_u2",
    "bound_u3",
    "channel_params",
    "e_fn",
    "erfc",
    "exact_ber",
    "marcum_q",
    "marcum_q_quad",
    "marcum_q_series",
    "omega5",
    "omega6",
    "omega7",
    "relative_error",
    "simulate",
    "solve_rho0",
    "weighted_mean",
]
