"""Symbol-level Monte-Carlo oracle for Gray-coded DQPSK over AWGN.

Transmit pipeline per run: draw 2N data bits; Gray-map each dibit to a
phase increment in {pi/4, 3pi/4, 5pi/4, 7pi/4} (00 -> pi/4, 01 -> 3pi/4,
11 -> 5pi/4, 10 -> 7pi/4); accumulate phase onto a unit-energy carrier
whose first symbol is a known reference at phase 0; add circular complex
Gaussian noise with per-dimension variance 1/(4 gamma_lin) (two bits per
symbol, so Es/N0 = 2 gamma); detect each symbol from the phase quadrant
of r_k conj(r_{k-1}); inverse-Gray-map and count bit errors.

Reproducibility: all randomness comes from numpy's seeded PCG64
generator in a fixed draw order -- reference-symbol noise first, then
per fixed-size chunk: one block of random bytes expanded MSB-first into
2n bits, then 2n standard normals (first n in-phase, last n
quadrature). A given McConfig therefore always yields a bit-identical
McResult.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

from .bounds import SnrPoint

_CHUNK = 1 << 21

# dibit value (2 b0 + b1) <-> phase-increment index m, increment = (2m+1) pi/4.
# The permutation [0, 1, 3, 2] is Gray-consistent and its own inverse.
_GRAY_MAP = np.array([0, 1, 3, 2], dtype=np.uint8)
_DIBIT_OF_M = np.array([0, 1, 3, 2], dtype=np.uint8)
# flat 4x4 table: bit errors between true index (row) and detected index (col)
_BIT_ERRORS = np.array(
    [int(a ^ b).bit_count() for a in _DIBIT_OF_M for b in _DIBIT_OF_M],
    dtype=np.uint8,
)

_ANGLES = np.arange(8) * (math.pi / 4.0)
_COS = np.cos(_ANGLES)
_SIN = np.sin(_ANGLES)


@dataclass(frozen=True)
class McConfig:
    """One simulation request; num_symbols counts data symbols only."""

    snr: SnrPoint
    num_symbols: int
    seed: int
    confidence: float = 0.99

    def __post_init__(self) -> None:
        if self.num_symbols < 1000:
            raise ValueError("num_symbols must be >= 1000")
        if not 0.0 < self.confidence < 1.0:
            raise ValueError("confidence must be in (0, 1)")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")


@dataclass(frozen=True)
class McResult:
    """Empirical BER with its normal-approximation confidence half-width."""

    ber_estimate: float
    bit_errors: int
    bits_sent: int
    ci_half_width: float


class _Buffers:
    # Chunk-sized scratch arrays, allocated once per simulate() call.
    def __init__(self, n: int):
        self.noise = np.empty(2 * n)
        self.sx = np.empty(n)
        self.sy = np.empty(n)
        self.tmp = np.empty(n)
        self.re = np.empty(n)
        self.im = np.empty(n)
        self.flag_re = np.empty(n, dtype=bool)
        self.flag_im = np.empty(n, dtype=bool)


def simulate(config: McConfig) -> McResult:
    """Run the DQPSK transmission and return the empirical error rate.

    Deterministic for a fixed config; the first symbol is a data-free
    phase reference, so bits_sent == 2 * num_symbols.
    """
    gamma = config.snr.gamma_lin
    sigma = math.sqrt(1.0 / (4.0 * gamma))
    rng = np.random.default_rng(config.seed)

    ref_noise = rng.standard_normal(2)
    prev_x = 1.0 + sigma * ref_noise[0]
    prev_y = sigma * ref_noise[1]

    buf = _Buffers(min(_CHUNK, config.num_symbols))
    phase_acc = 0
    bit_errors = 0
    remaining = config.num_symbols
    while remaining > 0:
        n = min(_CHUNK, remaining)

        raw = rng.bytes((2 * n + 7) // 8)
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), count=2 * n)
        noise = buf.noise[: 2 * n]
        rng.standard_normal(out=noise)

        m = _GRAY_MAP[(bits[0::2] << 1) | bits[1::2]]
        steps = np.cumsum(2 * m.astype(np.int32) + 1)
        t = steps
        t += phase_acc
        phase_acc = int(t[-1]) & 7
        t &= 7

        # received I/Q: unit carrier from the phase table plus scaled noise
        sx, sy = buf.sx[:n], buf.sy[:n]
        np.take(_COS, t, out=sx)
        np.take(_SIN, t, out=sy)
        rx, ry = noise[:n], noise[n:]
        np.multiply(rx, sigma, out=rx)
        np.multiply(ry, sigma, out=ry)
        rx += sx
        ry += sy

        # d = r_k conj(r_{k-1}); first element pairs with the carry symbol
        re, im, tmp = buf.re[:n], buf.im[:n], buf.tmp[:n]
        np.multiply(rx[1:], rx[:-1], out=re[1:])
        np.multiply(ry[1:], ry[:-1], out=tmp[1:])
        re[1:] += tmp[1:]
        np.multiply(ry[1:], rx[:-1], out=im[1:])
        np.multiply(rx[1:], ry[:-1], out=tmp[1:])
        im[1:] -= tmp[1:]
        re[0] = rx[0] * prev_x + ry[0] * prev_y
        im[0] = ry[0] * prev_x - rx[0] * prev_y
        prev_x = float(rx[-1])
        prev_y = float(ry[-1])

        # quadrant of the phase difference -> detected increment index
        flag_re, flag_im = buf.flag_re[:n], buf.flag_im[:n]
        np.less_equal(re, 0.0, out=flag_re)
        np.less(im, 0.0, out=flag_im)
        np.logical_xor(flag_re, flag_im, out=flag_re)
        m_hat = flag_re.view(np.uint8)
        m_hat += flag_im.view(np.uint8)
        m_hat += flag_im.view(np.uint8)

        np.left_shift(m, 2, out=m)
        m += m_hat
        bit_errors += int(np.take(_BIT_ERRORS, m).sum(dtype=np.int64))
        remaining -= n

    bits_sent = 2 * config.num_symbols
    p_hat = bit_errors / bits_sent
    z = float(ndtri(0.5 + 0.5 * config.confidence))
    half_width = z * math.sqrt(p_hat * (1.0 - p_hat) / bits_sent)
    return McResult(
        ber_estimate=p_hat,
        bit_errors=bit_errors,
        bits_sent=bits_sent,
        ci_half_width=half_width,
    )
