"""Scalar fifth-order WENO reconstruction and artificial compression.

These operate on 5-point stencils (f_{i-2}..f_{i+2}) and return the
left-biased value at the i+1/2 interface. Right-biased values are obtained
by reflecting the stencil about the interface, never by separate formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels


@dataclass(frozen=True)
class WenoParams:
    """Reconstruction knobs.

    epsilon regularizes the smoothness indicators (Jiang-Shu's published
    1e-6). acm_strength scales the contact-steepening correction; it is a
    free coefficient, 1/3 by default, applied only to linearly degenerate
    characteristic fields.
    """

    epsilon: float = 1e-6
    acm_enabled: bool = False
    acm_strength: float = 1.0 / 3.0

    def __post_init__(self):
        if not self.epsilon > 0.0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.acm_strength < 0.0:
            raise ValueError(f"acm_strength must be >= 0, got {self.acm_strength}")


def _stencil5(s) -> tuple[float, float, float, float, float]:
    v = np.asarray(s, dtype=np.float64)
    if v.shape != (5,):
        raise ValueError(f"stencil must hold 5 values, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("stencil values must be finite")
    return float(v[0]), float(v[1]), float(v[2]), float(v[3]), float(v[4])


def smoothness_indicators(s) -> tuple[float, float, float]:
    """Jiang-Shu beta_k of the three 3-point substencils (all >= 0)."""
    return _kernels.weno5_betas(*_stencil5(s))


def weno5_weights(s, params: WenoParams) -> tuple[float, float, float]:
    """Nonlinear weights; a convex combination (each >= 0, summing to 1)."""
    return _kernels.weno5_weights(*_stencil5(s), params.epsilon)


def weno5_reconstruct(s, params: WenoParams) -> float:
    """Left-biased WENO5 interface value at i+1/2; mirror the stencil for i-1/2."""
    return _kernels.weno5_value(*_stencil5(s), params.epsilon)


def artificial_compression(s, base: float, params: WenoParams) -> float:
    """Steepened interface value: base plus a minmod-limited compression term.

    base must be the weno5_reconstruct output for the same stencil. The
    steepening term is the minmod of the one-sided differences at the
    interface, gated by a jump detector that is exactly zero on linear data,
    and the result is confined to the TVD wedge of the adjacent cell pair,
    so no value outside [min(s), max(s)] can appear. acm_strength zero (or
    acm_enabled false) returns base untouched.
    """
    if not params.acm_enabled or params.acm_strength == 0.0:
        return base
    return _kernels.acm_value(*_stencil5(s), base, params.acm_strength)
