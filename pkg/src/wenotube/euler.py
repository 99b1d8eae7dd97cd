"""State algebra for the 2D Euler equations with a heavy-fluid mass fraction.

The conserved vector per cell is (rho, rho*u, rho*v, E, rho*M): mass,
momentum, total energy, and the partial density of the heavy fluid. M is
passively advected, so it adds a fifth, linearly degenerate field to the
usual 2D ideal-gas system. All quantities are CGS (cm, g, s, dyn/cm^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple

import numpy as np

from .errors import InvalidStateError

# Component indices of the 5-vector.
NV = 5
IRHO, IMX, IMY, IE, IRHOM = 0, 1, 2, 3, 4


class Direction(IntEnum):
    """Sweep axis selector (picks the x-flux F or the y-flux G)."""

    X = 0
    Y = 1


@dataclass(frozen=True)
class IdealGasEos:
    """Single-gamma ideal gas: e = p / ((gamma - 1) rho)."""

    gamma: float = 1.4

    def __post_init__(self):
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")


class ConservedState(NamedTuple):
    rho: float
    mx: float
    my: float
    E: float
    rhoM: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=np.float64)


class PrimitiveState(NamedTuple):
    rho: float
    u: float
    v: float
    p: float
    M: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=np.float64)


def primitives_from_conserved(U: ConservedState, eos: IdealGasEos) -> PrimitiveState:
    """Invert the energy relation to recover (rho, u, v, p, M).

    Raises InvalidStateError on non-positive density or pressure; the solver
    runs floor-free, so an unphysical cell is a hard error rather than
    something to clip.
    """
    rho, mx, my, E, rhoM = U
    if not rho > 0.0 or not math.isfinite(rho):
        raise InvalidStateError("non-positive density", rho=rho)
    u = mx / rho
    v = my / rho
    p = (eos.gamma - 1.0) * (E - 0.5 * rho * (u * u + v * v))
    if not p > 0.0 or not math.isfinite(p):
        raise InvalidStateError("non-positive pressure", rho=rho, pressure=p)
    return PrimitiveState(rho, u, v, p, rhoM / rho)


def conserved_from_primitives(W: PrimitiveState, eos: IdealGasEos) -> ConservedState:
    """E = p/(gamma-1) + rho (u^2+v^2)/2; momenta and rhoM are products."""
    rho, u, v, p, M = W
    if not rho > 0.0:
        raise InvalidStateError("non-positive density", rho=rho)
    if not p > 0.0:
        raise InvalidStateError("non-positive pressure", rho=rho, pressure=p)
    E = p / (eos.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    return ConservedState(rho, rho * u, rho * v, E, rho * M)


def sound_speed(W: PrimitiveState, eos: IdealGasEos) -> float:
    """a = sqrt(gamma p / rho)."""
    return math.sqrt(eos.gamma * W.p / W.rho)


def physical_flux(U: ConservedState, direction: Direction, eos: IdealGasEos) -> np.ndarray:
    """Euler flux of the conserved 5-vector along one axis.

    X: (rho u, rho u^2 + p, rho u v, (E+p) u, rho M u); Y is the symmetric
    form with the roles of u and v exchanged.
    """
    rho, mx, my, E, rhoM = U
    W = primitives_from_conserved(ConservedState(rho, mx, my, E, rhoM), eos)
    if direction == Direction.X:
        un = W.u
        return np.array(
            [mx, mx * un + W.p, my * un, (E + W.p) * un, rhoM * un], dtype=np.float64
        )
    vn = W.v
    return np.array(
        [my, mx * vn, my * vn + W.p, (E + W.p) * vn, rhoM * vn], dtype=np.float64
    )


def primitive_arrays_from_conserved(data: np.ndarray, eos: IdealGasEos):
    """Vectorized conversion for an (..., 5) conserved array.

    Returns (rho, u, v, p, M) arrays. Raises InvalidStateError naming the
    first offending flat index if any cell is unphysical.
    """
    rho = data[..., IRHO]
    bad = ~(rho > 0.0) | ~np.isfinite(rho)
    if np.any(bad):
        idx = np.unravel_index(int(np.argmax(bad)), rho.shape)
        raise InvalidStateError("non-positive density", rho=float(rho[idx]), where=idx)
    u = data[..., IMX] / rho
    v = data[..., IMY] / rho
    p = (eos.gamma - 1.0) * (data[..., IE] - 0.5 * rho * (u * u + v * v))
    bad = ~(p > 0.0) | ~np.isfinite(p)
    if np.any(bad):
        idx = np.unravel_index(int(np.argmax(bad)), p.shape)
        raise InvalidStateError(
            "non-positive pressure", rho=float(rho[idx]), pressure=float(p[idx]), where=idx
        )
    return rho, u, v, p, data[..., IRHOM] / rho


def max_wave_speed(field, direction: Direction, eos: IdealGasEos) -> float:
    """max(|u_dir| + a) over interior cells; the alpha of the LF splitting."""
    rho, u, v, p, _ = primitive_arrays_from_conserved(field.interior, eos)
    un = u if direction == Direction.X else v
    return float(np.max(np.abs(un) + np.sqrt(eos.gamma * p / rho)))
