"""Characteristic-wise Lax-Friedrichs-split WENO flux along one grid line.

The recipe per interface: average the two adjacent conserved states, build
the eigensystem of the flux Jacobian there, project the 6-cell window of
states and physical fluxes onto characteristic fields, split each field
into f+- = = (f +- alpha w)/2, reconstruct f+ left-biased and f- right-biased
with WENO (plus contact steepening on the linearly degenerate fields when
enabled), and project the summed interface values back with the right
eigenvectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidStateError, WaveSpeedBoundError
from .euler import Direction, IdealGasEos, ConservedState, primitives_from_conserved
from .weno import WenoParams

GHOST = _kernels.GHOST


@dataclass(frozen=True)
class EigenSystem:
    """Eigen-decomposition of the flux Jacobian at one state.

    lambdas are ordered (u_n - a, u_n, u_n, u_n, u_n + a) for the sweep
    normal; left rows and right columns are mutually inverse.
    """

    lambdas: np.ndarray
    left: np.ndarray
    right: np.ndarray


def average_state(UL: ConservedState, UR: ConservedState) -> ConservedState:
    """Component-wise arithmetic mean of two conserved states.

    An unphysical mean (possible for near-vacuum data) raises
    InvalidStateError so the caller can report where the scheme broke down.
    The validity check (rho > 0 and positive internal energy) does not
    depend on gamma, so no EOS is needed here.
    """
    mean = ConservedState(*(0.5 * (np.asarray(UL) + np.asarray(UR))))
    if not mean.rho > 0.0 or not np.isfinite(mean.rho):
        raise InvalidStateError("mean state has non-positive density", rho=mean.rho)
    e = mean.E - 0.5 * (mean.mx**2 + mean.my**2) / mean.rho
    if not e > 0.0 or not np.isfinite(e):
        raise InvalidStateError(
            "mean state has non-positive internal energy", rho=mean.rho, pressure=e
        )
    return mean


def eigensystem(Ubar: ConservedState, direction: Direction, eos: IdealGasEos) -> EigenSystem:
    """Left/right eigenvectors and eigenvalues of dF/dU (or dG/dU) at Ubar.

    The standard ideal-gas system is extended by the passively advected
    mass-fraction field, which rides on the u_n eigenvalue.
    """
    W = primitives_from_conserved(Ubar, eos)
    rho, u, v, p, M = W
    a = np.sqrt(eos.gamma * p / rho)
    if not a > 0.0 or not np.isfinite(a):
        raise InvalidStateError("non-positive sound speed", rho=rho, pressure=p)
    H = (Ubar.E + p) / rho
    q2 = u * u + v * v
    b1 = (eos.gamma - 1.0) / (a * a)
    b2 = 0.5 * b1 * q2

    if direction == Direction.X:
        un, ut = u, v
        itn, itt = 1, 2
    else:
        un, ut = v, u
        itn, itt = 2, 1

    lambdas = np.array([un - a, un, un, un, un + a])

    right = np.zeros((5, 5))
    for col, urow in ((0, un - a), (1, un), (4, un + a)):
        right[0, col] = 1.0
        right[itn, col] = urow
        right[itt, col] = ut
        right[4, col] = M
    right[3, 0] = H - un * a
    right[3, 1] = 0.5 * q2
    right[3, 4] = H + un * a
    right[itt, 2] = 1.0
    right[3, 2] = ut
    right[4, 3] = 1.0

    left = np.zeros((5, 5))
    left[0, 0] = 0.5 * (b2 + un / a)
    left[0, itn] = 0.5 * (-b1 * un - 1.0 / a)
    left[0, itt] = 0.5 * (-b1 * ut)
    left[0, 3] = 0.5 * b1
    left[1, 0] = 1.0 - b2
    left[1, itn] = b1 * un
    left[1, itt] = b1 * ut
    left[1, 3] = -b1
    left[2, 0] = -ut
    left[2, itt] = 1.0
    left[3, 0] = -M
    left[3, 4] = 1.0
    left[4, 0] = 0.5 * (b2 - un / a)
    left[4, itn] = 0.5 * (-b1 * un + 1.0 / a)
    left[4, itt] = 0.5 * (-b1 * ut)
    left[4, 3] = 0.5 * b1

    return EigenSystem(lambdas=lambdas, left=left, right=right)


def line_flux(
    line: np.ndarray,
    direction: Direction,
    eos: IdealGasEos,
    params: WenoParams,
    alpha: float,
    local_alpha: bool = False,
) -> np.ndarray:
    """Numerical fluxes at the n+1 interfaces of a line of n interior cells.

    line is (n+6, 5) conserved states with ghosts already filled; alpha must
    bound every wave speed on the line (checked) unless local_alpha selects
    per-interface window maxima instead of the one global splitting speed.
    """
    u = np.ascontiguousarray(line, dtype=np.float64)
    if u.ndim != 2 or u.shape[1] != 5 or u.shape[0] < 2 * GHOST + 1:
        raise ValueError(f"line must be (n+6, 5) with n >= 1, got {u.shape}")
    if direction == Direction.Y:
        u = u[:, [0, 2, 1, 3, 4]]  # sweep-normal momentum first

    n6 = u.shape[0]
    ws = np.empty(n6)
    f = np.empty((n6, 5))
    fhat = np.empty((n6 - 2 * GHOST + 1, 5))
    status, pos = _kernels.line_flux(
        u, eos.gamma, float(alpha), params.epsilon,
        params.acm_enabled, params.acm_strength, local_alpha, ws, f, fhat,
    )
    if status == 1:
        raise InvalidStateError("non-positive density", rho=float(line[pos, 0]), where=(pos,))
    if status == 2:
        raise InvalidStateError("non-positive pressure", rho=float(line[pos, 0]), where=(pos,))
    if status == 3:
        raise WaveSpeedBoundError(
            f"alpha={alpha!r} is below the line wave speed {ws[pos]!r} at cell {pos}"
        )
    if status == 4:
        raise InvalidStateError("interface average state is unphysical", where=(pos,))
    if direction == Direction.Y:
        fhat = fhat[:, [0, 2, 1, 3, 4]]
    return fhat
