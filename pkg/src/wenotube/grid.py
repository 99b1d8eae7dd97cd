"""Structured 2D field with ghost layers, and boundary-condition fill."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .euler import IMX, IMY, NV

GHOST = 3  # stencil half-width of the fifth-order reconstruction


class BcType(Enum):
    REFLECTING_WALL = "reflect"
    ZERO_GRADIENT_OUTFLOW = "outflow"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class BoundarySpec:
    """Per-side boundary conditions; periodic sides must come in pairs."""

    x_lo: BcType = BcType.ZERO_GRADIENT_OUTFLOW
    x_hi: BcType = BcType.ZERO_GRADIENT_OUTFLOW
    y_lo: BcType = BcType.ZERO_GRADIENT_OUTFLOW
    y_hi: BcType = BcType.ZERO_GRADIENT_OUTFLOW

    def __post_init__(self):
        for lo, hi, ax in ((self.x_lo, self.x_hi, "x"), (self.y_lo, self.y_hi, "y")):
            if (lo is BcType.PERIODIC) != (hi is BcType.PERIODIC):
                raise ValueError(f"periodic must be set on both {ax} sides or neither")

    @classmethod
    def all_sides(cls, bc: BcType) -> "BoundarySpec":
        return cls(bc, bc, bc, bc)


class Field2D:
    """nx-by-ny grid of conserved 5-vectors with 3 ghost cells per side.

    data has shape (nx+6, ny+6, 5); interior cells live at [3:nx+3, 3:ny+3].
    Cell centers: x_i = x0 + (i + 1/2) dx for interior index i.
    """

    def __init__(self, nx: int, ny: int, dx: float, dy: float, origin=(0.0, 0.0), time=0.0):
        if nx < 1 or ny < 1:
            raise ValueError(f"need nx, ny >= 1, got {nx}x{ny}")
        if not dx > 0.0 or not dy > 0.0:
            raise ValueError(f"need positive spacings, got dx={dx}, dy={dy}")
        self.nx = nx
        self.ny = ny
        self.dx = float(dx)
        self.dy = float(dy)
        self.origin = (float(origin[0]), float(origin[1]))
        self.time = float(time)
        self.step_count = 0
        self.data = np.zeros((nx + 2 * GHOST, ny + 2 * GHOST, NV))

    @property
    def interior(self) -> np.ndarray:
        """View of the interior cells, shape (nx, ny, 5)."""
        g = GHOST
        return self.data[g : g + self.nx, g : g + self.ny, :]

    def x_centers(self) -> np.ndarray:
        return self.origin[0] + (np.arange(self.nx) + 0.5) * self.dx

    def y_centers(self) -> np.ndarray:
        return self.origin[1] + (np.arange(self.ny) + 0.5) * self.dy

    def copy(self) -> "Field2D":
        out = Field2D(self.nx, self.ny, self.dx, self.dy, self.origin, self.time)
        out.data[:] = self.data
        out.step_count = self.step_count
        return out


def _fill_x(data: np.ndarray, nx: int, lo: BcType, hi: BcType):
    g = GHOST
    if lo is BcType.PERIODIC:
        data[0:g] = data[nx : nx + g]
        data[nx + g : nx + 2 * g] = data[g : 2 * g]
        return
    if lo is BcType.ZERO_GRADIENT_OUTFLOW:
        data[0:g] = data[g : g + 1]
    else:  # wall between ghost g-1 and interior g
        data[0:g] = data[g : 2 * g][::-1]
        data[0:g, :, IMX] *= -1.0
    if hi is BcType.ZERO_GRADIENT_OUTFLOW:
        data[nx + g : nx + 2 * g] = data[nx + g - 1 : nx + g]
    else:
        data[nx + g : nx + 2 * g] = data[nx : nx + g][::-1]
        data[nx + g : nx + 2 * g, :, IMX] *= -1.0


def _fill_y(data: np.ndarray, ny: int, lo: BcType, hi: BcType):
    g = GHOST
    if lo is BcType.PERIODIC:
        data[:, 0:g] = data[:, ny : ny + g]
        data[:, ny + g : ny + 2 * g] = data[:, g : 2 * g]
        return
    if lo is BcType.ZERO_GRADIENT_OUTFLOW:
        data[:, 0:g] = data[:, g : g + 1]
    else:
        data[:, 0:g] = data[:, g : 2 * g][:, ::-1]
        data[:, 0:g, IMY] *= -1.0
    if hi is BcType.ZERO_GRADIENT_OUTFLOW:
        data[:, ny + g : ny + 2 * g] = data[:, ny + g - 1 : ny + g]
    else:
        data[:, ny + g : ny + 2 * g] = data[:, ny : ny + g][:, ::-1]
        data[:, ny + g : ny + 2 * g, IMY] *= -1.0


def fill_ghost(field: Field2D, bc: BoundarySpec) -> None:
    """Populate all ghost cells from the interior per the boundary spec.

    Reflecting walls mirror cells with the wall-normal momentum negated;
    zero-gradient copies the nearest interior cell; periodic wraps. The x
    pass runs first so corner ghosts inherit x-filled columns.
    """
    for n, lo, hi, ax in (
        (field.nx, bc.x_lo, bc.x_hi, "x"),
        (field.ny, bc.y_lo, bc.y_hi, "y"),
    ):
        if n < GHOST and (lo is not BcType.ZERO_GRADIENT_OUTFLOW or hi is not BcType.ZERO_GRADIENT_OUTFLOW):
            raise ValueError(
                f"{ax} axis has {n} < {GHOST} cells; only zero-gradient boundaries "
                f"are meaningful on a collapsed axis"
            )
    _fill_x(field.data, field.nx, bc.x_lo, bc.x_hi)
    _fill_y(field.data, field.ny, bc.y_lo, bc.y_hi)
