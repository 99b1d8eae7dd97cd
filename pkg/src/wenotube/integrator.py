"""Time integration: SSP-RK3 dimensional sweeps, Strang alternation, driver.

Each sweep advances every grid line along one axis by a full SSP-RK3 step
(Shu-Osher form), refilling ghosts and recomputing the global splitting
speed at every stage. A Strang step is an X sweep then a Y sweep, with the
ordering alternated on odd steps to cancel the first-order splitting bias.
"""

from __future__ import annotations

import time as _time
from dataclasses import dataclass, field as _dc_field
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .errors import InvalidStateError, SolverError
from .euler import Direction, IdealGasEos
from .grid import GHOST, BoundarySpec, Field2D, fill_ghost
from .weno import WenoParams


def _interior_alpha(field: Field2D, axis: int, eos: IdealGasEos) -> float:
    speed, status, i, j = _kernels.interior_max_wave_speed(
        field.data, axis, field.nx, field.ny, eos.gamma
    )
    if status != 0:
        kind = "density" if status == 1 else "pressure"
        raise InvalidStateError(f"non-positive {kind}", where=(i - GHOST, j - GHOST))
    return speed


def compute_dt(field: Field2D, cfl: float, eos: IdealGasEos, dt_mode: str = "min") -> float:
    """CFL time step from the directional max wave speeds.

    "min" takes cfl * min(dx/ax, dy/ay); "sum" uses the inverse-sum form
    cfl / (ax/dx + ay/dy), which is slightly more restrictive.
    """
    if not 0.0 < cfl < 1.0:
        raise ValueError(f"cfl must lie in (0, 1), got {cfl}")
    ax = _interior_alpha(field, 0, eos)
    ay = _interior_alpha(field, 1, eos)
    if not ax > 0.0 or not ay > 0.0:
        raise InvalidStateError("zero wave speed (vacuum?)", rho=None)
    if dt_mode == "min":
        dt = cfl * min(field.dx / ax, field.dy / ay)
    elif dt_mode == "sum":
        dt = cfl / (ax / field.dx + ay / field.dy)
    else:
        raise ValueError(f"unknown dt_mode {dt_mode!r}")
    return dt


def sweep(
    field: Field2D,
    direction: Direction,
    dt: float,
    bc: BoundarySpec,
    eos: IdealGasEos,
    params: WenoParams,
    alpha_mode: str = "global",
) -> None:
    """Advance all lines along one axis by one SSP-RK3 step of size dt."""
    if alpha_mode not in ("global", "local"):
        raise ValueError(f"unknown alpha_mode {alpha_mode!r}")
    axis = int(direction)
    h = field.dx if axis == 0 else field.dy
    local = alpha_mode == "local"
    g = GHOST

    u0 = field.interior.copy()
    rhs = np.zeros_like(field.data)
    interior = field.interior
    rhs_int = rhs[g : g + field.nx, g : g + field.ny, :]

    for stage in range(3):
        fill_ghost(field, bc)
        alpha = 0.0 if local else _interior_alpha(field, axis, eos)
        status, i, j = _kernels.sweep_rhs(
            field.data, axis, field.nx, field.ny, h, eos.gamma, alpha,
            params.epsilon, params.acm_enabled, params.acm_strength, local, rhs,
        )
        if status != 0:
            where = (i - g, j - g)
            if status == 1:
                raise InvalidStateError("non-positive density in RK stage", where=where)
            if status == 2:
                raise InvalidStateError("non-positive pressure in RK stage", where=where)
            if status == 4:
                raise InvalidStateError("unphysical interface average state", where=where)
            raise InvalidStateError(f"flux assembly failed (code {status})", where=where)
        # incremental Shu-Osher combos: exact identity on steady data
        if stage == 0:
            interior += dt * rhs_int
        elif stage == 1:
            interior += 0.75 * (u0 - interior) + 0.25 * dt * rhs_int
        else:
            interior += (u0 - interior) / 3.0 + (2.0 / 3.0) * dt * rhs_int


def strang_step(
    field: Field2D,
    dt: float,
    bc: BoundarySpec,
    eos: IdealGasEos,
    params: WenoParams,
    alpha_mode: str = "global",
) -> None:
    """One split 2D step: X then Y on even steps, Y then X on odd steps."""
    if field.step_count % 2 == 0:
        order = (Direction.X, Direction.Y)
    else:
        order = (Direction.Y, Direction.X)
    for direction in order:
        sweep(field, direction, dt, bc, eos, params, alpha_mode)
    field.time += dt
    field.step_count += 1


@dataclass
class RunResult:
    field: Field2D
    series: list = _dc_field(default_factory=list)
    snapshots: list = _dc_field(default_factory=list)  # (time, Field2D) pairs if kept
    snapshot_times: list = _dc_field(default_factory=list)
    steps: int = 0
    wall_time: float = 0.0


def _output_targets(spec) -> list[float]:
    times = set()
    if getattr(spec, "output_times", None):
        times.update(float(t) for t in spec.output_times if 0.0 < t <= spec.t_end)
    interval = getattr(spec, "output_interval", None)
    if interval:
        k = 1
        while k * interval < spec.t_end * (1.0 - 1e-12):
            times.add(k * interval)
            k += 1
    if spec.t_end > 0.0:
        times.add(spec.t_end)
    return sorted(times)


def run(
    spec,
    field: Optional[Field2D] = None,
    on_snapshot: Optional[Callable[[float, Field2D], None]] = None,
    keep_snapshots: bool = False,
) -> RunResult:
    """Integrate a problem from t=0 to t_end.

    The last dt before any scheduled output time (and before t_end) is
    clipped so the trajectory lands exactly on it; no time interpolation is
    done. Interface records are appended every step when the problem tracks
    an interface. Snapshots go to on_snapshot and, if keep_snapshots, into
    the result (mind the memory on large grids).
    """
    from .problems import build_initial_field  # local import; problems imports us back
    from . import diagnostics

    if field is None:
        field = build_initial_field(spec)
    result = RunResult(field=field)
    t_start = _time.perf_counter()

    track = getattr(spec, "track_interface", False)
    tips0 = None

    def emit_snapshot():
        result.snapshot_times.append(field.time)
        if on_snapshot is not None:
            on_snapshot(field.time, field)
        if keep_snapshots:
            result.snapshots.append((field.time, field.copy()))

    def record_series():
        nonlocal tips0
        tips = diagnostics.locate_interface(field)
        if tips0 is None:
            tips0 = tips
        amp, disp = diagnostics.amplitude_displacement(tips, tips0)
        result.series.append(
            diagnostics.InterfaceRecord(
                t=field.time, y_bubble=tips[0], y_spike=tips[1],
                amplitude=amp, displacement=disp,
            )
        )

    emit_snapshot()
    if track:
        record_series()

    targets = _output_targets(spec)
    next_idx = 0
    tiny = 1e-12 * max(1.0, spec.t_end)

    while field.time < spec.t_end - tiny:
        try:
            dt = compute_dt(field, spec.cfl, spec.eos, spec.dt_mode)
        except InvalidStateError as exc:
            raise SolverError(
                f"dt computation failed: {exc}", step=result.steps, time=field.time
            ) from exc
        target = targets[next_idx]
        landing = False
        if field.time + dt >= target - tiny:
            dt = target - field.time
            landing = True
        try:
            strang_step(field, dt, spec.bc, spec.eos, spec.weno, spec.alpha_mode)
        except InvalidStateError as exc:
            raise SolverError(
                f"step aborted: {exc}", step=result.steps, time=field.time
            ) from exc
        result.steps += 1
        if landing:
            field.time = target  # kill accumulation drift; land exactly
            next_idx += 1
        if track:
            record_series()
        if landing:
            emit_snapshot()

    result.wall_time = _time.perf_counter() - t_start
    return result
