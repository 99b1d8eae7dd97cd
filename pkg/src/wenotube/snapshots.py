"""Plain-text snapshot and time-series files.

Snapshots are CSV of primitives (x, y, rho, u, v, p, M) under a small
key=value header; 17 significant digits reproduce every written double
bit-exactly on re-parse. Desk-scale grids do not justify a binary format.
"""

from __future__ import annotations

import io
import os

import numpy as np

from .diagnostics import InterfaceRecord
from .errors import ConfigError
from .euler import IdealGasEos, primitive_arrays_from_conserved
from .grid import Field2D

_FMT = "%.17g"
_HEADER_KEYS = ("time", "nx", "ny", "dx", "dy", "x0", "y0", "gamma")
_COLUMNS = "x,y,rho,u,v,p,M"


def write_snapshot(field: Field2D, eos: IdealGasEos, path) -> None:
    """Write the interior cells as primitive-variable CSV rows, x fastest."""
    rho, u, v, p, M = primitive_arrays_from_conserved(field.interior, eos)
    x = field.x_centers()
    y = field.y_centers()
    xx = np.broadcast_to(x[:, None], (field.nx, field.ny))
    yy = np.broadcast_to(y[None, :], (field.nx, field.ny))
    # y-major rows: iterate rows of constant y with x increasing
    table = np.column_stack([
        arr.T.reshape(-1) for arr in (xx, yy, rho, u, v, p, M)
    ])
    buf = io.StringIO()
    header = {
        "time": _FMT % field.time,
        "nx": str(field.nx),
        "ny": str(field.ny),
        "dx": _FMT % field.dx,
        "dy": _FMT % field.dy,
        "x0": _FMT % field.origin[0],
        "y0": _FMT % field.origin[1],
        "gamma": _FMT % eos.gamma,
    }
    for key in _HEADER_KEYS:
        buf.write(f"# {key}={header[key]}\n")
    buf.write(_COLUMNS + "\n")
    np.savetxt(buf, table, fmt=_FMT, delimiter=",")
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def read_snapshot(path) -> tuple[Field2D, IdealGasEos]:
    """Rebuild a field (and its EOS) from a snapshot file."""
    header = {}
    data_start = 0
    with open(path) as fh:
        lines = fh.readlines()
    for k, line in enumerate(lines):
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            header[key.strip()] = value.strip()
        else:
            if line.strip() != _COLUMNS:
                raise ConfigError(f"{path}: expected column line {_COLUMNS!r}, got {line.strip()!r}")
            data_start = k + 1
            break
    missing = [k for k in _HEADER_KEYS if k not in header]
    if missing:
        raise ConfigError(f"{path}: missing header keys {missing}")

    nx, ny = int(header["nx"]), int(header["ny"])
    rows = np.loadtxt(lines[data_start:], delimiter=",", ndmin=2)
    if rows.shape[0] != nx * ny or rows.shape[1] != 7:
        raise ConfigError(
            f"{path}: expected {nx * ny} rows of 7 columns, got {rows.shape}"
        )
    field = Field2D(
        nx, ny, float(header["dx"]), float(header["dy"]),
        origin=(float(header["x0"]), float(header["y0"])),
        time=float(header["time"]),
    )
    eos = IdealGasEos(float(header["gamma"]))
    rho = rows[:, 2].reshape(ny, nx).T
    u = rows[:, 3].reshape(ny, nx).T
    v = rows[:, 4].reshape(ny, nx).T
    p = rows[:, 5].reshape(ny, nx).T
    M = rows[:, 6].reshape(ny, nx).T
    interior = field.interior
    interior[..., 0] = rho
    interior[..., 1] = rho * u
    interior[..., 2] = rho * v
    interior[..., 3] = p / (eos.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    interior[..., 4] = rho * M
    return field, eos


def write_series(records, path) -> None:
    """Interface time series as CSV: t,y_bubble,y_spike,amplitude,displacement."""
    with open(path, "w") as fh:
        fh.write("t,y_bubble,y_spike,amplitude,displacement\n")
        for r in records:
            fh.write(",".join(_FMT % v for v in
                              (r.t, r.y_bubble, r.y_spike, r.amplitude, r.displacement)))
            fh.write("\n")


def read_series(path) -> list[InterfaceRecord]:
    with open(path) as fh:
        header = fh.readline().strip()
        if header != "t,y_bubble,y_spike,amplitude,displacement":
            raise ConfigError(f"{path}: unexpected series header {header!r}")
        records = []
        last_t = -np.inf
        for line in fh:
            t, yb, ys, amp, disp = (float(tok) for tok in line.strip().split(","))
            if t <= last_t:
                raise ConfigError(f"{path}: series times must increase strictly")
            last_t = t
            records.append(InterfaceRecord(t, yb, ys, amp, disp))
    return records


def snapshot_filename(t: float) -> str:
    return f"snapshot_t{t:.9e}.csv"
