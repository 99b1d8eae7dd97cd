"""Multi-resolution verification runs driven from one base configuration."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field as _dc_field
from pathlib import Path
from typing import Optional

import numpy as np

from .config import parse_config
from .errors import ConfigError
from .euler import IRHO
from .integrator import run
from .riemann import solve_riemann
from .problems import SOD_LEFT, SOD_RIGHT
from .snapshots import snapshot_filename, write_series, write_snapshot

_RES_KEY = {"rmi": "ppw", "sod": "cells", "shu-osher": "cells", "advection": "cells"}


def _with_resolution(config_text: str, key: str, value: int) -> str:
    """Replace (or append) the resolution key in a config document."""
    lines = [
        line for line in config_text.splitlines()
        if not re.match(rf"\s*{key}\s*=", line)
    ]
    lines.append(f"{key}={value}")
    return "\n".join(lines)


def _density_profile(field, eos):
    return field.interior[:, 0, IRHO].copy()


def _restrict_mean(fine: np.ndarray, n_coarse: int) -> np.ndarray:
    """Block-average a fine 1D profile onto a coarser grid."""
    ratio, rem = divmod(fine.size, n_coarse)
    if rem:
        raise ConfigError(
            f"finest resolution {fine.size} must be a multiple of {n_coarse}"
        )
    return fine.reshape(n_coarse, ratio).mean(axis=1)


@dataclass
class ResolutionRow:
    resolution: int
    steps: int
    wall_time: float
    l1_vs_oracle: Optional[float] = None
    l1_vs_finest: Optional[float] = None
    amplitudes: dict = _dc_field(default_factory=dict)  # time -> amplitude (rmi)


@dataclass
class ConvergenceReport:
    problem: str
    rows: list

    def text(self) -> str:
        lines = [f"problem={self.problem}"]
        for row in self.rows:
            parts = [f"resolution={row.resolution}", f"steps={row.steps}",
                     f"wall_time={row.wall_time:.2f}s"]
            if row.l1_vs_oracle is not None:
                parts.append(f"L1_vs_exact={row.l1_vs_oracle:.6e}")
            if row.l1_vs_finest is not None:
                parts.append(f"L1_vs_finest={row.l1_vs_finest:.6e}")
            for t, a in sorted(row.amplitudes.items()):
                parts.append(f"amplitude@{t:g}={a:.6e}")
            lines.append("  " + " ".join(parts))
        return "\n".join(lines) + "\n"


def run_convergence_suite(config_text: str, resolutions, output_dir=None) -> ConvergenceReport:
    """Run the base configuration at each resolution and cross-compare.

    1D problems report L1 density differences against the finest run
    (block-mean restriction) and, for Sod, against the exact solution; the
    interface problem reports amplitude at every scheduled output time.
    Outputs of completed resolutions are retained even if a later one fails.
    """
    resolutions = [int(r) for r in resolutions]
    if len(resolutions) < 2:
        raise ConfigError(f"need at least 2 resolutions, got {resolutions}")
    if len(set(resolutions)) != len(resolutions):
        raise ConfigError(f"duplicate resolutions in {resolutions}")

    base = parse_config(config_text)
    key = _RES_KEY[base.name]
    outdir = Path(output_dir) if output_dir is not None else None
    rows = []
    profiles = {}
    finest = max(resolutions)

    for res in sorted(resolutions):
        spec = parse_config(_with_resolution(config_text, key, res))
        res_dir = None
        if outdir is not None:
            res_dir = outdir / f"{key}{res}"
            res_dir.mkdir(parents=True, exist_ok=True)

        def on_snapshot(t, field, res_dir=res_dir, spec=spec):
            if res_dir is not None:
                write_snapshot(field, spec.eos, res_dir / snapshot_filename(t))

        result = run(spec, on_snapshot=on_snapshot)
        if res_dir is not None and result.series:
            write_series(result.series, res_dir / "series.csv")

        row = ResolutionRow(resolution=res, steps=result.steps, wall_time=result.wall_time)
        if base.name in ("sod", "shu-osher", "advection"):
            profiles[res] = (result.field, _density_profile(result.field, spec.eos))
        if base.name == "sod":
            row.l1_vs_oracle = sod_l1_error(result.field, spec)
        if base.name == "rmi":
            for t in result.snapshot_times:
                if t > 0.0:
                    rec = min(result.series, key=lambda r: abs(r.t - t))
                    row.amplitudes[t] = rec.amplitude
        rows.append(row)

    if profiles and finest in profiles:
        fine_profile = profiles[finest][1]
        for row in rows:
            if row.resolution == finest:
                continue
            coarse = profiles[row.resolution][1]
            restricted = _restrict_mean(fine_profile, coarse.size)
            row.l1_vs_finest = float(np.mean(np.abs(coarse - restricted)))

    report = ConvergenceReport(problem=base.name, rows=rows)
    if outdir is not None:
        (outdir / "report.txt").write_text(report.text())
    return report


def sod_l1_error(field, spec) -> float:
    """Mean absolute density error of a Sod run against the exact solution."""
    t = field.time
    if t <= 0.0:
        return 0.0
    sol = solve_riemann(SOD_LEFT, SOD_RIGHT, spec.eos)
    x = field.x_centers()
    exact = np.array([sol.sample(xi).rho for xi in x / t])
    return float(np.mean(np.abs(field.interior[:, 0, IRHO] - exact)))
