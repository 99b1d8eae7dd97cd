"""Interface tracking diagnostics: tips, amplitude, displacement, growth rate.

The interface is the M = 1/2 contour of the heavy-fluid mass fraction,
located per column by linear interpolation between cell centers. M is
shock-invariant, so tip detection survives the incident shock and reshock
where a density threshold would not.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DiagnosticError
from .euler import IRHO, IRHOM
from .grid import Field2D


@dataclass(frozen=True)
class InterfaceRecord:
    """One time sample of the interface geometry (all lengths in cm)."""

    t: float
    y_bubble: float
    y_spike: float
    amplitude: float
    displacement: float


@dataclass(frozen=True)
class GrowthReport:
    """Fitted interface velocity and impulsive-model growth rate."""

    delta_u: float  # cm/s
    v_rm: float  # cm/s
    a0_plus: float  # cm
    atwood_plus: float
    window: tuple


def interface_crossings(field: Field2D) -> np.ndarray:
    """y of the first upward M = 1/2 crossing in every interior column."""
    interior = field.interior
    M = interior[..., IRHOM] / interior[..., IRHO]
    y = field.y_centers()
    below = M < 0.5
    crossings = np.empty(field.nx)
    for i in range(field.nx):
        col = below[i]
        if col.all() or not col[0]:
            raise DiagnosticError(
                f"column {i} has no upward mass-fraction crossing of 1/2"
            )
        j = int(np.argmin(col))  # first index with M >= 0.5
        m0, m1 = M[i, j - 1], M[i, j]
        frac = (0.5 - m0) / (m1 - m0)
        crossings[i] = y[j - 1] + frac * (y[j] - y[j - 1])
    return crossings


def locate_interface(field: Field2D) -> tuple[float, float]:
    """(y_bubble, y_spike): extreme M = 1/2 crossings over the columns.

    The light fluid sits below the interface and penetrates upward, so the
    bubble tip is the highest crossing and the spike tip the lowest.
    """
    crossings = interface_crossings(field)
    return float(crossings.max()), float(crossings.min())


def amplitude_displacement(tips: tuple, tips0: tuple) -> tuple[float, float]:
    """Amplitude is half the tip separation; displacement the mean tip drift."""
    y_bubble, y_spike = tips
    y_bubble0, y_spike0 = tips0
    amplitude = 0.5 * abs(y_spike - y_bubble)
    displacement = 0.5 * ((y_bubble - y_bubble0) + (y_spike - y_spike0))
    return amplitude, displacement


def atwood(rho_light: float, rho_heavy: float) -> float:
    """(rho_heavy - rho_light) / (rho_heavy + rho_light)."""
    if not (rho_light > 0.0 and rho_heavy > 0.0):
        raise ValueError("densities must be positive")
    return (rho_heavy - rho_light) / (rho_heavy + rho_light)


def _window_records(series, window):
    t0, t1 = window
    picked = [r for r in series if t0 <= r.t <= t1]
    if len(picked) < 3:
        raise ValueError(
            f"need >= 3 records in window [{t0}, {t1}], found {len(picked)}"
        )
    t = np.array([r.t for r in picked])
    if not np.all(np.diff(t) > 0.0):
        raise ValueError("record times must be strictly increasing")
    return picked, t


def fit_interface_velocity(series, window) -> float:
    """Least-squares slope of displacement vs time over the window (cm/s)."""
    picked, t = _window_records(series, window)
    d = np.array([r.displacement for r in picked])
    return float(np.polyfit(t, d, 1)[0])


def fit_growth_rate(series, window) -> float:
    """Least-squares slope of amplitude vs time over the window (cm/s)."""
    picked, t = _window_records(series, window)
    a = np.array([r.amplitude for r in picked])
    return float(np.polyfit(t, a, 1)[0])


def richtmyer_velocity(k: float, a0_plus: float, atwood_plus: float, delta_u: float) -> float:
    """Impulsive-model growth rate: the product k * a0+ * A+ * du."""
    if not k > 0.0:
        raise ValueError(f"wavenumber must be positive, got {k}")
    return k * a0_plus * atwood_plus * delta_u


def post_shock_amplitude(a0: float, delta_u: float, shock_speed: float) -> float:
    """Shock-compressed amplitude estimate a0 (1 - du/W_s)."""
    if not shock_speed > delta_u >= 0.0:
        raise ValueError(
            f"need shock_speed > delta_u >= 0, got W_s={shock_speed}, du={delta_u}"
        )
    return a0 * (1.0 - delta_u / shock_speed)


def amplitude_at(series, t: float) -> float:
    """Measured amplitude at the first record with r.t >= t.

    This is the measurement-mode alternative to the compressed-amplitude
    estimate: sample the simulated amplitude at the first record after
    shock passage.
    """
    for r in series:
        if r.t >= t:
            return r.amplitude
    raise ValueError(f"series ends at t={series[-1].t!r}, before t={t!r}")


def post_shock_atwood(field: Field2D, delta: float) -> float:
    """Atwood number from column-averaged densities delta outside the tip band.

    Samples the rows nearest y_spike - delta (light side) and
    y_bubble + delta (heavy side); meaningful shortly after shock passage,
    once the transmitted shock has cleared the sampling band.
    """
    y_bubble, y_spike = locate_interface(field)
    y = field.y_centers()
    j_lo = int(np.argmin(np.abs(y - (y_spike - delta))))
    j_hi = int(np.argmin(np.abs(y - (y_bubble + delta))))
    rho = field.interior[..., IRHO]
    rho_light = float(rho[:, j_lo].mean())
    rho_heavy = float(rho[:, j_hi].mean())
    return atwood(rho_light, rho_heavy)


def growth_report(series, window, k: float, a0_plus: float, atwood_plus: float) -> GrowthReport:
    """Bundle the fitted interface velocity with the impulsive-model rate."""
    delta_u = fit_interface_velocity(series, window)
    return GrowthReport(
        delta_u=delta_u,
        v_rm=richtmyer_velocity(k, a0_plus, atwood_plus, delta_u),
        a0_plus=a0_plus,
        atwood_plus=atwood_plus,
        window=tuple(window),
    )
