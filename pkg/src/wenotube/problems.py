"""Initial conditions: shock-tube benchmarks and the air/SF6 interface run.

All builders hand back a (ProblemSpec, Field2D) pair; the spec alone is
enough to rebuild the field, which is what the driver and the CLI do.
Units are CGS; the interface pressure of 0.956 bar is stored as 9.56e5
dyn/cm^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as _dc_field
from typing import Optional

import numpy as np
from scipy.special import erf

from .errors import ConfigError
from .euler import (
    Direction,
    IdealGasEos,
    PrimitiveState,
    conserved_from_primitives,
    sound_speed,
)
from .grid import BcType, BoundarySpec, Field2D
from .weno import WenoParams

# Air/SF6 shock-tube parameters (Collins-Jacobs configuration).
RMI_GAMMA = 1.276
RMI_RHO_HEAVY = 5.494e-3  # SF6, g/cm^3
RMI_RHO_LIGHT = 1.351e-3  # air, g/cm^3
RMI_PRESSURE = 9.56e5  # dyn/cm^2 (0.956 bar)
RMI_LAMBDA0 = 5.933  # cm
RMI_DELTA = 0.5  # cm, diffuse-layer thickness
RMI_LX = 8.9  # cm
RMI_LY = 75.0  # cm
RMI_Y_SHOCK = 1.0  # cm
RMI_Y_INTERFACE = 3.0  # cm
RMI_A0 = {1.11: 0.229, 1.21: 0.183}  # cm, initial amplitude per Mach number
RMI_MOLWEIGHTS = {"sf6": 146.05, "air": 34.76}  # g/mol, carried as metadata only
DEFAULT_CFL = 0.45


@dataclass(frozen=True)
class RmiParams:
    """Interface and incident-shock description for the air/SF6 run."""

    mach: float
    a0: float
    lambda0: float = RMI_LAMBDA0
    delta: float = RMI_DELTA
    rho_heavy: float = RMI_RHO_HEAVY
    rho_light: float = RMI_RHO_LIGHT
    p_interface: float = RMI_PRESSURE
    y_shock: float = RMI_Y_SHOCK
    y_interface: float = RMI_Y_INTERFACE

    def __post_init__(self):
        if self.mach < 1.0:
            raise ConfigError(f"incident Mach number must be >= 1, got {self.mach}")
        if not self.a0 < self.lambda0 / 4.0:
            raise ConfigError(f"a0={self.a0} must stay below lambda0/4={self.lambda0 / 4.0}")
        if not self.delta > 0.0:
            raise ConfigError("diffuse thickness must be positive")
        if not (self.rho_heavy > self.rho_light > 0.0):
            raise ConfigError("need rho_heavy > rho_light > 0")

    @classmethod
    def for_mach(cls, mach: float, **overrides) -> "RmiParams":
        a0 = overrides.pop("a0", RMI_A0.get(mach))
        if a0 is None:
            raise ConfigError(
                f"no tabulated amplitude for Mach {mach}; pass a0 explicitly"
            )
        return cls(mach=mach, a0=a0, **overrides)


@dataclass
class ProblemSpec:
    """Everything one run needs: grid, physics, numerics, and output plan."""

    name: str
    nx: int
    ny: int
    dx: float
    dy: float
    origin: tuple
    eos: IdealGasEos
    bc: BoundarySpec
    t_end: float
    cfl: float = DEFAULT_CFL
    weno: WenoParams = _dc_field(default_factory=WenoParams)
    dt_mode: str = "min"
    alpha_mode: str = "global"
    output_interval: Optional[float] = None
    output_times: tuple = ()
    track_interface: bool = False
    threads: int = 1
    rmi: Optional[RmiParams] = None
    extra: dict = _dc_field(default_factory=dict)
    metadata: dict = _dc_field(default_factory=dict)

    def __post_init__(self):
        if self.nx < 7 or (self.ny != 1 and self.ny < 7):
            raise ConfigError(
                f"need >= 7 cells per swept dimension (ny=1 allowed for 1D), got {self.nx}x{self.ny}"
            )
        if self.t_end < 0.0:
            raise ConfigError(f"t_end must be >= 0, got {self.t_end}")
        if not 0.0 < self.cfl < 1.0:
            raise ConfigError(f"cfl must lie in (0, 1), got {self.cfl}")
        if self.dt_mode not in ("min", "sum"):
            raise ConfigError(f"dt_mode must be 'min' or 'sum', got {self.dt_mode!r}")
        if self.alpha_mode not in ("global", "local"):
            raise ConfigError(f"alpha_mode must be 'global' or 'local', got {self.alpha_mode!r}")
        if self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")


def post_shock_state(W_pre: PrimitiveState, mach: float, eos: IdealGasEos) -> PrimitiveState:
    """State behind a normal shock of the given Mach running into W_pre.

    The shock advances along +u; W_pre.u is the pre-shock normal velocity.
    Density and pressure jumps are the Rankine-Hugoniot ratios, the induced
    velocity follows from mass conservation in the shock frame.
    """
    if mach < 1.0:
        raise ValueError(f"shock Mach number must be >= 1, got {mach}")
    g = eos.gamma
    m2 = mach * mach
    a1 = sound_speed(W_pre, eos)
    rho2 = W_pre.rho * (g + 1.0) * m2 / ((g - 1.0) * m2 + 2.0)
    p2 = W_pre.p * (2.0 * g * m2 - (g - 1.0)) / (g + 1.0)
    u2 = W_pre.u + mach * a1 * (1.0 - W_pre.rho / rho2)
    return PrimitiveState(rho2, u2, W_pre.v, p2, W_pre.M)


def incident_shock_speed(W_pre: PrimitiveState, mach: float, eos: IdealGasEos) -> float:
    """Lab-frame speed of a shock of the given Mach moving into W_pre along +u."""
    return W_pre.u + mach * sound_speed(W_pre, eos)


def _primitives_to_field(field: Field2D, rho, u, v, p, M, eos: IdealGasEos):
    """Fill the interior from broadcastable primitive arrays."""
    nx, ny = field.nx, field.ny
    rho = np.broadcast_to(rho, (nx, ny)).astype(np.float64)
    u = np.broadcast_to(u, (nx, ny))
    v = np.broadcast_to(v, (nx, ny))
    p = np.broadcast_to(p, (nx, ny))
    M = np.broadcast_to(M, (nx, ny))
    interior = field.interior
    interior[..., 0] = rho
    interior[..., 1] = rho * u
    interior[..., 2] = rho * v
    interior[..., 3] = p / (eos.gamma - 1.0) + 0.5 * rho * (u * u + v * v)
    interior[..., 4] = rho * M


# -- Sod shock tube -----------------------------------------------------------

SOD_LEFT = PrimitiveState(1.0, 0.0, 0.0, 1.0, 0.0)
SOD_RIGHT = PrimitiveState(0.125, 0.0, 0.0, 0.1, 1.0)  # M tags the right fluid


def init_sod(n_cells: int, t_end: float = 2.0, cfl: float = DEFAULT_CFL,
             weno: Optional[WenoParams] = None) -> tuple[ProblemSpec, Field2D]:
    """Riemann data (1,0,1) | (0.125,0,0.1) split at x=0 on [-5,5], gamma=1.4."""
    weno = weno if weno is not None else WenoParams(acm_enabled=True)
    dx = 10.0 / n_cells
    spec = ProblemSpec(
        name="sod",
        nx=n_cells, ny=1, dx=dx, dy=dx, origin=(-5.0, 0.0),
        eos=IdealGasEos(1.4),
        bc=BoundarySpec(),  # zero-gradient everywhere
        t_end=t_end, cfl=cfl, weno=weno,
    )
    return spec, build_initial_field(spec)


def _build_sod(spec: ProblemSpec) -> Field2D:
    field = Field2D(spec.nx, spec.ny, spec.dx, spec.dy, spec.origin)
    x = field.x_centers()[:, None]
    left = x <= 0.0
    rho = np.where(left, SOD_LEFT.rho, SOD_RIGHT.rho)
    p = np.where(left, SOD_LEFT.p, SOD_RIGHT.p)
    M = np.where(left, SOD_LEFT.M, SOD_RIGHT.M)
    _primitives_to_field(field, rho, 0.0, 0.0, p, M, spec.eos)
    return field


# -- Shu-Osher shock / entropy-wave interaction -------------------------------

SHU_OSHER_LEFT = PrimitiveState(3.857143, 2.629369, 0.0, 10.33333, 0.0)


def init_shu_osher(n_cells: int, amplitude: float = 0.2, wavenumber: float = 5.0,
                   t_end: float = 1.8, cfl: float = DEFAULT_CFL,
                   weno: Optional[WenoParams] = None) -> tuple[ProblemSpec, Field2D]:
    """Mach-3 shock at x=-4 running into rho = 1 + amplitude sin(wavenumber x)."""
    weno = weno if weno is not None else WenoParams(acm_enabled=True)
    dx = 10.0 / n_cells
    spec = ProblemSpec(
        name="shu-osher",
        nx=n_cells, ny=1, dx=dx, dy=dx, origin=(-5.0, 0.0),
        eos=IdealGasEos(1.4),
        bc=BoundarySpec(),
        t_end=t_end, cfl=cfl, weno=weno,
        extra={"amplitude": amplitude, "wavenumber": wavenumber},
    )
    return spec, build_initial_field(spec)


def _build_shu_osher(spec: ProblemSpec) -> Field2D:
    amp = spec.extra["amplitude"]
    k = spec.extra["wavenumber"]
    field = Field2D(spec.nx, spec.ny, spec.dx, spec.dy, spec.origin)
    x = field.x_centers()[:, None]
    left = x <= -4.0
    rho = np.where(left, SHU_OSHER_LEFT.rho, 1.0 + amp * np.sin(k * x))
    u = np.where(left, SHU_OSHER_LEFT.u, 0.0)
    p = np.where(left, SHU_OSHER_LEFT.p, 1.0)
    _primitives_to_field(field, rho, u, 0.0, p, 0.0, spec.eos)
    return field


# -- smooth advection (order-verification workhorse) --------------------------

def init_smooth_advection(n_cells: int, speed: float = 1.0, amplitude: float = 0.2,
                          periods: float = 1.0, cfl: float = DEFAULT_CFL,
                          weno: Optional[WenoParams] = None) -> tuple[ProblemSpec, Field2D]:
    """Periodic density/mass-fraction wave carried at constant (u, p).

    The exact solution is the initial profile translated by speed*t, which
    makes one full period land back on the initial data.
    """
    weno = weno if weno is not None else WenoParams(acm_enabled=False)
    dx = 1.0 / n_cells
    spec = ProblemSpec(
        name="advection",
        nx=n_cells, ny=1, dx=dx, dy=dx, origin=(0.0, 0.0),
        eos=IdealGasEos(1.4),
        bc=BoundarySpec(BcType.PERIODIC, BcType.PERIODIC,
                        BcType.ZERO_GRADIENT_OUTFLOW, BcType.ZERO_GRADIENT_OUTFLOW),
        t_end=periods * 1.0 / abs(speed), cfl=cfl, weno=weno,
        extra={"speed": speed, "amplitude": amplitude},
    )
    return spec, build_initial_field(spec)


def _build_advection(spec: ProblemSpec) -> Field2D:
    amp = spec.extra["amplitude"]
    u0 = spec.extra["speed"]
    field = Field2D(spec.nx, spec.ny, spec.dx, spec.dy, spec.origin)
    x = field.x_centers()[:, None]
    s = np.sin(2.0 * np.pi * x)
    _primitives_to_field(field, 1.0 + amp * s, u0, 0.0, 1.0, 0.5 + 0.5 * s, spec.eos)
    return field


# -- air/SF6 shocked interface -------------------------------------------------

def init_rmi(params: RmiParams, points_per_wavelength: int, t_end: float = 1.0e-3,
             cfl: float = DEFAULT_CFL, weno: Optional[WenoParams] = None,
             output_interval: Optional[float] = 5.0e-5) -> tuple[ProblemSpec, Field2D]:
    """Shocked diffuse interface in the 8.9 x 75 cm test section.

    The grid is uniform with dx = dy = lambda0/ppw; reflecting walls on the
    sides and the far end (the end wall produces the reshock), outflow at
    the near end behind the incident shock.
    """
    if points_per_wavelength < 8:
        raise ConfigError(f"points per wavelength too coarse: {points_per_wavelength}")
    clear = params.a0 + 2.5 * params.delta
    if params.y_shock > params.y_interface - clear:
        raise ConfigError(
            f"incident shock at y={params.y_shock} sits inside the diffuse layer "
            f"(needs y < {params.y_interface - clear:.3f})"
        )
    dx = params.lambda0 / points_per_wavelength
    nx = round(RMI_LX / dx)
    ny = round(RMI_LY / dx)
    weno = weno if weno is not None else WenoParams(acm_enabled=True)
    spec = ProblemSpec(
        name="rmi",
        nx=nx, ny=ny, dx=dx, dy=dx, origin=(0.0, 0.0),
        eos=IdealGasEos(RMI_GAMMA),
        bc=BoundarySpec(
            x_lo=BcType.REFLECTING_WALL, x_hi=BcType.REFLECTING_WALL,
            y_lo=BcType.ZERO_GRADIENT_OUTFLOW, y_hi=BcType.REFLECTING_WALL,
        ),
        t_end=t_end, cfl=cfl, weno=weno,
        output_interval=output_interval,
        track_interface=True,
        rmi=params,
        metadata={"molecular_weight": dict(RMI_MOLWEIGHTS), "ppw": points_per_wavelength},
    )
    return spec, build_initial_field(spec)


def _build_rmi(spec: ProblemSpec) -> Field2D:
    prm = spec.rmi
    field = Field2D(spec.nx, spec.ny, spec.dx, spec.dy, spec.origin)
    x = field.x_centers()[:, None]
    y = field.y_centers()[None, :]

    rho_bar = 0.5 * (prm.rho_light + prm.rho_heavy)
    atwood = (prm.rho_heavy - prm.rho_light) / (prm.rho_heavy + prm.rho_light)
    y_pert = prm.y_interface + prm.a0 * np.cos(2.0 * np.pi * x / prm.lambda0)
    profile = erf(math.sqrt(math.pi) * (y - y_pert) / prm.delta)
    rho = rho_bar * (1.0 + atwood * profile)
    M = 0.5 * (1.0 + profile)
    p = np.full_like(rho, prm.p_interface)
    v = np.zeros_like(rho)

    air = PrimitiveState(prm.rho_light, 0.0, 0.0, prm.p_interface, 0.0)
    shocked = post_shock_state(air, prm.mach, spec.eos)
    behind = y < prm.y_shock
    rho = np.where(behind, shocked.rho, rho)
    p = np.where(behind, shocked.p, p)
    v = np.where(behind, shocked.u, v)  # shock runs along +y

    _primitives_to_field(field, rho, 0.0, v, p, M, spec.eos)
    return field


_BUILDERS = {
    "sod": _build_sod,
    "shu-osher": _build_shu_osher,
    "advection": _build_advection,
    "rmi": _build_rmi,
}


def build_initial_field(spec: ProblemSpec) -> Field2D:
    """Construct the t=0 field for a spec produced by one of the builders."""
    try:
        builder = _BUILDERS[spec.name]
    except KeyError:
        raise ConfigError(f"unknown problem {spec.name!r}") from None
    return builder(spec)
