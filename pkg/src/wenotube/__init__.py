"""Characteristic-wise WENO5 solver for 2D Euler flow with a heavy-fluid
mass fraction, plus the shock-tube benchmarks and interface-growth
diagnostics used to validate it."""

from .euler import (
    ConservedState,
    Direction,
    IdealGasEos,
    PrimitiveState,
    conserved_from_primitives,
    max_wave_speed,
    physical_flux,
    primitives_from_conserved,
    sound_speed,
)
from .grid import BcType, BoundarySpec, Field2D, fill_ghost
from .weno import WenoParams, artificial_compression, smoothness_indicators, weno5_reconstruct
from .charflux import EigenSystem, average_state, eigensystem, line_flux
from .integrator import RunResult, compute_dt, run, strang_step, sweep
from .problems import (
    ProblemSpec,
    RmiParams,
    init_rmi,
    init_shu_osher,
    init_smooth_advection,
    init_sod,
    post_shock_state,
)
from .riemann import RiemannSolution, exact_riemann, solve_riemann
from .diagnostics import (
    GrowthReport,
    InterfaceRecord,
    amplitude_displacement,
    atwood,
    fit_interface_velocity,
    locate_interface,
    post_shock_amplitude,
    richtmyer_velocity,
)
from .errors import (
    ConfigError,
    DiagnosticError,
    InvalidStateError,
    SolverError,
    WaveSpeedBoundError,
)

__version__ = "0.1.0"
