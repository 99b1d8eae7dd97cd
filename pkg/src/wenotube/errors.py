"""Exception types shared across the solver."""


class ConfigError(ValueError):
    """Bad run configuration: unknown key, unparseable value, or invariant violation."""


class InvalidStateError(ValueError):
    """A cell left the physical region (rho <= 0, p <= 0, or non-finite).

    Carries the offending values and, when known, the cell location so a
    failed run can be traced back to a grid point.
    """

    def __init__(self, message, rho=None, pressure=None, where=None):
        self.rho = rho
        self.pressure = pressure
        self.where = where
        detail = message
        if where is not None:
            detail += f" at cell {where}"
        if rho is not None:
            detail += f" (rho={rho!r}"
            detail += f", p={pressure!r})" if pressure is not None else ")"
        super().__init__(detail)


class WaveSpeedBoundError(ValueError):
    """Lax-Friedrichs alpha was below the local wave speed on a line."""


class DiagnosticError(ValueError):
    """Interface extraction failed, e.g. a column has no mass-fraction crossing."""


class SolverError(RuntimeError):
    """Time integration aborted; carries step index and time of failure."""

    def __init__(self, message, step=None, time=None):
        self.step = step
        self.time = time
        detail = message
        if step is not None:
            detail += f" (step {step}, t={time!r})"
        super().__init__(detail)
