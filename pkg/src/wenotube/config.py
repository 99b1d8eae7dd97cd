"""key=value run configuration mapped onto a ProblemSpec.

One option per line, '#' starts a comment. Unknown keys are rejected and
every error names the offending line. Defaults follow the tabulated
air/SF6 parameters where one exists.
"""

from __future__ import annotations

from dataclasses import replace

from .errors import ConfigError
from .problems import (
    DEFAULT_CFL,
    ProblemSpec,
    RmiParams,
    init_rmi,
    init_shu_osher,
    init_smooth_advection,
    init_sod,
)
from .weno import WenoParams

_BOOL = {"true": True, "1": True, "on": True, "yes": True,
         "false": False, "0": False, "off": False, "no": False}

# key -> (converter, description). Problem applicability is checked after parse.
_KEYS = {
    "problem": (str, "sod | shu-osher | rmi | advection"),
    "cells": (int, "1D cell count (sod, shu-osher, advection)"),
    "ppw": (int, "grid points per perturbation wavelength (rmi)"),
    "mach": (float, "incident shock Mach number (rmi)"),
    "t_end": (float, "end time (s for rmi, code units otherwise)"),
    "cfl": (float, "CFL number in (0, 1)"),
    "weno_epsilon": (float, "smoothness regularizer"),
    "acm": (lambda s: _BOOL[s.lower()], "artificial compression on/off"),
    "acm_strength": (float, "compression coefficient >= 0"),
    "alpha_mode": (str, "global | local Lax-Friedrichs splitting speed"),
    "dt_mode": (str, "min | sum directional dt combination"),
    "output_interval": (float, "snapshot cadence (same units as t_end)"),
    "output_dir": (str, "where run products go"),
    "threads": (int, "worker count; results are thread-count independent"),
    "amplitude": (float, "entropy-wave amplitude (shu-osher) / pulse amplitude (advection)"),
    "wavenumber": (float, "entropy-wave wavenumber (shu-osher)"),
    "speed": (float, "advection speed (advection)"),
    "a0": (float, "initial interface amplitude, cm (rmi)"),
    "lambda0": (float, "perturbation wavelength, cm (rmi)"),
    "delta": (float, "diffuse-layer thickness, cm (rmi)"),
    "rho_heavy": (float, "heavy-fluid density, g/cm^3 (rmi)"),
    "rho_light": (float, "light-fluid density, g/cm^3 (rmi)"),
    "p_interface": (float, "interface pressure, dyn/cm^2 (rmi)"),
    "y_shock": (float, "initial shock location, cm (rmi)"),
    "y_interface": (float, "initial interface location, cm (rmi)"),
}

_PER_PROBLEM = {
    "sod": {"cells"},
    "shu-osher": {"cells", "amplitude", "wavenumber"},
    "advection": {"cells", "amplitude", "speed"},
    "rmi": {"ppw", "mach", "a0", "lambda0", "delta", "rho_heavy", "rho_light",
            "p_interface", "y_shock", "y_interface"},
}
_COMMON = {"problem", "t_end", "cfl", "weno_epsilon", "acm", "acm_strength",
           "alpha_mode", "dt_mode", "output_interval", "output_dir", "threads"}


def parse_config(text: str) -> ProblemSpec:
    """Validate a config document and build the ProblemSpec it describes."""
    opts: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw.strip()!r}")
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in opts:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        conv = _KEYS[key][0]
        try:
            opts[key] = conv(value)
        except (ValueError, KeyError):
            raise ConfigError(
                f"line {lineno}: cannot parse value {value!r} for key {key!r}"
            ) from None

    if "problem" not in opts:
        raise ConfigError("config must set problem=")
    problem = opts.pop("problem")
    if problem not in _PER_PROBLEM:
        raise ConfigError(f"unknown problem {problem!r}")
    allowed = _COMMON | _PER_PROBLEM[problem]
    for key in opts:
        if key not in allowed:
            raise ConfigError(f"key {key!r} does not apply to problem {problem!r}")

    weno_kwargs = {}
    if "weno_epsilon" in opts:
        weno_kwargs["epsilon"] = opts.pop("weno_epsilon")
    weno_kwargs["acm_enabled"] = opts.pop("acm", problem != "advection")
    if "acm_strength" in opts:
        weno_kwargs["acm_strength"] = opts.pop("acm_strength")
    try:
        weno = WenoParams(**weno_kwargs)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None

    common = {
        "cfl": opts.pop("cfl", DEFAULT_CFL),
        "weno": weno,
    }
    if "t_end" in opts:
        common["t_end"] = opts.pop("t_end")
    output_dir = opts.pop("output_dir", None)
    output_interval = opts.pop("output_interval", None)
    threads = opts.pop("threads", 1)
    dt_mode = opts.pop("dt_mode", "min")
    alpha_mode = opts.pop("alpha_mode", "global")

    try:
        if problem == "sod":
            spec, _ = init_sod(opts.pop("cells", 100), **common)
        elif problem == "shu-osher":
            for k in ("amplitude", "wavenumber"):
                if k in opts:
                    common[k] = opts.pop(k)
            spec, _ = init_shu_osher(opts.pop("cells", 200), **common)
        elif problem == "advection":
            for k in ("amplitude", "speed"):
                if k in opts:
                    common[k] = opts.pop(k)
            if "t_end" in common:
                raise ConfigError("advection runs exactly one period; omit t_end")
            spec, _ = init_smooth_advection(opts.pop("cells", 64), **common)
        else:
            mach = opts.pop("mach", 1.11)
            fields = {k: opts.pop(k) for k in list(opts) if k in _PER_PROBLEM["rmi"] - {"ppw"}}
            params = RmiParams.for_mach(mach, **fields)
            ppw = opts.pop("ppw", 64)
            if output_interval is not None:
                common["output_interval"] = output_interval
                output_interval = None
            spec, _ = init_rmi(params, ppw, **common)
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc)) from None

    updates = {"dt_mode": dt_mode, "alpha_mode": alpha_mode, "threads": threads}
    if output_interval is not None:
        updates["output_interval"] = output_interval
    spec = replace(spec, **updates)
    if output_dir is not None:
        spec.metadata["output_dir"] = output_dir
    return spec
