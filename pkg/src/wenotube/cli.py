"""Command-line front end: run, converge, oracle."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from .config import parse_config
from .convergence import run_convergence_suite
from .errors import ConfigError, InvalidStateError, SolverError
from .euler import IdealGasEos
from .integrator import run
from .problems import SOD_LEFT, SOD_RIGHT
from .riemann import solve_riemann
from .snapshots import snapshot_filename, write_series, write_snapshot

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3

_ENV_OUTPUT_DIR = "WENOTUBE_OUTPUT_DIR"


def _resolve_output_dir(cli_value, spec_metadata, default_name: str) -> Path:
    # precedence: explicit flag, environment override, config key, default
    for candidate in (cli_value, os.environ.get(_ENV_OUTPUT_DIR),
                      spec_metadata.get("output_dir")):
        if candidate:
            return Path(candidate)
    return Path(default_name)


def _cmd_run(args) -> int:
    text = Path(args.config).read_text()
    spec = parse_config(text)
    outdir = _resolve_output_dir(args.output_dir, spec.metadata, f"out-{spec.name}")
    outdir.mkdir(parents=True, exist_ok=True)

    def on_snapshot(t, field):
        path = outdir / snapshot_filename(t)
        write_snapshot(field, spec.eos, path)
        if not args.quiet:
            print(f"snapshot t={t:.9e} -> {path}")

    result = run(spec, on_snapshot=on_snapshot)
    if result.series:
        write_series(result.series, outdir / "series.csv")
    if not args.quiet:
        print(
            f"{spec.name}: {result.steps} steps to t={result.field.time:g} "
            f"in {result.wall_time:.2f}s ({spec.nx}x{spec.ny} cells)"
        )
    return EXIT_OK


def _cmd_converge(args) -> int:
    text = Path(args.config).read_text()
    resolutions = [int(tok) for tok in args.resolutions.split(",") if tok.strip()]
    spec = parse_config(text)
    outdir = _resolve_output_dir(args.output_dir, spec.metadata, f"converge-{spec.name}")
    outdir.mkdir(parents=True, exist_ok=True)
    report = run_convergence_suite(text, resolutions, output_dir=outdir)
    print(report.text(), end="")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    sol = solve_riemann(SOD_LEFT, SOD_RIGHT, IdealGasEos(1.4))
    n = args.cells
    t = args.time
    x = -5.0 + (np.arange(n) + 0.5) * (10.0 / n)
    lines = ["x,rho,u,p,M"]
    for xi in x:
        W = sol.sample(xi / t) if t > 0.0 else (SOD_LEFT if xi <= 0 else SOD_RIGHT)
        lines.append(",".join("%.17g" % v for v in (xi, W.rho, W.u, W.p, W.M)))
    payload = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(payload)
        print(f"wrote {n} samples at t={t:g} -> {args.output}")
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wenotube",
        description="WENO5 shock-capturing solver for 2D Euler with mass fraction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="integrate one configuration to t_end")
    p_run.add_argument("config", help="key=value config file")
    p_run.add_argument("--output-dir", help="where snapshots and series go")
    p_run.add_argument("--quiet", action="store_true")
    p_run.set_defaults(func=_cmd_run)

    p_conv = sub.add_parser("converge", help="re-run one config across resolutions")
    p_conv.add_argument("config")
    p_conv.add_argument("--ppw", "--cells", "--resolutions", dest="resolutions",
                        required=True, help="comma-separated resolution list")
    p_conv.add_argument("--output-dir")
    p_conv.set_defaults(func=_cmd_converge)

    p_orc = sub.add_parser("oracle", help="emit the exact shock-tube solution")
    p_orc.add_argument("problem", choices=["sod"])
    p_orc.add_argument("--cells", type=int, default=100)
    p_orc.add_argument("--time", type=float, default=2.0)
    p_orc.add_argument("--output", "-o")
    p_orc.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SolverError, InvalidStateError) as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
