"""Config parsing, snapshot round trips, series files, convergence suite."""

import numpy as np
import pytest

import wenotube as wt
from wenotube.config import parse_config
from wenotube.diagnostics import InterfaceRecord
from wenotube.errors import ConfigError
from wenotube.integrator import run
from wenotube.problems import init_sod
from wenotube.snapshots import read_series, read_snapshot, write_series, write_snapshot


class TestParseConfig:
    def test_sod_minimal(self):
        spec = parse_config("problem=sod\ncells=100\n")
        assert spec.name == "sod"
        assert spec.nx == 100
        assert spec.cfl == 0.45
        assert spec.t_end == 2.0

    def test_rmi_defaults_for_mach(self):
        spec = parse_config("problem=rmi\nmach=1.21\nppw=64\nt_end=1e-3\n")
        assert spec.rmi.a0 == 0.183
        assert spec.rmi.lambda0 == 5.933
        assert spec.eos.gamma == 1.276
        assert spec.cfl == 0.45
        assert spec.nx == 96

    def test_comments_and_blanks(self):
        spec = parse_config("# a comment\n\nproblem=sod # trailing comment\ncells=50\n")
        assert spec.nx == 50

    def test_cfl_out_of_range(self):
        with pytest.raises(ConfigError, match="cfl"):
            parse_config("problem=sod\ncfl=1.5\n")

    def test_unknown_key_names_line(self):
        with pytest.raises(ConfigError, match="line 2"):
            parse_config("problem=sod\nwidget=3\n")

    def test_bad_value_names_key(self):
        with pytest.raises(ConfigError, match="cells"):
            parse_config("problem=sod\ncells=ten\n")

    def test_duplicate_key_rejected(self):
        with pytest.raises(ConfigError, match="duplicate"):
            parse_config("problem=sod\ncells=10\ncells=20\n")

    def test_key_for_wrong_problem(self):
        with pytest.raises(ConfigError, match="does not apply"):
            parse_config("problem=sod\nmach=1.21\n")

    def test_missing_problem(self):
        with pytest.raises(ConfigError):
            parse_config("cells=100\n")

    def test_weno_and_solver_knobs(self):
        spec = parse_config(
            "problem=sod\ncells=64\nweno_epsilon=1e-8\nacm=off\n"
            "acm_strength=0.5\nalpha_mode=local\ndt_mode=sum\nthreads=4\n"
        )
        assert spec.weno.epsilon == 1e-8
        assert spec.weno.acm_enabled is False
        assert spec.weno.acm_strength == 0.5
        assert spec.alpha_mode == "local"
        assert spec.dt_mode == "sum"
        assert spec.threads == 4

    def test_rmi_overrides(self):
        spec = parse_config(
            "problem=rmi\nmach=1.11\nppw=32\na0=0.1\ndelta=0.7\nt_end=5e-4\n"
        )
        assert spec.rmi.a0 == 0.1
        assert spec.rmi.delta == 0.7


class TestSnapshotRoundTrip:
    def test_uniform_field(self, tmp_path):
        spec, field = init_sod(32)
        path = tmp_path / "snap.csv"
        write_snapshot(field, spec.eos, path)
        back, eos = read_snapshot(path)
        assert eos.gamma == spec.eos.gamma
        assert back.nx == field.nx and back.ny == field.ny
        assert back.dx == field.dx and back.origin == field.origin
        assert np.array_equal(back.interior, field.interior)

    def test_evolved_field_round_trip(self, tmp_path):
        spec, field = init_sod(100, t_end=0.5)
        res = run(spec, field=field)
        p1 = tmp_path / "a.csv"
        p2 = tmp_path / "b.csv"
        write_snapshot(res.field, spec.eos, p1)
        back, _ = read_snapshot(p1)
        write_snapshot(back, spec.eos, p2)
        assert p1.read_bytes() == p2.read_bytes()

    def test_header_time_text(self, tmp_path):
        spec, field = init_sod(16)
        field.time = 0.1234567890123456789
        path = tmp_path / "snap.csv"
        write_snapshot(field, spec.eos, path)
        header = path.read_text().splitlines()[0]
        assert header == "# time=%.17g" % field.time
        back, _ = read_snapshot(path)
        assert back.time == field.time

    def test_row_count_validated(self, tmp_path):
        spec, field = init_sod(16)
        path = tmp_path / "snap.csv"
        write_snapshot(field, spec.eos, path)
        lines = path.read_text().splitlines()
        (tmp_path / "bad.csv").write_text("\n".join(lines[:-3]) + "\n")
        with pytest.raises(ConfigError, match="rows"):
            read_snapshot(tmp_path / "bad.csv")

    def test_2d_orientation_preserved(self, tmp_path):
        from wenotube.problems import RmiParams, init_rmi

        spec, field = init_rmi(RmiParams.for_mach(1.11), 16, t_end=0.0)
        path = tmp_path / "snap.csv"
        write_snapshot(field, spec.eos, path)
        back, _ = read_snapshot(path)
        assert np.array_equal(back.interior, field.interior)


class TestSeriesFile:
    def test_round_trip(self, tmp_path):
        records = [
            InterfaceRecord(t=1e-4 * k, y_bubble=3.0 + 0.1 * k, y_spike=2.9,
                            amplitude=0.05 * k, displacement=0.03 * k)
            for k in range(5)
        ]
        path = tmp_path / "series.csv"
        write_series(records, path)
        back = read_series(path)
        assert back == records

    def test_nonmonotone_times_rejected(self, tmp_path):
        path = tmp_path / "series.csv"
        path.write_text(
            "t,y_bubble,y_spike,amplitude,displacement\n"
            "0,3,2.9,0.05,0\n"
            "0,3,2.9,0.05,0\n"
        )
        with pytest.raises(ConfigError, match="increase"):
            read_series(path)


class TestConvergenceSuite:
    def test_requires_two_resolutions(self):
        from wenotube.convergence import run_convergence_suite

        with pytest.raises(ConfigError):
            run_convergence_suite("problem=sod\ncells=32\n", [100])

    def test_sod_errors_decrease(self, tmp_path):
        from wenotube.convergence import run_convergence_suite

        report = run_convergence_suite(
            "problem=sod\nt_end=0.8\n", [50, 100], output_dir=tmp_path
        )
        rows = {r.resolution: r for r in report.rows}
        assert rows[50].l1_vs_oracle > rows[100].l1_vs_oracle
        assert (tmp_path / "report.txt").exists()
        assert (tmp_path / "cells50").is_dir()

    def test_restriction_requires_divisibility(self):
        from wenotube.convergence import _restrict_mean

        with pytest.raises(ConfigError):
            _restrict_mean(np.zeros(100), 17)
        out = _restrict_mean(np.arange(8.0), 4)
        assert out == pytest.approx([0.5, 2.5, 4.5, 6.5])
