"""Initial-condition builders and the normal-shock relations."""

import math

import numpy as np
import pytest

from wenotube.errors import ConfigError
from wenotube.euler import IdealGasEos, PrimitiveState, primitives_from_conserved
from wenotube.grid import BcType
from wenotube.problems import (
    RMI_LAMBDA0,
    ProblemSpec,
    RmiParams,
    incident_shock_speed,
    init_rmi,
    init_shu_osher,
    init_sod,
    post_shock_state,
)
from wenotube.riemann import solve_riemann

EOS14 = IdealGasEos(1.4)


class TestSod:
    def test_states_and_geometry(self):
        spec, field = init_sod(100)
        assert (spec.nx, spec.ny) == (100, 1)
        assert spec.eos.gamma == 1.4
        assert spec.t_end == 2.0
        W_left = primitives_from_conserved(tuple(field.interior[0, 0]), spec.eos)
        W_right = primitives_from_conserved(tuple(field.interior[-1, 0]), spec.eos)
        assert W_left == pytest.approx((1.0, 0.0, 0.0, 1.0, 0.0))
        assert W_right == pytest.approx((0.125, 0.0, 0.0, 0.1, 1.0))

    def test_initial_mass(self):
        spec, field = init_sod(200)
        mass = np.sum(field.interior[:, 0, 0]) * spec.dx
        assert mass == pytest.approx(5.0 * 1.0 + 5.0 * 0.125, rel=1e-12)

    def test_split_falls_between_cells(self):
        spec, field = init_sod(100)
        rho = field.interior[:, 0, 0]
        assert np.all(rho[:50] == 1.0)
        assert np.all(rho[50:] == 0.125)


class TestShuOsher:
    def test_left_state(self):
        spec, field = init_shu_osher(400)
        W = primitives_from_conserved(tuple(field.interior[0, 0]), spec.eos)
        assert W == pytest.approx((3.857143, 2.629369, 0.0, 10.33333, 0.0), rel=1e-6)

    def test_entropy_wave_sampling(self):
        spec, field = init_shu_osher(1000)
        x = field.x_centers()
        i = np.argmin(np.abs(x - math.pi / 10))
        rho = field.interior[i, 0, 0]
        assert rho == pytest.approx(1.0 + 0.2 * math.sin(5 * x[i]), rel=1e-12)

    def test_zero_amplitude_flat(self):
        spec, field = init_shu_osher(200, amplitude=0.0)
        rho = field.interior[:, 0, 0]
        right = rho[np.asarray(field.x_centers()) > -4.0]
        assert np.all(right == 1.0)

    def test_default_end_time(self):
        spec, _ = init_shu_osher(200)
        assert spec.t_end == pytest.approx(1.8)


class TestPostShockState:
    def test_mach_one_identity(self):
        W = PrimitiveState(1.0, 0.0, 0.0, 1.0, 0.0)
        assert post_shock_state(W, 1.0, EOS14) == pytest.approx(tuple(W), rel=1e-12)

    def test_mach3_classic_state(self):
        W = post_shock_state(PrimitiveState(1.0, 0.0, 0.0, 1.0, 0.0), 3.0, EOS14)
        assert W.rho == pytest.approx(3.857143, abs=1e-6)
        assert W.u == pytest.approx(2.629369, abs=1e-6)
        assert W.p == pytest.approx(10.33333, abs=1e-5)

    def test_subsonic_rejected(self):
        with pytest.raises(ValueError):
            post_shock_state(PrimitiveState(1, 0, 0, 1, 0), 0.9, EOS14)

    def test_rankine_hugoniot_residuals(self):
        eos = IdealGasEos(1.276)
        pre = PrimitiveState(1.351e-3, 0.0, 0.0, 9.56e5, 0.0)
        for mach in (1.11, 1.21, 2.0):
            post = post_shock_state(pre, mach, eos)
            s = incident_shock_speed(pre, mach, eos)
            w1 = pre.u - s
            w2 = post.u - s
            mass = pre.rho * w1 - post.rho * w2
            mom = (pre.rho * w1**2 + pre.p) - (post.rho * w2**2 + post.p)
            g = eos.gamma / (eos.gamma - 1.0)
            bern = (g * pre.p / pre.rho + 0.5 * w1**2) - (g * post.p / post.rho + 0.5 * w2**2)
            assert abs(mass) < 1e-12 * pre.rho * abs(w1)
            assert abs(mom) < 1e-12 * pre.p
            assert abs(bern) < 1e-12 * g * pre.p / pre.rho

    def test_interface_velocity_against_tabulated_theory(self):
        """Driving the air/SF6 interface with the post-shock air state must
        land near the tabulated 1D interface velocities (36.0 and 64.2 m/s).

        The induced piston velocity itself is much larger (about 100 m/s at
        Mach 1.21); the tabulated values are what survives transmission into
        the heavy gas, i.e. the star velocity of this Riemann problem.
        """
        eos = IdealGasEos(1.276)
        air = PrimitiveState(1.351e-3, 0.0, 0.0, 9.56e5, 0.0)
        sf6 = PrimitiveState(5.494e-3, 0.0, 0.0, 9.56e5, 1.0)
        for mach, theory_m_s in ((1.11, 36.0), (1.21, 64.2)):
            driven = post_shock_state(air, mach, eos)
            sol = solve_riemann(driven, sf6, eos)
            du = sol.u_star / 100.0  # cm/s -> m/s
            assert du == pytest.approx(theory_m_s, rel=0.15)
            if mach == 1.21:
                assert 60.0 < du < 70.0


class TestRmiSetup:
    def test_table_defaults(self):
        p111 = RmiParams.for_mach(1.11)
        p121 = RmiParams.for_mach(1.21)
        assert p111.a0 == 0.229 and p121.a0 == 0.183
        assert p111.lambda0 == 5.933
        assert p111.delta == 0.5
        assert p111.rho_heavy == 5.494e-3
        assert p111.rho_light == 1.351e-3
        assert p111.p_interface == 9.56e5

    def test_unknown_mach_needs_amplitude(self):
        with pytest.raises(ConfigError):
            RmiParams.for_mach(1.5)
        p = RmiParams.for_mach(1.5, a0=0.2)
        assert p.a0 == 0.2

    def test_grid_spacing_from_ppw(self):
        spec, field = init_rmi(RmiParams.for_mach(1.11), 256, t_end=0.0)
        assert spec.dx == pytest.approx(RMI_LAMBDA0 / 256)
        assert spec.dx == pytest.approx(0.02318, abs=2e-5)
        assert spec.nx == 384
        spec64, _ = init_rmi(RmiParams.for_mach(1.11), 64, t_end=0.0)
        assert (spec64.nx, spec64.ny) == (96, 809)

    def test_density_profile_limits(self):
        spec, field = init_rmi(RmiParams.for_mach(1.21), 32, t_end=0.0)
        rho = field.interior[..., 0]
        M = field.interior[..., 4] / rho
        y = field.y_centers()
        far_above = y > 6.0
        assert np.allclose(rho[:, far_above], 5.494e-3, rtol=1e-9)
        assert np.allclose(M[:, far_above], 1.0, atol=1e-9)
        # between shock and diffuse layer: quiescent light fluid (the erf
        # tail leaves ~1e-8 relative residue at 1.4 cm from the interface)
        band = (y > 1.2) & (y < 1.6)
        assert np.allclose(rho[:, band], 1.351e-3, rtol=1e-6)
        assert np.allclose(M[:, band], 0.0, atol=1e-6)

    def test_erf_midpoint_on_perturbation(self):
        prm = RmiParams.for_mach(1.11)
        spec, field = init_rmi(prm, 64, t_end=0.0)
        x = field.x_centers()
        y = field.y_centers()
        rho = field.interior[..., 0]
        rho_bar = 0.5 * (prm.rho_light + prm.rho_heavy)
        for i in (0, spec.nx // 2):
            y_pert = prm.y_interface + prm.a0 * math.cos(2 * math.pi * x[i] / prm.lambda0)
            j = np.argmin(np.abs(y - y_pert))
            # within one cell of the midpoint, density is near the average
            assert abs(rho[i, j] - rho_bar) < 0.12 * (prm.rho_heavy - prm.rho_light)

    def test_post_shock_region(self):
        prm = RmiParams.for_mach(1.21)
        spec, field = init_rmi(prm, 32, t_end=0.0)
        eos = spec.eos
        y = field.y_centers()
        behind = y < prm.y_shock - spec.dy
        W = primitives_from_conserved(tuple(field.interior[0, np.argmax(behind), :]), eos)
        expect = post_shock_state(
            PrimitiveState(prm.rho_light, 0.0, 0.0, prm.p_interface, 0.0), prm.mach, eos
        )
        assert W.rho == pytest.approx(expect.rho, rel=1e-12)
        assert W.v == pytest.approx(expect.u, rel=1e-12)  # shock runs along +y
        assert W.p == pytest.approx(expect.p, rel=1e-12)
        assert W.u == 0.0

    def test_pressure_uniform_ahead_of_shock(self):
        from wenotube.euler import primitive_arrays_from_conserved

        prm = RmiParams.for_mach(1.11)
        spec, field = init_rmi(prm, 32, t_end=0.0)
        rho, u, v, p, M = primitive_arrays_from_conserved(field.interior, spec.eos)
        y = field.y_centers()
        ahead = y > prm.y_shock + spec.dy
        assert np.allclose(p[:, ahead], prm.p_interface, rtol=1e-12)

    def test_boundaries(self):
        spec, _ = init_rmi(RmiParams.for_mach(1.11), 32, t_end=0.0)
        assert spec.bc.x_lo is BcType.REFLECTING_WALL
        assert spec.bc.x_hi is BcType.REFLECTING_WALL
        assert spec.bc.y_lo is BcType.ZERO_GRADIENT_OUTFLOW
        assert spec.bc.y_hi is BcType.REFLECTING_WALL

    def test_shock_inside_diffuse_layer_rejected(self):
        prm = RmiParams.for_mach(1.11, y_shock=2.5)
        with pytest.raises(ConfigError):
            init_rmi(prm, 32)

    def test_amplitude_bound(self):
        with pytest.raises(ConfigError):
            RmiParams.for_mach(1.11, a0=2.0)

    def test_spec_validation(self):
        with pytest.raises(ConfigError):
            ProblemSpec(
                name="sod", nx=5, ny=1, dx=0.1, dy=0.1, origin=(0, 0),
                eos=EOS14, bc=None, t_end=1.0,
            )
