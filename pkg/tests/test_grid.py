"""Field container and ghost-cell boundary fill."""

import numpy as np
import pytest

from wenotube.euler import IMX, IMY, PrimitiveState, conserved_from_primitives, IdealGasEos
from wenotube.grid import BcType, BoundarySpec, Field2D, GHOST, fill_ghost

EOS = IdealGasEos(1.4)


def make_field(nx=8, ny=6):
    f = Field2D(nx, ny, 0.1, 0.2, origin=(-1.0, 2.0))
    rng = np.random.default_rng(nx * 100 + ny)
    for i in range(nx):
        for j in range(ny):
            W = PrimitiveState(
                rng.uniform(0.5, 2.0), rng.uniform(-1, 1), rng.uniform(-1, 1),
                rng.uniform(0.5, 2.0), rng.uniform(0, 1),
            )
            f.interior[i, j] = conserved_from_primitives(W, EOS)
    return f


class TestField2D:
    def test_geometry(self):
        f = Field2D(4, 3, 0.5, 0.25, origin=(1.0, -2.0))
        assert f.data.shape == (10, 9, 5)
        assert f.x_centers() == pytest.approx([1.25, 1.75, 2.25, 2.75])
        assert f.y_centers()[0] == pytest.approx(-2.0 + 0.125)

    def test_validation(self):
        with pytest.raises(ValueError):
            Field2D(0, 3, 0.1, 0.1)
        with pytest.raises(ValueError):
            Field2D(3, 3, -0.1, 0.1)

    def test_copy_is_deep(self):
        f = make_field()
        g = f.copy()
        g.interior[0, 0, 0] = 99.0
        assert f.interior[0, 0, 0] != 99.0


class TestFillGhost:
    def test_uniform_field_all_bc(self):
        for bc_type in BcType:
            f = Field2D(8, 8, 0.1, 0.1)
            U = conserved_from_primitives(PrimitiveState(1.2, 0.0, 0.0, 2.0, 0.5), EOS)
            f.data[:] = 0.0
            f.interior[:] = np.asarray(U)
            fill_ghost(f, BoundarySpec.all_sides(bc_type))
            # at rest: reflection flips a zero momentum, so all BCs agree
            assert np.allclose(f.data, np.asarray(U))

    def test_outflow_copies_edge(self):
        f = make_field()
        # linear density ramp in x
        f.interior[..., 0] = np.linspace(1.0, 2.0, f.nx)[:, None]
        fill_ghost(f, BoundarySpec.all_sides(BcType.ZERO_GRADIENT_OUTFLOW))
        g = GHOST
        for k in range(g):
            assert np.array_equal(f.data[k], f.data[g])
            assert np.array_equal(f.data[f.nx + g + k], f.data[f.nx + g - 1])

    def test_reflecting_mirrors_and_negates(self):
        f = make_field()
        fill_ghost(f, BoundarySpec.all_sides(BcType.REFLECTING_WALL))
        g = GHOST
        d = f.data
        for k in range(g):
            mirror = d[2 * g - 1 - k, g:-g]  # interior cell mirrored at x-low wall
            ghost = d[k, g:-g]
            assert np.array_equal(ghost[:, IMX], -mirror[:, IMX])
            for comp in (0, IMY, 3, 4):
                assert np.array_equal(ghost[:, comp], mirror[:, comp])
        # y-high wall negates the y-momentum
        ny = f.ny
        for k in range(g):
            mirror = d[g:-g, ny + g - 1 - k]
            ghost = d[g:-g, ny + g + k]
            assert np.array_equal(ghost[:, IMY], -mirror[:, IMY])
            assert np.array_equal(ghost[:, IMX], mirror[:, IMX])

    def test_reflecting_wall_example(self):
        # v > 0 at the y-max edge: ghost gets v negated, rho/p/M unchanged
        f = Field2D(8, 8, 0.1, 0.1)
        W = PrimitiveState(1.0, 0.0, 0.7, 1.5, 0.25)
        f.interior[:] = np.asarray(conserved_from_primitives(W, EOS))
        fill_ghost(f, BoundarySpec(y_hi=BcType.REFLECTING_WALL))
        g = GHOST
        ghost = f.data[g, f.ny + g]
        assert ghost[IMY] == -W.rho * W.v
        assert ghost[0] == W.rho
        assert ghost[4] == W.rho * W.M

    def test_periodic_wraps(self):
        f = make_field(8, 6)
        fill_ghost(
            f,
            BoundarySpec(BcType.PERIODIC, BcType.PERIODIC,
                         BcType.ZERO_GRADIENT_OUTFLOW, BcType.ZERO_GRADIENT_OUTFLOW),
        )
        g = GHOST
        assert np.array_equal(f.data[0:g, g:-g], f.data[f.nx : f.nx + g, g:-g])
        assert np.array_equal(f.data[f.nx + g :, g:-g], f.data[g : 2 * g, g:-g])

    def test_periodic_must_pair(self):
        with pytest.raises(ValueError):
            BoundarySpec(x_lo=BcType.PERIODIC, x_hi=BcType.REFLECTING_WALL)

    def test_collapsed_axis_needs_outflow(self):
        f = Field2D(8, 1, 0.1, 0.1)
        f.interior[:] = np.asarray(
            conserved_from_primitives(PrimitiveState(1, 0, 0, 1, 0), EOS)
        )
        fill_ghost(f, BoundarySpec())  # outflow everywhere works
        with pytest.raises(ValueError):
            fill_ghost(f, BoundarySpec.all_sides(BcType.REFLECTING_WALL))
