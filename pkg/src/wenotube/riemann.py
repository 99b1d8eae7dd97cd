"""Exact self-similar solution of the 1D Riemann problem for an ideal gas.

Used as the verification oracle for shock-tube runs; it never shares code
with the WENO solver. The star pressure is found by Newton iteration on
the standard pressure function (shock branch from Rankine-Hugoniot,
rarefaction branch from the Riemann invariant), then the solution is
sampled along rays xi = x/t. The mass fraction rides with the contact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidStateError
from .euler import IdealGasEos, PrimitiveState

_TOL = 1e-12
_MAX_ITER = 200


def _branch(p: float, pk: float, rhok: float, ak: float, g: float):
    """f_K(p) and its derivative: shock for p > pk, rarefaction otherwise."""
    if p > pk:
        A = 2.0 / ((g + 1.0) * rhok)
        B = (g - 1.0) / (g + 1.0) * pk
        root = math.sqrt(A / (p + B))
        return (p - pk) * root, root * (1.0 - 0.5 * (p - pk) / (B + p))
    ratio = (p / pk) ** ((g - 1.0) / (2.0 * g))
    f = 2.0 * ak / (g - 1.0) * (ratio - 1.0)
    df = (p / pk) ** (-(g + 1.0) / (2.0 * g)) / (rhok * ak)
    return f, df


@dataclass(frozen=True)
class RiemannSolution:
    """Solved wave pattern; sample(xi) evaluates it on a ray x/t = xi."""

    WL: PrimitiveState
    WR: PrimitiveState
    eos: IdealGasEos
    p_star: float
    u_star: float

    @property
    def left_is_shock(self) -> bool:
        return self.p_star > self.WL.p

    @property
    def right_is_shock(self) -> bool:
        return self.p_star > self.WR.p

    def left_wave_speeds(self) -> tuple[float, float]:
        """(head, tail) of the left wave; equal for a shock."""
        g = self.eos.gamma
        rho, u, p = self.WL.rho, self.WL.u, self.WL.p
        a = math.sqrt(g * p / rho)
        if self.left_is_shock:
            s = u - a * math.sqrt((g + 1.0) / (2.0 * g) * self.p_star / p + (g - 1.0) / (2.0 * g))
            return s, s
        a_star = a * (self.p_star / p) ** ((g - 1.0) / (2.0 * g))
        return u - a, self.u_star - a_star

    def right_wave_speeds(self) -> tuple[float, float]:
        g = self.eos.gamma
        rho, u, p = self.WR.rho, self.WR.u, self.WR.p
        a = math.sqrt(g * p / rho)
        if self.right_is_shock:
            s = u + a * math.sqrt((g + 1.0) / (2.0 * g) * self.p_star / p + (g - 1.0) / (2.0 * g))
            return s, s
        a_star = a * (self.p_star / p) ** ((g - 1.0) / (2.0 * g))
        return self.u_star + a_star, u + a

    def sample(self, xi: float) -> PrimitiveState:
        g = self.eos.gamma
        gm, gp = g - 1.0, g + 1.0
        if xi <= self.u_star:
            rho, u, p, M = self.WL.rho, self.WL.u, self.WL.p, self.WL.M
            a = math.sqrt(g * p / rho)
            if self.left_is_shock:
                s, _ = self.left_wave_speeds()
                if xi <= s:
                    return self.WL
                r = self.p_star / p
                rho_star = rho * (r + gm / gp) / (gm / gp * r + 1.0)
                return PrimitiveState(rho_star, self.u_star, self.WL.v, self.p_star, M)
            head, tail = self.left_wave_speeds()
            if xi <= head:
                return self.WL
            if xi >= tail:
                rho_star = rho * (self.p_star / p) ** (1.0 / g)
                return PrimitiveState(rho_star, self.u_star, self.WL.v, self.p_star, M)
            fac = 2.0 / gp + gm / (gp * a) * (u - xi)
            return PrimitiveState(
                rho * fac ** (2.0 / gm),
                2.0 / gp * (a + 0.5 * gm * u + xi),
                self.WL.v,
                p * fac ** (2.0 * g / gm),
                M,
            )
        rho, u, p, M = self.WR.rho, self.WR.u, self.WR.p, self.WR.M
        a = math.sqrt(g * p / rho)
        if self.right_is_shock:
            s, _ = self.right_wave_speeds()
            if xi >= s:
                return self.WR
            r = self.p_star / p
            rho_star = rho * (r + gm / gp) / (gm / gp * r + 1.0)
            return PrimitiveState(rho_star, self.u_star, self.WR.v, self.p_star, M)
        tail, head = self.right_wave_speeds()
        if xi >= head:
            return self.WR
        if xi <= tail:
            rho_star = rho * (self.p_star / p) ** (1.0 / g)
            return PrimitiveState(rho_star, self.u_star, self.WR.v, self.p_star, M)
        fac = 2.0 / gp - gm / (gp * a) * (u - xi)
        return PrimitiveState(
            rho * fac ** (2.0 / gm),
            2.0 / gp * (-a + 0.5 * gm * u + xi),
            self.WR.v,
            p * fac ** (2.0 * g / gm),
            M,
        )


def solve_riemann(WL: PrimitiveState, WR: PrimitiveState, eos: IdealGasEos) -> RiemannSolution:
    """Newton-solve the star region; raises on vacuum-generating data."""
    g = eos.gamma
    aL = math.sqrt(g * WL.p / WL.rho)
    aR = math.sqrt(g * WR.p / WR.rho)
    du = WR.u - WL.u
    if 2.0 * (aL + aR) / (g - 1.0) <= du:
        raise InvalidStateError("initial data generates vacuum; no star state exists")

    # two-rarefaction guess is positive and usually close
    z = (g - 1.0) / (2.0 * g)
    p = ((aL + aR - 0.5 * (g - 1.0) * du) / (aL / WL.p**z + aR / WR.p**z)) ** (1.0 / z)
    p = max(p, _TOL * min(WL.p, WR.p))

    for _ in range(_MAX_ITER):
        fL, dfL = _branch(p, WL.p, WL.rho, aL, g)
        fR, dfR = _branch(p, WR.p, WR.rho, aR, g)
        f = fL + fR + du
        dp = -f / (dfL + dfR)
        p_new = p + dp
        if p_new <= 0.0:
            p_new = 0.5 * p
        if abs(p_new - p) <= _TOL * p_new:
            p = p_new
            break
        p = p_new
    else:
        raise RuntimeError(f"pressure iteration failed to converge (last p={p!r})")

    fL, _ = _branch(p, WL.p, WL.rho, aL, g)
    fR, _ = _branch(p, WR.p, WR.rho, aR, g)
    u_star = 0.5 * (WL.u + WR.u) + 0.5 * (fR - fL)
    return RiemannSolution(WL=WL, WR=WR, eos=eos, p_star=p, u_star=u_star)


def exact_riemann(WL: PrimitiveState, WR: PrimitiveState, eos: IdealGasEos, xi: float) -> PrimitiveState:
    """Exact solution state on the ray x/t = xi."""
    return solve_riemann(WL, WR, eos).sample(xi)
