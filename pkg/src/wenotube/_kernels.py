"""Numba kernels for the stencil hot path.

Everything here works on raw float64 arrays; the public modules wrap these
with validated types. Kernels return integer status codes instead of
raising so the Python wrappers can attach grid locations:

    0 ok | 1 bad density | 2 bad pressure | 3 alpha below line wave speed
    4 invalid interface average state

Layout conventions: a "line" is (n+6, 5) conserved states with 3 ghost
cells per end, component 1 the momentum along the sweep and component 2
the transverse momentum (Y sweeps swap momenta before calling in here and
swap the result back).
"""

import numpy as np
from numba import njit

GHOST = 3


@njit(cache=True, inline="always", fastmath={"reassoc", "contract", "nsz"})
def weno5_betas(v0, v1, v2, v3, v4):
    """Jiang-Shu smoothness indicators of the three substencils."""
    b0 = 13.0 / 12.0 * (v0 - 2.0 * v1 + v2) ** 2 + 0.25 * (v0 - 4.0 * v1 + 3.0 * v2) ** 2
    b1 = 13.0 / 12.0 * (v1 - 2.0 * v2 + v3) ** 2 + 0.25 * (v1 - v3) ** 2
    b2 = 13.0 / 12.0 * (v2 - 2.0 * v3 + v4) ** 2 + 0.25 * (3.0 * v2 - 4.0 * v3 + v4) ** 2
    return b0, b1, b2


@njit(cache=True, inline="always", fastmath={"reassoc", "contract", "nsz"})
def weno5_weights(v0, v1, v2, v3, v4, eps):
    """Normalized nonlinear weights; linear weights are (1/10, 6/10, 3/10).

    The unnormalized weights c_k/(eps+b_k)^2 are multiplied through by
    ((eps+b0)(eps+b1)(eps+b2))^2, which leaves the normalized result
    unchanged and costs one division instead of six.
    """
    b0, b1, b2 = weno5_betas(v0, v1, v2, v3, v4)
    t0 = eps + b0
    t1 = eps + b1
    t2 = eps + b2
    p12 = t1 * t2
    p02 = t0 * t2
    p01 = t0 * t1
    a0 = 0.1 * p12 * p12
    a1 = 0.6 * p02 * p02
    a2 = 0.3 * p01 * p01
    inv_s = 1.0 / (a0 + a1 + a2)
    return a0 * inv_s, a1 * inv_s, a2 * inv_s


@njit(cache=True, inline="always", fastmath={"reassoc", "contract", "nsz"})
def weno5_value(v0, v1, v2, v3, v4, eps):
    """Left-biased fifth-order WENO value at the i+1/2 interface (v2 = f_i)."""
    b0, b1, b2 = weno5_betas(v0, v1, v2, v3, v4)
    t0 = eps + b0
    t1 = eps + b1
    t2 = eps + b2
    p12 = t1 * t2
    p02 = t0 * t2
    p01 = t0 * t1
    a0 = 0.1 * p12 * p12
    a1 = 0.6 * p02 * p02
    a2 = 0.3 * p01 * p01
    q0 = (2.0 * v0 - 7.0 * v1 + 11.0 * v2) / 6.0
    q1 = (-v1 + 5.0 * v2 + 2.0 * v3) / 6.0
    q2 = (2.0 * v2 + 5.0 * v3 - v4) / 6.0
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2)


@njit(cache=True, inline="always", fastmath={"reassoc", "contract", "nsz"})
def minmod(x, y):
    if x > 0.0 and y > 0.0:
        return min(x, y)
    if x < 0.0 and y < 0.0:
        return max(x, y)
    return 0.0


@njit(cache=True, inline="always", fastmath={"reassoc", "contract", "nsz"})
def acm_value(v0, v1, v2, v3, v4, base, strength):
    """Anti-diffusive slope correction of a reconstructed interface value.

    The steepening term is the minmod of the one-sided differences around
    the interface, gated by a jump detector |dc - dl| / (|dc| + |dl|) that
    vanishes identically on linear data. The compressed value is confined
    to the TVD wedge of the cell pair: between the two adjacent values and
    within twice the upwind-limited slope from the upwind cell. Without the
    wedge the correction downwinds the foot of a jump, which is unstable.
    """
    dl = v2 - v1
    dc = v3 - v2
    denom = abs(dc) + abs(dl)
    if denom == 0.0:
        return base
    detector = abs(dc - dl) / denom
    corr = strength * detector * minmod(dl, dc)
    if corr == 0.0:
        return base
    out = base + corr
    cap = 2.0 * minmod(dl, dc)
    if v3 >= v2:
        lo1, hi1 = v2, v3
    else:
        lo1, hi1 = v3, v2
    if cap >= 0.0:
        lo2, hi2 = v2, v2 + cap
    else:
        lo2, hi2 = v2 + cap, v2
    lo = max(lo1, lo2)
    hi = min(hi1, hi2)
    if out < lo:
        return lo
    if out > hi:
        return hi
    return out


@njit(cache=True)
def line_wave_speeds(uline, gamma, ws, f):
    """Primitive decode of a line: fills |u|+a and the physical flux per cell.

    Returns (status, position); position indexes into the line on failure.
    """
    n6 = uline.shape[0]
    for i in range(n6):
        rho = uline[i, 0]
        if not rho > 0.0 or not np.isfinite(rho):
            return 1, i
        un = uline[i, 1] / rho
        ut = uline[i, 2] / rho
        p = (gamma - 1.0) * (uline[i, 3] - 0.5 * rho * (un * un + ut * ut))
        if not p > 0.0 or not np.isfinite(p):
            return 2, i
        a = np.sqrt(gamma * p / rho)
        ws[i] = abs(un) + a
        f[i, 0] = uline[i, 1]
        f[i, 1] = uline[i, 1] * un + p
        f[i, 2] = uline[i, 2] * un
        f[i, 3] = (uline[i, 3] + p) * un
        f[i, 4] = uline[i, 4] * un
    return 0, -1


@njit(cache=True, fastmath={"reassoc", "contract", "nsz"})
def line_flux(uline, gamma, alpha, eps, acm_on, acm_strength, local_alpha, ws, f, fhat):
    """Characteristic-wise LF-split WENO fluxes for every interface of a line.

    fhat must be (n+1, 5) for a line of n interior cells; interface m sits
    between line cells m+2 and m+3. One scalar alpha serves the whole line
    (global LF) unless local_alpha, in which case each interface uses the
    max wave speed over its own 6-cell window.
    """
    n6 = uline.shape[0]
    nfaces = n6 - 2 * GHOST + 1

    status, pos = line_wave_speeds(uline, gamma, ws, f)
    if status != 0:
        return status, pos

    if not local_alpha:
        wsmax = 0.0
        for i in range(n6):
            if ws[i] > wsmax:
                wsmax = ws[i]
        # tiny slack: ghost mirroring reproduces interior speeds exactly,
        # so anything beyond rounding is a real contract violation
        if wsmax > alpha * (1.0 + 1e-12):
            return 3, int(np.argmax(ws))

    fp = np.empty((5, 6))
    fm = np.empty((5, 6))

    for m in range(nfaces):
        ic = m + GHOST - 1  # left cell of the interface

        # arithmetic-mean state at the interface
        rho = 0.5 * (uline[ic, 0] + uline[ic + 1, 0])
        mn = 0.5 * (uline[ic, 1] + uline[ic + 1, 1])
        mt = 0.5 * (uline[ic, 2] + uline[ic + 1, 2])
        en = 0.5 * (uline[ic, 3] + uline[ic + 1, 3])
        rhom = 0.5 * (uline[ic, 4] + uline[ic + 1, 4])
        un = mn / rho
        ut = mt / rho
        q2 = un * un + ut * ut
        p = (gamma - 1.0) * (en - 0.5 * rho * q2)
        if not p > 0.0 or not np.isfinite(p):
            return 4, ic
        a = np.sqrt(gamma * p / rho)
        h = (en + p) / rho
        mfrac = rhom / rho
        b1 = (gamma - 1.0) / (a * a)
        b2 = 0.5 * b1 * q2

        av = alpha
        if local_alpha:
            av = 0.0
            for jj in range(6):
                if ws[m + jj] > av:
                    av = ws[m + jj]

        # left-eigenvector rows as scalars (acoustic pair shares l02/l03)
        inv_a = 1.0 / a
        l00 = 0.5 * (b2 + un * inv_a)
        l01 = 0.5 * (-b1 * un - inv_a)
        l02 = -0.5 * b1 * ut
        l03 = 0.5 * b1
        l10 = 1.0 - b2
        l11 = b1 * un
        l12 = b1 * ut
        l40 = 0.5 * (b2 - un * inv_a)
        l41 = 0.5 * (-b1 * un + inv_a)

        for jj in range(6):
            cell = m + jj
            u0 = uline[cell, 0]
            u1 = uline[cell, 1]
            u2 = uline[cell, 2]
            u3 = uline[cell, 3]
            u4 = uline[cell, 4]
            g0 = f[cell, 0]
            g1 = f[cell, 1]
            g2 = f[cell, 2]
            g3 = f[cell, 3]
            g4 = f[cell, 4]
            w0 = l00 * u0 + l01 * u1 + l02 * u2 + l03 * u3
            c0 = l00 * g0 + l01 * g1 + l02 * g2 + l03 * g3
            w1 = l10 * u0 + l11 * u1 + l12 * u2 - b1 * u3
            c1 = l10 * g0 + l11 * g1 + l12 * g2 - b1 * g3
            w2 = u2 - ut * u0
            c2 = g2 - ut * g0
            w3 = u4 - mfrac * u0
            c3 = g4 - mfrac * g0
            w4 = l40 * u0 + l41 * u1 + l02 * u2 + l03 * u3
            c4 = l40 * g0 + l41 * g1 + l02 * g2 + l03 * g3
            fp[0, jj] = 0.5 * (c0 + av * w0)
            fm[0, jj] = 0.5 * (c0 - av * w0)
            fp[1, jj] = 0.5 * (c1 + av * w1)
            fm[1, jj] = 0.5 * (c1 - av * w1)
            fp[2, jj] = 0.5 * (c2 + av * w2)
            fm[2, jj] = 0.5 * (c2 - av * w2)
            fp[3, jj] = 0.5 * (c3 + av * w3)
            fm[3, jj] = 0.5 * (c3 - av * w3)
            fp[4, jj] = 0.5 * (c4 + av * w4)
            fm[4, jj] = 0.5 * (c4 - av * w4)

        gh0 = 0.0
        gh1 = 0.0
        gh2 = 0.0
        gh3 = 0.0
        gh4 = 0.0
        for k in range(5):
            vp = weno5_value(fp[k, 0], fp[k, 1], fp[k, 2], fp[k, 3], fp[k, 4], eps)
            vm = weno5_value(fm[k, 5], fm[k, 4], fm[k, 3], fm[k, 2], fm[k, 1], eps)
            if acm_on and 1 <= k <= 3:
                vp = acm_value(fp[k, 0], fp[k, 1], fp[k, 2], fp[k, 3], fp[k, 4], vp, acm_strength)
                vm = acm_value(fm[k, 5], fm[k, 4], fm[k, 3], fm[k, 2], fm[k, 1], vm, acm_strength)
            gk = vp + vm
            if k == 0:
                gh0 = gk
            elif k == 1:
                gh1 = gk
            elif k == 2:
                gh2 = gk
            elif k == 3:
                gh3 = gk
            else:
                gh4 = gk

        acoustic = gh0 + gh4
        fhat[m, 0] = acoustic + gh1
        fhat[m, 1] = gh0 * (un - a) + gh1 * un + gh4 * (un + a)
        fhat[m, 2] = (acoustic + gh1) * ut + gh2
        fhat[m, 3] = gh0 * (h - un * a) + gh1 * 0.5 * q2 + gh2 * ut + gh4 * (h + un * a)
        fhat[m, 4] = (acoustic + gh1) * mfrac + gh3
    return 0, -1


@njit(cache=True, fastmath={"reassoc", "contract", "nsz"})
def sweep_rhs(data, axis, nx, ny, dx, gamma, alpha, eps, acm_on, acm_strength, local_alpha, rhs):
    """-d/dx of the numerical flux along one axis, for every interior cell.

    data is the (nx+6, ny+6, 5) field array with ghosts already filled; rhs
    has the same shape and only its interior is written. Returns
    (status, i, j) with i, j the offending array indices on failure.
    """
    g = GHOST
    if axis == 0:
        n6 = nx + 2 * g
        nlines = ny
    else:
        n6 = ny + 2 * g
        nlines = nx
    uline = np.empty((n6, 5))
    ws = np.empty(n6)
    f = np.empty((n6, 5))
    fhat = np.empty((n6 - 2 * g + 1, 5))

    for line in range(nlines):
        if axis == 0:
            j = line + g
            for i in range(n6):
                uline[i, 0] = data[i, j, 0]
                uline[i, 1] = data[i, j, 1]
                uline[i, 2] = data[i, j, 2]
                uline[i, 3] = data[i, j, 3]
                uline[i, 4] = data[i, j, 4]
        else:
            i0 = line + g
            for jj in range(n6):
                uline[jj, 0] = data[i0, jj, 0]
                uline[jj, 1] = data[i0, jj, 2]  # swap: v is the sweep-normal
                uline[jj, 2] = data[i0, jj, 1]
                uline[jj, 3] = data[i0, jj, 3]
                uline[jj, 4] = data[i0, jj, 4]

        status, pos = line_flux(uline, gamma, alpha, eps, acm_on, acm_strength, local_alpha, ws, f, fhat)
        if status != 0:
            if axis == 0:
                return status, pos, line + g
            return status, line + g, pos

        if axis == 0:
            j = line + g
            for i in range(nx):
                cell = i + g
                inv = 1.0 / dx
                rhs[cell, j, 0] = -(fhat[i + 1, 0] - fhat[i, 0]) * inv
                rhs[cell, j, 1] = -(fhat[i + 1, 1] - fhat[i, 1]) * inv
                rhs[cell, j, 2] = -(fhat[i + 1, 2] - fhat[i, 2]) * inv
                rhs[cell, j, 3] = -(fhat[i + 1, 3] - fhat[i, 3]) * inv
                rhs[cell, j, 4] = -(fhat[i + 1, 4] - fhat[i, 4]) * inv
        else:
            i0 = line + g
            for jj in range(ny):
                cell = jj + g
                inv = 1.0 / dx
                rhs[i0, cell, 0] = -(fhat[jj + 1, 0] - fhat[jj, 0]) * inv
                rhs[i0, cell, 2] = -(fhat[jj + 1, 1] - fhat[jj, 1]) * inv  # un-swap
                rhs[i0, cell, 1] = -(fhat[jj + 1, 2] - fhat[jj, 2]) * inv
                rhs[i0, cell, 3] = -(fhat[jj + 1, 3] - fhat[jj, 3]) * inv
                rhs[i0, cell, 4] = -(fhat[jj + 1, 4] - fhat[jj, 4]) * inv

    return 0, -1, -1


@njit(cache=True)
def interior_max_wave_speed(data, axis, nx, ny, gamma):
    """max(|u_axis| + a) over interior cells; (speed, status, i, j)."""
    g = GHOST
    best = 0.0
    for i in range(g, nx + g):
        for j in range(g, ny + g):
            rho = data[i, j, 0]
            if not rho > 0.0 or not np.isfinite(rho):
                return 0.0, 1, i, j
            u = data[i, j, 1] / rho
            v = data[i, j, 2] / rho
            p = (gamma - 1.0) * (data[i, j, 3] - 0.5 * rho * (u * u + v * v))
            if not p > 0.0 or not np.isfinite(p):
                return 0.0, 2, i, j
            a = np.sqrt(gamma * p / rho)
            s = (abs(u) if axis == 0 else abs(v)) + a
            if s > best:
                best = s
    return best, 0, -1, -1
