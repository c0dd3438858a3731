"""Numpy reference implementations of the hot kernels.

These are the fallback backend when the compiled core is unavailable and the
ground truth the compiled core is tested against.  Both backends implement
the same arithmetic (same interpolation formula, same update stencil) so that
results agree to rounding.
"""

import numpy as np


def weighted_interp_sum(x0, dx, values, positions, weights):
    """Fused backward-induction reduction on a uniform 1-D grid.

    Returns ``sum_a weights[a] * interp(values, positions[a, :])`` where
    ``interp`` is linear interpolation on the grid ``x0 + dx*k``.  Positions
    are assumed in-bounds (the engine checks before calling); indices are
    clamped so that roundoff at the grid edges stays safe.
    """
    values = np.asarray(values, dtype=np.float64)
    positions = np.asarray(positions, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    t = (positions - x0) / dx
    idx = np.floor(t).astype(np.int64)
    np.clip(idx, 0, values.size - 2, out=idx)
    frac = t - idx
    v0 = values[idx]
    interp = v0 + frac * (values[idx + 1] - v0)
    return np.einsum("am,a->m", interp, weights)


def gheat_steps(u, dx, dt, nsteps, half_up2, half_lo2):
    """Advance ``u`` in place by ``nsteps`` explicit Euler steps of
    du/dt = half_up2 * (D2 u)^+ + half_lo2 * min(D2 u, 0)
    with centered second differences.  Boundary nodes use linear
    extrapolation, i.e. their second difference is zero and they stay fixed.
    """
    inv = 1.0 / (dx * dx)
    for _ in range(int(nsteps)):
        d2 = (u[2:] - 2.0 * u[1:-1] + u[:-2]) * inv
        g = np.where(d2 >= 0.0, half_up2 * d2, half_lo2 * d2)
        u[1:-1] += dt * g
    return None
