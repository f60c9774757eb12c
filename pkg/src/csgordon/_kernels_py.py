"""Pure numpy kick-drift-kick kernel (fallback when the extension is absent).

Arrays are contiguous float64 node values.  With ``periodic`` the last node
neighbours the first; otherwise the end nodes are Dirichlet nodes whose
acceleration is pinned to zero, so they keep their initial values provided
their velocity is zero.
"""
import numpy as np


def accel(u, a, k_dx2, alpha, beta, periodic):
    if periodic:
        lap = np.roll(u, -1) - 2.0 * u + np.roll(u, 1)
        a[:] = k_dx2 * lap - alpha * np.sin(u) - beta * np.cos(u)
    else:
        ui = u[1:-1]
        a[1:-1] = (k_dx2 * (u[2:] - 2.0 * ui + u[:-2])
                   - alpha * np.sin(ui) - beta * np.cos(ui))
        a[0] = 0.0
        a[-1] = 0.0


def kdk(u, v, a, dt, steps, k_dx2, alpha, beta, periodic):
    h = 0.5 * dt
    for _ in range(steps):
        v += h * a
        u += dt * v
        accel(u, a, k_dx2, alpha, beta, periodic)
        v += h * a
