"""Direct numerical treatment of u_tt - k u_xx + alpha sin u + beta cos u = 0.

Grids are node based.  ``fixed_asymptotic`` grids carry ``n + 1`` nodes
including both ends, and the end nodes are Dirichlet nodes held at the
kink's vacua; ``periodic`` grids carry ``n`` nodes with ``x_max`` identified
with ``x_min``.

Time stepping is kick-drift-kick (velocity Verlet): explicit, second order
and exactly time reversible.  The hot loop lives in :mod:`csgordon.kernels`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import kernels
from .errors import CFLError, CsgError, KinkNotFoundError, NonFiniteError, PoleError
from .params import CsgParams, to_phase_form
from .solutions import (Family, SolutionSpec, asymptotic_vacua, evaluate, profile,
                        time_derivative)

CFL_SAFETY = 0.9


@dataclass(frozen=True)
class Grid1D:
    x_min: float
    x_max: float
    n: int
    bc: str = "fixed_asymptotic"

    def __post_init__(self):
        if self.n < 8:
            raise CsgError(f"grid needs n >= 8 cells, got {self.n}")
        if not self.x_max > self.x_min:
            raise CsgError("grid needs x_max > x_min")
        if self.bc not in ("fixed_asymptotic", "periodic"):
            raise CsgError(f"unknown boundary condition {self.bc!r}")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n

    @property
    def periodic(self) -> bool:
        return self.bc == "periodic"

    @property
    def x(self) -> np.ndarray:
        count = self.n if self.periodic else self.n + 1
        return self.x_min + self.dx * np.arange(count)

    def refined(self, factor: int = 2) -> "Grid1D":
        return Grid1D(self.x_min, self.x_max, self.n * factor, self.bc)


@dataclass
class FieldState:
    u: np.ndarray
    v: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        self.u = np.ascontiguousarray(self.u, dtype=float)
        self.v = np.ascontiguousarray(self.v, dtype=float)
        if self.u.shape != self.v.shape or self.u.ndim != 1:
            raise CsgError("u and v must be 1-D arrays of equal length")

    def copy(self) -> "FieldState":
        return FieldState(self.u.copy(), self.v.copy(), self.t)

    def check(self, grid: Grid1D | None = None) -> "FieldState":
        if grid is not None and self.u.size != grid.x.size:
            raise CsgError(f"state has {self.u.size} nodes, grid has {grid.x.size}")
        if not (np.all(np.isfinite(self.u)) and np.all(np.isfinite(self.v))):
            raise NonFiniteError(f"non-finite field values at t = {self.t}")
        return self


@dataclass(frozen=True)
class EvolveConfig:
    dt: float
    steps: int
    params: CsgParams

    def check_cfl(self, grid: Grid1D, safety: float = CFL_SAFETY) -> None:
        limit = safety * grid.dx / math.sqrt(self.params.k)
        if not 0.0 < abs(self.dt) <= limit * (1.0 + 1e-12):
            raise CFLError(f"|dt| = {abs(self.dt):g} violates CFL bound {limit:g} "
                           f"(safety {safety}, dx = {grid.dx:g}, k = {self.params.k:g})")


def cfl_dt(grid: Grid1D, p: CsgParams, t_end: float | None = None,
           safety: float = CFL_SAFETY) -> tuple[float, int]:
    """Largest stable dt; if ``t_end`` is given, shrink it so an integer
    number of steps lands on ``t_end`` exactly.  Returns ``(dt, steps)``."""
    dt_max = safety * grid.dx / math.sqrt(p.k)
    if t_end is None:
        return dt_max, 0
    steps = max(1, math.ceil(t_end / dt_max - 1e-9))
    return t_end / steps, steps


# -- residual operators ----------------------------------------------------

def _finite(*arrays):
    for a in arrays:
        if not np.all(np.isfinite(a)):
            raise NonFiniteError("non-finite samples in residual stencil")


def residual_pde(u_fn: Callable, p: CsgParams, grid: Grid1D, t: float, h_t: float) -> float:
    """sup over interior nodes of the central-difference residual of the PDE.

    ``u_fn(x, t)`` must accept arrays and is sampled at ``x +- dx`` and
    ``t +- h_t``.
    """
    x = grid.x
    if not grid.periodic:
        x = x[1:-1]
    dx = grid.dx
    u0 = np.asarray(u_fn(x, t), dtype=float)
    ue, uw = np.asarray(u_fn(x + dx, t)), np.asarray(u_fn(x - dx, t))
    un, us = np.asarray(u_fn(x, t + h_t)), np.asarray(u_fn(x, t - h_t))
    _finite(u0, ue, uw, un, us)
    u_tt = (un - 2.0 * u0 + us) / (h_t * h_t)
    u_xx = (ue - 2.0 * u0 + uw) / (dx * dx)
    r = u_tt - p.k * u_xx + p.alpha * np.sin(u0) + p.beta * np.cos(u0)
    return float(np.max(np.abs(r)))


def residual_ode(spec, xi_grid, h: float, params: CsgParams | None = None,
                 pole_margin: float = 5.0) -> float:
    """sup of the central-difference residual of (c^2 - k) u'' + alpha sin u + beta cos u.

    ``spec`` is a :class:`SolutionSpec` or a callable ``u(xi)``; a callable
    needs ``params``.  Coth families must stay ``pole_margin * h`` away from
    their pole.
    """
    xi = np.asarray(xi_grid, dtype=float)
    if isinstance(spec, SolutionSpec):
        params = spec.params
        if spec.family.singular:
            gap = np.min(np.abs(xi + spec.xi0))
            if gap < pole_margin * h:
                raise PoleError(f"sample within {gap:g} of the pole (need >= {pole_margin} h)")

        def u(q):
            return profile(spec, q)
    else:
        if params is None:
            raise CsgError("a callable profile needs explicit params")
        u = spec
    u0 = np.asarray(u(xi), dtype=float)
    up, um = np.asarray(u(xi + h)), np.asarray(u(xi - h))
    _finite(u0, up, um)
    r = (-params.s) * (up - 2.0 * u0 + um) / (h * h) + params.alpha * np.sin(u0) \
        + params.beta * np.cos(u0)
    return float(np.max(np.abs(r)))


def observed_orders(hs, errors) -> list[float]:
    """log(e_i / e_{i+1}) / log(h_i / h_{i+1}) for successive levels."""
    out = []
    for (h0, e0), (h1, e1) in zip(zip(hs, errors), zip(hs[1:], errors[1:])):
        if e0 > 0.0 and e1 > 0.0:
            out.append(math.log(e0 / e1) / math.log(h0 / h1))
        else:
            out.append(float("nan"))
    return out


# -- states ----------------------------------------------------------------

def vacuum_state(phi: float, grid: Grid1D, t: float = 0.0) -> FieldState:
    u = np.full(grid.x.size, -phi)
    return FieldState(u, np.zeros_like(u), t)


def kink_state(spec: SolutionSpec, grid: Grid1D, t: float = 0.0) -> FieldState:
    """Analytic u and du/dt of a family A/B kink sampled on the grid.

    On fixed grids the end nodes are snapped to the exact vacua with zero
    velocity.
    """
    x = grid.x
    u = np.asarray(evaluate(spec, x, t), dtype=float)
    v = np.asarray(time_derivative(spec, x, t), dtype=float)
    if not grid.periodic:
        left, right = asymptotic_vacua(spec)
        u[0], u[-1] = left, right
        v[0] = v[-1] = 0.0
    return FieldState(u, v, t).check(grid)


# -- time stepping ---------------------------------------------------------

def _kernel_args(cfg: EvolveConfig, grid: Grid1D):
    p = cfg.params
    return p.k / (grid.dx * grid.dx), p.alpha, p.beta, grid.periodic


def _advance(state: FieldState, dt: float, steps: int, cfg: EvolveConfig,
             grid: Grid1D, backend=None) -> FieldState:
    kern = backend or kernels
    out = state.copy()
    k_dx2, alpha, beta, periodic = _kernel_args(cfg, grid)
    a = np.empty_like(out.u)
    kern.accel(out.u, a, k_dx2, alpha, beta, periodic)
    kern.kdk(out.u, out.v, a, dt, steps, k_dx2, alpha, beta, periodic)
    out.t = state.t + steps * dt
    return out.check()


def step(state: FieldState, cfg: EvolveConfig, grid: Grid1D, backend=None) -> FieldState:
    """One kick-drift-kick step of size ``cfg.dt`` (negative dt runs backwards)."""
    cfg.check_cfl(grid)
    state.check(grid)
    return _advance(state, cfg.dt, 1, cfg, grid, backend)


def evolve(state: FieldState, cfg: EvolveConfig, grid: Grid1D, record_every: int = 0,
           backend=None) -> Iterator[tuple[int, FieldState]]:
    """Yield ``(step_index, state)`` at step 0, every ``record_every`` steps,
    and at the last step.  ``record_every = 0`` yields only the two ends."""
    cfg.check_cfl(grid)
    state.check(grid)
    yield 0, state
    t0 = state.t
    done = 0
    chunk = record_every if record_every > 0 else cfg.steps
    while done < cfg.steps:
        m = min(chunk, cfg.steps - done)
        state = _advance(state, cfg.dt, m, cfg, grid, backend)
        done += m
        # no accumulated dt sums
        state.t = t0 + done * cfg.dt
        yield done, state


# -- diagnostics -----------------------------------------------------------

def energy(state: FieldState, p: CsgParams, grid: Grid1D) -> float:
    """Discrete energy: trapezoid rule for ½v² + R(1 - cos(u + phi)) on the
    nodes plus ½k (u_x)² with u_x the one-sided difference on each cell.

    This is the quantity the kick-drift-kick scheme conserves up to a
    bounded O(dt²) oscillation.
    """
    state.check(grid)
    pf = to_phase_form(p)
    dx = grid.dx
    dens = 0.5 * state.v ** 2 + pf.R * (1.0 - np.cos(state.u + pf.phi))
    if grid.periodic:
        nodes = np.sum(dens) * dx
        du = np.roll(state.u, -1) - state.u
    else:
        nodes = (np.sum(dens) - 0.5 * (dens[0] + dens[-1])) * dx
        du = np.diff(state.u)
    grad = 0.5 * p.k * np.sum(du * du) / dx
    return float(nodes + grad)


def kink_center(state: FieldState, phi: float, grid: Grid1D) -> float:
    """Linear-interpolated crossing of the level ``pi - phi``."""
    x = grid.x
    d = state.u - (math.pi - phi)
    if d.size != x.size:
        raise CsgError("state does not match grid")
    exact = np.flatnonzero(d == 0.0)
    sign_change = np.flatnonzero(d[:-1] * d[1:] < 0.0)
    roots = [float(x[i]) for i in exact]
    for i in sign_change:
        roots.append(float(x[i] - d[i] * (x[i + 1] - x[i]) / (d[i + 1] - d[i])))
    if len(roots) != 1:
        raise KinkNotFoundError(f"expected one crossing of u = pi - phi, found {len(roots)}")
    return roots[0]


@dataclass
class EvolutionReport:
    dx: float
    dt: float
    steps: int
    error_inf: float
    max_energy_drift: float
    energies: np.ndarray = field(repr=False)
    final: FieldState = field(repr=False)


def evolve_against_analytic(spec: SolutionSpec, grid: Grid1D, t_end: float,
                            safety: float = CFL_SAFETY, track_energy: bool = True,
                            backend=None) -> EvolutionReport:
    """Evolve the analytic kink from t = 0 to ``t_end`` and compare.

    Returns the final L-infinity error against the analytic profile and the
    maximum relative energy drift seen over the run.
    """
    if spec.family is not Family.A:
        raise CsgError("evolution checks use family A kinks")
    p = spec.params
    dt, steps = cfl_dt(grid, p, t_end, safety)
    cfg = EvolveConfig(dt, steps, p)
    state = kink_state(spec, grid)
    energies = []
    final = state
    for _, st in evolve(state, cfg, grid, record_every=1 if track_energy else 0,
                        backend=backend):
        if track_energy:
            energies.append(energy(st, p, grid))
        final = st
    exact = evaluate(spec, grid.x, t_end)
    inner = slice(None) if grid.periodic else slice(1, -1)
    err = float(np.max(np.abs(final.u[inner] - exact[inner])))
    energies = np.asarray(energies)
    drift = float(np.max(np.abs(energies - energies[0])) / energies[0]) if track_energy else float("nan")
    return EvolutionReport(grid.dx, dt, steps, err, drift, energies, final)
