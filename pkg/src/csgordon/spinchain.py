"""Spin-chain application: external fields set the sine-Gordon phase, and
sweeping that phase slides the static kink (and the S^z it carries).

Conventions
-----------
The chain's continuum field obeys ``theta_tt = v^2 theta_zz + R sin(theta + phi_chain)``
with ``phi_chain = phi_prime + pi/2``, where ``phi_prime`` is the polar angle
of ``(h_st, Delta)``.  Moving the force to the left-hand side gives the
combined sine-cosine-Gordon form with ``(alpha, beta) = R (cos, sin)(phi_chain + pi)``.

Everything downstream (kink profile, reference-point shift, pump schedules)
is parametrised by that combined-form phase, called ``phi`` here; it is
related to the field angle by ``phi = phi_prime + 3pi/2 (mod 2pi)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CsgError, DivergenceError
from .params import TWO_PI, CsgParams, to_phase_form, width_parameter, wrap_angle
from .pde import Grid1D, kink_center, kink_state
from .solutions import Family, SolutionSpec, normal_form


@dataclass(frozen=True)
class SpinChainParams:
    J: float
    R_prime: float
    phi_prime: float
    a_lat: float
    eta: float
    v: float

    def __post_init__(self):
        if not self.a_lat > 0.0:
            raise CsgError("lattice constant a_lat must be positive")
        if not self.eta > 0.0:
            raise CsgError("Luttinger parameter eta must be positive")
        if not self.R_prime > 0.0:
            raise CsgError("field radius R' must be positive")
        if not self.v > 0.0:
            raise CsgError("velocity v must be positive")

    @classmethod
    def from_lattice(cls, J: float, a_lat: float, R_prime: float, phi_prime: float) -> "SpinChainParams":
        """Derive ``v`` and ``eta`` from the exchange ``J`` and lattice constant."""
        if not (J > 0.0 and a_lat > 0.0):
            raise CsgError("J and a_lat must be positive")
        v = 0.5 * J * math.sqrt(1.0 + 2.0 / (math.pi * a_lat))
        eta = 2.0 * math.sqrt(math.pi * a_lat / (2.0 + math.pi * a_lat))
        return cls(J, R_prime, phi_prime, a_lat, eta, v)

    @property
    def fields(self) -> tuple[float, float]:
        """``(h_st, Delta)``."""
        return self.R_prime * math.cos(self.phi_prime), self.R_prime * math.sin(self.phi_prime)

    def with_phase(self, phi: float) -> "SpinChainParams":
        """Same chain with the field angle that produces combined-form phase ``phi``."""
        return SpinChainParams(self.J, self.R_prime, phi_prime_for(phi), self.a_lat,
                               self.eta, self.v)


def phi_prime_for(phi: float) -> float:
    """Field angle giving combined-form phase ``phi``."""
    return wrap_angle(phi - 1.5 * math.pi)


def map_to_csg(sp: SpinChainParams) -> tuple[CsgParams, float]:
    """Return the static combined-form parameters and the chain phase
    ``phi_chain = phi_prime + pi/2`` (wrapped to [0, 2pi))."""
    phi_chain = wrap_angle(sp.phi_prime + 0.5 * math.pi)
    R = 2.0 * sp.eta * sp.R_prime / (sp.a_lat * sp.a_lat)
    phi_eff = phi_chain + math.pi
    p = CsgParams(R * math.cos(phi_eff), R * math.sin(phi_eff), k=sp.v * sp.v, c=0.0)
    return p.validate(), phi_chain


def csg_to_chain(p: CsgParams, a_lat: float, eta: float) -> tuple[float, float]:
    """Inverse of :func:`map_to_csg` on ``(R', phi')`` given the chain's
    ``a_lat`` and ``eta``."""
    pf = to_phase_form(p)
    R_prime = a_lat * a_lat * pf.R / (2.0 * eta)
    phi_chain = wrap_angle(pf.phi - math.pi)
    return R_prime, wrap_angle(phi_chain - 0.5 * math.pi)


@dataclass(frozen=True)
class PumpSchedule:
    phi_start: float
    phi_end: float
    n_points: int

    def __post_init__(self):
        if self.n_points < 2:
            raise CsgError("a pump schedule needs at least 2 points")
        for phi in (self.phi_start, self.phi_end):
            if not 0.0 <= phi <= TWO_PI:
                raise CsgError(f"schedule phase {phi!r} outside [0, 2pi]")

    @property
    def phis(self) -> np.ndarray:
        return np.linspace(self.phi_start, self.phi_end, self.n_points)


def _check_open(phi: float) -> None:
    if not 0.0 < phi < TWO_PI:
        raise DivergenceError(f"phi = {phi!r}: reference-point shift diverges at 0 and 2pi")


def kink_center_for(phi: float, mu: float, xi0: float = 0.0) -> float:
    """Analytic kink center ``-(xi0 + ln(cot(phi/4)) / (2 mu))``."""
    _check_open(phi)
    return -(xi0 + math.log(1.0 / math.tan(0.25 * phi)) / (2.0 * mu))


def soliton_shift(sched: PumpSchedule, mu: float, xi0: float = 0.0) -> np.ndarray:
    """``(phi, center)`` rows along the schedule; center increases with phi."""
    phis = sched.phis
    return np.column_stack([phis, [kink_center_for(float(f), mu, xi0) for f in phis]])


def _kink_above_vacuum(z, phi, mu, xi0):
    # theta + phi: rises from 0 to 2pi through the kink
    c = kink_center_for(phi, mu, xi0)
    with np.errstate(over="ignore"):
        return 4.0 * np.arctan(np.exp(2.0 * mu * (z - c)))


def transported_spin(phi_1: float, phi_2: float, z0: float, mu: float, xi0: float = 0.0) -> float:
    """Net S^z carried rightward past ``z0`` when the phase goes ``phi_1 -> phi_2``.

    Uses the smooth part ``d_z theta / 2pi`` of S^z.  Integrated from the
    left vacuum, the spin to the left of ``z0`` is ``(theta(z0) + phi)/2pi``,
    so the transported amount is the drop of that quantity.  A kink whose
    center sweeps from far left to far right of ``z0`` moves exactly one unit.
    """
    w1 = _kink_above_vacuum(z0, phi_1, mu, xi0)
    w2 = _kink_above_vacuum(z0, phi_2, mu, xi0)
    return float((w1 - w2) / TWO_PI)


def pump_rows(sched: PumpSchedule, grid: Grid1D, chain: SpinChainParams,
              xi0: float = 0.0, z0: float = 0.0) -> list[dict]:
    """One row per schedule point: analytic vs measured center and the spin
    transported past ``z0`` since the first non-divergent point.  Points where
    the shift diverges are reported with ``status`` set and NaN values."""
    rows = []
    phis = sched.phis
    inside = [float(f) for f in phis if 0.0 < f < TWO_PI]
    phi_ref = inside[0] if inside else math.nan
    for phi in phis:
        phi = float(phi)
        sp = chain.with_phase(phi)
        row = dict(phi_prime=sp.phi_prime, phi=phi, center_analytic=math.nan,
                   center_measured=math.nan, transported_spin=math.nan, status="ok")
        try:
            p, _ = map_to_csg(sp)
            mu = width_parameter(p)
            row["center_analytic"] = kink_center_for(phi, mu, xi0)
            spec = SolutionSpec(Family.A, p, xi0)
            state = kink_state(spec, grid)
            row["center_measured"] = kink_center(state, to_phase_form(p).phi, grid)
            row["transported_spin"] = transported_spin(phi_ref, phi, z0, mu, xi0)
        except CsgError as exc:
            row["status"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def pump_consistency(sched: PumpSchedule, grid: Grid1D, chain: SpinChainParams | None = None,
                     xi0: float = 0.0) -> float:
    """sup |measured center - analytic center| over the schedule."""
    chain = chain or default_chain()
    worst = 0.0
    for phi in sched.phis:
        phi = float(phi)
        p, _ = map_to_csg(chain.with_phase(phi))
        spec = SolutionSpec(Family.A, p, xi0)
        measured = kink_center(kink_state(spec, grid), to_phase_form(p).phi, grid)
        predicted = -normal_form(spec).xi0_prime
        analytic = kink_center_for(phi, width_parameter(p), xi0)
        if abs(predicted - analytic) > 1e-9 * max(1.0, abs(analytic)):
            raise CsgError("normal form and shift formula disagree; phase mapping broken")
        worst = max(worst, abs(measured - analytic))
    return worst


def default_chain(phi_prime: float = 0.0) -> SpinChainParams:
    """R' = 1/4, eta = 2, a_lat = 1 (so R = 1) and v = 1."""
    return SpinChainParams(J=1.0, R_prime=0.25, phi_prime=phi_prime, a_lat=1.0, eta=2.0, v=1.0)
