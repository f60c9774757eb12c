"""Parameter algebra for u_tt - k u_xx + alpha sin u + beta cos u = 0.

Three equivalent descriptions are kept in sync here:

* PDE coefficients ``(alpha, beta, k, c)``,
* ODE coefficients ``(a, b)`` of the first-order reduction
  ``u' = a sin(u/2) + b cos(u/2)``,
* polar form ``(R, phi)`` with ``alpha = R cos phi``, ``beta = R sin phi``.

Quantities that are differences of nearly equal numbers (``R - alpha`` for
small ``phi``, ``R + alpha`` near ``phi = pi``) are evaluated through the
product identity ``(R - alpha)(R + alpha) = beta**2`` so every field of
:class:`PhaseForm` carries only a few ulps of error.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateParametersError, IdentityUndefinedError

TWO_PI = 2.0 * math.pi

#: below these the parameters are rejected rather than treated as limits
R_MIN = 1e-300
S_MIN = 1e-12


@dataclass(frozen=True)
class CsgParams:
    """PDE-level coefficients: ``alpha sin u + beta cos u``, medium speed^2 ``k``,
    traveling speed ``c``."""

    alpha: float
    beta: float
    k: float = 1.0
    c: float = 0.0

    @property
    def s(self) -> float:
        return self.k - self.c * self.c

    @property
    def R(self) -> float:
        return math.hypot(self.alpha, self.beta)

    def validate(self) -> "CsgParams":
        vals = (self.alpha, self.beta, self.k, self.c)
        if not all(math.isfinite(v) for v in vals):
            raise DegenerateParametersError(f"non-finite parameters {vals}")
        if self.s < S_MIN:
            raise DegenerateParametersError(
                f"k - c^2 = {self.s:g} must be positive (traveling regime needs |c| < sqrt(k))"
            )
        if self.R < R_MIN:
            raise DegenerateParametersError("alpha = beta = 0 has no kink family")
        return self

    def with_(self, **changes) -> "CsgParams":
        d = dict(alpha=self.alpha, beta=self.beta, k=self.k, c=self.c)
        d.update(changes)
        return CsgParams(**d)

    @classmethod
    def from_polar(cls, R: float, phi: float, k: float = 1.0, c: float = 0.0) -> "CsgParams":
        return cls(R * math.cos(phi), R * math.sin(phi), k, c)


@dataclass(frozen=True)
class PhaseForm:
    R: float
    phi: float
    gamma: float
    a: float
    b: float
    s: float

    @property
    def alpha(self) -> float:
        return self.R * math.cos(self.phi)

    @property
    def beta(self) -> float:
        return self.R * math.sin(self.phi)


def wrap_angle(phi: float) -> float:
    """Map an angle into [0, 2pi)."""
    w = math.fmod(phi, TWO_PI)
    if w < 0.0:
        w += TWO_PI
    # fmod(-tiny) + 2pi rounds to 2pi
    return 0.0 if w >= TWO_PI else w


def _gamma_and_sum(alpha: float, beta: float, R: float) -> tuple[float, float]:
    # (R - alpha, R + alpha) without cancellation
    if alpha > 0.0:
        plus = R + alpha
        return beta * beta / plus, plus
    minus = R - alpha
    return minus, (beta * beta / minus if minus > 0.0 else 0.0)


def derive_ode_coeffs(p: CsgParams) -> tuple[float, float]:
    """Return ``(a, b)`` with ``ab = 2 beta/s`` and ``a^2 - b^2 = 4 alpha/s``.

    Gauge: ``a >= 0``; ``b`` takes the sign of ``beta`` when ``a > 0`` and is
    non-negative when ``a = 0``.
    """
    p.validate()
    R, s = p.R, p.s
    gamma, plus = _gamma_and_sum(p.alpha, p.beta, R)
    a = math.sqrt(2.0 * plus / s)
    b = math.sqrt(2.0 * gamma / s)
    if a > 0.0 and p.beta < 0.0:
        b = -b
    return a, b


def to_phase_form(p: CsgParams) -> PhaseForm:
    p.validate()
    R = p.R
    phi = wrap_angle(math.atan2(p.beta, p.alpha))
    gamma, _ = _gamma_and_sum(p.alpha, p.beta, R)
    a, b = derive_ode_coeffs(p)
    return PhaseForm(R=R, phi=phi, gamma=gamma, a=a, b=b, s=p.s)


def amplitude_identity_check(f: PhaseForm) -> float:
    """|2 sqrt(R)/sqrt(2 gamma) - 1/|sin(phi/2)||.

    The left side is built from (R, gamma), the right side from phi alone, so
    a small result is a genuine check that both were derived consistently.
    """
    if f.gamma <= 0.0 or math.sin(0.5 * f.phi) == 0.0:
        raise IdentityUndefinedError("gamma = 0 (phi = 0 mod 2pi): identity undefined")
    lhs = 2.0 * math.sqrt(f.R) / math.sqrt(2.0 * f.gamma)
    rhs = 1.0 / abs(math.sin(0.5 * f.phi))
    return abs(lhs - rhs)


def width_parameter(p: CsgParams) -> float:
    """Inverse-width ``mu = R^(1/2) / (2 sqrt(k - c^2))`` multiplying ``x - ct``
    inside the tanh/coth of the closed-form families."""
    p.validate()
    return math.sqrt(p.R) / (2.0 * math.sqrt(p.s))
