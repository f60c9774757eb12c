"""Closed-form traveling-wave families and their exact relations.

With ``mu`` the width parameter, ``z = x - c t + xi0`` and the polar phase
``phi`` of ``(alpha, beta)``, the four families are::

    A:  4 arctan( tanh(mu z)/|sin(phi/2)| + cot(phi/2) )
    B:  4 arccot( tanh(mu z)/|sin(phi/2)| - cot(phi/2) )
    C:  4 arctan( coth(mu z)/|sin(phi/2)| + cot(phi/2) )
    D:  4 arccot( coth(mu z)/|sin(phi/2)| - cot(phi/2) )

Branches: arctan is principal, arccot(y) = atan2(1, y) in (0, pi).
C and D jump by 4pi across their pole ``z = 0``; at exactly ``z = 0`` the
right-sided limit is returned unless ``strict=True``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import CsgError, IdentityUndefinedError, PoleError
from .params import CsgParams, PhaseForm, to_phase_form, width_parameter

__all__ = [
    "Family",
    "SolutionSpec",
    "NormalForm",
    "evaluate",
    "profile",
    "time_derivative",
    "normal_form",
    "normal_form_profile",
    "asymptotic_vacua",
    "symmetry_check",
    "symmetry_check_AB",
    "lemma1_check",
    "limit_alpha_zero",
    "case1_check",
    "limit_beta_zero",
    "separated_form",
]


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def singular(self) -> bool:
        return self in (Family.C, Family.D)

    @property
    def partner(self) -> "Family":
        return {Family.A: Family.B, Family.B: Family.A,
                Family.C: Family.D, Family.D: Family.C}[self]


@dataclass(frozen=True)
class SolutionSpec:
    family: Family
    params: CsgParams
    xi0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        self.params.validate()

    @property
    def phase(self) -> PhaseForm:
        return to_phase_form(self.params)

    @property
    def mu(self) -> float:
        return width_parameter(self.params)

    def __call__(self, x, t=0.0, strict=False):
        return evaluate(self, x, t, strict=strict)


@dataclass(frozen=True)
class NormalForm:
    """``u = -phi + 4 arctan(exp(2 mu (xi + xi0_prime)))``."""

    phi: float
    xi0_prime: float
    mu: float

    @property
    def center(self) -> float:
        return -self.xi0_prime


def _coefficients(params: CsgParams) -> tuple[float, float, float, float]:
    pf = to_phase_form(params)
    half = 0.5 * pf.phi
    sin_half = math.sin(half)
    # phi in [0, 2pi) keeps sin(phi/2) >= 0; the |.| is inert
    assert sin_half >= 0.0
    if sin_half == 0.0:
        raise IdentityUndefinedError(
            "phi = 0 (beta = 0, alpha > 0): tanh/coth families degenerate; "
            "use limit_beta_zero"
        )
    amp = 1.0 / sin_half
    offset = math.cos(half) / sin_half
    return pf.phi, width_parameter(params), amp, offset


def evaluate(spec: SolutionSpec, x, t=0.0, strict: bool = False):
    """u(x, t) for the given family; vectorised over ``x`` and ``t``."""
    phi, mu, amp, offset = _coefficients(spec.params)
    c = spec.params.c
    z = np.asarray(x, dtype=float) - c * np.asarray(t, dtype=float) + spec.xi0
    return _from_z(spec.family, z, mu, amp, offset, strict)


def profile(spec: SolutionSpec, xi, strict: bool = False):
    """u as a function of the traveling coordinate ``xi = x - c t``."""
    phi, mu, amp, offset = _coefficients(spec.params)
    z = np.asarray(xi, dtype=float) + spec.xi0
    return _from_z(spec.family, z, mu, amp, offset, strict)


def _from_z(family: Family, z, mu, amp, offset, strict):
    arg = mu * z
    if family.singular:
        at_pole = z == 0.0
        if strict and np.any(at_pole):
            raise PoleError("evaluation at the pole xi + xi0 = 0 of a coth family")
        with np.errstate(divide="ignore"):
            hyp = 1.0 / np.tanh(arg)
        # right-sided limit, also for z = -0.0
        hyp = np.where(at_pole, np.inf, hyp)
    else:
        hyp = np.tanh(arg)
    if family in (Family.A, Family.C):
        u = 4.0 * np.arctan(amp * hyp + offset)
    else:
        u = 4.0 * np.arctan2(1.0, amp * hyp - offset)
    return u if np.ndim(u) else float(u)


def time_derivative(spec: SolutionSpec, x, t=0.0):
    """Analytic du/dt for the tanh families (A, B).

    For A: u = 4 arctan(y), y = amp tanh(mu z) + offset, dz/dt = -c, so
    du/dt = -4 c mu amp sech^2(mu z) / (1 + y^2).  B has the opposite sign.
    """
    if spec.family.singular:
        raise CsgError("time derivative only provided for the regular families A, B")
    phi, mu, amp, offset = _coefficients(spec.params)
    c = spec.params.c
    z = np.asarray(x, dtype=float) - c * np.asarray(t, dtype=float) + spec.xi0
    th = np.tanh(mu * z)
    sech2 = 1.0 - th * th
    if spec.family is Family.A:
        y = amp * th + offset
        return -4.0 * c * mu * amp * sech2 / (1.0 + y * y)
    y = amp * th - offset
    return 4.0 * c * mu * amp * sech2 / (1.0 + y * y)


def normal_form(spec: SolutionSpec) -> NormalForm:
    """Rewrite family A as a phase-shifted standard kink.

    ``xi0_prime = xi0 + ln(cot(phi/4)) / (2 mu)``; at ``mu = 1/4`` this is
    ``xi0 + 2 ln cot(phi/4)``.
    """
    if spec.family is not Family.A:
        raise CsgError("normal form is defined for family A")
    pf = spec.phase
    if math.sin(0.5 * pf.phi) == 0.0:
        raise IdentityUndefinedError("phi = 0 has no normal form; use limit_beta_zero")
    mu = spec.mu
    shift = math.log(1.0 / math.tan(0.25 * pf.phi)) / (2.0 * mu)
    return NormalForm(phi=pf.phi, xi0_prime=spec.xi0 + shift, mu=mu)


def normal_form_profile(nf: NormalForm, xi):
    with np.errstate(over="ignore"):
        e = np.exp(2.0 * nf.mu * (np.asarray(xi, dtype=float) + nf.xi0_prime))
    u = -nf.phi + 4.0 * np.arctan(e)
    return u if np.ndim(u) else float(u)


def asymptotic_vacua(spec: SolutionSpec) -> tuple[float, float]:
    """Limits of family A/B as xi -> -inf and xi -> +inf."""
    phi = spec.phase.phi
    if spec.family is Family.A:
        return -phi, 2.0 * math.pi - phi
    if spec.family is Family.B:
        return 4.0 * math.pi - phi, 2.0 * math.pi - phi
    raise CsgError("asymptotic vacua are tabulated for the regular families only")


def symmetry_check(spec: SolutionSpec, x, t=0.0, negate_xi0: bool = True) -> float:
    """sup |u_partner(x, t) - (u_spec(-x, -t) + 2pi)| over the sample points.

    ``spec`` must be family A or C; the partner (B or D) is built with the
    same parameters and ``-xi0`` (``x -> -x, t -> -t`` maps ``xi + xi0`` to
    ``-(xi - xi0)``).  Points exactly on a coth pole are skipped.
    """
    if spec.family not in (Family.A, Family.C):
        raise CsgError("symmetry_check takes a family A or C spec")
    partner = replace(spec, family=spec.family.partner,
                      xi0=-spec.xi0 if negate_xi0 else spec.xi0)
    x = np.asarray(x, dtype=float)
    t = np.broadcast_to(np.asarray(t, dtype=float), x.shape)
    lhs = np.asarray(evaluate(partner, x, t))
    rhs = np.asarray(evaluate(spec, -x, -t)) + 2.0 * math.pi
    diff = np.abs(lhs - rhs)
    if spec.family.singular:
        c = spec.params.c
        keep = (x - c * t + partner.xi0 != 0.0) & (-x + c * t + spec.xi0 != 0.0)
        diff = diff[keep]
    return float(np.max(diff))


def symmetry_check_AB(spec_a: SolutionSpec, x, t=0.0, negate_xi0: bool = True) -> float:
    if spec_a.family is not Family.A:
        raise CsgError("symmetry_check_AB takes a family A spec")
    return symmetry_check(spec_a, x, t, negate_xi0)


def lemma1_check(x_small: float) -> tuple[float, float]:
    """``(artanh(x - 1), ln(x/2)/2)``; the gap is O(x) as x -> 0+."""
    if not 0.0 < x_small < 2.0:
        raise CsgError(f"lemma1_check needs 0 < x < 2, got {x_small!r}")
    return math.atanh(x_small - 1.0), 0.5 * math.log(0.5 * x_small)


def limit_alpha_zero(b: float, xi, xi0: float = 0.0):
    """The a = 0 reduction: ``4 arctan(tanh(b (xi + xi0) / 4))``."""
    if b == 0.0:
        raise CsgError("limit_alpha_zero needs b != 0")
    u = 4.0 * np.arctan(np.tanh(0.25 * b * (np.asarray(xi, dtype=float) + xi0)))
    return u if np.ndim(u) else float(u)


def case1_check(R: float, s: float, xi, xi0: float = 0.0) -> float:
    """sup-difference between family A on the negative alpha axis
    (alpha = -R, beta = 0, so a = 0) and :func:`limit_alpha_zero`."""
    p = CsgParams(alpha=-R, beta=0.0, k=s, c=0.0)
    spec = SolutionSpec(Family.A, p, xi0)
    b = 2.0 * math.sqrt(R / s)
    return float(np.max(np.abs(profile(spec, xi) - limit_alpha_zero(b, xi, xi0))))


def limit_beta_zero(spec_a: SolutionSpec, beta_small: float, half_width: float = 10.0,
                    n: int = 1001) -> float:
    """Distance of family A from the pure sine-Gordon kink as beta -> 0+.

    With alpha > 0 fixed and beta = beta_small, compares family A to
    ``4 arctan(exp(a (xi + xi0') / 2))`` where the divergent constant is
    absorbed in ``xi0'`` (the normal-form reference point).  The sample grid
    is ``half_width / mu`` either side of the kink center.  The gap is
    dominated by phi ~ beta/alpha and vanishes linearly.
    """
    if not beta_small > 0.0:
        raise CsgError("beta_small must be positive")
    p0 = spec_a.params
    if not p0.alpha > 0.0:
        raise CsgError("limit_beta_zero needs alpha > 0")
    spec = replace(spec_a, family=Family.A, params=p0.with_(beta=beta_small))
    nf = normal_form(spec)
    a = spec.phase.a
    xi = nf.center + np.linspace(-half_width, half_width, n) / nf.mu
    with np.errstate(over="ignore"):
        pure = 4.0 * np.arctan(np.exp(0.5 * a * (xi + nf.xi0_prime)))
    return float(np.max(np.abs(profile(spec, xi) - pure)))


def separated_form(F, G, phi: float):
    """Both sides of ``-phi + 4 arctan(F/G)`` =
    ``4 arctan((F cos(phi/4) - G sin(phi/4)) / (F sin(phi/4) + G cos(phi/4)))``.

    They agree modulo 4pi (the two arctans sit on branches offset by pi).
    """
    F = np.asarray(F, dtype=float)
    G = np.asarray(G, dtype=float)
    cq, sq = math.cos(0.25 * phi), math.sin(0.25 * phi)
    lhs = -phi + 4.0 * np.arctan(F / G)
    rhs = 4.0 * np.arctan((F * cq - G * sq) / (F * sq + G * cq))
    return lhs, rhs
