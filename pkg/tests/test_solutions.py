import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csgordon.errors import CsgError, IdentityUndefinedError, PoleError
from csgordon.params import CsgParams, width_parameter
from csgordon.solutions import (Family, SolutionSpec, asymptotic_vacua, case1_check, evaluate,
                                lemma1_check, limit_alpha_zero, limit_beta_zero, normal_form,
                                normal_form_profile, profile, separated_form, symmetry_check,
                                symmetry_check_AB, time_derivative)

from conftest import random_params

TWO_PI = 2 * math.pi


def fd_residual(spec, xi, h):
    """Independent finite-difference residual of (c^2-k)u'' + alpha sin u + beta cos u."""
    p = spec.params
    u = lambda q: profile(spec, q)
    u0 = u(xi)
    return (p.c ** 2 - p.k) * (u(xi + h) - 2 * u0 + u(xi - h)) / h ** 2 \
        + p.alpha * np.sin(u0) + p.beta * np.cos(u0)


def test_family_a_center_at_phi_pi():
    spec = SolutionSpec("A", CsgParams(-1, 0, 1, 0))
    # cot(pi/2) is 6e-17 in floating point
    assert abs(evaluate(spec, 0.0, 0.0)) < 1e-15


def test_family_a_at_origin_3_4():
    # cot(phi/2) = (1 + cos phi)/sin phi = 1.6/0.8 = 2
    spec = SolutionSpec("A", CsgParams(3, 4, 1, 0))
    assert evaluate(spec, 0.0, 0.0) == pytest.approx(4 * math.atan(2.0), abs=1e-14)


@pytest.mark.parametrize("phi", [0.1, 1.0, math.pi, 4.0, 6.2])
def test_family_a_vacua(phi):
    p = CsgParams.from_polar(1.3, phi, 1.0, 0.2)
    spec = SolutionSpec("A", p, 0.4)
    mu = width_parameter(p)
    lo, hi = asymptotic_vacua(spec)
    far = 30 / mu
    xi0 = spec.xi0
    assert evaluate(spec, far - xi0, 0.0) == pytest.approx(hi, abs=1e-10)
    assert evaluate(spec, -far - xi0, 0.0) == pytest.approx(lo, abs=1e-10)
    assert (lo, hi) == pytest.approx((-phi, TWO_PI - phi), abs=1e-15)
    for u_inf in (lo, hi):
        assert abs(p.R * math.sin(u_inf + phi)) < 1e-12


def test_family_b_vacua():
    spec = SolutionSpec("B", CsgParams.from_polar(1.0, 2.0))
    lo, hi = asymptotic_vacua(spec)
    assert evaluate(spec, -60.0) == pytest.approx(lo, abs=1e-10)
    assert evaluate(spec, 60.0) == pytest.approx(hi, abs=1e-10)


@pytest.mark.parametrize("family", list(Family))
def test_exact_solution_residual_order(family, rng):
    for _ in range(10):
        p = random_params(rng)
        spec = SolutionSpec(family, p, rng.uniform(-1, 1))
        mu = width_parameter(p)
        xi = -spec.xi0 + np.linspace(-12, 12, 1201) / (2 * mu) + 1e-3
        if family.singular:
            xi = xi[np.abs(xi + spec.xi0) >= 5 * 1e-2]
        res = [np.max(np.abs(fd_residual(spec, xi, h))) for h in (1e-2, 5e-3)]
        assert res[0] < 1e-4
        assert math.log2(res[0] / res[1]) == pytest.approx(2.0, abs=0.2)


def test_pole_convention():
    p = CsgParams.from_polar(1.0, 2.0)
    c = SolutionSpec("C", p, 0.5)
    d = SolutionSpec("D", p, 0.5)
    eps = 1e-9
    assert evaluate(c, -0.5) == pytest.approx(float(evaluate(c, -0.5 + eps)), abs=1e-6)
    assert evaluate(d, -0.5) == pytest.approx(float(evaluate(d, -0.5 + eps)), abs=1e-6)
    # -0.0 is still the right-sided limit
    c0 = SolutionSpec("C", p, 0.0)
    assert evaluate(c0, -0.0) == evaluate(c0, 0.0) == 2 * math.pi
    with pytest.raises(PoleError):
        evaluate(c, -0.5, strict=True)
    # jump of 4pi across the pole
    jump = evaluate(c, -0.5 + eps) - evaluate(c, -0.5 - eps)
    assert abs(abs(jump) - 4 * math.pi) < 1e-6


def test_time_derivative_matches_fd(rng):
    for fam in ("A", "B"):
        p = random_params(rng)
        spec = SolutionSpec(fam, p, 0.3)
        x = np.linspace(-5, 5, 101)
        h = 1e-5
        fd = (evaluate(spec, x, h) - evaluate(spec, x, -h)) / (2 * h)
        assert np.max(np.abs(fd - time_derivative(spec, x, 0.0))) < 1e-8
    with pytest.raises(CsgError):
        time_derivative(SolutionSpec("C", CsgParams(1, 1)), 0.0)


def test_normal_form_examples():
    nf = normal_form(SolutionSpec("A", CsgParams(-1, 0, 1, 0)))
    assert abs(nf.xi0_prime) < 1e-15
    # R = 1/4, s = 1, phi = pi/2: xi0' = 2 ln cot(pi/8) = 2 ln(1 + sqrt 2)
    nf = normal_form(SolutionSpec("A", CsgParams.from_polar(0.25, math.pi / 2, 1.0, 0.0)))
    assert nf.mu == 0.25
    assert nf.xi0_prime == pytest.approx(1.762747174039086, abs=1e-12)
    assert nf.xi0_prime == pytest.approx(2 * math.log(1 + math.sqrt(2)), abs=1e-12)


def test_normal_form_errors():
    with pytest.raises(IdentityUndefinedError):
        normal_form(replace(SolutionSpec("A", CsgParams(-1, 0)), params=CsgParams(2, 0)))
    with pytest.raises(CsgError):
        normal_form(SolutionSpec("B", CsgParams(1, 1)))


def test_normal_form_equivalence_random(rng):
    for _ in range(100):
        p = random_params(rng, R=(0.1, 4.0))
        spec = SolutionSpec("A", p, rng.uniform(-3, 3))
        nf = normal_form(spec)
        xi = nf.center + np.linspace(-15, 15, 1000) / (2 * nf.mu)
        t = rng.uniform(-2, 2)
        direct = evaluate(spec, xi + p.c * t, t)
        assert np.max(np.abs(direct - normal_form_profile(nf, xi))) < 1e-10


def test_kink_midpoint(rng):
    for _ in range(50):
        spec = SolutionSpec("A", random_params(rng), rng.uniform(-2, 2))
        nf = normal_form(spec)
        assert profile(spec, -nf.xi0_prime) == pytest.approx(math.pi - nf.phi, abs=1e-10)


@pytest.mark.parametrize("p", [CsgParams(-1, 0), CsgParams(3, 4, 1, 0.5), CsgParams(0.3, -2, 1.5, -0.7)])
@pytest.mark.parametrize("xi0", [0.0, 0.8])
def test_symmetry(p, xi0):
    x = np.linspace(-10, 10, 1000)
    t = np.linspace(-3, 3, 1000)
    assert symmetry_check_AB(SolutionSpec("A", p, xi0), x, t) < 1e-10
    assert symmetry_check(SolutionSpec("C", p, xi0), x, t) < 1e-10


def test_symmetry_needs_xi0_negation():
    spec = SolutionSpec("A", CsgParams(3, 4, 1, 0.5), 0.8)
    x = np.linspace(-10, 10, 1000)
    assert symmetry_check_AB(spec, x, 0.0, negate_xi0=False) > 1e-2
    assert symmetry_check_AB(replace(spec, xi0=0.0), x, 0.0, negate_xi0=False) < 1e-10


@pytest.mark.parametrize("x", [1e-4, 1e-6, 1e-8])
def test_lemma1(x):
    lhs, rhs = lemma1_check(x)
    assert abs(lhs - rhs) < x


def test_lemma1_ordering_and_domain():
    g = [abs(np.subtract(*lemma1_check(x))) for x in (1e-4, 1e-6)]
    assert g[0] > g[1]
    for bad in (0.0, -1.0, 2.0):
        with pytest.raises(CsgError):
            lemma1_check(bad)


def test_case1():
    assert limit_alpha_zero(2.0, 0.0) == 0.0
    assert limit_alpha_zero(2.0, 50.0) == pytest.approx(math.pi, abs=1e-14)
    xi = np.linspace(-10, 10, 1001)
    assert case1_check(1.0, 1.0, xi) < 1e-12
    assert case1_check(2.5, 0.7, xi, 0.3) < 1e-12
    with pytest.raises(CsgError):
        limit_alpha_zero(0.0, 1.0)


def test_case2():
    base = SolutionSpec("A", CsgParams(1.0, 1.0))
    d = [limit_beta_zero(base, b) for b in (1e-3, 1e-4, 1e-6)]
    assert d[0] < 1e-2
    assert d[0] > d[1] > d[2]
    # frozen linear bound: gap ~ phi ~ beta/alpha
    for beta, gap in zip((1e-3, 1e-4, 1e-6), d):
        assert gap < 1.1 * beta
    phis = [SolutionSpec("A", CsgParams(1.0, b)).phase.phi for b in (1e-3, 1e-6, 1e-9)]
    assert phis[0] > phis[1] > phis[2] > 0
    with pytest.raises(CsgError):
        limit_beta_zero(base, 0.0)
    with pytest.raises(CsgError):
        limit_beta_zero(SolutionSpec("A", CsgParams(-1.0, 1.0)), 1e-3)


@settings(max_examples=200)
@given(st.floats(-8, 8), st.floats(-3, 3), st.floats(-3, 3), st.sampled_from(list("ABCD")))
def test_translation_covariance(x, delta, xi0, fam):
    spec = SolutionSpec(fam, CsgParams(0.6, -0.4, 1.0, 0.0), xi0)
    shifted = replace(spec, xi0=xi0 + delta)
    if fam in "CD" and abs(x + delta + xi0) < 1e-6:
        return
    assert evaluate(shifted, x, 0.0) == pytest.approx(float(evaluate(spec, x + delta, 0.0)), abs=1e-14)


def test_separated_form(rng):
    F = rng.uniform(-5, 5, 500)
    G = rng.uniform(0.1, 5, 500)
    for phi in (0.3, 2.0, 5.5):
        lhs, rhs = separated_form(F, G, phi)
        d = np.mod(lhs - rhs + 2 * math.pi, 4 * math.pi) - 2 * math.pi
        assert np.max(np.abs(d)) < 1e-12
