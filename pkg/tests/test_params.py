import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csgordon.errors import DegenerateParametersError, IdentityUndefinedError
from csgordon.params import (CsgParams, amplitude_identity_check, derive_ode_coeffs,
                             to_phase_form, width_parameter, wrap_angle)


def back_substitute(p, a, b):
    """Residuals of ab = 2 beta/s and a^2 - b^2 = 4 alpha/s."""
    s = p.k - p.c ** 2
    return a * b - 2 * p.beta / s, a * a - b * b - 4 * p.alpha / s


@pytest.mark.parametrize("p, expected", [
    (CsgParams(1, 0, 1, 0), (2.0, 0.0)),
    (CsgParams(3, 4, 1, 0), (4.0, 2.0)),
    (CsgParams(-1, 0, 1, 0), (0.0, 2.0)),
])
def test_ode_coeff_examples(p, expected):
    a, b = derive_ode_coeffs(p)
    assert (a, b) == pytest.approx(expected, abs=1e-14)
    r1, r2 = back_substitute(p, a, b)
    assert abs(r1) < 1e-13 and abs(r2) < 1e-13


def test_sign_gauge():
    a, b = derive_ode_coeffs(CsgParams(3, -4, 1, 0))
    assert a > 0 and b < 0
    a, b = derive_ode_coeffs(CsgParams(-3, -4, 1, 0))
    assert a > 0 and b < 0


@pytest.mark.parametrize("bad", [CsgParams(1, 0, 1, 1), CsgParams(1, 0, 1, 2),
                                 CsgParams(0, 0, 1, 0), CsgParams(math.nan, 1, 1, 0)])
def test_degenerate_rejected(bad):
    with pytest.raises(DegenerateParametersError):
        derive_ode_coeffs(bad)
    with pytest.raises(DegenerateParametersError):
        to_phase_form(bad)


def test_phase_form_examples():
    f = to_phase_form(CsgParams(0, 1, 1, 0))
    assert (f.R, f.phi, f.gamma) == pytest.approx((1, math.pi / 2, 1), abs=1e-15)
    f = to_phase_form(CsgParams(3, 4, 1, 0))
    assert f.R == 5 and f.gamma == pytest.approx(2, abs=1e-14)
    assert f.phi == pytest.approx(0.9272952180016122, abs=1e-12)
    assert abs(5 * math.cos(f.phi) - 3) < 1e-12 and abs(5 * math.sin(f.phi) - 4) < 1e-12
    f = to_phase_form(CsgParams(-1, 0, 1, 0))
    assert (f.R, f.phi, f.gamma) == (1, math.pi, 2)


def test_phi_interval():
    assert to_phase_form(CsgParams(1, -1e-300)).phi < 2 * math.pi
    assert to_phase_form(CsgParams(1, -1)).phi == pytest.approx(7 * math.pi / 4)
    assert wrap_angle(-1e-20) < 2 * math.pi
    assert wrap_angle(2 * math.pi) == 0.0


def test_gamma_zero_iff_phi_zero():
    f = to_phase_form(CsgParams(2, 0))
    assert f.phi == 0 and f.gamma == 0
    with pytest.raises(IdentityUndefinedError):
        amplitude_identity_check(f)


@pytest.mark.parametrize("p", [CsgParams(-1, 0), CsgParams(3, 4), CsgParams(0, 1)])
def test_amplitude_identity_examples(p):
    assert amplitude_identity_check(to_phase_form(p)) < 1e-12


def test_amplitude_identity_independent_value():
    # 1/|sin(phi/2)| = sqrt(2R/(R - alpha)) = sqrt(5) for (3, 4)
    f = to_phase_form(CsgParams(3, 4))
    assert 1 / math.sin(f.phi / 2) == pytest.approx(math.sqrt(5), rel=1e-14)


@pytest.mark.parametrize("p, mu", [
    (CsgParams(1, 0, 1, 0), 0.5),
    (CsgParams(3, 4, 1, 0), math.sqrt(20) / 4),
    (CsgParams(1, 0, 2, 1), 0.5),
])
def test_width_examples(p, mu):
    assert width_parameter(p) == pytest.approx(mu, rel=1e-14)
    a, b = derive_ode_coeffs(p)
    assert math.hypot(a, b) / 4 == pytest.approx(mu, rel=1e-14)


def test_phase_form_invariants_random(rng):
    n = 10_000
    R = rng.uniform(0.01, 10, n)
    phi = rng.uniform(0, 2 * math.pi, n)
    s = rng.uniform(0.01, 10, n)
    for Ri, fi, si in zip(R, phi, s):
        p = CsgParams(Ri * math.cos(fi), Ri * math.sin(fi), si, 0.0)
        f = to_phase_form(p)
        assert abs(f.a ** 2 + f.b ** 2 - 4 * f.R / si) <= 1e-10 * 4 * f.R / si
        r1, r2 = back_substitute(p, f.a, f.b)
        scale = 4 * f.R / si
        assert abs(r1) <= 1e-10 * scale and abs(r2) <= 1e-10 * scale


finite = st.floats(-1e3, 1e3, allow_nan=False)


@given(finite, finite)
def test_round_trip(alpha, beta):
    if math.hypot(alpha, beta) < 1e-6:
        return
    f = to_phase_form(CsgParams(alpha, beta))
    R = f.R
    assert abs(R * math.cos(f.phi) - alpha) <= 1e-12 * R
    assert abs(R * math.sin(f.phi) - beta) <= 1e-12 * R
    assert 0 <= f.phi < 2 * math.pi
    assert f.gamma >= 0 and f.a >= 0


@settings(max_examples=300)
@given(st.floats(0.01, 2 * math.pi - 0.01), st.floats(0.01, 100))
def test_amplitude_identity_property(phi, R):
    assert amplitude_identity_check(to_phase_form(CsgParams.from_polar(R, phi))) < 1e-12


@given(st.floats(0.1, 5), st.floats(0, 0.9), st.floats(0, 10))
def test_width_depends_on_s_only(k, c_frac, delta):
    c = c_frac * math.sqrt(k)
    p = CsgParams(0.7, -0.3, k, c)
    q = CsgParams(0.7, -0.3, k + delta, math.sqrt(c * c + delta))
    assert width_parameter(q) == pytest.approx(width_parameter(p), rel=1e-12)
