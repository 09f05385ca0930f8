import math

import numpy as np
import pytest
from scipy.special import genlaguerre

from bhgbeam.beam import BeamInput, derive_parameters
from bhgbeam.modes import (BeamPoint, ModeIndex, beam_radius, complex_w,
                           front_distance, gouy_nonparaxial, gouy_paraxial,
                           gouy_spacetime, laguerre, phi_lp)

S1 = derive_parameters(BeamInput(100.0, 5.0, +0.5))


def test_mode_index_validation():
    with pytest.raises(ValueError):
        ModeIndex(0, -1)
    assert ModeIndex(-2, 1).gouy_order == 1 + 2 + 2


def test_beam_point_zeta():
    p = BeamPoint(1.0, 0.3, 4.0, 2.5)
    assert p.zeta == 6.5
    with pytest.raises(ValueError):
        BeamPoint(-1.0, 0.0, 0.0, 0.0)


def test_laguerre_against_scipy():
    x = np.linspace(0.0, 20.0, 41)
    for p in range(5):
        for alpha in range(4):
            mine = laguerre(p, alpha, x)
            ref = genlaguerre(p, alpha)(x)
            assert np.allclose(mine, ref, rtol=1e-12, atol=1e-12)


def test_complex_w_waist_and_growth():
    assert complex_w(S1, 0.0) == S1.w0
    w = complex_w(S1, 100.0)
    assert abs(w) == pytest.approx(9.76301, rel=1e-5)


def test_beam_radius_matches_complex_w_magnitude():
    # |w0 (1 + 2 i kappa zeta)| = w0 sqrt(1 + (zeta/xi_R)^2) since 2 kappa = 1/xi_R...
    # here 2 kappa xi_R = k3 / (k0 + k3) != 1, so compare at zeta mapped through that factor
    for xi3 in (0.0, 10.0, 50.0):
        assert beam_radius(S1, xi3) == pytest.approx(
            S1.w0 * math.hypot(1.0, xi3 / S1.rayleigh_range), rel=1e-14)


def test_gouy_phases_agree_on_axis():
    mode = ModeIndex(0, 0)
    for xi3 in (-30.0, -5.0, 5.0, 30.0):
        nonpar = gouy_nonparaxial(S1, mode, xi3, 0.0)
        par = gouy_paraxial(S1, mode, xi3)
        assert float(nonpar) == pytest.approx(float(par), abs=1e-14)


def test_gouy_spacetime_scaling_with_order():
    zeta = 12.0
    g00 = gouy_spacetime(S1, ModeIndex(0, 0), zeta)
    g21 = gouy_spacetime(S1, ModeIndex(2, 1), zeta)
    assert float(g21) == pytest.approx(5.0 * float(g00), rel=1e-14)


def test_front_distance_odd_and_discontinuous():
    assert front_distance(0.0, 3.0) == 0.0
    assert front_distance(4.0, 3.0) == 5.0
    assert front_distance(-4.0, 3.0) == -5.0


def test_envelope_normalization_quadrature():
    # direct trapezoid check of 2 pi int |Phi|^2 rho drho = 1 (any plane)
    rho = np.linspace(0.0, 80.0, 20001)
    for mode in (ModeIndex(0, 0), ModeIndex(1, 0), ModeIndex(0, 1)):
        for zeta in (0.0, 35.0):
            vals = np.array([abs(phi_lp(S1, mode, BeamPoint(r, 0.0, zeta, 0.0))) ** 2
                             for r in rho])
            integral = 2.0 * math.pi * np.trapezoid(vals * rho, rho)
            assert integral == pytest.approx(1.0, rel=1e-6)


def test_vortex_phase_factor():
    mode = ModeIndex(3, 0)
    a = phi_lp(S1, mode, BeamPoint(2.0, 0.0, 10.0, 0.0))
    b = phi_lp(S1, mode, BeamPoint(2.0, 0.4, 10.0, 0.0))
    assert b == pytest.approx(a * np.exp(1j * 3 * 0.4), rel=1e-12)
