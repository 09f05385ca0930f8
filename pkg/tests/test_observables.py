import math

import numpy as np
import pytest
from scipy.integrate import quad

from bhgbeam.beam import BeamInput, derive_parameters
from bhgbeam.constants import HBARC_KEV_PM
from bhgbeam.modes import ModeIndex
from bhgbeam.observables import (QuadratureError, QuadratureSpec,
                                 angular_momenta, berry_phase, compute_report,
                                 expect_transverse, four_momentum,
                                 gouy_expected, gouy_total_shift, mode_overlap,
                                 mode_weights, radial_momentum_sq,
                                 soi_ratio_closed, soi_term,
                                 transverse_current, truncation_defect)
from bhgbeam.spinor import radial_components

S1 = derive_parameters(BeamInput(100.0, 5.0, +0.5))
SPEC = QuadratureSpec(nodes=128)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(nodes=8)
    with pytest.raises(ValueError):
        QuadratureSpec(cutoff=2.0)


def test_expect_transverse_against_scipy():
    # adaptive scipy quadrature as an independent oracle for one density
    def density(rho):
        comps = radial_components(S1, rho, 0.0, truncated=True)
        return sum(np.abs(c) ** 2 for c, _ in comps)

    mine = expect_transverse(density, S1, 0.0, SPEC)
    ref, err = quad(lambda r: float(density(np.array([r]))[0]) * r, 0.0, 80.0,
                    limit=200)
    assert float(np.real(mine)) == pytest.approx(2.0 * math.pi * ref, abs=1e-10)


def test_mode_weights_sum_to_inverse_c_sq():
    wts = mode_weights(S1)
    total = wts.w00 + wts.w01 + wts.w10
    assert total * S1.c_norm ** 2 == pytest.approx(1.0, rel=1e-14)


def test_mode_overlap_orthonormal():
    modes = [ModeIndex(0, 0), ModeIndex(0, 1), ModeIndex(1, 0)]
    for i, a in enumerate(modes):
        for b in modes:
            ov = mode_overlap(S1, a, b, 0.0, SPEC)
            expected = 1.0 if a == b else 0.0
            assert abs(ov) == pytest.approx(expected, abs=1e-11)


def test_current_truncated_closed_forms():
    j = transverse_current(S1, 0.0, SPEC, truncated=True)
    assert j[0] == pytest.approx(1.0, abs=1e-10)
    assert j[3] == pytest.approx(S1.k3 / S1.k0, abs=1e-10)
    assert j[3] == pytest.approx(0.5405570881, rel=1e-9)


def test_current_exact_field():
    j = transverse_current(S1, 0.0, SPEC, truncated=False)
    b, k3, kap, k0 = S1.b_weight, S1.k3, S1.kappa, S1.k0
    assert j[0] == pytest.approx(1.0, abs=1e-10)
    assert j[3] == pytest.approx((b * k3 - kap ** 2) / (b * k0 + kap ** 2), abs=1e-10)


def test_current_plane_independent():
    planes = (-5.0 * S1.rayleigh_range, 0.0, 5.0 * S1.rayleigh_range)
    vals = [transverse_current(S1, z, SPEC)[0] for z in planes]
    assert max(abs(v - 1.0) for v in vals) < 1e-10


def test_four_momentum_near_effective_vector():
    p = four_momentum(S1, 0.0, SPEC)
    assert p[0] == pytest.approx(S1.k0 * HBARC_KEV_PM, rel=2e-4)
    assert p[3] == pytest.approx(S1.k3 * HBARC_KEV_PM, rel=2e-4)


def test_energy_relation_from_consistent_moments():
    p = four_momentum(S1, 0.0, SPEC)
    prho = radial_momentum_sq(S1, 0.0, SPEC, field="truncated")
    mc2 = S1.mass * HBARC_KEV_PM
    resid = (p[0] ** 2 - prho - p[3] ** 2 - mc2 ** 2) / p[0] ** 2
    assert abs(resid) < 1e-8


def test_radial_momentum_scalar_closed_form():
    prho = radial_momentum_sq(S1, 0.0, SPEC, field="scalar")
    assert prho == pytest.approx(2.0 * HBARC_KEV_PM ** 2 / S1.w0 ** 2, rel=1e-10)
    assert prho == pytest.approx(3115.035, rel=1e-6)


def test_radial_momentum_field_arg():
    with pytest.raises(ValueError):
        radial_momentum_sq(S1, field="vector")


def test_angular_momenta_total_is_spin():
    for spin in (+0.5, -0.5):
        p = derive_parameters(BeamInput(100.0, 5.0, spin))
        s3, l3, j3 = angular_momenta(p, 0.0, SPEC)
        assert j3 == pytest.approx(spin, abs=1e-10)
        assert l3 * spin > 0.0  # OAM always along the spin


def test_soi_direct_matches_closed_form():
    direct = soi_term(S1, "direct", SPEC)
    closed = 4.0 * S1.c_norm_truncated ** 2 / S1.w0 ** 2
    assert direct == pytest.approx(closed, abs=1e-12)
    assert direct == pytest.approx(0.0045439173, rel=1e-7)


def test_soi_divergence_value():
    assert soi_term(S1, "divergence") == pytest.approx(0.0093473477, rel=1e-7)


def test_soi_ratio_closed_form():
    ratio = soi_term(S1, "divergence") / soi_term(S1, "direct", SPEC)
    assert ratio == pytest.approx(soi_ratio_closed(S1), rel=1e-10)
    assert ratio == pytest.approx(2.057112196, rel=1e-8)


def test_soi_semirelativistic_warns_outside_regime():
    with pytest.warns(UserWarning):
        soi_term(S1, "semirelativistic")
    p = derive_parameters(BeamInput(1.0, 50.0))
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        soi_term(p, "semirelativistic")  # inside regime, no warning


def test_semirelativistic_to_divergence_ratio_values():
    p1 = derive_parameters(BeamInput(1.0, 50.0))
    assert soi_term(p1, "semirelativistic") / soi_term(p1, "divergence") == pytest.approx(
        1.002937, rel=1e-5)
    p2 = derive_parameters(BeamInput(100.0, 50.0))
    ratio = soi_term(p2, "semirelativistic") / soi_term(p2, "divergence")
    assert ratio == pytest.approx(1.31269, rel=1e-5)


def test_berry_phase_sign_follows_spin():
    up = berry_phase(S1)
    down = berry_phase(derive_parameters(BeamInput(100.0, 5.0, -0.5)))
    assert up == -down
    assert up == pytest.approx(2.0 * math.pi * soi_term(S1, "divergence") * 0.5, rel=1e-14)


def test_gouy_expected_routes():
    computed, soi_form = gouy_expected(S1)
    assert computed == pytest.approx(1.00227994, rel=1e-8)
    assert soi_form == pytest.approx(1.0 + 0.5 * soi_term(S1, "divergence"), rel=1e-14)


def test_gouy_total_shift_routes():
    computed, soi_form = gouy_total_shift(S1)
    assert computed == pytest.approx(math.pi * gouy_expected(S1)[0], rel=1e-14)
    assert soi_form == pytest.approx(math.pi + 0.5 * abs(berry_phase(S1)), rel=1e-14)


def test_truncation_defect_matches_closed_form():
    quad_val, closed = truncation_defect(S1, 0.0, SPEC)
    assert quad_val == pytest.approx(closed, rel=1e-4)
    assert closed == pytest.approx(2.0 * S1.kappa ** 2 * S1.c_norm ** 2, rel=1e-14)


def test_report_is_self_consistent():
    rep = compute_report(S1, SPEC)
    assert rep.j0_quad == pytest.approx(1.0, abs=1e-10)
    assert rep.j3_quad == pytest.approx(rep.j3_closed, abs=1e-10)
    assert rep.j3_am_hbar == pytest.approx(rep.spin, abs=1e-10)
    assert abs(rep.energy_relation_residual) < 1e-8
    assert rep.delta_ratio == pytest.approx(rep.delta_ratio_closed, rel=1e-10)
    assert rep.truncation_defect_quad == pytest.approx(
        rep.truncation_defect_closed, rel=1e-4)
