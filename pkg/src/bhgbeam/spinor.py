"""Exact and truncated Dirac bi-spinor beams built from the scalar modes.

The bi-spinor is constructed by applying the substitution

    Psi_pm = [ (p0_op + mc) chi_pm ; sigma.p_op chi_pm ] Psi_scalar

analytically to the lowest scalar mode.  Carrying out the derivatives gives
three envelope contributions per spin state,

    upper (aligned)   :  b Psi00 + kappa Psi01
    lower (aligned)   :  2s (k3 Psi00 - kappa Psi01)
    lower (opposite)  :  i sqrt(2)/w0 Psi10  with vortex charge 2s ,

where Psi00, Psi01, Psi10 are the explicit envelope forms and b = k0 + mc/hbar.
The truncated beam drops the kappa Psi01 admixture and uses the large-waist
normalization constant.  Components are kept as (radial profile, vortex
charge) pairs so transverse quadratures can treat the azimuthal integral
analytically.
"""

from __future__ import annotations

import numpy as np

from .beam import BeamParameters
from .modes import BeamPoint, plane_wave_phase

_I2 = np.eye(2, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)
_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

#: Dirac-representation gamma matrices (gamma^0, gamma^1, gamma^2, gamma^3).
GAMMA = (
    np.block([[_I2, _Z2], [_Z2, -_I2]]),
    np.block([[_Z2, _SIGMA[0]], [-_SIGMA[0], _Z2]]),
    np.block([[_Z2, _SIGMA[1]], [-_SIGMA[1], _Z2]]),
    np.block([[_Z2, _SIGMA[2]], [-_SIGMA[2], _Z2]]),
)


class ResidualStepError(ValueError):
    """Finite-difference step too small for the cancellation guard."""


def mode_envelopes(params: BeamParameters, rho, zeta, c_norm=None):
    """Explicit envelope forms Psi00, Psi01, Psi10 (vortex factor excluded).

    These are the plane-wave-stripped amplitudes; Psi10 must additionally be
    multiplied by exp(i * charge * xi_phi).
    """
    c = params.c_norm if c_norm is None else c_norm
    rho = np.asarray(rho, dtype=float)
    w0 = params.w0
    w = w0 * (1.0 + 2j * params.kappa * zeta)
    gauss = np.exp(-rho ** 2 / (w0 * w))
    f00 = np.sqrt(2.0 / np.pi) * c / w * gauss
    f01 = f00 * (np.abs(w) ** 2 / w ** 2 - 2.0 * rho ** 2 / w ** 2)
    f10 = 2.0 * c * rho / (np.sqrt(np.pi) * w ** 2) * gauss
    return f00, f01, f10


def radial_components(params: BeamParameters, rho, zeta, truncated=False):
    """Bi-spinor slot profiles at radius rho on plane zeta.

    Returns a list of four (profile, vortex_charge) pairs ordered as the
    Dirac components; the plane-wave phase is omitted (it is unimodular and
    common to all slots).
    """
    c = params.c_norm_truncated if truncated else params.c_norm
    f00, f01, f10 = mode_envelopes(params, rho, zeta, c)
    kappa = 0.0 if truncated else params.kappa
    sgn = 1.0 if params.spin > 0 else -1.0
    upper = params.b_weight * f00 + kappa * f01
    aligned = sgn * (params.k3 * f00 - kappa * f01)
    vortex = 1j * np.sqrt(2.0) / params.w0 * f10
    zero = np.zeros_like(f00)
    charge = int(2 * params.spin)
    if params.spin > 0:
        return [(upper, 0), (zero, 0), (aligned, 0), (vortex, charge)]
    return [(zero, 0), (upper, 0), (vortex, charge), (aligned, 0)]


def radial_components_drho(params: BeamParameters, rho, zeta, truncated=False):
    """Analytic d/drho of the slot profiles (same layout as radial_components)."""
    c = params.c_norm_truncated if truncated else params.c_norm
    f00, f01, f10 = mode_envelopes(params, rho, zeta, c)
    rho = np.asarray(rho, dtype=float)
    w0 = params.w0
    w = w0 * (1.0 + 2j * params.kappa * zeta)
    d00 = -2.0 * rho / (w0 * w) * f00
    d01 = -2.0 * rho / (w0 * w) * f01 - (4.0 * rho / w ** 2) * f00
    d10 = (1.0 / rho - 2.0 * rho / (w0 * w)) * f10
    kappa = 0.0 if truncated else params.kappa
    sgn = 1.0 if params.spin > 0 else -1.0
    upper = params.b_weight * d00 + kappa * d01
    aligned = sgn * (params.k3 * d00 - kappa * d01)
    vortex = 1j * np.sqrt(2.0) / params.w0 * d10
    zero = np.zeros_like(d00)
    if params.spin > 0:
        return [upper, zero, aligned, vortex]
    return [zero, upper, vortex, aligned]


def psi_component(params: BeamParameters, which: str, point: BeamPoint,
                  lab_position=(0.0, 0.0, 0.0, 0.0)):
    """One of the explicit envelope solutions Psi00 / Psi01 / Psi10 at a point.

    Psi10 carries the vortex factor exp(i * 2s * xi_phi): charge +1 for
    spin-up, -1 for spin-down beams.
    """
    f00, f01, f10 = mode_envelopes(params, point.xi_rho, point.zeta)
    phase = plane_wave_phase(params, lab_position)
    if which == "00":
        return f00 * phase
    if which == "01":
        return f01 * phase
    if which == "10":
        charge = int(2 * params.spin)
        return f10 * np.exp(1j * charge * point.xi_phi) * phase
    raise ValueError("which must be one of '00', '01', '10'")


def _assemble(params, point, lab_position, truncated):
    comps = radial_components(params, np.asarray([point.xi_rho]), point.zeta,
                              truncated=truncated)
    phase = plane_wave_phase(params, lab_position)
    out = np.empty(4, dtype=complex)
    for i, (profile, charge) in enumerate(comps):
        out[i] = profile[0] * np.exp(1j * charge * point.xi_phi) * phase
    return out


def bispinor_exact(params: BeamParameters, point: BeamPoint,
                   lab_position=(0.0, 0.0, 0.0, 0.0)):
    """Exact Dirac bi-spinor (four complex amplitudes) at a point."""
    return _assemble(params, point, lab_position, truncated=False)


def bispinor_truncated(params: BeamParameters, point: BeamPoint,
                       lab_position=(0.0, 0.0, 0.0, 0.0)):
    """Truncated bi-spinor: Psi01 admixture dropped, large-waist C."""
    return _assemble(params, point, lab_position, truncated=True)


def dirac_current(psi) -> np.ndarray:
    """Dirac current (j0, j1, j2, j3) = Psi^dag gamma^0 gamma^mu Psi of one value."""
    psi = np.asarray(psi, dtype=complex)
    j = np.empty(4)
    j[0] = float(np.real(np.vdot(psi, psi)))
    for i in (1, 2, 3):
        j[i] = float(np.real(np.vdot(psi, (GAMMA[0] @ GAMMA[i]) @ psi)))
    return j


def _bispinor_at(params, x, k0p_scale=1.0):
    # lab 4-position -> bi-spinor, waist at the origin; k0p_scale != 1 puts the
    # plane-wave vector deliberately off shell (used to self-test residuals).
    rho = float(np.hypot(x[1], x[2]))
    phi = float(np.arctan2(x[2], x[1])) % (2.0 * np.pi)
    point = BeamPoint(rho, phi, float(x[3]), float(x[0]))
    psi = _assemble(params, point, (0.0, 0.0, 0.0, 0.0), truncated=False)
    return psi * np.exp(-1j * (k0p_scale * params.k0_prime * x[0]
                               - params.k3_prime * x[3]))


def _scalar_at(params, x, k0p_scale=1.0):
    from .modes import ModeIndex, psi_scalar
    rho = float(np.hypot(x[1], x[2]))
    phi = float(np.arctan2(x[2], x[1])) % (2.0 * np.pi)
    point = BeamPoint(rho, phi, float(x[3]), float(x[0]))
    val = psi_scalar(params, ModeIndex(0, 0), point,
                     tuple(float(v) for v in x))
    return np.asarray([val * np.exp(-1j * (
        (k0p_scale - 1.0) * params.k0_prime * x[0]))], dtype=complex)


def _fd_steps(params, scale):
    # per-axis steps tied to the local variation lengths
    return np.array([
        scale / params.k0_prime,
        scale * params.w0,
        scale * params.w0,
        scale * min(params.w0, 1.0 / params.k3_prime),
    ])


def dirac_residual(params: BeamParameters, point_lab, step_scale=1e-3,
                   richardson=True, k0p_scale=1.0) -> float:
    """Relative Dirac residual ||(i gamma^mu d_mu - m) Psi|| / (m ||Psi||).

    Central differences in the four lab coordinates, optionally with one
    Richardson extrapolation level.
    """
    x = np.asarray(point_lab, dtype=float)
    if step_scale * params.w0 < 1e-8 * params.w0:
        raise ResidualStepError("step below cancellation guard (>= 1e-8 w0)")
    hs = _fd_steps(params, step_scale)

    def op(h_fac):
        total = np.zeros(4, dtype=complex)
        for mu in range(4):
            e = np.zeros(4)
            e[mu] = hs[mu] * h_fac
            d = (_bispinor_at(params, x + e, k0p_scale)
                 - _bispinor_at(params, x - e, k0p_scale)) / (2.0 * hs[mu] * h_fac)
            total += 1j * (GAMMA[mu] @ d)
        return total

    psi = _bispinor_at(params, x, k0p_scale)
    if richardson:
        deriv = (4.0 * op(0.5) - op(1.0)) / 3.0
    else:
        deriv = op(1.0)
    m = params.mass
    return float(np.linalg.norm(deriv - m * psi) / (m * np.linalg.norm(psi)))


def klein_gordon_residual(params: BeamParameters, point_lab, step_scale=1e-3,
                          richardson=True, k0p_scale=1.0) -> float:
    """Relative KGE residual |(box + m^2) psi| / (m^2 |psi|) of the scalar mode."""
    x = np.asarray(point_lab, dtype=float)
    if step_scale * params.w0 < 1e-8 * params.w0:
        raise ResidualStepError("step below cancellation guard (>= 1e-8 w0)")
    hs = _fd_steps(params, step_scale)
    signs = (1.0, -1.0, -1.0, -1.0)  # box = d0^2 - laplacian

    def op(h_fac):
        total = np.zeros(1, dtype=complex)
        for mu in range(4):
            e = np.zeros(4)
            h = hs[mu] * h_fac
            e[mu] = h
            second = (_scalar_at(params, x + e, k0p_scale)
                      - 2.0 * _scalar_at(params, x, k0p_scale)
                      + _scalar_at(params, x - e, k0p_scale)) / (h * h)
            total += signs[mu] * second
        return total

    psi = _scalar_at(params, x, k0p_scale)
    if richardson:
        box = (4.0 * op(0.5) - op(1.0)) / 3.0
    else:
        box = op(1.0)
    m2 = params.mass ** 2
    return float(np.abs(box[0] + m2 * psi[0]) / (m2 * np.abs(psi[0])))


def pde_residual(params: BeamParameters, which: str, point_lab,
                 step_scale=1e-3, richardson=True) -> float:
    """Finite-difference residual of the Dirac or Klein-Gordon equation.

    ``which`` selects 'dirac' (exact bi-spinor) or 'klein_gordon' (scalar
    Psi00 mode); the returned value converges as O(step^2) without the
    Richardson level and vanishes for the exact solutions.
    """
    if which == "dirac":
        return dirac_residual(params, point_lab, step_scale, richardson)
    if which == "klein_gordon":
        return klein_gordon_residual(params, point_lab, step_scale, richardson)
    raise ValueError("which must be 'dirac' or 'klein_gordon'")
