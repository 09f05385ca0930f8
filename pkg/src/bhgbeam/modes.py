"""Scalar Laguerre-Gaussian beam modes and their phase structure.

All evaluations happen in beam coordinates xi = x - X relative to the waist
4-position X.  The longitudinal/temporal dependence of every envelope enters
only through zeta = xi3 + xi0, via the complex beam parameter

    w(zeta) = w0 (1 + 2 kappa zeta i) .

Three Gouy-phase variants are provided: the space-time form
(1+|l|+2p) arctan(2 kappa zeta), the non-paraxial spatial form obtained by
eliminating the elapsed time with the front velocity, and the traditional
paraxial form (1+|l|+2p) arctan(xi3 / xi_R).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .beam import BeamParameters


@dataclass(frozen=True)
class ModeIndex:
    """Azimuthal (l, any sign) and radial (p >= 0) LG indices."""

    l: int
    p: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("radial index p must be non-negative")

    @property
    def gouy_order(self) -> int:
        """Gouy-phase multiplier 1 + |l| + 2p."""
        return 1 + abs(self.l) + 2 * self.p


@dataclass(frozen=True)
class BeamPoint:
    """A sample position in cylindrical beam coordinates [pm]."""

    xi_rho: float
    xi_phi: float
    xi_3: float
    xi_0: float

    def __post_init__(self):
        if self.xi_rho < 0.0:
            raise ValueError("xi_rho must be non-negative")

    @property
    def zeta(self) -> float:
        return self.xi_3 + self.xi_0


def complex_w(params: BeamParameters, zeta):
    """Complex beam parameter w = w0 (1 + 2 kappa zeta i) [pm]."""
    return params.w0 * (1.0 + 2j * params.kappa * np.asarray(zeta, dtype=float))


def gouy_spacetime(params: BeamParameters, mode: ModeIndex, zeta):
    """Space-time Gouy phase (1+|l|+2p) arctan(2 kappa (xi3+xi0)) [rad]."""
    return mode.gouy_order * np.arctan(2.0 * params.kappa * np.asarray(zeta, dtype=float))


def front_distance(xi_3, xi_rho):
    """Signed distance travelled xi_B = sign(xi3) sqrt(xi3^2 + xi_rho^2).

    Defined as 0 on the waist plane to keep odd symmetry; off-axis the
    function is discontinuous across xi3 = 0.
    """
    xi_3 = np.asarray(xi_3, dtype=float)
    xi_rho = np.asarray(xi_rho, dtype=float)
    return np.sign(xi_3) * np.hypot(xi_3, xi_rho)


def gouy_nonparaxial(params: BeamParameters, mode: ModeIndex, xi_3, xi_rho):
    """Non-paraxial spatial Gouy phase [rad].

    (1+|l|+2p) arctan[(k3 xi3 + k0 xi_B) / (xi_R (k3 + k0))].  Reduces to the
    paraxial form on axis; off axis it is discontinuous at the waist plane.
    """
    xi_b = front_distance(xi_3, xi_rho)
    arg = (params.k3 * np.asarray(xi_3, dtype=float) + params.k0 * xi_b) / (
        params.rayleigh_range * (params.k3 + params.k0))
    return mode.gouy_order * np.arctan(arg)


def gouy_paraxial(params: BeamParameters, mode: ModeIndex, xi_3):
    """Traditional paraxial Gouy phase (1+|l|+2p) arctan(xi3 / xi_R) [rad]."""
    return mode.gouy_order * np.arctan(np.asarray(xi_3, dtype=float) / params.rayleigh_range)


def beam_radius(params: BeamParameters, xi_3):
    """Paraxial beam radius |w| = w0 sqrt(1 + (xi3/xi_R)^2) [pm]."""
    ratio = np.asarray(xi_3, dtype=float) / params.rayleigh_range
    return params.w0 * np.sqrt(1.0 + ratio * ratio)


def laguerre(p: int, alpha: int, x):
    """Generalized Laguerre polynomial L_p^alpha(x) by the three-term recurrence."""
    if p < 0 or alpha < 0:
        raise ValueError("laguerre requires p >= 0 and alpha >= 0")
    x = np.asarray(x)
    prev = np.ones_like(x)
    if p == 0:
        return prev
    cur = 1.0 + alpha - x
    for k in range(1, p):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def _mode_amplitude(mode: ModeIndex, abs_w) -> float:
    # a_lp = sqrt(2 p! / (pi |w|^2 (p+|l|)!)), factorial ratio in log space
    log_ratio = math.lgamma(mode.p + 1) - math.lgamma(mode.p + abs(mode.l) + 1)
    return np.sqrt(2.0 / np.pi) / abs_w * math.exp(0.5 * log_ratio)


def phi_lp(params: BeamParameters, mode: ModeIndex, point: BeamPoint):
    """Scalar LG envelope Phi_lp at a beam point (complex amplitude).

    The Gaussian argument uses the complex beam parameter, the vortex factor
    exp(i l xi_phi), and the space-time Gouy phase; the transverse integral
    of |Phi_lp|^2 is 1 on every plane.
    """
    w = complex_w(params, point.zeta)
    abs_w = abs(w)
    a = _mode_amplitude(mode, abs_w)
    radial = (math.sqrt(2.0) * point.xi_rho / abs_w) ** abs(mode.l) * laguerre(
        mode.p, abs(mode.l), 2.0 * point.xi_rho ** 2 / abs_w ** 2)
    # one complex division per point: 1/w = conj(w)/|w|^2
    inv_w = np.conj(w) / abs_w ** 2
    gauss = np.exp(-point.xi_rho ** 2 * inv_w / params.w0)
    phase = np.exp(1j * (mode.l * point.xi_phi - gouy_spacetime(params, mode, point.zeta)))
    return a * radial * gauss * phase


def plane_wave_phase(params: BeamParameters, lab_position):
    """exp(-i k'_mu x^mu) for a lab 4-position (x0, x1, x2, x3)."""
    x0, _, _, x3 = lab_position
    return np.exp(-1j * (params.k0_prime * x0 - params.k3_prime * x3))


def psi_scalar(params: BeamParameters, mode: ModeIndex, point: BeamPoint,
               lab_position=(0.0, 0.0, 0.0, 0.0)):
    """Full scalar Klein-Gordon solution C Phi_lp exp(-i k'_mu x^mu)."""
    return params.c_norm * phi_lp(params, mode, point) * plane_wave_phase(params, lab_position)
