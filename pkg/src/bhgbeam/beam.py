"""Beam configuration: derive every beam scalar from (kinetic energy, waist, spin).

The effective wave vector (k0, k3) is treated as the primary pair fixed by
the total energy and the dispersion relation

    k0^2 = (mc/hbar)^2 + k3^2 + 2 / w0^2 ,

after which the confinement shift kappa = 1 / (w0^2 (k0 + k3)) and the
primed plane-wave vector k0' = k0 - kappa, k3' = k3 + kappa follow.  This is
the unique assignment putting k' on the mass shell, k0'^2 - k3'^2 = (mc/hbar)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import PhysicalConstants, constants_codata


class BeamConfigError(ValueError):
    """Invalid physical beam configuration."""


@dataclass(frozen=True)
class BeamInput:
    """User-facing beam description in laboratory units."""

    kinetic_energy_kev: float
    waist_radius_pm: float
    spin: float = +0.5

    def __post_init__(self):
        if not self.kinetic_energy_kev > 0.0:
            raise BeamConfigError("kinetic energy must be positive")
        if not self.waist_radius_pm > 0.0:
            raise BeamConfigError("waist radius must be positive")
        if self.spin not in (+0.5, -0.5):
            raise BeamConfigError("spin must be +1/2 or -1/2")


@dataclass(frozen=True)
class BeamParameters:
    """All derived beam scalars in internal units (pm, pm^-1, keV).

    ``b_weight`` is hbar k0 + mc expressed as a wavenumber, ``c_norm`` the
    exact normalization amplitude from <j0> = 1, ``c_norm_truncated`` its
    large-waist approximation sqrt(1 / (2 k0 b)).
    """

    kinetic_energy_kev: float
    total_energy_kev: float
    w0: float
    spin: float
    mass: float           # mc/hbar [pm^-1]
    k0: float
    k3: float
    kappa: float
    k0_prime: float
    k3_prime: float
    rayleigh_range: float
    divergence_sin: float
    b_weight: float
    c_norm: float
    c_norm_truncated: float

    @property
    def theta_divergence(self) -> float:
        """Far-field divergence angle [rad]."""
        return math.asin(self.divergence_sin)


def critical_waist(kinetic_energy_kev: float,
                   constants: PhysicalConstants | None = None) -> float:
    """Smallest waist radius [pm] for which k3 stays real at this energy."""
    co = constants or constants_codata()
    k0 = (kinetic_energy_kev + co.electron_rest_energy) / co.hbar_c
    m = co.mass_wavenumber
    return math.sqrt(2.0) / math.sqrt(k0 * k0 - m * m)


def derive_parameters(inp: BeamInput,
                      constants: PhysicalConstants | None = None) -> BeamParameters:
    """Solve the dispersion relation and assemble all beam scalars.

    Raises
    ------
    BeamConfigError
        If the waist is at or below the critical waist (transverse momentum
        budget exhausted), or the implied divergence sine exceeds 1.
    """
    co = constants or constants_codata()
    e_total = inp.kinetic_energy_kev + co.electron_rest_energy
    k0 = e_total / co.hbar_c
    m = co.mass_wavenumber
    w0 = inp.waist_radius_pm
    k3_sq = k0 * k0 - m * m - 2.0 / (w0 * w0)
    if k3_sq <= 0.0:
        raise BeamConfigError(
            "waist below critical: w0 = %g pm but w0_min = %.6g pm at %g keV"
            % (w0, critical_waist(inp.kinetic_energy_kev, co), inp.kinetic_energy_kev))
    k3 = math.sqrt(k3_sq)
    sin_theta = 2.0 / (w0 * k3)
    if sin_theta > 1.0 and sin_theta <= 1.0 + 1e-12:
        sin_theta = 1.0  # rounding guard for exactly-critical divergence
    if sin_theta > 1.0:
        raise BeamConfigError(
            "waist gives unphysical divergence (sin theta_D = %.4g > 1); "
            "increase w0 above %.6g pm"
            % (sin_theta, math.sqrt(6.0) / math.sqrt(k0 * k0 - m * m)))
    kappa = 1.0 / (w0 * w0 * (k0 + k3))
    b = k0 + m
    c_norm = math.sqrt(1.0 / (2.0 * (k0 * b + kappa * kappa)))
    c_trunc = math.sqrt(1.0 / (2.0 * k0 * b))
    return BeamParameters(
        kinetic_energy_kev=inp.kinetic_energy_kev,
        total_energy_kev=e_total,
        w0=w0,
        spin=inp.spin,
        mass=m,
        k0=k0,
        k3=k3,
        kappa=kappa,
        k0_prime=k0 - kappa,
        k3_prime=k3 + kappa,
        rayleigh_range=0.5 * k3 * w0 * w0,
        divergence_sin=sin_theta,
        b_weight=b,
        c_norm=c_norm,
        c_norm_truncated=c_trunc,
    )


#: Smallest divergence angle waist_for_divergence accepts [rad].
MIN_THETA_D = 1e-6


def waist_for_divergence(kinetic_energy_kev: float, theta_d: float,
                         spin: float = +0.5,
                         constants: PhysicalConstants | None = None
                         ) -> tuple[float, BeamParameters]:
    """Invert the divergence relation: find w0 giving sin theta_D = 2/(w0 k3).

    Uses the closed-form pair k3^2 = (k0^2 - m^2) / (1 + sin^2(theta_D)/2),
    w0 = 2 / (k3 sin theta_D), then re-derives the full parameter set.
    """
    if not (MIN_THETA_D <= theta_d <= math.pi / 2):
        raise BeamConfigError(
            "divergence angle must lie in [%g, pi/2] rad, got %g" % (MIN_THETA_D, theta_d))
    co = constants or constants_codata()
    k0 = (kinetic_energy_kev + co.electron_rest_energy) / co.hbar_c
    m = co.mass_wavenumber
    s = math.sin(theta_d)
    k3 = math.sqrt((k0 * k0 - m * m) / (1.0 + 0.5 * s * s))
    w0 = 2.0 / (k3 * s)
    params = derive_parameters(
        BeamInput(kinetic_energy_kev, w0, spin), co)
    return w0, params
