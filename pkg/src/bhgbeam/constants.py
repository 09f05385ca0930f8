"""Physical constants and unit conversions.

Internal unit system: hbar = c = 1, lengths in picometres, energies in keV.
Wavenumbers therefore carry pm^-1 and the electron mass enters as the
inverse reduced Compton wavelength mc/hbar.  Constants are CODATA 2018
values frozen in source.
"""

from __future__ import annotations

from dataclasses import dataclass

#: Electron rest energy m c^2 [keV] (CODATA 2018).
ELECTRON_REST_ENERGY_KEV = 510.99895

#: hbar c [keV pm] (CODATA 2018).
HBARC_KEV_PM = 197.32698


class UnitError(ValueError):
    """Raised for out-of-domain physical inputs (non-positive energies etc.)."""


@dataclass(frozen=True)
class PhysicalConstants:
    """Frozen constant set used throughout the package.

    Attributes
    ----------
    electron_rest_energy : float
        m c^2 in keV.
    hbar_c : float
        hbar c in keV pm.
    reduced_compton_wavelength : float
        hbar / (m c) in pm; equals hbar_c / electron_rest_energy.
    """

    electron_rest_energy: float
    hbar_c: float
    reduced_compton_wavelength: float

    def __post_init__(self):
        if min(self.electron_rest_energy, self.hbar_c,
               self.reduced_compton_wavelength) <= 0.0:
            raise UnitError("physical constants must be strictly positive")
        expected = self.hbar_c / self.electron_rest_energy
        if abs(self.reduced_compton_wavelength - expected) > 1e-12 * expected:
            raise UnitError("reduced Compton wavelength inconsistent with hbar_c / mc^2")

    @property
    def mass_wavenumber(self) -> float:
        """m c / hbar in pm^-1 (the electron mass in internal units)."""
        return 1.0 / self.reduced_compton_wavelength


def constants_codata() -> PhysicalConstants:
    """Return the frozen CODATA 2018 constant set."""
    return PhysicalConstants(
        electron_rest_energy=ELECTRON_REST_ENERGY_KEV,
        hbar_c=HBARC_KEV_PM,
        reduced_compton_wavelength=HBARC_KEV_PM / ELECTRON_REST_ENERGY_KEV,
    )


def to_wavenumber(energy_kev: float) -> float:
    """Convert an energy [keV] to a wavenumber [pm^-1], k = E / (hbar c)."""
    if not energy_kev > 0.0:
        raise UnitError(f"energy must be positive, got {energy_kev} keV")
    return energy_kev / HBARC_KEV_PM


def to_energy(wavenumber_inv_pm: float) -> float:
    """Convert a wavenumber [pm^-1] back to an energy [keV]."""
    if not wavenumber_inv_pm > 0.0:
        raise UnitError(f"wavenumber must be positive, got {wavenumber_inv_pm} pm^-1")
    return wavenumber_inv_pm * HBARC_KEV_PM
