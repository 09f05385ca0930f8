"""Exact Dirac bi-spinor Gaussian electron beams.

Beam parameters, scalar Laguerre-Gaussian modes, the exact/truncated
bi-spinor fields built on them, transverse-plane observables (currents,
momenta, angular momenta, spin-orbit term, Berry and Gouy phases) and Gouy
phase-front extraction, plus a CSV-emitting command-line interface.
"""

from .beam import (BeamConfigError, BeamInput, BeamParameters, critical_waist,
                   derive_parameters, waist_for_divergence)
from .constants import (ELECTRON_REST_ENERGY_KEV, HBARC_KEV_PM,
                        PhysicalConstants, UnitError, constants_codata,
                        to_energy, to_wavenumber)
from .fronts import (DEFAULT_LEVELS, FrontContour, FrontError, fig1_dataset,
                     front_nonparaxial, front_paraxial, nonparaxial_root)
from .modes import (BeamPoint, ModeIndex, beam_radius, complex_w,
                    front_distance, gouy_nonparaxial, gouy_paraxial,
                    gouy_spacetime, laguerre, phi_lp, plane_wave_phase,
                    psi_scalar)
from .observables import (ModeWeights, ObservableReport, QuadratureError,
                          QuadratureSpec, angular_momenta, berry_phase,
                          compute_report, expect_transverse, four_momentum,
                          gouy_expected, gouy_total_shift, mode_overlap,
                          mode_weights, radial_momentum_sq, soi_ratio_closed,
                          soi_term, transverse_current, truncation_defect)
from .spinor import (GAMMA, ResidualStepError, bispinor_exact,
                     bispinor_truncated, dirac_current, dirac_residual,
                     klein_gordon_residual, mode_envelopes, pde_residual,
                     psi_component, radial_components)

__version__ = "1.0.0"

__all__ = [
    "BeamConfigError", "BeamInput", "BeamParameters", "critical_waist",
    "derive_parameters", "waist_for_divergence",
    "ELECTRON_REST_ENERGY_KEV", "HBARC_KEV_PM", "PhysicalConstants",
    "UnitError", "constants_codata", "to_energy", "to_wavenumber",
    "DEFAULT_LEVELS", "FrontContour", "FrontError", "fig1_dataset",
    "front_nonparaxial", "front_paraxial", "nonparaxial_root",
    "BeamPoint", "ModeIndex", "beam_radius", "complex_w", "front_distance",
    "gouy_nonparaxial", "gouy_paraxial", "gouy_spacetime", "laguerre",
    "phi_lp", "plane_wave_phase", "psi_scalar",
    "ModeWeights", "ObservableReport", "QuadratureError", "QuadratureSpec",
    "angular_momenta", "berry_phase", "compute_report", "expect_transverse",
    "four_momentum", "gouy_expected", "gouy_total_shift", "mode_overlap",
    "mode_weights", "radial_momentum_sq", "soi_ratio_closed", "soi_term",
    "transverse_current", "truncation_defect",
    "GAMMA", "ResidualStepError", "bispinor_exact", "bispinor_truncated",
    "dirac_current", "dirac_residual", "klein_gordon_residual",
    "mode_envelopes", "pde_residual", "psi_component", "radial_components",
    "__version__",
]
