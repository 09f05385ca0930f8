"""Gouy phase-front level sets in the (xi_rho, xi_3) half-plane.

Paraxial fronts are flat: xi_3 = xi_R tan(level).  Non-paraxial fronts solve

    k3 xi3 + k0 sign(xi3) sqrt(xi3^2 + xi_rho^2) = A,
    A = tan(level) xi_R (k3 + k0)

per radius, via the closed-form quadratic

    (k0^2 - k3^2) xi3^2 + 2 A k3 xi3 + (k0^2 xi_rho^2 - A^2) = 0

selecting the root consistent with sign(A), cross-validated by bisection.
Off axis the level set terminates where the waist-plane discontinuity of the
non-paraxial Gouy phase opens a gap (no admissible root).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .beam import BeamParameters
from .modes import ModeIndex, gouy_nonparaxial


class FrontError(ValueError):
    """Level out of range or no admissible root anywhere on the grid."""


@dataclass(frozen=True)
class FrontContour:
    """One Gouy level set: ordered (xi_rho, xi_3) samples [pm]."""

    gouy_level: float
    variant: str                      # 'paraxial' | 'nonparaxial'
    xi_rho: np.ndarray = field(repr=False)
    xi_3: np.ndarray = field(repr=False)
    dropped: int = 0                  # grid points without an admissible root


def _check_level(level: float):
    if not abs(level) < math.pi / 2:
        raise FrontError("gouy level must satisfy |level| < pi/2 for the (0,0) mode")


def front_paraxial(params: BeamParameters, gouy_level: float, rho_grid) -> FrontContour:
    """Flat paraxial front: xi3 = xi_R tan(level) at every radius."""
    _check_level(gouy_level)
    rho = np.asarray(rho_grid, dtype=float)
    xi3 = np.full_like(rho, params.rayleigh_range * math.tan(gouy_level))
    return FrontContour(gouy_level, "paraxial", rho, xi3)


def _residual(params, level, rho, xi3):
    a = math.tan(level) * params.rayleigh_range * (params.k3 + params.k0)
    xi_b = np.sign(xi3) * np.hypot(xi3, rho)
    return params.k3 * xi3 + params.k0 * xi_b - a


def _bisect_root(params, level, rho):
    # the lhs is monotone in xi3 on each side of the waist; bracket on the
    # side selected by sign(level)
    a = math.tan(level) * params.rayleigh_range * (params.k3 + params.k0)
    if a == 0.0:
        return 0.0 if rho == 0.0 else math.nan
    sgn = 1.0 if a > 0 else -1.0
    far = sgn * 1e3 * params.rayleigh_range
    # the residual is discontinuous at xi3 = 0 off axis; bracket with its
    # one-sided limit toward the waist.  No sign change means the level sits
    # inside the discontinuity gap.
    f_edge = params.k0 * rho * sgn - a
    f_far = _residual(params, level, rho, far)
    if f_edge == 0.0 or f_edge * f_far > 0.0:
        return math.nan
    lo, hi = 0.0, far
    f_lo = f_edge
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f_mid = _residual(params, level, rho, mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def nonparaxial_root(params: BeamParameters, gouy_level: float, rho: float,
                     validate: bool = True) -> float:
    """xi_3 of the non-paraxial front at one radius; NaN when no root exists."""
    _check_level(gouy_level)
    a = math.tan(gouy_level) * params.rayleigh_range * (params.k3 + params.k0)
    if rho == 0.0:
        return params.rayleigh_range * math.tan(gouy_level)
    if a == 0.0:
        return math.nan  # waist-plane discontinuity off axis
    k0, k3 = params.k0, params.k3
    lead = k0 * k0 - k3 * k3
    disc = (a * k3) ** 2 - lead * (k0 * k0 * rho * rho - a * a)
    if disc < 0.0:
        return math.nan
    sq = math.sqrt(disc)
    best = math.nan
    for root in ((-a * k3 + sq) / lead, (-a * k3 - sq) / lead):
        if root * a <= 0.0:
            continue  # sign must follow the level
        if abs(_residual(params, gouy_level, rho, root)) < 1e-9 * (abs(a) + 1.0):
            best = root
            break
    if math.isnan(best) or lead < 1e-12 * k0 * k0:
        best = _bisect_root(params, gouy_level, rho)
    if validate and not math.isnan(best):
        check = gouy_nonparaxial(params, ModeIndex(0, 0), best, rho)
        if abs(float(check) - gouy_level) > 1e-9:
            raise FrontError(
                "front root failed verification at rho = %g pm (level %g rad)"
                % (rho, gouy_level))
    return best


def front_nonparaxial(params: BeamParameters, gouy_level: float, rho_grid) -> FrontContour:
    """Curved non-paraxial front; grid points inside the waist gap are dropped."""
    _check_level(gouy_level)
    rho = np.asarray(rho_grid, dtype=float)
    xi3 = np.array([nonparaxial_root(params, gouy_level, r) for r in rho])
    keep = ~np.isnan(xi3)
    if not keep.any():
        raise FrontError(
            "no admissible root on the grid for level %g rad "
            "(inside the waist-plane discontinuity gap)" % gouy_level)
    return FrontContour(gouy_level, "nonparaxial", rho[keep], xi3[keep],
                        dropped=int((~keep).sum()))


#: Default Figure-1 levels: symmetric multiples of pi/24 (not fixed by the
#: figure caption; overridable from the CLI).
DEFAULT_LEVELS = tuple(s * k * math.pi / 24.0 for k in range(1, 9) for s in (+1, -1))


def fig1_dataset(params: BeamParameters, levels=None, rho_max: float | None = None,
                 n_rho: int = 512) -> list[FrontContour]:
    """Paired paraxial / non-paraxial contours on a uniform radius grid."""
    if levels is None:
        levels = DEFAULT_LEVELS
    levels = [float(l) for l in levels]
    for level in levels:
        if abs(level) < 0.01:
            raise FrontError("levels inside |level| < 0.01 rad are excluded "
                             "(waist-plane discontinuity)")
    if rho_max is None:
        rho_max = 6.0 * params.w0
    rho = np.linspace(0.0, rho_max, n_rho)
    out: list[FrontContour] = []
    for level in levels:
        out.append(front_paraxial(params, level, rho))
        out.append(front_nonparaxial(params, level, rho))
    return out
