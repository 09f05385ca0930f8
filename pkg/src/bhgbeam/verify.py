"""Self-verification suite behind the `verify` CLI subcommand.

Each check returns (name, passed, detail).  Random sample points are drawn
from a seeded generator; the pass/fail verdict of every check must be
independent of the seed (the invariants hold everywhere, not just at lucky
points).  ``inject_off_shell`` deliberately detunes the plane-wave frequency
by 1 percent so the residual checks can demonstrate that they would catch a
broken solution.
"""

from __future__ import annotations

import math

import numpy as np

from .beam import BeamInput, derive_parameters
from .fronts import _bisect_root, nonparaxial_root
from .modes import BeamPoint, ModeIndex
from .observables import (QuadratureSpec, angular_momenta, mode_overlap,
                          transverse_current)
from .spinor import dirac_residual, klein_gordon_residual

RESIDUAL_TOL = 1e-6
QUAD_TOL = 1e-10
FRONT_TOL = 1e-9


def _sample_points(params, rng, n=6):
    # points spread over a few waists / Rayleigh ranges around the focus
    pts = []
    for _ in range(n):
        x = rng.uniform(-2.0, 2.0) * params.w0
        y = rng.uniform(-2.0, 2.0) * params.w0
        z = rng.uniform(-2.0, 2.0) * params.rayleigh_range
        t = rng.uniform(-1.0, 1.0) * params.rayleigh_range
        pts.append((t, x, y, z))
    return pts


def run_verification(seed: int = 42, quad_nodes: int = 256,
                     inject_off_shell: bool = False):
    """Run every invariant check; returns a list of (name, ok, detail)."""
    rng = np.random.default_rng(seed)
    spec = QuadratureSpec(nodes=quad_nodes)
    checks = []
    params = derive_parameters(BeamInput(100.0, 5.0, +0.5))
    scale = 1.01 if inject_off_shell else 1.0

    worst = max(dirac_residual(params, x, k0p_scale=scale)
                for x in _sample_points(params, rng))
    checks.append(("dirac_residual", worst < RESIDUAL_TOL,
                   f"max relative residual {worst:.3e} (tol {RESIDUAL_TOL:g})"))

    worst = max(klein_gordon_residual(params, x, k0p_scale=scale)
                for x in _sample_points(params, rng))
    checks.append(("klein_gordon_residual", worst < RESIDUAL_TOL,
                   f"max relative residual {worst:.3e} (tol {RESIDUAL_TOL:g})"))

    modes = [ModeIndex(0, 0), ModeIndex(0, 1), ModeIndex(1, 0), ModeIndex(2, 1)]
    worst = 0.0
    for i, a in enumerate(modes):
        for b in modes[i:]:
            ov = mode_overlap(params, a, b, 0.0, spec)
            target = 1.0 if a == b else 0.0
            worst = max(worst, abs(abs(ov) - target))
    checks.append(("mode_orthonormality", worst < QUAD_TOL,
                   f"max |<a|b> - delta_ab| = {worst:.3e}"))

    worst = 0.0
    for plane in (-5.0 * params.rayleigh_range, 0.0, 5.0 * params.rayleigh_range):
        j = transverse_current(params, plane, spec, truncated=True)
        worst = max(worst, abs(j[0] - 1.0), abs(j[3] - params.k3 / params.k0))
    checks.append(("normalization_plane_independence", worst < QUAD_TOL,
                   f"max |<j0> - 1|, |<j3> - k3/k0| over 3 planes = {worst:.3e}"))

    worst = 0.0
    for spin in (+0.5, -0.5):
        p = derive_parameters(BeamInput(100.0, 5.0, spin))
        _, _, j3 = angular_momenta(p, 0.0, spec)
        worst = max(worst, abs(j3 - spin))
    checks.append(("total_angular_momentum", worst < QUAD_TOL,
                   f"max |S3 + L3 - s| over both spins = {worst:.3e}"))

    worst = 0.0
    for _ in range(8):
        level = rng.uniform(0.05, 1.4) * rng.choice([-1.0, 1.0])
        rho = rng.uniform(0.0, 4.0) * params.w0
        closed = nonparaxial_root(params, level, rho, validate=False)
        bisect = _bisect_root(params, level, rho)
        if math.isnan(closed) != math.isnan(bisect):
            worst = math.inf
        elif not math.isnan(closed):
            worst = max(worst, abs(closed - bisect) / (1.0 + abs(closed)))
    checks.append(("front_dual_solver", worst < FRONT_TOL,
                   f"max relative root disagreement = {worst:.3e}"))

    return checks
