"""Command-line interface: fig1 / fig2 / observables / field / verify.

All flags take laboratory units (keV, pm, rad).  Every CSV starts with
'#'-prefixed provenance lines recording the full parameter set, the frozen
constants and the quadrature spec, and is byte-identical across runs with
identical flags.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import __version__
from .beam import (BeamConfigError, BeamInput, derive_parameters,
                   waist_for_divergence)
from .constants import ELECTRON_REST_ENERGY_KEV, HBARC_KEV_PM, UnitError
from .fronts import DEFAULT_LEVELS, FrontError, fig1_dataset
from .modes import BeamPoint
from .observables import (QuadratureError, QuadratureSpec, angular_momenta,
                          berry_phase, compute_report, gouy_total_shift,
                          soi_term)
from .spinor import bispinor_exact

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_CONFIG = 2
EXIT_NUMERICAL = 3


def _fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _provenance(command: str, args, extra: dict | None = None) -> list[str]:
    lines = [
        f"# bhgbeam {__version__}",
        f"# command = {command}",
        f"# kinetic_energy_keV = {_fmt(args.kinetic_energy)}",
        f"# spin = {args.spin}",
        f"# mc2_keV = {_fmt(ELECTRON_REST_ENERGY_KEV)}",
        f"# hbarc_keV_pm = {_fmt(HBARC_KEV_PM)}",
        f"# quad_nodes = {args.quad_nodes}",
    ]
    if getattr(args, "waist", None) is not None:
        lines.insert(3, f"# waist_pm = {_fmt(args.waist)}")
    for key, val in (extra or {}).items():
        lines.append(f"# {key} = {_fmt(val)}")
    return lines


def _write_csv(path: str, provenance: list[str], header: str, rows) -> None:
    with open(path, "w", newline="") as fh:
        for line in provenance:
            fh.write(line + "\n")
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _spin_value(label: str) -> float:
    return +0.5 if label == "up" else -0.5


def _params(args):
    return derive_parameters(
        BeamInput(args.kinetic_energy, args.waist, _spin_value(args.spin)))


def _quad_spec(args) -> QuadratureSpec:
    return QuadratureSpec(nodes=args.quad_nodes)


# --- commands ----------------------------------------------------------------

def cmd_fig1(args) -> int:
    params = _params(args)
    levels = args.levels if args.levels else list(DEFAULT_LEVELS)
    rho_max = args.rho_max if args.rho_max is not None else 6.0 * params.w0
    contours = fig1_dataset(params, levels, rho_max, args.rho_grid)
    rows = []
    for c in contours:
        for r, z in zip(c.xi_rho, c.xi_3):
            rows.append((c.variant, c.gouy_level, r, z))
    prov = _provenance("fig1", args, {
        "levels_rad": ";".join(_fmt(l) for l in levels),
        "rho_max_pm": rho_max,
        "n_rho": args.rho_grid,
    })
    _write_csv(args.out, prov, "variant,gouy_level_rad,xi_rho_pm,xi3_pm", rows)
    print(f"fig1: wrote {len(rows)} samples over {len(contours)} contours to {args.out}")
    return EXIT_OK


def cmd_fig2(args) -> int:
    spec = _quad_spec(args)
    spin = _spin_value(args.spin)
    n = args.theta_grid
    rows = []
    for k in range(1, n + 1):
        theta = 0.5 * math.pi * k / n
        w0, params = waist_for_divergence(args.kinetic_energy, theta, spin)
        s3, l3, j3 = angular_momenta(params, 0.0, spec)
        d_div = soi_term(params, "divergence")
        ddir = l3 / spin
        gb = berry_phase(params)
        shift_c, shift_p = gouy_total_shift(params)
        rows.append((theta, w0, s3, l3, j3, d_div, ddir, gb, shift_p, shift_c))
    prov = _provenance("fig2", args, {"theta_grid": n})
    _write_csv(args.out, prov,
               "theta_D_rad,w0_pm,S3_hbar,L3_hbar,J3_hbar,Delta_divergence,Delta_direct,"
               "berry_phase_rad,gouy_shift_berry_rad,gouy_shift_modeweight_rad", rows)
    print(f"fig2: wrote {len(rows)} divergence samples to {args.out}")
    return EXIT_OK


_REPORT_LABELS = {
    "j0_quad": "<j0> (quadrature, truncated)",
    "j3_quad": "<j3> (quadrature, truncated)",
    "j3_closed": "<j3> closed form k3/k0",
    "j3_exact_quad": "<j3> (quadrature, exact bi-spinor)",
    "delta_divergence": "Delta (divergence route)",
    "delta_direct": "Delta (direct quadrature of <L3>)",
    "delta_ratio": "Delta_divergence / Delta_direct",
}


def cmd_observables(args) -> int:
    params = _params(args)
    report = compute_report(params, _quad_spec(args))
    fields = [(f, getattr(report, f)) for f in report.__dataclass_fields__]
    prov = _provenance("observables", args, {})
    _write_csv(args.out, prov, ",".join(f for f, _ in fields),
               [tuple(v for _, v in fields)])
    width = max(len(f) for f, _ in fields)
    for f, v in fields:
        label = _REPORT_LABELS.get(f, f)
        print(f"{f:<{width}}  {_fmt(v):>24}  {label if label != f else ''}".rstrip())
    print(f"observables: wrote report to {args.out}")
    return EXIT_OK


def cmd_field(args) -> int:
    params = _params(args)
    header = ("xi_rho_pm,xi3_pm,re_c1,im_c1,re_c2,im_c2,re_c3,im_c3,re_c4,im_c4,j0")
    rows = []
    if args.rho_grid > 0 and args.xi3_grid > 0:
        rho_vals = np.linspace(0.0, args.rho_max if args.rho_max is not None
                               else 4.0 * params.w0, args.rho_grid)
        xi3_max = args.xi3_max if args.xi3_max is not None else 2.0 * params.rayleigh_range
        xi3_vals = np.linspace(-xi3_max, xi3_max, args.xi3_grid)
        for xi3 in xi3_vals:
            for rho in rho_vals:
                point = BeamPoint(float(rho), args.xi_phi, float(xi3), 0.0)
                psi = bispinor_exact(params, point, (0.0, 0.0, 0.0, float(xi3)))
                j0 = float(np.real(np.vdot(psi, psi)))
                row = [rho, xi3]
                for c in psi:
                    row.extend((c.real, c.imag))
                row.append(j0)
                rows.append(tuple(row))
    prov = _provenance("field", args, {
        "rho_grid": args.rho_grid, "xi3_grid": args.xi3_grid, "xi_phi_rad": args.xi_phi,
    })
    _write_csv(args.out, prov, header, rows)
    print(f"field: wrote {len(rows)} samples to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_verification
    checks = run_verification(seed=args.seed, quad_nodes=args.quad_nodes,
                              inject_off_shell=args.inject_off_shell)
    width = max(len(name) for name, _, _ in checks)
    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name:<{width}}  {detail}")
        failed += 0 if ok else 1
    print(f"verify: {len(checks) - failed}/{len(checks)} checks passed (seed {args.seed})")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


# --- argument plumbing ---------------------------------------------------------

def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line: {raw.rstrip()}")
            key, val = (part.strip() for part in line.split("=", 1))
            values[key.replace("-", "_")] = val
    return values


def _levels_arg(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhgbeam",
        description="Exact Dirac bi-spinor Gaussian electron beams: "
                    "figure datasets, observables, field maps, verification.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, waist_default=None, kinetic_default=100.0):
        p.add_argument("--config", help="key = value file mirroring the flags")
        p.add_argument("--kinetic-energy", type=float, default=kinetic_default,
                       metavar="KEV", help="kinetic energy [keV]")
        if waist_default is not None:
            p.add_argument("--waist", type=float, default=waist_default,
                           metavar="PM", help="waist radius [pm]")
        p.add_argument("--spin", choices=("up", "down"), default="up")
        p.add_argument("--quad-nodes", type=int, default=256, metavar="N")
        p.add_argument("--seed", type=int, default=42)
        p.add_argument("--out", default=None, metavar="PATH")

    p = sub.add_parser("fig1", help="Gouy phase-front contours (paraxial vs non-paraxial)")
    common(p, waist_default=5.0)
    p.add_argument("--levels", type=_levels_arg, default=None,
                   metavar="RAD,...", help="comma-separated Gouy levels [rad]")
    p.add_argument("--rho-max", type=float, default=None, metavar="PM")
    p.add_argument("--rho-grid", type=int, default=512, metavar="N")
    p.set_defaults(func=cmd_fig1, default_out="fig1.csv")

    p = sub.add_parser("fig2", help="angular momenta and phases vs divergence angle")
    common(p, kinetic_default=500.0)
    p.add_argument("--theta-grid", type=int, default=256, metavar="N")
    p.set_defaults(func=cmd_fig2, default_out="fig2.csv")

    p = sub.add_parser("observables", help="full expectation-value report")
    common(p, waist_default=50.0)
    p.set_defaults(func=cmd_observables, default_out="observables.csv")

    p = sub.add_parser("field", help="bi-spinor samples on a (rho, xi3) grid")
    common(p, waist_default=5.0)
    p.add_argument("--rho-max", type=float, default=None, metavar="PM")
    p.add_argument("--rho-grid", type=int, default=64, metavar="N")
    p.add_argument("--xi3-max", type=float, default=None, metavar="PM")
    p.add_argument("--xi3-grid", type=int, default=64, metavar="N")
    p.add_argument("--xi-phi", type=float, default=0.0, metavar="RAD")
    p.set_defaults(func=cmd_field, default_out="field.csv")

    p = sub.add_parser("verify", help="run the full invariant suite")
    common(p, waist_default=5.0)
    p.add_argument("--inject-off-shell", action="store_true",
                   help="deliberately break the plane-wave vector (self-test)")
    p.set_defaults(func=cmd_verify, default_out=None)

    return parser


def _apply_config(args, parser_defaults):
    if not args.config:
        return args
    values = _read_config(args.config)
    casts = {"kinetic_energy": float, "waist": float, "quad_nodes": int,
             "seed": int, "rho_max": float, "rho_grid": int, "theta_grid": int,
             "xi3_max": float, "xi3_grid": int, "xi_phi": float,
             "levels": _levels_arg, "spin": str, "out": str}
    for key, raw in values.items():
        if not hasattr(args, key):
            raise ValueError(f"unknown config key: {key}")
        # flags override file values: only apply where the flag kept its default
        if getattr(args, key) == parser_defaults.get(key):
            setattr(args, key, casts.get(key, str)(raw))
    return args


def main(argv=None) -> int:
    os.environ.setdefault("BHGBEAM_THREADS", "1")  # only env var consulted
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_CONFIG if exc.code not in (0, None) else 0
    defaults = {a.dest: a.default for g in parser._subparsers._group_actions
                for a in g.choices[args.command]._actions}
    try:
        args = _apply_config(args, defaults)
        if getattr(args, "out", None) is None and args.default_out:
            args.out = args.default_out
        return args.func(args)
    except (BeamConfigError, UnitError, FrontError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except QuadratureError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
