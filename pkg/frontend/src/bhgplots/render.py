"""Figure rendering: front-comparison overlays and momenta/phase panels."""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .io import read_fig1, read_fig2  # noqa: E402


@dataclass
class PlotJob:
    """One rendering task: input CSV(s), figure kind, output image path."""

    input_csvs: list
    figure_kind: str          # 'fronts' | 'momenta_panels'
    output_image: str
    title: str | None = None
    dpi: int = 150


def _group_contours(table):
    """Split fig1 rows into (variant, level) polylines, preserving file order."""
    groups: dict[tuple[str, str], tuple[list, list]] = {}
    iv = table.columns.index("variant")
    il = table.columns.index("gouy_level_rad")
    ir = table.columns.index("xi_rho_pm")
    iz = table.columns.index("xi3_pm")
    for row in table.rows:
        key = (row[iv], row[il])
        rho, xi3 = groups.setdefault(key, ([], []))
        rho.append(float(row[ir]))
        xi3.append(float(row[iz]))
    return groups


def render_fronts(job: PlotJob):
    """Overlay flat (paraxial) and curved (non-paraxial) Gouy front contours.

    One polyline per (variant, level); returns the saved figure.
    """
    if len(job.input_csvs) != 1:
        raise ValueError("fronts rendering takes exactly one input CSV")
    table = read_fig1(job.input_csvs[0])
    groups = _group_contours(table)
    fig, ax = plt.subplots(figsize=(7, 6))
    seen_variant = set()
    for (variant, level), (rho, xi3) in groups.items():
        style = dict(color="tab:blue", linestyle="--", linewidth=1.0) \
            if variant == "paraxial" else \
            dict(color="tab:red", linestyle="-", linewidth=1.2)
        label = variant if variant not in seen_variant else None
        seen_variant.add(variant)
        ax.plot(rho, xi3, label=label, **style)
    ax.set_xlabel(r"$\xi_\rho$ [pm]")
    ax.set_ylabel(r"$\xi_3$ [pm]")
    if job.title:
        ax.set_title(job.title)
    elif "kinetic_energy_keV" in table.provenance:
        ax.set_title(f"Gouy phase fronts, {table.provenance['kinetic_energy_keV']} keV, "
                     f"w0 = {table.provenance.get('waist_pm', '?')} pm")
    ax.legend(loc="upper right")
    fig.tight_layout()
    fig.savefig(job.output_image, dpi=job.dpi)
    return fig


def _energy_label(table, path):
    e = table.provenance.get("kinetic_energy_keV")
    return f"{e} keV" if e is not None else str(path)


def render_momenta_panels(job: PlotJob):
    """Angular momenta (left) and geometric phases (right) vs divergence angle.

    One row of two panels per input CSV (one CSV per beam energy); the total
    angular momentum renders as the constant dash-dotted line at s = 1/2.
    """
    if not 1 <= len(job.input_csvs) <= 2:
        raise ValueError("momenta rendering takes one or two input CSVs")
    tables = [(read_fig2(p), p) for p in job.input_csvs]
    n = len(tables)
    fig, axes = plt.subplots(n, 2, figsize=(10, 4 * n), squeeze=False)
    for row, (table, path) in enumerate(tables):
        theta = table.floats("theta_D_rad")
        left, right = axes[row]
        left.plot(theta, table.floats("S3_hbar"), color="tab:blue",
                  label=r"$\langle S_3\rangle$ (fSAM)")
        left.plot(theta, table.floats("L3_hbar"), color="tab:red",
                  label=r"$\langle L_3\rangle$ (fOAM)")
        left.plot(theta, table.floats("J3_hbar"), color="tab:green",
                  linestyle="-.", label=r"$\langle J_3\rangle$ (TAM)")
        left.set_xlabel(r"$\theta_D$ [rad]")
        left.set_ylabel(r"angular momentum [$\hbar$]")
        left.set_title(f"Angular momenta, {_energy_label(table, path)}")
        left.legend()
        right.plot(theta, table.floats("gouy_shift_berry_rad"), color="tab:purple",
                   label=r"total Gouy shift $\mu_T$")
        right.plot(theta, table.floats("berry_phase_rad"), color="tab:orange",
                   label=r"Berry phase $\gamma_B$")
        right.set_xlabel(r"$\theta_D$ [rad]")
        right.set_ylabel("phase [rad]")
        right.set_title(f"Geometric phases, {_energy_label(table, path)}")
        right.legend()
    if job.title:
        fig.suptitle(job.title)
    fig.tight_layout()
    fig.savefig(job.output_image, dpi=job.dpi)
    return fig


def render(job: PlotJob):
    """Dispatch on the figure kind."""
    if job.figure_kind == "fronts":
        return render_fronts(job)
    if job.figure_kind == "momenta_panels":
        return render_momenta_panels(job)
    raise ValueError("figure_kind must be 'fronts' or 'momenta_panels'")
