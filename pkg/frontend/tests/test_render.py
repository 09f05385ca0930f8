import matplotlib.pyplot as plt
import numpy as np
import pytest

from bhgplots import (ColumnError, EmptyDataError, PlotJob, read_fig1,
                      render, render_fronts, render_momenta_panels)


@pytest.fixture(autouse=True)
def _close_figures():
    yield
    plt.close("all")


def test_fronts_default_has_32_polylines(fig1_csv, tmp_path):
    out = tmp_path / "fronts.png"
    fig = render_fronts(PlotJob([str(fig1_csv)], "fronts", str(out)))
    assert out.exists() and out.stat().st_size > 0
    assert len(fig.axes[0].lines) == 32


def test_fronts_single_level_has_2_polylines(fig1_single_level_csv, tmp_path):
    out = tmp_path / "fronts.png"
    fig = render_fronts(PlotJob([str(fig1_single_level_csv)], "fronts", str(out)))
    assert len(fig.axes[0].lines) == 2


def test_fronts_rendering_is_read_only(fig1_csv, tmp_path):
    before = fig1_csv.read_bytes()
    render_fronts(PlotJob([str(fig1_csv)], "fronts", str(tmp_path / "a.png")))
    render_fronts(PlotJob([str(fig1_csv)], "fronts", str(tmp_path / "b.png")))
    assert fig1_csv.read_bytes() == before


def test_momenta_two_energies_has_4_panels(fig2_csvs, tmp_path):
    out = tmp_path / "panels.png"
    fig = render_momenta_panels(
        PlotJob([str(p) for p in fig2_csvs], "momenta_panels", str(out)))
    assert out.exists()
    assert len(fig.axes) == 4


def test_momenta_one_energy_has_2_panels(fig2_csvs, tmp_path):
    fig = render_momenta_panels(
        PlotJob([str(fig2_csvs[0])], "momenta_panels", str(tmp_path / "p.png")))
    assert len(fig.axes) == 2


def test_momenta_tam_trace_is_constant_half(fig2_csvs, tmp_path):
    fig = render_momenta_panels(
        PlotJob([str(fig2_csvs[0])], "momenta_panels", str(tmp_path / "p.png")))
    left = fig.axes[0]
    tam = [ln for ln in left.lines if "J_3" in (ln.get_label() or "")]
    assert len(tam) == 1
    y = tam[0].get_ydata()
    assert np.allclose(y, 0.5, atol=1e-8)
    assert tam[0].get_linestyle() == "-."


def test_header_only_csv_rejected(fig1_csv, tmp_path):
    lines = fig1_csv.read_text().splitlines()
    header_only = tmp_path / "empty.csv"
    header_only.write_text("\n".join(
        [l for l in lines if l.startswith("#")]
        + [next(l for l in lines if not l.startswith("#"))]) + "\n")
    with pytest.raises(EmptyDataError, match="no samples"):
        read_fig1(header_only)


def test_shuffled_header_rejected(fig1_csv, tmp_path):
    lines = fig1_csv.read_text().splitlines()
    shuffled = tmp_path / "shuffled.csv"
    fixed = []
    for line in lines:
        if not line.startswith("#") and line.startswith("variant"):
            cols = line.split(",")
            line = ",".join(cols[::-1])  # reverse the header only
        fixed.append(line)
    shuffled.write_text("\n".join(fixed) + "\n")
    with pytest.raises(ColumnError, match="contract order"):
        read_fig1(shuffled)


def test_missing_column_named(fig2_csvs, tmp_path):
    lines = fig2_csvs[0].read_text().splitlines()
    broken = tmp_path / "broken.csv"
    fixed = []
    for line in lines:
        if not line.startswith("#") and line.startswith("theta_D_rad"):
            line = line.replace("S3_hbar,", "")
        fixed.append(line)
    broken.write_text("\n".join(fixed) + "\n")
    with pytest.raises(ColumnError, match="S3_hbar"):
        render_momenta_panels(
            PlotJob([str(broken)], "momenta_panels", str(tmp_path / "x.png")))


def test_render_dispatch_validates_kind(fig1_csv, tmp_path):
    with pytest.raises(ValueError):
        render(PlotJob([str(fig1_csv)], "surface", str(tmp_path / "x.png")))


def test_fronts_wrong_kind_csv_rejected(fig2_csvs, tmp_path):
    with pytest.raises(ColumnError):
        render_fronts(PlotJob([str(fig2_csvs[0])], "fronts",
                              str(tmp_path / "x.png")))
