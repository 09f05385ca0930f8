import subprocess

import pytest


def _run_beam_cli(args):
    proc = subprocess.run(["bhgbeam", *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def fig1_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("csv") / "fig1.csv"
    _run_beam_cli(["fig1", "--rho-grid", "64", "--out", str(out)])
    return out


@pytest.fixture(scope="session")
def fig1_single_level_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("csv") / "fig1_single.csv"
    _run_beam_cli(["fig1", "--levels", "0.5", "--rho-grid", "32",
                   "--out", str(out)])
    return out


@pytest.fixture(scope="session")
def fig2_csvs(tmp_path_factory):
    base = tmp_path_factory.mktemp("csv")
    paths = []
    for kinetic in ("100", "500"):
        out = base / f"fig2_{kinetic}.csv"
        _run_beam_cli(["fig2", "--kinetic-energy", kinetic, "--theta-grid",
                       "24", "--out", str(out)])
        paths.append(out)
    return paths
