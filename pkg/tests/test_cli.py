import subprocess
import sys

import pytest

from bhgbeam.cli import main


def run(args):
    return main(args)


def read_rows(path):
    header = None
    rows = []
    with open(path) as fh:
        for line in fh:
            if line.startswith("#"):
                continue
            if header is None:
                header = line.strip().split(",")
            else:
                rows.append(line.strip().split(","))
    return header, rows


def test_fig1_csv_shape(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run(["fig1", "--rho-grid", "32", "--out", str(out)]) == 0
    header, rows = read_rows(out)
    assert header == ["variant", "gouy_level_rad", "xi_rho_pm", "xi3_pm"]
    keys = {(r[0], r[1]) for r in rows}
    assert len(keys) == 32  # 16 levels x 2 variants


def test_fig1_custom_levels(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run(["fig1", "--levels", "0.3,-0.3", "--rho-grid", "16",
                "--out", str(out)]) == 0
    _, rows = read_rows(out)
    assert {r[1] for r in rows} == {"0.29999999999999999", "-0.29999999999999999"}


def test_fig2_csv_shape(tmp_path):
    out = tmp_path / "fig2.csv"
    assert run(["fig2", "--theta-grid", "8", "--out", str(out)]) == 0
    header, rows = read_rows(out)
    assert len(rows) == 8
    assert header[0] == "theta_D_rad"
    # J3 column stays at the spin value over the whole sweep
    j3 = [float(r[header.index("J3_hbar")]) for r in rows]
    assert all(abs(v - 0.5) < 1e-9 for v in j3)


def test_observables_csv(tmp_path):
    out = tmp_path / "obs.csv"
    assert run(["observables", "--kinetic-energy", "100", "--waist", "5",
                "--quad-nodes", "128", "--out", str(out)]) == 0
    header, rows = read_rows(out)
    assert len(rows) == 1
    rec = dict(zip(header, (float(v) for v in rows[0])))
    assert rec["j0_quad"] == pytest.approx(1.0, abs=1e-10)
    assert rec["delta_ratio"] == pytest.approx(2.057112196, rel=1e-8)


def test_field_csv(tmp_path):
    out = tmp_path / "field.csv"
    assert run(["field", "--rho-grid", "4", "--xi3-grid", "4",
                "--out", str(out)]) == 0
    header, rows = read_rows(out)
    assert len(rows) == 16
    assert header[-1] == "j0"
    assert all(float(r[-1]) >= 0.0 for r in rows)


def test_determinism_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["observables", "--quad-nodes", "128", "--out"]
    assert run(args + [str(a)]) == 0
    assert run(args + [str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "beam.cfg"
    cfg.write_text("kinetic-energy = 500  # keV\nwaist = 10\nquad-nodes = 128\n")
    out = tmp_path / "obs.csv"
    assert run(["observables", "--config", str(cfg), "--waist", "20",
                "--out", str(out)]) == 0
    header, rows = read_rows(out)
    rec = dict(zip(header, (float(v) for v in rows[0])))
    assert rec["kinetic_energy_kev"] == 500.0   # from the file
    assert rec["w0_pm"] == 20.0                 # flag wins


def test_bad_config_key(tmp_path):
    cfg = tmp_path / "beam.cfg"
    cfg.write_text("wobble = 3\n")
    assert run(["observables", "--config", str(cfg), "--out",
                str(tmp_path / "x.csv")]) == 2


def test_invalid_waist_exit_code(tmp_path):
    assert run(["observables", "--kinetic-energy", "100", "--waist", "0.5",
                "--out", str(tmp_path / "x.csv")]) == 2


def test_verify_exit_codes():
    assert run(["verify", "--quad-nodes", "64"]) == 0
    assert run(["verify", "--quad-nodes", "64", "--inject-off-shell"]) == 1


def test_verify_seed_independent_verdict(capsys):
    for seed in ("1", "7", "12345"):
        assert run(["verify", "--quad-nodes", "64", "--seed", seed]) == 0
    capsys.readouterr()


def test_console_script_installed():
    proc = subprocess.run([sys.executable, "-m", "bhgbeam.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
