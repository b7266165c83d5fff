import json
import subprocess
import sys

import numpy as np
import pytest

from npspec import cli
from npspec.validate import CheckResult


def run_cli(argv, capsys):
    code = cli.run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------- spectrum


def test_spectrum_json_has_both_lists_and_pairing(capsys):
    code, out, _ = run_cli(
        ["spectrum", "--algebraic", "m=3", "delta=0.066667",
         "--analytic", "--numeric", "N=256"],
        capsys,
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["target"] == {
        "kind": "algebraic", "rho0": 0.0, "m": 3, "delta": 0.066667,
    }
    assert len(rec["analytic"]) == 6
    assert len(rec["numeric"]) == 6
    assert rec["max_pairing_distance"] < 5 * 0.066667**2
    # closed-form values are sorted descending with the center mode first
    assert rec["analytic"][0] == pytest.approx(0.066667)


def test_spectrum_analytic_only_twodisks(capsys):
    code, out, _ = run_cli(
        ["spectrum", "--twodisks", "r=1", "eps=2", "--analytic", "--pairs", "2"],
        capsys,
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["analytic"][0] == pytest.approx(0.03589838486224542, rel=1e-15)
    assert len(rec["analytic"]) == 4
    assert "numeric" not in rec


def test_spectrum_needs_a_list_flag(capsys):
    code, _, err = run_cli(["spectrum", "--algebraic", "m=3", "delta=0.05"], capsys)
    assert code == 2
    assert "usage:" in err


# ------------------------------------------------------------ emit-boundary


def test_emit_boundary_writes_csv_and_figure(tmp_path, capsys):
    out = tmp_path / "bdry.csv"
    code, _, _ = run_cli(
        ["emit-boundary", "--algebraic", "rho0=0.1", "m=3", "delta=0.066667",
         "--out", str(out), "N=128"],
        capsys,
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "theta,x,y,jacobian,nx,ny"
    assert len(lines) == 129
    assert (tmp_path / "bdry.png").exists()


def test_emit_boundary_no_plot_suppresses_figure(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code, _, _ = run_cli(
        ["emit-boundary", "--algebraic", "m=3", "delta=0.066667",
         "--out", str(out), "--no-plot", "N=64"],
        capsys,
    )
    assert code == 0
    assert not (tmp_path / "b.png").exists()


def test_emit_boundary_two_disks_single_header(tmp_path, capsys):
    out = tmp_path / "pair.csv"
    code, _, _ = run_cli(
        ["emit-boundary", "--twodisks", "r=1", "eps=1.5", "--out", str(out), "N=64"],
        capsys,
    )
    assert code == 0
    text = out.read_text()
    assert text.count("theta,") == 1
    assert len(text.splitlines()) == 129  # two curves of 64 nodes and a header


# ------------------------------------------------------------------- scans


def _scan_args(out_path):
    return [
        "scan", "--algebraic", "m=4", "delta=0.05",
        "--synthetic", "re_start=-0.005", "re_stop=0.13", "im=1e-3",
        "--count", "2001", "--out", str(out_path),
    ]


def test_scan_and_shape_reconstruction_round_trip(tmp_path, capsys):
    scan_path = tmp_path / "scan.csv"
    code, _, _ = run_cli(_scan_args(scan_path), capsys)
    assert code == 0
    assert scan_path.read_text().splitlines()[0] == (
        "wavelength_nm,re_lambda,im_lambda,abs_m11,abs_m22cc"
    )
    out = tmp_path / "shape.json"
    code, _, _ = run_cli(
        ["reconstruct-shape", "--scan", str(scan_path), "--out", str(out)], capsys
    )
    assert code == 0
    rec = json.loads(out.read_text())
    assert rec["m"] == 4
    assert abs(rec["delta"] - 0.05) / 0.05 < 0.02
    assert abs(rec["rho0"]) < 0.02
    assert {p["trace"] for p in rec["peaks"]} == {"m11", "m22cc"}


def test_identical_invocations_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli(_scan_args(a) + ["--no-plot"], capsys)[0] == 0
    assert run_cli(_scan_args(b) + ["--no-plot"], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gap_reconstruction_round_trip(tmp_path, capsys):
    scan_path = tmp_path / "scan.csv"
    code, _, _ = run_cli(
        ["scan", "--twodisks", "r=1", "eps=1.5",
         "--synthetic", "re_start=0.005", "re_stop=0.09",
         "--count", "4001", "--out", str(scan_path), "--no-plot"],
        capsys,
    )
    assert code == 0
    code, out, _ = run_cli(["reconstruct-gap", "--r", "1", "--scan", str(scan_path)], capsys)
    assert code == 0
    rec = json.loads(out)
    assert abs(rec["eps"] - 1.5) < 1e-3
    assert rec["peaks"]


def test_scan_with_drude_material(tmp_path, capsys):
    out = tmp_path / "drude.csv"
    code, _, _ = run_cli(
        ["scan", "--algebraic", "m=3", "delta=0.066667", "--drude",
         "--count", "64", "--out", str(out), "--no-plot"],
        capsys,
    )
    assert code == 0
    assert len(out.read_text().splitlines()) == 65


def test_scan_with_material_config(tmp_path, capsys):
    cfg = tmp_path / "metal.cfg"
    cfg.write_text(
        "# indicative free-electron metal\n"
        "omega_p = 4.45e15\n"
        "inv_tau = 1.0e14\n"
        "wl_min = 400\n"
        "wl_max = 900\n"
    )
    out = tmp_path / "scan.csv"
    code, _, _ = run_cli(
        ["scan", "--algebraic", "m=3", "delta=0.066667",
         "--material-config", str(cfg),
         "--count", "32", "--out", str(out), "--no-plot"],
        capsys,
    )
    assert code == 0


def test_scan_help_exits_zero(capsys):
    assert run_cli(["scan", "--help"], capsys)[0] == 0


# --------------------------------------------------------------------- gpt


def test_gpt_csv_header_and_figure(tmp_path, capsys):
    out = tmp_path / "gpt.csv"
    code, _, _ = run_cli(
        ["gpt", "--algebraic", "m=5", "delta=0.03333",
         "--re-min", "-0.09", "--re-max", "0.09", "--count", "61",
         "--out", str(out)],
        capsys,
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "lambda_re,lambda_im,m11_re,m11_im,m22cc_re,m22cc_im"
    assert len(lines) == 62
    assert (tmp_path / "gpt.png").exists()


def test_gpt_disk_pair_leaves_m22_blank(tmp_path, capsys):
    out = tmp_path / "gpt.csv"
    code, _, _ = run_cli(
        ["gpt", "--twodisks", "r=1", "eps=2", "--count", "16",
         "--out", str(out), "--no-plot"],
        capsys,
    )
    assert code == 0
    first = out.read_text().splitlines()[1]
    assert first.endswith(",nan,nan")


# ---------------------------------------------------------- twodisks tables


def test_twodisks_spectrum_table(capsys):
    code, out, _ = run_cli(["twodisks", "spectrum", "--eps", "2", "--pairs", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,lambda_plus,lambda_minus"
    n, plus, minus = lines[1].split(",")
    assert n == "1"
    assert float(plus) == pytest.approx(0.03589838486224542, rel=1e-15)
    assert float(minus) == -float(plus)


def test_twodisks_gapfield_table(tmp_path, capsys):
    out = tmp_path / "gf.csv"
    code, _, _ = run_cli(
        ["twodisks", "gapfield", "--eps", "0.05", "--loss-min", "1e-3",
         "--loss-max", "1e-1", "--count", "17", "--out", str(out)],
        capsys,
    )
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "im_offset,re_field,im_field,abs_field,abs_estimate"
    offsets = np.array([float(l.split(",")[0]) for l in lines[1:]])
    np.testing.assert_allclose(offsets, np.geomspace(1e-3, 1e-1, 17), rtol=1e-15)
    # enhancement grows as the loss shrinks
    mags = np.array([float(l.split(",")[3]) for l in lines[1:]])
    assert mags[0] > mags[-1]
    assert (tmp_path / "gf.png").exists()


def test_run_config_enforces_invariants():
    cli.RunConfig(subcommand="scan", grid_count=16, n_nodes=64)
    with pytest.raises(ValueError):
        cli.RunConfig(subcommand="scan", grid_count=8)
    with pytest.raises(ValueError):
        cli.RunConfig(subcommand="scan", n_nodes=100)
    with pytest.raises(ValueError):
        cli.RunConfig(subcommand="scan", n_nodes=8192)
    with pytest.raises(ValueError):
        cli.RunConfig(subcommand="scan", grid_min=2.0, grid_max=1.0)


# ------------------------------------------------------------ exit codes


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["twodisks"],
        ["spectrum", "--algebraic", "m=3", "delta=0.05",
         "--twodisks", "r=1", "eps=2", "--analytic"],
        ["spectrum", "--analytic"],
        ["spectrum", "--algebraic", "m=3", "delta=0.05", "--numeric", "N=100"],
        ["spectrum", "--algebraic", "m=3", "delta=0.05", "--numeric", "N=8192"],
        ["emit-boundary", "--algebraic", "q=3"],
        ["emit-boundary", "--algebraic", "m3"],
        ["gpt", "--algebraic", "m=3", "delta=0.05", "--count", "8"],
        ["scan", "--algebraic", "m=3", "delta=0.05"],
        ["scan", "--algebraic", "m=3", "delta=0.05", "--drude",
         "--synthetic", "re_start=0", "re_stop=0.1"],
        ["validate", "--only", "nonsense"],
    ],
)
def test_usage_errors_exit_2_with_synopsis(argv, capsys):
    code, _, err = run_cli(argv, capsys)
    assert code == 2
    assert "usage:" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["emit-boundary", "--algebraic", "m=3", "delta=0.5"],
        ["twodisks", "spectrum", "--eps", "-1"],
        ["reconstruct-gap", "--r", "1", "--scan", "nosuch.csv"],
        # a lossless grid point landing exactly on the leading pole
        ["twodisks", "m11", "--eps", "2", "--re-min", "0.035898384862245419",
         "--re-max", "0.09", "--count", "16", "--im", "0"],
    ],
)
def test_domain_errors_exit_1(argv, capsys):
    code, _, err = run_cli(argv, capsys)
    assert code == 1
    assert err.startswith("error:")


# ---------------------------------------------------------------- validate


def test_validate_subset_passes(capsys):
    code, out, _ = run_cli(["validate", "--only", "field-blowup,symmetry-zeros"], capsys)
    assert code == 0
    assert out.count("PASS") == 2
    assert "2/2 checks passed" in out


def test_validate_fails_nonzero_when_a_check_fails(monkeypatch, capsys):
    monkeypatch.setattr(
        cli.validate,
        "run_all",
        lambda only=None: [CheckResult("broken", False, "synthetic failure", 0.0)],
    )
    code, out, _ = run_cli(["validate"], capsys)
    assert code == 1
    assert "FAIL" in out


# ----------------------------------------------------------- module runner


def test_python_m_invocation_matches_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "npspec", "twodisks", "spectrum", "--eps", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("n,lambda_plus,lambda_minus")
