import json

import pytest

from pyramid_info.cli import CSV_HEADER, main


def run_cli(argv, capsys):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_info_orthonormal_point(capsys):
    status, out, _ = run_cli(["info", "--dim", "3", "--gamma", "0"], capsys)
    assert status == 0
    payload = json.loads(out)
    assert payload["i_srm"] == pytest.approx(1.0, abs=1e-12)
    assert payload["i_ims"] == pytest.approx(1.0, abs=1e-12)
    assert payload["delta_i"] == 0.0


def test_info_half_overlap_point(capsys):
    status, out, _ = run_cli(["info", "--dim", "3", "--gamma", "0.5"], capsys)
    assert status == 0
    payload = json.loads(out)
    assert payload["i_srm"] == pytest.approx(0.612376037, abs=1e-6)
    assert payload["holevo_chi"] == pytest.approx(0.78969008, abs=1e-5)
    assert payload["p_srm"] == pytest.approx(8.0 / 9.0, abs=1e-12)
    for key in (
        "c", "d", "holevo_chi", "i_srm", "i_ims", "delta_i", "s_opt",
        "lambda_opt", "edge_cosine", "p_srm", "p_ims", "p_ims_adjusted",
    ):
        assert key in payload


def test_info_domain_error_cites_bound(capsys):
    status, _, err = run_cli(["info", "--dim", "3", "--gamma", "-0.5"], capsys)
    assert status == 1
    assert "-0.5" in err


def test_sweep_csv_output(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    status, _, _ = run_cli(
        ["sweep", "--dims", "3", "--gamma-min", "0", "--gamma-max", "0.9",
         "--gamma-steps", "10", "--out", str(out_path)],
        capsys,
    )
    assert status == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 11


def test_sweep_multiple_dims_single_gamma(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    status, _, _ = run_cli(
        ["sweep", "--dims", "3,5", "--gamma-min", "0.5", "--gamma-max", "0.5",
         "--gamma-steps", "1", "--out", str(out_path)],
        capsys,
    )
    assert status == 0
    rows = out_path.read_text().splitlines()[1:]
    assert len(rows) == 2
    delta3 = float(rows[0].split(",")[4])
    delta5 = float(rows[1].split(",")[4])
    assert delta5 >= delta3


def test_sweep_rejects_inverted_gamma_range(tmp_path, capsys):
    status, _, err = run_cli(
        ["sweep", "--dims", "3", "--gamma-min", "0.5", "--gamma-max", "0.1",
         "--gamma-steps", "3", "--out", str(tmp_path / "x.csv")],
        capsys,
    )
    assert status == 1
    assert "gamma_min" in err


def test_sweep_json_output(tmp_path, capsys):
    out_path = tmp_path / "sweep.json"
    status, _, _ = run_cli(
        ["sweep", "--dims", "100", "--gamma-min", "-0.5", "--gamma-max", "0.5",
         "--gamma-steps", "3", "--out", str(out_path), "--format", "json"],
        capsys,
    )
    assert status == 0
    payload = json.loads(out_path.read_text())
    assert len(payload["records"]) == 3
    assert payload["metadata"]["clamped"][0]["dim"] == 100
    first = payload["records"][0]
    assert first["gamma"] == pytest.approx(-1.0 / 99.0 + 1e-6, abs=1e-12)
    assert set(first) == {
        "dim", "gamma", "i_srm", "i_ims", "delta_i", "s_opt", "lambda_opt", "p_srm", "p_ims",
    }


def test_sweep_runs_are_byte_identical(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        status, _, _ = run_cli(
            ["sweep", "--dims", "3,4", "--gamma-min", "0.2", "--gamma-max", "0.9",
             "--gamma-steps", "5", "--out", str(path)],
            capsys,
        )
        assert status == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_figure1_unwritable_path(capsys):
    status, _, err = run_cli(["figure1", "--out", "/nonexistent-dir/figure.csv"], capsys)
    assert status == 1
    assert err.strip()


def test_verify_orthonormal_point(capsys):
    status, out, _ = run_cli(
        ["verify", "--dim", "3", "--gamma", "0", "--restarts", "5", "--seed", "1"],
        capsys,
    )
    assert status == 0
    assert "OK" in out


def test_verify_dimension_guard(capsys):
    status, _, err = run_cli(
        ["verify", "--dim", "7", "--gamma", "0.5", "--restarts", "2", "--seed", "1"],
        capsys,
    )
    assert status == 1
    assert "--force" in err
