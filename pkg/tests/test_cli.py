import json
import math

import numpy as np
import pytest

from ellgas import AnnulusSpec, ModelKind, kernel_elliptic
from ellgas.cli import main
from ellgas.reporting import read_csv, reemit_csv


def run(*args):
    return main(list(args))


def test_verify_orthogonality_pass(tmp_path):
    out = tmp_path / "ortho.json"
    assert run("verify-orthogonality", "--model", "I", "--nmax", "8",
               "--R", "1.5", "--v", "2.5", "--out", str(out)) == 0
    payload = json.loads(out.read_text())
    assert payload["model"] == "I"
    assert payload["max_offdiag"] <= 1e-8 * max(payload["h_closed_form"])
    assert payload["max_diag_relerr"] <= 1e-8
    assert len(payload["h_quadrature"]) == 9


def test_verify_orthogonality_threshold_failure(tmp_path):
    out = tmp_path / "ortho.json"
    assert run("verify-orthogonality", "--model", "II", "--out", str(out),
               "--tol", "1e-18") == 1


def test_invalid_spec_exit_2(tmp_path):
    out = tmp_path / "x.json"
    assert run("verify-orthogonality", "--model", "I", "--R", "2.5", "--v", "1.5",
               "--out", str(out)) == 2


def test_unknown_args_exit_2(tmp_path):
    assert run("no-such-command") == 2
    assert run("verify-orthogonality", "--model", "V", "--out", "x.json") == 2


def test_figure1(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run("figure1", "--v", "1.1", "--v", "2", "--grid", "721",
               "--out", str(out)) == 0
    meta, header, rows = read_csv(str(out))
    assert header == ["psi", "sigma_v=1.1", "sigma_v=2"]
    assert len(rows) == 722                     # grid + normalization row
    assert rows[-1][0] == "normalization"
    for cell in rows[-1][1:]:
        assert float(cell) == pytest.approx(1.0, abs=1e-10)
    assert float(rows[0][2]) == pytest.approx(0.2652582384864922, rel=1e-12)
    # sigma decreases from psi = 0 to pi/2 for each v
    psi = np.array([float(r[0]) for r in rows[:-1]])
    upto = psi <= math.pi / 2 + 1e-12
    for col in (1, 2):
        vals = np.array([float(r[col]) for r in rows[:-1]])[upto]
        assert np.all(np.diff(vals) < 0)


def test_figure1_invalid_v(tmp_path):
    assert run("figure1", "--v", "0.9", "--out", str(tmp_path / "f.csv")) == 2


def test_figure2(tmp_path):
    out = tmp_path / "fig2.csv"
    assert run("figure2", "--tau", "1.0", "--grid", "81", "--phi-max", "8",
               "--out", str(out)) == 0
    meta, header, rows = read_csv(str(out))
    assert header == ["varphi", "lambda"]
    lam = {float(r[0]): float(r[1]) for r in rows}
    assert lam[0.0] == 0.0
    for phi in (2.0, 4.0, 6.0):
        assert lam[phi] == pytest.approx(lam[-phi], rel=1e-13)


def test_figure2_invalid_tau(tmp_path):
    assert run("figure2", "--tau", "-1", "--out", str(tmp_path / "f.csv")) == 2


def test_convergence_edge(tmp_path):
    out = tmp_path / "conv.csv"
    assert run("convergence", "--regime", "edge", "--model", "I",
               "--N", "100", "--N", "200", "--N", "400",
               "--v", "2.0", "--psi", "0.7", "--T", "3",
               "--t1", "1", "--t2", "1.4", "--phi1", "0.3", "--phi2", "-0.2",
               "--out", str(out)) == 0
    _, header, rows = read_csv(str(out))
    errs = [float(r[-1]) for r in rows]
    assert errs[0] > errs[1] > errs[2]


def test_convergence_interval_edge(tmp_path):
    out = tmp_path / "conv.csv"
    assert run("convergence", "--regime", "interval-edge", "--model", "III",
               "--interval-psi", "pi", "--N", "100", "--N", "200",
               "--out", str(out)) == 0


def test_convergence_bulk(tmp_path):
    out = tmp_path / "conv.csv"
    assert run("convergence", "--regime", "bulk", "--model", "IV",
               "--N", "100", "--N", "200", "--out", str(out)) == 0


def test_convergence_bad_scaling_exit_3(tmp_path):
    # N = 2 puts the inner radius below the branch-cut circle
    assert run("convergence", "--regime", "edge", "--model", "I", "--N", "2",
               "--T", "3", "--v", "2.0", "--t1", "1", "--t2", "1.4",
               "--out", str(tmp_path / "c.csv")) == 3


def test_convergence_unsorted_n_exit_2(tmp_path):
    assert run("convergence", "--regime", "edge", "--model", "I",
               "--N", "200", "--N", "100", "--out", str(tmp_path / "c.csv")) == 2


def test_kernel_eval(tmp_path):
    out = tmp_path / "k.json"
    assert run("kernel-eval", "--model", "II", "--N", "4",
               "--z1", "1.25,0.1", "--z2", "1.1,-0.4", "--out", str(out)) == 0
    payload = json.loads(out.read_text())
    want = kernel_elliptic(ModelKind.II, 4, 1.25 + 0.1j, 1.1 - 0.4j, AnnulusSpec(1.5, 2.5))
    assert payload["kernel_re"] == pytest.approx(want.real, rel=1e-14)
    assert payload["kernel_im"] == pytest.approx(want.imag, rel=1e-14)


def test_sample_deterministic_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ("sample", "--model", "II", "--N", "2", "--count", "5", "--seed", "42")
    assert run(*args, "--out", str(a)) == 0
    assert run(*args, "--out", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    _, header, rows = read_csv(str(a))
    assert header == ["sample", "index", "x", "y"]
    assert len(rows) == 10


def test_bessel_check(tmp_path):
    out = tmp_path / "b.csv"
    assert run("bessel-check", "--a", "-0.5", "--grid", "6", "--out", str(out),
               "--tol", "1e-9") == 0
    _, _, rows = read_csv(str(out))
    assert len(rows) == 36
    assert max(float(r[-1]) for r in rows) <= 1e-9


def test_trace_check(tmp_path):
    out = tmp_path / "t.csv"
    assert run("trace-check", "--model", "I", "--model", "III",
               "--N", "1", "--N", "4", "--out", str(out)) == 0
    _, _, rows = read_csv(str(out))
    assert len(rows) == 4
    assert max(float(r[-1]) for r in rows) <= 1e-8


def test_csv_round_trip_byte_identical(tmp_path):
    src = tmp_path / "fig.csv"
    run("figure1", "--v", "1.5", "--grid", "33", "--out", str(src))
    dst = tmp_path / "copy.csv"
    reemit_csv(str(src), str(dst))
    assert src.read_bytes() == dst.read_bytes()


def test_threads_flag_gives_identical_output(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    base = ("figure1", "--v", "1.2", "--v", "1.7", "--grid", "101")
    run(*base, "--out", str(a))
    run(*base, "--threads", "4", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
