import numpy as np
import pytest

from bifluid.cli import (DIAG_HEADER, SNAPSHOT_HEADER, ConfigError, main,
                         parse_config)

BASE_CFG = """\
[grid]
n = 32
length = 1.0

[gas1]
k = 1.0
cv = 1.5

[gas2]
k = 0.5
cv = 2.5

[closure]
mode = fixed-lambda
lambda = 0.0

[time]
dt = 1e-4
t_end = 0.002

[init]
rho1_bg = 1.0
rho2_bg = 2.0
v1_bg = 0.0
v2_bg = 0.0
s1_bg = 0.0
s2_bg = 0.0
"""

SWEEP_CFG = BASE_CFG + """
[sweep]
theta_min = 20.0
theta_max = 20.0
theta_count = 1
rho1_min = 1.0
rho1_max = 1.0
rho1_count = 1
rho2_min = 2.0
rho2_max = 2.0
rho2_count = 1
T_background = 315.38461538461536
"""


def test_parse_minimal_config_defaults():
    cfg = parse_config(BASE_CFG)
    assert cfg.cfl == 0.4
    assert cfg.stride == 10
    assert cfg.closure.epsilon_T == pytest.approx(1e-8 * 300.0)
    assert cfg.model.T_ref == 300.0
    assert cfg.grid.n == 32
    assert cfg.out_format == "csv"


def test_parse_collects_all_violations():
    bad = BASE_CFG.replace("lambda = 0.0", "lambda = 0.0\nM = 1.0\nchi = -1")
    bad = bad.replace("n = 32", "n = -4")
    with pytest.raises(ConfigError) as exc:
        parse_config(bad)
    msgs = "\n".join(exc.value.problems)
    assert "mutually exclusive" in msgs
    assert "chi must be nonnegative" in msgs
    assert "n must be positive" in msgs


def test_parse_mode_key_mismatch():
    bad = BASE_CFG.replace("lambda = 0.0", "M = 1.0")
    with pytest.raises(ConfigError, match="takes 'lambda'"):
        parse_config(bad)


def test_parse_missing_init_key():
    bad = BASE_CFG.replace("s2_bg = 0.0\n", "")
    with pytest.raises(ConfigError, match="s2_bg"):
        parse_config(bad)


def test_parse_syntax_error():
    with pytest.raises(ConfigError, match="syntax"):
        parse_config("no sections here")


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_simulate_runs_and_is_deterministic(tmp_path):
    cfg = _write(tmp_path, "run.cfg", BASE_CFG)
    assert main(["simulate", "--config", cfg, "--out", str(tmp_path / "a")]) == 0
    assert main(["simulate", "--config", cfg, "--out", str(tmp_path / "b")]) == 0
    for name in ("snapshots.csv", "diagnostics.csv"):
        a = (tmp_path / "a" / name).read_bytes()
        b = (tmp_path / "b" / name).read_bytes()
        assert a == b
    snap = (tmp_path / "a" / "snapshots.csv").read_text().splitlines()
    assert snap[0] == SNAPSHOT_HEADER
    diag = (tmp_path / "a" / "diagnostics.csv").read_text().splitlines()
    assert diag[0] == DIAG_HEADER
    assert (tmp_path / "a" / "run.meta").exists()


def test_simulate_equilibrium_constant_diagnostics(tmp_path):
    cfg = _write(tmp_path, "run.cfg", BASE_CFG)
    assert main(["simulate", "--config", cfg, "--out", str(tmp_path / "eq")]) == 0
    lines = (tmp_path / "eq" / "diagnostics.csv").read_text().splitlines()[1:]
    cols = np.array([[float(v) for v in ln.split(",")] for ln in lines])
    for j in range(1, cols.shape[1] - 1):
        assert np.allclose(cols[:, j], cols[0, j], rtol=1e-12, atol=1e-12)


def test_sweep_end_to_end_canonical(tmp_path):
    cfg = _write(tmp_path, "run.cfg", SWEEP_CFG)
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--config", cfg, "--out", str(out)]) == 0
    assert main(["sweep", "--config", cfg, "--out", str(tmp_path / "sweep2.csv")]) == 0
    assert out.read_bytes() == (tmp_path / "sweep2.csv").read_bytes()
    header, row = out.read_text().splitlines()
    vals = dict(zip(header.split(","), row.split(",")))
    assert float(vals["T_avg"]) == pytest.approx(2050.0 / 6.5, rel=1e-9)
    assert float(vals["beta"]) == pytest.approx(-5.0 / 6.5, rel=1e-9)
    assert float(vals["pi_formula"]) == pytest.approx(-70.0 / 6.5, rel=1e-9)
    assert float(vals["lambda_unit_M"]) == pytest.approx(0.49, rel=1e-9)


def test_verify_identity_constant_analytic(capsys):
    assert main(["verify-identity", "--suite", "constant", "--mode", "analytic"]) == 0
    out = capsys.readouterr().out
    assert "residual_max=0" in out


def test_verify_identity_fd_refine(capsys):
    assert main(["verify-identity", "--suite", "sinusoidal", "--mode", "fd",
                 "--refine", "2"]) == 0
    out = capsys.readouterr().out
    assert "convergence_order=" in out
    order = float(out.split("convergence_order=")[1].split()[0])
    assert abs(order - 2.0) < 0.2


def test_thermo_eval_canonical(capsys):
    assert main(["thermo-eval", "--k1", "1", "--k2", "0.5", "--cv1", "1.5",
                 "--cv2", "2.5", "--rho1", "1", "--rho2", "2",
                 "--T1", "300", "--T2", "320"]) == 0
    out = capsys.readouterr().out
    vals = dict(ln.split("=", 1) for ln in out.strip().splitlines())
    assert float(vals["e"]) == pytest.approx(2050.0, rel=1e-12)
    assert float(vals["T_avg"]) == pytest.approx(2050.0 / 6.5, rel=1e-9)
    assert float(vals["p"]) == pytest.approx(620.0, rel=1e-12)


def test_usage_errors_exit_1(capsys):
    assert main(["bogus-subcommand"]) == 1
    assert main([]) == 1


def test_missing_config_exit_1(tmp_path, capsys):
    code = main(["simulate", "--config", str(tmp_path / "nope.cfg"),
                 "--out", str(tmp_path / "o")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_config_error_exit_1(tmp_path, capsys):
    cfg = _write(tmp_path, "bad.cfg", BASE_CFG.replace("chi = -1", "").replace(
        "lambda = 0.0", "lambda = -2"))
    code = main(["simulate", "--config", cfg, "--out", str(tmp_path / "o")])
    assert code == 1
    assert "error: config:" in capsys.readouterr().err


def test_runtime_failure_exit_2(tmp_path, capsys):
    cfg = _write(tmp_path, "cfl.cfg", BASE_CFG.replace("dt = 1e-4", "dt = 0.5"))
    code = main(["simulate", "--config", cfg, "--out", str(tmp_path / "o")])
    assert code == 2
    assert "error:" in capsys.readouterr().err
