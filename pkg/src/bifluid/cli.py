"""Command-line entry point: simulate, verify-identity, sweep, thermo-eval.

Config files use a minimal sectioned key=value dialect (INI syntax via
configparser).  Data files are deterministic: every number is written with
%.17g so reruns are byte-identical; run metadata (command line, parameter
echo) goes to a separate ``*.meta`` sidecar so the data files carry no
timestamps.

Exit codes: 0 success, 1 usage/config error, 2 runtime failure.  Failures
emit a single machine-readable ``error: ...`` line on standard error.
"""

from __future__ import annotations

import argparse
import configparser
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import closure as cls
from . import identity as ident
from . import solver as slv
from . import sweep as swp
from . import thermo
from .avgtemp import average_temperature
from .fields import Grid1D
from .thermo import GasPairModel

SNAPSHOT_HEADER = "t,x,rho1,rho2,v1,v2,s1,s2,T1,T2,Tavg,p,p0,pi,divv"
DIAG_HEADER = "t,mass1,mass2,momentum,energy,entropy,min_Tgap"

FIELD_NAMES = ("rho1", "rho2", "v1", "v2", "s1", "s2")


class ConfigError(ValueError):
    """All constraint violations in a config, reported together."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


@dataclass
class Config:
    grid: Grid1D
    model: GasPairModel
    closure: cls.ClosureParams
    initial: slv.InitialConditions
    dt: float
    t_end: float
    cfl: float
    stride: int
    out_format: str
    sweep_spec: swp.SweepSpec
    slaving: bool


def _fmt(x: float) -> str:
    return "%.17g" % x


def parse_config(text: str) -> Config:
    """Parse and validate a config, collecting every violation before raising."""
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError([f"syntax: {exc}"]) from exc

    problems: list[str] = []

    def get(section, key, kind=float, default=None, positive=False,
            nonnegative=False):
        if not cp.has_option(section, key):
            if default is None:
                problems.append(f"[{section}] missing key '{key}'")
                return None
            return default
        raw = cp.get(section, key)
        try:
            val = kind(raw)
        except ValueError:
            problems.append(f"[{section}] {key}={raw!r} is not a valid {kind.__name__}")
            return None
        if positive and not val > 0:
            problems.append(f"[{section}] {key} must be positive, got {val}")
            return None
        if nonnegative and val < 0:
            problems.append(f"[{section}] {key} must be nonnegative, got {val}")
            return None
        return val

    n = get("grid", "n", int, positive=True)
    length = get("grid", "length", positive=True)
    k1 = get("gas1", "k", positive=True)
    cv1 = get("gas1", "cv", positive=True)
    k2 = get("gas2", "k", positive=True)
    cv2 = get("gas2", "cv", positive=True)
    T_ref = get("reference", "T_ref", default=300.0, positive=True)
    rho_ref = get("reference", "rho_ref", default=1.0, positive=True)
    s_ref = get("reference", "s_ref", default=0.0)

    mode = get("closure", "mode", str, default="fixed-lambda")
    has_lam = cp.has_option("closure", "lambda")
    has_M = cp.has_option("closure", "M")
    if has_lam and has_M:
        problems.append("[closure] keys 'lambda' and 'M' are mutually exclusive")
    if mode == "fixed-lambda" and has_M:
        problems.append("[closure] mode fixed-lambda takes 'lambda', not 'M'")
    if mode == "relaxation-M" and has_lam:
        problems.append("[closure] mode relaxation-M takes 'M', not 'lambda'")
    lam = get("closure", "lambda", default=0.0, nonnegative=True)
    M = get("closure", "M", default=0.0, nonnegative=True)
    chi = get("closure", "chi", default=0.0, nonnegative=True)
    eps_default = 1e-8 * T_ref if T_ref else 3e-6
    epsilon_T = get("closure", "epsilon_T", default=eps_default, positive=True)
    slaving = get("closure", "slaving", str, default="off") in ("on", "true", "1")

    dt = get("time", "dt", positive=True)
    t_end = get("time", "t_end", positive=True)
    cfl = get("time", "cfl", default=0.4, positive=True)

    inits = {}
    for name in FIELD_NAMES:
        bg = get("init", f"{name}_bg")
        amp = get("init", f"{name}_amp", default=0.0)
        fmode = get("init", f"{name}_mode", int, default=1)
        phase = get("init", f"{name}_phase", default=0.0)
        if bg is not None:
            inits[name] = slv.FieldInit(bg, amp or 0.0, fmode or 1, phase or 0.0)

    stride = get("output", "stride", int, default=10, positive=True)
    out_format = get("output", "format", str, default="csv")
    if out_format not in ("csv",):
        problems.append(f"[output] unknown format {out_format!r}")

    sweep_spec = None
    if cp.has_section("sweep"):
        kw = {}
        for axis in ("theta", "rho1", "rho2"):
            lo = get("sweep", f"{axis}_min")
            hi = get("sweep", f"{axis}_max")
            count = get("sweep", f"{axis}_count", int, positive=True)
            if None not in (lo, hi, count):
                try:
                    kw[f"{axis}_range"] = swp.Range(lo, hi, count)
                except ValueError as exc:
                    problems.append(f"[sweep] {axis} range: {exc}")
        kw["T_background"] = get("sweep", "T_background", default=300.0, positive=True)
        kw["divv_unit"] = get("sweep", "divv_unit", default=1.0)
        if not problems:
            try:
                sweep_spec = swp.SweepSpec(**{k: v for k, v in kw.items() if v is not None})
            except ValueError as exc:
                problems.append(f"[sweep] {exc}")

    if problems:
        raise ConfigError(problems)

    try:
        grid = Grid1D(n, length)
        model = GasPairModel(k1, k2, cv1, cv2, T_ref, rho_ref, s_ref)
        closure = cls.ClosureParams(mode=mode, lam=lam, M=M, chi=chi,
                                    epsilon_T=epsilon_T)
        initial = slv.InitialConditions(**{name: inits[name] for name in FIELD_NAMES})
    except (TypeError, KeyError) as exc:
        missing = [f"[init] missing key '{name}_bg'" for name in FIELD_NAMES
                   if name not in inits]
        raise ConfigError(missing or [str(exc)]) from exc
    except ValueError as exc:
        raise ConfigError([str(exc)]) from exc

    if sweep_spec is None:
        sweep_spec = swp.SweepSpec()
    return Config(grid=grid, model=model, closure=closure, initial=initial,
                  dt=dt, t_end=t_end, cfl=cfl, stride=stride,
                  out_format=out_format, sweep_spec=sweep_spec, slaving=slaving)


def _write_sidecar(path: Path, argv, cfg_text: str | None):
    lines = ["command: " + " ".join(argv)]
    if cfg_text is not None:
        lines.append("config:")
        lines.extend("  " + ln for ln in cfg_text.splitlines())
    path.write_text("\n".join(lines) + "\n")


def _cmd_simulate(args, argv) -> int:
    cfg_text = Path(args.config).read_text()
    cfg = parse_config(cfg_text)
    scenario = slv.Scenario(grid=cfg.grid, model=cfg.model, closure=cfg.closure,
                            initial=cfg.initial, dt=cfg.dt, t_end=cfg.t_end,
                            stride=cfg.stride, cfl=cfg.cfl, slaving=cfg.slaving)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = slv.integrate(scenario)

    x = cfg.grid.cell_centers()
    snap_lines = [SNAPSHOT_HEADER]
    for pt in rows:
        st = pt.state
        tp = thermo.thermo_eval(cfg.model, st.rho1, st.rho2, st.s1, st.s2)
        from .avgtemp import average_temperature_field
        Tavg = average_temperature_field(cfg.model, st.rho1, st.rho2, tp.T1, tp.T2)
        p0 = (cfg.model.k1 * st.rho1 + cfg.model.k2 * st.rho2) * Tavg
        pi = tp.p - p0
        for i in range(cfg.grid.n):
            snap_lines.append(",".join(_fmt(v) for v in (
                pt.t, x[i], st.rho1[i], st.rho2[i], st.v1[i], st.v2[i],
                st.s1[i], st.s2[i], tp.T1[i], tp.T2[i], Tavg[i],
                tp.p[i], p0[i], pi[i], pt.diag.divv_field[i])))
    (out / "snapshots.csv").write_text("\n".join(snap_lines) + "\n")

    diag_lines = [DIAG_HEADER]
    for pt in rows:
        d = pt.diag
        diag_lines.append(",".join(_fmt(v) for v in (
            pt.t, d.total_mass1, d.total_mass2, d.total_momentum,
            d.total_energy, d.total_entropy, d.min_temperature_gap)))
    (out / "diagnostics.csv").write_text("\n".join(diag_lines) + "\n")

    _write_sidecar(out / "run.meta", argv, cfg_text)
    return 0


def _cmd_verify_identity(args, argv) -> int:
    if args.suite == "constant":
        fields = ident.ManufacturedFields.constant()
    else:
        fields = ident.ManufacturedFields.sinusoidal()
    potential = ident.ExtendedPotential.quadratic()
    window = ident.SampleWindow()

    if args.mode == "analytic":
        report = ident.gibbs_residual(fields, potential, window, mode="analytic")
        reports = [(None, report)]
    else:
        reports = []
        h0, dt0 = 1e-3, 1e-3
        for k in range(args.refine + 1):
            step = 0.5**k
            reports.append((step, ident.gibbs_residual(
                fields, potential, window, mode="fd", h=h0 * step, dt=dt0 * step)))

    lines = []
    for step, rep in reports:
        tag = "" if step is None else f" step_scale={_fmt(step)}"
        lines.append(f"mode={rep.mode}{tag}")
        lines.append(f"  residual_max={_fmt(rep.residual_max)}")
        lines.append(f"  residual_l2={_fmt(rep.residual_l2)}")
        lines.append(f"  term_magnitude={_fmt(rep.term_magnitude)}")
        for name, val in rep.per_identity.items():
            lines.append(f"  identity_{name}={_fmt(val)}")
    if args.mode == "fd" and len(reports) >= 2:
        order = ident.convergence_order([r.residual_max for _, r in reports])
        lines.append(f"convergence_order={_fmt(order)}")
    text = "\n".join(lines)
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n")
        _write_sidecar(Path(args.out).with_suffix(".meta"), argv, None)
    return 0


SWEEP_HEADER = ("model,rho1,rho2,theta,T_background,T1,T2,T_avg,beta,"
                "pi_state,pi_formula,lambda_unit_M,theta_unit,skipped,reason")


def _cmd_sweep(args, argv) -> int:
    cfg_text = Path(args.config).read_text()
    cfg = parse_config(cfg_text)
    rows = swp.run_sweep(cfg.sweep_spec, {"pair": cfg.model})
    lines = [SWEEP_HEADER]
    for row in rows:
        cells = []
        for key in swp.ROW_FIELDS:
            val = row[key]
            if key in ("model", "reason"):
                cells.append(str(val))
            elif key == "skipped":
                cells.append("1" if val else "0")
            elif val is None:
                cells.append("")
            else:
                cells.append(_fmt(val))
        lines.append(",".join(cells))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    _write_sidecar(out.with_suffix(".meta"), argv, cfg_text)
    return 0


def _cmd_thermo_eval(args, argv) -> int:
    model = GasPairModel(args.k1, args.k2, args.cv1, args.cv2,
                         args.T_ref, args.rho_ref, args.s_ref)
    s1 = thermo.entropy_from_temperature(model, 1, args.rho1, args.T1)
    s2 = thermo.entropy_from_temperature(model, 2, args.rho2, args.T2)
    pt = thermo.thermo_eval(model, args.rho1, args.rho2, s1, s2)
    avg = average_temperature(model, args.rho1, args.rho2, args.T1, args.T2)
    for name in ("T1", "T2", "p_partial1", "p_partial2", "p_stress1",
                 "p_stress2", "h1", "h2", "mu1", "mu2", "e", "p"):
        print(f"{name}={_fmt(float(getattr(pt, name)))}")
    print(f"T_avg={_fmt(avg.T)}")
    print(f"theta1={_fmt(avg.theta1)}")
    print(f"theta2={_fmt(avg.theta2)}")
    print(f"iterations={avg.iterations}")
    print(f"residual={_fmt(avg.residual)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bifluid",
        description="Two-temperature binary mixture: simulation, identity "
                    "verification, closure sweeps, thermodynamic evaluation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run a scenario and write CSV output")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("verify-identity", help="evaluate the Gibbs dynamical identity")
    p.add_argument("--suite", choices=("constant", "sinusoidal"), required=True)
    p.add_argument("--mode", choices=("analytic", "fd"), required=True)
    p.add_argument("--refine", type=int, default=0,
                   help="number of halvings of the FD steps (fd mode)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify_identity)

    p = sub.add_parser("sweep", help="run a closure parameter sweep")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True, help="output CSV file")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("thermo-eval", help="print thermodynamics of one state")
    for flag in ("k1", "k2", "cv1", "cv2", "rho1", "rho2", "T1", "T2"):
        p.add_argument(f"--{flag}", type=float, required=True)
    p.add_argument("--T_ref", type=float, default=300.0)
    p.add_argument("--rho_ref", type=float, default=1.0)
    p.add_argument("--s_ref", type=float, default=0.0)
    p.set_defaults(func=_cmd_thermo_eval)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args, ["bifluid"] + argv)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"error: config: {problem}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (slv.SolverError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
