"""1-D periodic method-of-lines solver for the closed two-temperature system.

Evolved primitives per cell: rho1, rho2, v1, v2, s1, s2.  Density and
momentum advection use conservative local Lax-Friedrichs fluxes; the
nonconservative momentum sources rho_a T_a grad(s_a) - rho_a grad(h_a)
and the entropy advection use second-order central differences.  Time
integration is explicit SSP Runge-Kutta of order 3.

The closure enters the dynamics only through the heat-exchange entropy
sources; the dynamical pressure is a diagnostic of the state, not an extra
stress.  div v in the sources uses the mass-average velocity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import closure as cls
from . import fields as flds
from . import thermo
from .avgtemp import average_temperature_field, beta_split
from .fields import Grid1D, MixtureState
from .thermo import GasPairModel

log = logging.getLogger(__name__)

PRIMITIVES = ("rho1", "rho2", "v1", "v2", "s1", "s2")


class SolverError(RuntimeError):
    """Integration failure; carries the trajectory rows produced so far."""

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory or []


@dataclass(frozen=True)
class FieldInit:
    """Uniform background plus one Fourier mode: bg + amp sin(2 pi mode x / L + phase)."""

    bg: float
    amp: float = 0.0
    mode: int = 1
    phase: float = 0.0

    def build(self, grid: Grid1D) -> np.ndarray:
        x = grid.cell_centers()
        return self.bg + self.amp * np.sin(2 * np.pi * self.mode * x / grid.length + self.phase)


@dataclass(frozen=True)
class InitialConditions:
    rho1: FieldInit
    rho2: FieldInit
    v1: FieldInit
    v2: FieldInit
    s1: FieldInit
    s2: FieldInit

    def build(self, grid: Grid1D) -> MixtureState:
        return MixtureState(grid, *(getattr(self, n).build(grid) for n in PRIMITIVES))


def max_wave_speed(state: MixtureState, model: GasPairModel) -> float:
    pt = thermo.thermo_eval(model, state.rho1, state.rho2, state.s1, state.s2)
    a1 = np.abs(state.v1) + thermo.sound_speed(model, 1, pt.T1)
    a2 = np.abs(state.v2) + thermo.sound_speed(model, 2, pt.T2)
    return float(max(np.max(a1), np.max(a2)))


@dataclass
class Scenario:
    grid: Grid1D
    model: GasPairModel
    closure: cls.ClosureParams
    initial: InitialConditions
    dt: float
    t_end: float
    stride: int = 10
    cfl: float = 0.4
    slaving: bool = False

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if not self.t_end > 0:
            raise ValueError("t_end must be positive")
        if self.stride < 1:
            raise ValueError("stride must be >= 1")
        state = self.initial.build(self.grid)
        speed = max_wave_speed(state, self.model)
        limit = self.cfl * self.grid.dx / speed
        if self.dt > limit:
            raise ValueError(
                f"CFL violation: dt={self.dt:g} exceeds {limit:g} "
                f"(cfl={self.cfl}, dx={self.grid.dx:g}, wave speed {speed:g})")


@dataclass
class StateDot:
    rho1: np.ndarray
    rho2: np.ndarray
    v1: np.ndarray
    v2: np.ndarray
    s1: np.ndarray
    s2: np.ndarray


def _minmod_slopes(u):
    left = u - np.roll(u, 1)
    right = np.roll(u, -1) - u
    return np.where(left * right > 0,
                    np.sign(left) * np.minimum(np.abs(left), np.abs(right)),
                    0.0)


def _llf_flux_divergence(rho, v, speed, dx):
    """Local Lax-Friedrichs flux differences for (rho, rho v).

    MUSCL minmod reconstruction of the conserved pair at the faces keeps the
    flux dissipation O(dx^2) on smooth data; first-order LLF dissipation
    dominates the global energy drift otherwise.  Returns the -dF/dx
    contributions to (d(rho)/dt, d(rho v)/dt) on a periodic grid.
    """
    m = rho * v
    rho_L = rho + 0.5 * _minmod_slopes(rho)
    rho_R = np.roll(rho - 0.5 * _minmod_slopes(rho), -1)
    m_L = m + 0.5 * _minmod_slopes(m)
    m_R = np.roll(m - 0.5 * _minmod_slopes(m), -1)
    a_face = np.maximum(speed, np.roll(speed, -1))
    flux_rho = 0.5 * (m_L + m_R) - 0.5 * a_face * (rho_R - rho_L)
    flux_m = 0.5 * (m_L**2 / rho_L + m_R**2 / rho_R) - 0.5 * a_face * (m_R - m_L)
    drho = -(flux_rho - np.roll(flux_rho, 1)) / dx
    dm = -(flux_m - np.roll(flux_m, 1)) / dx
    return drho, dm


def rhs(state: MixtureState, model: GasPairModel, closure: cls.ClosureParams,
        grid: Grid1D) -> StateDot:
    """Time derivatives of all six primitive fields."""
    pt = thermo.thermo_eval(model, state.rho1, state.rho2, state.s1, state.s2)
    if np.any(pt.T1 <= 0) or np.any(pt.T2 <= 0):
        raise SolverError("nonpositive temperature in rhs evaluation")

    dx = grid.dx
    divv = flds.div(state.v_mean, grid)
    T = average_temperature_field(model, state.rho1, state.rho2, pt.T1, pt.T2)
    lam = closure.lambda_value(model, state.rho1, state.rho2)
    sources = cls.entropy_sources(model, state.rho1, state.rho2, pt.T1, pt.T2,
                                  T, lam, divv, closure.epsilon_T)
    n_reg = int(np.count_nonzero(sources.regularized))
    if n_reg:
        log.info("entropy sources regularized in %d cells", n_reg)

    drag = cls.momentum_production(closure.chi, state.u)

    out = {}
    for a, (rho, v, s, Ta, ha, sdot, sgn) in {
        1: (state.rho1, state.v1, state.s1, pt.T1, pt.h1, sources.sdot1, +1.0),
        2: (state.rho2, state.v2, state.s2, pt.T2, pt.h2, sources.sdot2, -1.0),
    }.items():
        speed = np.abs(v) + thermo.sound_speed(model, a, Ta)
        drho, dm = _llf_flux_divergence(rho, v, speed, dx)
        dm = dm + rho * Ta * flds.grad(s, grid) - rho * flds.grad(ha, grid) + sgn * drag
        out[f"rho{a}"] = drho
        out[f"v{a}"] = (dm - v * drho) / rho
        out[f"s{a}"] = sdot - v * flds.grad(s, grid)
    return StateDot(**out)


def apply_theta_slaving(state: MixtureState, model: GasPairModel,
                        closure: cls.ClosureParams, grid: Grid1D) -> MixtureState:
    """Overwrite the temperature gap with its constitutive value.

    Re-splits T1, T2 around the (energy-preserving) average temperature using
    Theta = L_T (gamma1 - gamma2) div v and the density-weighted beta, then
    maps back to entropies.  Experimental interpretation; off by default.
    """
    pt = thermo.thermo_eval(model, state.rho1, state.rho2, state.s1, state.s2)
    T = average_temperature_field(model, state.rho1, state.rho2, pt.T1, pt.T2)
    divv = flds.div(state.v_mean, grid)
    theta = cls.theta_constitutive(model, state.rho1, state.rho2, closure.M, divv)
    beta = beta_split(model, state.rho1, state.rho2)
    T1 = T + beta * theta
    T2 = T + (1.0 + beta) * theta
    if np.any(T1 <= 0) or np.any(T2 <= 0):
        raise SolverError("theta slaving produced nonpositive temperatures")
    return MixtureState(
        grid, state.rho1, state.rho2, state.v1, state.v2,
        thermo.entropy_from_temperature(model, 1, state.rho1, T1),
        thermo.entropy_from_temperature(model, 2, state.rho2, T2),
    )


def step(state: MixtureState, scenario: Scenario) -> MixtureState:
    """One SSP-RK3 step (Shu-Osher form) with post-step positivity check."""
    grid, model, closure = scenario.grid, scenario.model, scenario.closure
    dt = scenario.dt

    def euler(s: MixtureState) -> MixtureState:
        d = rhs(s, model, closure, grid)
        return MixtureState(grid, *(getattr(s, n) + dt * getattr(d, n) for n in PRIMITIVES))

    def blend(w0, s0: MixtureState, w1, s1: MixtureState) -> MixtureState:
        return MixtureState(grid, *(w0 * getattr(s0, n) + w1 * getattr(s1, n)
                                    for n in PRIMITIVES))

    try:
        u1 = euler(state)
        u2 = blend(0.75, state, 0.25, euler(u1))
        out = blend(1.0 / 3.0, state, 2.0 / 3.0, euler(u2))
    except ValueError as exc:   # positivity violation inside a stage
        raise SolverError(f"positivity violation during step: {exc}") from exc

    if scenario.slaving:
        out = apply_theta_slaving(out, model, closure, grid)
    return out


@dataclass
class Diagnostics:
    total_mass1: float
    total_mass2: float
    total_momentum: float
    total_energy: float
    total_entropy: float
    min_temperature_gap: float
    pi_field: np.ndarray
    theta_field: np.ndarray
    divv_field: np.ndarray


def diagnostics(state: MixtureState, model: GasPairModel,
                closure: cls.ClosureParams, grid: Grid1D) -> Diagnostics:
    pt = thermo.thermo_eval(model, state.rho1, state.rho2, state.s1, state.s2)
    dx = grid.dx
    kinetic = 0.5 * (state.rho1 * state.v1**2 + state.rho2 * state.v2**2)
    pi = cls.dynamical_pressure_from_state(model, state.rho1, state.rho2, pt.T1, pt.T2)
    return Diagnostics(
        total_mass1=float(np.sum(state.rho1) * dx),
        total_mass2=float(np.sum(state.rho2) * dx),
        total_momentum=float(np.sum(state.rho1 * state.v1 + state.rho2 * state.v2) * dx),
        total_energy=float(np.sum(pt.e + kinetic) * dx),
        total_entropy=float(np.sum(state.rho1 * state.s1 + state.rho2 * state.s2) * dx),
        min_temperature_gap=float(np.min(np.abs(pt.T2 - pt.T1))),
        pi_field=pi,
        theta_field=pt.T2 - pt.T1,
        divv_field=flds.div(state.v_mean, grid),
    )


@dataclass
class TrajectoryPoint:
    t: float
    state: MixtureState
    diag: Diagnostics


def integrate(scenario: Scenario) -> list[TrajectoryPoint]:
    """Run the scenario to t_end, recording diagnostics every stride steps."""
    grid, model, closure = scenario.grid, scenario.model, scenario.closure
    state = scenario.initial.build(grid)
    rows = [TrajectoryPoint(0.0, state.copy(), diagnostics(state, model, closure, grid))]
    n_steps = int(round(scenario.t_end / scenario.dt))
    t = 0.0
    for k in range(1, n_steps + 1):
        try:
            state = step(state, scenario)
        except SolverError as exc:
            raise SolverError(f"aborted at t={t:g} (step {k}): {exc}", trajectory=rows) from exc
        t = k * scenario.dt
        if k % scenario.stride == 0 or k == n_steps:
            rows.append(TrajectoryPoint(t, state.copy(),
                                        diagnostics(state, model, closure, grid)))
    return rows
