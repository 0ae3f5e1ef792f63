"""Average temperature of the mixture and the temperature-deviation split.

The average temperature T is the single temperature at which the mixture
internal energy matches the actual two-temperature energy at the same
densities:

    rho1 eps1(rho1, T) + rho2 eps2(rho2, T) = rho1 eps1(rho1, T1) + rho2 eps2(rho2, T2).

For constant specific heats the equation is linear in T and the closed form
(rho1 cv1 T1 + rho2 cv2 T2) / (rho1 cv1 + rho2 cv2) is exact; the solver
nevertheless uses a safeguarded Newton iteration on the energy residual so
the contract is stated in terms of the implicit definition.

The deviation split writes T1 = T + beta Theta and T2 = T + (1 + beta) Theta
with Theta = T2 - T1 and the density-weighted coefficient

    beta = - rho2 cv2 / (rho1 cv1 + rho2 cv2),

which is the weighting consistent with the perfect-gas dynamical-pressure
formula (see the closure module).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .thermo import GasPairModel

MAX_ITER = 100


class AverageTempError(RuntimeError):
    """Root finder failed to converge (pathological model parameters)."""


@dataclass
class AverageTempResult:
    T: float
    theta1: float          # T1 - T
    theta2: float          # T2 - T
    cv1_mix: float         # d eps~/dT1 at (rho1, rho2, T, T)
    cv2_mix: float
    iterations: int
    residual: float        # final energy-equation residual [J/m^3]


def _energy(model: GasPairModel, rho1, rho2, T1, T2):
    return rho1 * model.cv1 * T1 + rho2 * model.cv2 * T2


def average_temperature(model: GasPairModel, rho1: float, rho2: float,
                        T1: float, T2: float) -> AverageTempResult:
    """Solve the implicit average-temperature equation for a single state.

    Safeguarded Newton with bisection fallback on [min(T1,T2), max(T1,T2)].
    Raises AverageTempError after MAX_ITER iterations without convergence and
    ValueError on nonpositive inputs.
    """
    for name, val in (("rho1", rho1), ("rho2", rho2), ("T1", T1), ("T2", T2)):
        if not val > 0:
            raise ValueError(f"{name} must be positive, got {val}")

    cv1, cv2 = model.cv1, model.cv2
    if T1 == T2:
        return AverageTempResult(T=T1, theta1=0.0, theta2=0.0,
                                 cv1_mix=cv1, cv2_mix=cv2,
                                 iterations=0, residual=0.0)

    target = _energy(model, rho1, rho2, T1, T2)
    lo, hi = min(T1, T2), max(T1, T2)
    tol = 1e-12 * (rho1 * cv1 + rho2 * cv2) * max(T1, T2)

    T = 0.5 * (lo + hi)
    resid = _energy(model, rho1, rho2, T, T) - target
    it = 0
    while abs(resid) > tol:
        it += 1
        if it > MAX_ITER:
            raise AverageTempError(
                f"no convergence after {MAX_ITER} iterations, residual={resid:g}")
        dres = rho1 * cv1 + rho2 * cv2          # d/dT of the energy at (T, T)
        T_new = T - resid / dres
        if not lo <= T_new <= hi:
            # Newton left the bracket; bisect instead
            if resid > 0:
                hi = T
            else:
                lo = T
            T_new = 0.5 * (lo + hi)
        else:
            if resid > 0:
                hi = min(hi, T)
            else:
                lo = max(lo, T)
        T = T_new
        resid = _energy(model, rho1, rho2, T, T) - target

    return AverageTempResult(T=T, theta1=T1 - T, theta2=T2 - T,
                             cv1_mix=cv1, cv2_mix=cv2,
                             iterations=it, residual=resid)


def average_temperature_field(model: GasPairModel, rho1, rho2, T1, T2) -> np.ndarray:
    """Vectorized average temperature over aligned arrays.

    Same Newton iteration as :func:`average_temperature`, run on all cells at
    once; with constant specific heats it converges in one step.
    """
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    T1 = np.asarray(T1, dtype=float)
    T2 = np.asarray(T2, dtype=float)
    target = _energy(model, rho1, rho2, T1, T2)
    tol = 1e-12 * (rho1 * model.cv1 + rho2 * model.cv2) * np.maximum(T1, T2)

    T = 0.5 * (T1 + T2)
    dres = rho1 * model.cv1 + rho2 * model.cv2
    for it in range(MAX_ITER):
        resid = _energy(model, rho1, rho2, T, T) - target
        if np.all(np.abs(resid) <= tol):
            break
        T = T - resid / dres
    else:
        raise AverageTempError(f"no convergence after {MAX_ITER} iterations")
    return T


def linearized_constraint_residual(model: GasPairModel, rho1, rho2,
                                   result: AverageTempResult) -> float:
    """Density-weighted first-order constraint rho1 cv1 Theta1 + rho2 cv2 Theta2."""
    return (rho1 * result.cv1_mix * result.theta1
            + rho2 * result.cv2_mix * result.theta2)


def beta_split(model: GasPairModel, rho1, rho2):
    """Deviation-split coefficient beta = -rho2 cv2 / (rho1 cv1 + rho2 cv2)."""
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    if np.any(rho1 <= 0) or np.any(rho2 <= 0):
        raise ValueError("densities must be positive")
    den = rho1 * model.cv1 + rho2 * model.cv2
    out = -rho2 * model.cv2 / den
    return float(out) if out.ndim == 0 else out
