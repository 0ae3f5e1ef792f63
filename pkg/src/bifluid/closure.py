"""Nonequilibrium closure: dynamical pressure, entropy sources and dissipative productions.

The dynamical pressure is the gap between the out-of-equilibrium mixture
pressure and the pressure evaluated at the common average temperature,

    pi = p(rho1, rho2, T1, T2) - p(rho1, rho2, T, T),

closed by pi = -Lambda div v with Lambda >= 0 so that the total entropy
rate (Lambda / T)(div v)^2 is nonnegative.  For a pair of perfect gases
the gap is exactly linear in Theta = T2 - T1:

    pi = rho1 rho2 (k2 cv1 - k1 cv2) Theta / (rho1 cv1 + rho2 cv2),

and the relaxation form Theta = L_T (gamma1 - gamma2) div v with
L_T = M (rho1 cv1 / rho2 cv2)(rho1 cv1 + rho2 cv2), M >= 0, yields a
guaranteed-nonnegative Lambda.

Heat-exchange sources: the specific entropy rates solve

    rho1 T1 sdot1 + rho2 T2 sdot2 = 0
    rho1 sdot1 + rho2 sdot2 = (Lambda / T) (div v)^2

whose closed form carries a 1/(T2 - T1) denominator.  The closure is
genuinely stiff at T1 = T2; the denominator is regularized to
sign(T2 - T1) * epsilon_T (sign(0) = +1) below the gap epsilon_T.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fields as flds
from .avgtemp import average_temperature, average_temperature_field
from .thermo import GasPairModel


@dataclass(frozen=True)
class ClosureParams:
    """Source-term parameters.

    mode 'fixed-lambda' uses the given Lambda directly; mode 'relaxation-M'
    derives Lambda from the perfect-gas relaxation coefficient M per cell.
    chi is the momentum-production (drag) coefficient; epsilon_T the
    temperature-gap regularization.
    """

    mode: str = "fixed-lambda"
    lam: float = 0.0
    M: float = 0.0
    chi: float = 0.0
    epsilon_T: float = 3e-6     # default 1e-8 * T_ref for T_ref = 300

    def __post_init__(self):
        if self.mode not in ("fixed-lambda", "relaxation-M"):
            raise ValueError(f"unknown closure mode {self.mode!r}")
        if self.lam < 0:
            raise ValueError("lambda must be nonnegative")
        if self.M < 0:
            raise ValueError("M must be nonnegative")
        if self.chi < 0:
            raise ValueError("chi must be nonnegative")
        if not self.epsilon_T > 0:
            raise ValueError("epsilon_T must be positive")

    def lambda_value(self, model: GasPairModel, rho1, rho2):
        """Lambda for the given state under the active mode."""
        if self.mode == "fixed-lambda":
            return self.lam if np.isscalar(rho1) else np.full_like(np.asarray(rho1, dtype=float), self.lam)
        return lambda_coefficient(model, rho1, rho2, self.M)


def dynamical_pressure_from_state(model: GasPairModel, rho1, rho2, T1, T2):
    """pi = p(T1, T2) - p(T, T) with T the implicit average temperature."""
    if np.isscalar(rho1) and np.isscalar(T1):
        T = average_temperature(model, rho1, rho2, T1, T2).T
    else:
        T = average_temperature_field(model, rho1, rho2, T1, T2)
    p = model.k1 * np.asarray(rho1, dtype=float) * np.asarray(T1, dtype=float) \
        + model.k2 * np.asarray(rho2, dtype=float) * np.asarray(T2, dtype=float)
    p0 = (model.k1 * np.asarray(rho1, dtype=float) + model.k2 * np.asarray(rho2, dtype=float)) * T
    return p - p0


def dynamical_pressure_perfect_gas(model: GasPairModel, rho1, rho2, theta):
    """Closed-form pi for perfect gases, linear in Theta = T2 - T1."""
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    if np.any(rho1 <= 0) or np.any(rho2 <= 0):
        raise ValueError("densities must be positive")
    den = rho1 * model.cv1 + rho2 * model.cv2
    out = rho1 * rho2 * (model.k2 * model.cv1 - model.k1 * model.cv2) * np.asarray(theta, dtype=float) / den
    return float(out) if out.ndim == 0 else out


def relaxation_length(model: GasPairModel, rho1, rho2, M):
    """L_T = M (rho1 cv1 / rho2 cv2)(rho1 cv1 + rho2 cv2)."""
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    c1 = rho1 * model.cv1
    c2 = rho2 * model.cv2
    return M * (c1 / c2) * (c1 + c2)


def theta_constitutive(model: GasPairModel, rho1, rho2, M, divv):
    """Relaxation gap Theta = L_T (gamma1 - gamma2) div v."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    out = relaxation_length(model, rho1, rho2, M) * (model.gamma1 - model.gamma2) * np.asarray(divv, dtype=float)
    return float(out) if out.ndim == 0 else out


def lambda_coefficient(model: GasPairModel, rho1, rho2, M):
    """Lambda from the relaxation coefficient M.

    Composes pi(Theta) with Theta = L_T (gamma1 - gamma2) div v and
    pi = -Lambda div v.  Always nonnegative for M >= 0 since
    k2 cv1 - k1 cv2 = cv1 cv2 (gamma2 - gamma1).
    """
    if M < 0:
        raise ValueError("M must be nonnegative")
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    den = rho1 * model.cv1 + rho2 * model.cv2
    amp = rho1 * rho2 * (model.k2 * model.cv1 - model.k1 * model.cv2) / den
    out = -amp * relaxation_length(model, rho1, rho2, M) * (model.gamma1 - model.gamma2)
    return float(out) if out.ndim == 0 else out


@dataclass
class EntropySources:
    """Specific entropy rates, heat exchanges and the total production."""

    sdot1: np.ndarray           # d1 s1 / dt
    sdot2: np.ndarray
    q1: np.ndarray              # rho1 T1 sdot1; q1 + q2 = 0 to round-off
    q2: np.ndarray
    production: np.ndarray      # rho1 sdot1 + rho2 sdot2
    regularized: np.ndarray     # cells where the T2 - T1 denominator was clipped


def entropy_sources(model: GasPairModel, rho1, rho2, T1, T2, T, lam, divv,
                    epsilon_T: float) -> EntropySources:
    """Solve the heat-exchange system for the entropy rates.

    The common factor g = Lambda (div v)^2 T1 T2 / (T D), with D the
    regularized temperature gap, gives q1 = g, q2 = -g exactly and
    sdot_alpha = +-g / (rho_alpha T_alpha).
    """
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    T1 = np.asarray(T1, dtype=float)
    T2 = np.asarray(T2, dtype=float)
    T = np.asarray(T, dtype=float)
    lam = np.asarray(lam, dtype=float)
    divv = np.asarray(divv, dtype=float)
    if np.any(T <= 0) or np.any(T1 <= 0) or np.any(T2 <= 0):
        raise ValueError("temperatures must be positive")

    gap = T2 - T1
    clipped = np.abs(gap) < epsilon_T
    sign = np.where(gap >= 0, 1.0, -1.0)       # sign(0) = +1
    D = np.where(clipped, sign * epsilon_T, gap)

    g = lam * divv**2 * T1 * T2 / (T * D)
    sdot1 = g / (rho1 * T1)
    sdot2 = -g / (rho2 * T2)
    return EntropySources(
        sdot1=sdot1, sdot2=sdot2,
        q1=g, q2=-g,
        production=rho1 * sdot1 + rho2 * sdot2,
        regularized=clipped & (g != 0),
    )


def momentum_production(chi: float, u):
    """Drag force m = -chi u on component 1 (and -m on component 2)."""
    if chi < 0:
        raise ValueError("chi must be nonnegative")
    out = -chi * np.asarray(u, dtype=float)
    return float(out) if out.ndim == 0 else out


def entropy_production_sigma(gradT, q, m, u, sigma_d1, sigma_d2, D1, D2,
                             p, p0, divv, T):
    """Pointwise dissipative production Sigma (diagnostic only).

    Sigma = (p - p0) div v + (q / T) grad T + m u - tr(sigma_d D) summed over
    components; every term is nonpositive for the constitutive signs
    pi = -Lambda div v, Fourier q = -kappa grad T, drag m = -chi u and
    Navier-type sigma_d = mu D.  The drag term enters as +m u (the
    dissipated drag power), the sign demanded by Sigma <= 0.
    """
    T = np.asarray(T, dtype=float)
    if np.any(T <= 0):
        raise ValueError("temperature must be positive")
    return (np.asarray(p, dtype=float) - np.asarray(p0, dtype=float)) * np.asarray(divv, dtype=float) \
        + np.asarray(q, dtype=float) / T * np.asarray(gradT, dtype=float) \
        + np.asarray(m, dtype=float) * np.asarray(u, dtype=float) \
        - np.asarray(sigma_d1, dtype=float) * np.asarray(D1, dtype=float) \
        - np.asarray(sigma_d2, dtype=float) * np.asarray(D2, dtype=float)


def fick_residual(mu_field, u, rho1, rho2, chi, grid) -> float:
    """Max-norm residual of the Fick law grad(mu) = -kappa u.

    kappa = rho chi / (rho1 rho2) with rho = rho1 + rho2; the gradient is
    the periodic central difference, so the residual of a manufactured
    consistent field is O(dx^2).
    """
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    kappa = (rho1 + rho2) * chi / (rho1 * rho2)
    res = flds.grad(np.asarray(mu_field, dtype=float), grid) + kappa * np.asarray(u, dtype=float)
    return float(np.max(np.abs(res)))
