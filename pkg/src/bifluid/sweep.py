"""Parameter sweeps over the temperature gap and composition.

Each sweep point fixes a background temperature T and a gap Theta, splits
them into component temperatures with the density-weighted beta, and tabulates
the average temperature, the dynamical pressure both from the state and from
the closed-form perfect-gas formula, and the relaxation-closure quantities at
unit coefficients.  Invalid points (nonpositive temperatures) are skipped
with a logged reason rather than aborting the sweep.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from . import closure as cls
from .avgtemp import average_temperature, beta_split
from .thermo import GasPairModel

log = logging.getLogger(__name__)

ROW_FIELDS = ("model", "rho1", "rho2", "theta", "T_background",
              "T1", "T2", "T_avg", "beta", "pi_state", "pi_formula",
              "lambda_unit_M", "theta_unit", "skipped", "reason")


@dataclass(frozen=True)
class Range:
    """Linear range (min, max, count); count = 1 collapses to min."""

    min: float
    max: float
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.count > 1 and not self.max > self.min:
            raise ValueError("max must exceed min for count > 1")

    def values(self) -> np.ndarray:
        if self.count == 1:
            return np.array([self.min])
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepSpec:
    """Cartesian sweep grid over Theta and the two densities."""

    theta_range: Range = Range(-20.0, 20.0, 5)
    rho1_range: Range = Range(0.5, 2.0, 3)
    rho2_range: Range = Range(0.5, 2.0, 3)
    T_background: float = 300.0
    divv_unit: float = 1.0

    def __post_init__(self):
        if not self.T_background > 0:
            raise ValueError("T_background must be positive")
        if self.rho1_range.min <= 0 or self.rho2_range.min <= 0:
            raise ValueError("density ranges must be positive")


def sweep_point(model: GasPairModel, model_name: str, rho1: float, rho2: float,
                theta: float, T_bg: float, divv_unit: float) -> dict:
    """One sweep row; marks the row skipped if the split temperatures are invalid."""
    row = dict.fromkeys(ROW_FIELDS)
    row.update(model=model_name, rho1=rho1, rho2=rho2, theta=theta,
               T_background=T_bg, skipped=False, reason="")
    beta = beta_split(model, rho1, rho2)
    T1 = T_bg + beta * theta
    T2 = T_bg + (1.0 + beta) * theta
    row.update(T1=T1, T2=T2, beta=beta)
    if T1 <= 0 or T2 <= 0:
        row.update(skipped=True, reason=f"nonpositive split temperature T1={T1:g} T2={T2:g}")
        return row
    res = average_temperature(model, rho1, rho2, T1, T2)
    row.update(
        T_avg=res.T,
        pi_state=float(cls.dynamical_pressure_from_state(model, rho1, rho2, T1, T2)),
        pi_formula=cls.dynamical_pressure_perfect_gas(model, rho1, rho2, theta),
        lambda_unit_M=cls.lambda_coefficient(model, rho1, rho2, 1.0),
        theta_unit=cls.theta_constitutive(model, rho1, rho2, 1.0, divv_unit),
    )
    return row


def run_sweep(spec: SweepSpec, models: dict[str, GasPairModel]) -> list[dict]:
    """Cartesian product of the spec ranges over every named model.

    Rows are independent; ordering follows the input ordering.
    """
    rows = []
    for name, model in models.items():
        for rho1, rho2, theta in itertools.product(
                spec.rho1_range.values(), spec.rho2_range.values(),
                spec.theta_range.values()):
            row = sweep_point(model, name, float(rho1), float(rho2), float(theta),
                              spec.T_background, spec.divv_unit)
            if row["skipped"]:
                log.warning("skipping sweep point %s rho1=%g rho2=%g theta=%g: %s",
                            name, rho1, rho2, theta, row["reason"])
            rows.append(row)
    return rows
