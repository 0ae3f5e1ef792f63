"""1-D periodic grids, cell-centered fields and discrete differential operators.

All numerical modules share the same spatial setting: a uniform periodic
grid of ``n`` cells on ``[0, length)`` with cell centers at
``x_i = (i + 1/2) dx``.  Derivatives are second-order central differences
with periodic wraparound, so there are no boundary special cases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Grid1D:
    """Uniform periodic 1-D grid."""

    n: int
    length: float

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"grid needs at least 4 cells, got n={self.n}")
        if not self.length > 0:
            raise ValueError(f"grid length must be positive, got {self.length}")

    @property
    def dx(self) -> float:
        return self.length / self.n

    def cell_centers(self) -> np.ndarray:
        return (np.arange(self.n) + 0.5) * self.dx


def grad(f: np.ndarray, grid: Grid1D) -> np.ndarray:
    """Second-order central difference with periodic wrap."""
    f = np.asarray(f, dtype=float)
    if f.shape != (grid.n,):
        raise ValueError(f"field shape {f.shape} does not match grid n={grid.n}")
    return (np.roll(f, -1) - np.roll(f, 1)) / (2.0 * grid.dx)


def div(f: np.ndarray, grid: Grid1D) -> np.ndarray:
    """1-D divergence; identical to :func:`grad`."""
    return grad(f, grid)


def material_derivative(f_t: np.ndarray, f_x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Pointwise d/dt following velocity v: f_t + v * f_x."""
    return np.asarray(f_t, dtype=float) + np.asarray(v, dtype=float) * np.asarray(f_x, dtype=float)


class MixtureState:
    """Primitive per-cell fields of a binary mixture on one grid.

    Fields: densities rho1, rho2 [kg/m^3], velocities v1, v2 [m/s] and
    specific entropies s1, s2 [J/(kg K)].  Densities must be strictly
    positive everywhere; every field must be finite and aligned to the grid.
    """

    __slots__ = ("grid", "rho1", "rho2", "v1", "v2", "s1", "s2")

    def __init__(self, grid: Grid1D, rho1, rho2, v1, v2, s1, s2):
        self.grid = grid
        self.rho1 = _as_field(rho1, grid, "rho1")
        self.rho2 = _as_field(rho2, grid, "rho2")
        self.v1 = _as_field(v1, grid, "v1")
        self.v2 = _as_field(v2, grid, "v2")
        self.s1 = _as_field(s1, grid, "s1")
        self.s2 = _as_field(s2, grid, "s2")
        if np.any(self.rho1 <= 0) or np.any(self.rho2 <= 0):
            raise ValueError("densities must be strictly positive everywhere")

    # -- derived mixture quantities --------------------------------------

    @property
    def rho(self) -> np.ndarray:
        """Mixture density rho1 + rho2."""
        return self.rho1 + self.rho2

    @property
    def concentration(self) -> np.ndarray:
        """Mass fraction of component 1, c = rho1 / rho."""
        return self.rho1 / self.rho

    @property
    def v_mean(self) -> np.ndarray:
        """Mass-average velocity from rho v = rho1 v1 + rho2 v2."""
        return (self.rho1 * self.v1 + self.rho2 * self.v2) / self.rho

    @property
    def u(self) -> np.ndarray:
        """Relative velocity v2 - v1."""
        return self.v2 - self.v1

    @property
    def j(self) -> np.ndarray:
        """Diffusion flux rho1 (v1 - v)."""
        return self.rho1 * (self.v1 - self.v_mean)

    def copy(self) -> "MixtureState":
        return MixtureState(self.grid, self.rho1.copy(), self.rho2.copy(),
                            self.v1.copy(), self.v2.copy(),
                            self.s1.copy(), self.s2.copy())


def _as_field(values, grid: Grid1D, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    if arr.shape == ():
        arr = np.full(grid.n, float(arr))
    if arr.shape != (grid.n,):
        raise ValueError(f"{name}: shape {arr.shape} does not match grid n={grid.n}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name}: field contains non-finite entries")
    return arr
