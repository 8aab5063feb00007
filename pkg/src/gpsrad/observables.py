"""Normalized radial states and the quantities derived from them.

Integrals over r use the LGL rule on the mapped grid,

    int_0^r_max f(r) dr  ~  sum_j w_j r'(x_j) f(r_j).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .errors import DomainError
from .mapping import RadialMap
from .operator import UnitConvention, orient
from .orthopoly import CollocationGrid, cardinal_matrix

SIGNIFICANT = 1e-8


def measure(grid: CollocationGrid, rmap: RadialMap) -> NDArray[np.float64]:
    """Quadrature weights for dr at every node."""
    return grid.weights * rmap.jacobians(grid.nodes)[0]


@dataclass(frozen=True, eq=False)
class RadialState:
    ell: int
    n: int
    energy: float
    u: NDArray[np.float64] = field(repr=False)
    grid: CollocationGrid = field(repr=False)
    map: RadialMap = field(repr=False)
    convention: UnitConvention = UnitConvention.AU
    residual: float = 0.0

    @property
    def r(self) -> NDArray[np.float64]:
        return self.map.forward(self.grid.nodes)

    @property
    def norm(self) -> float:
        return float(np.sum(measure(self.grid, self.map) * self.u**2))

    @property
    def node_count(self) -> int:
        return count_nodes(self.u)


def normalize(u_raw: NDArray, grid: CollocationGrid, rmap: RadialMap) -> NDArray[np.float64]:
    """Scale samples to unit quadrature norm and fix the overall sign."""
    u = np.asarray(u_raw, dtype=float)
    if u.shape != grid.nodes.shape:
        raise DomainError(f"expected {grid.nodes.size} samples, got {u.shape}")
    norm2 = float(np.sum(measure(grid, rmap) * u**2))
    if not norm2 > 0:
        raise DomainError("cannot normalize an identically zero wavefunction")
    return orient(u / np.sqrt(norm2))


def expectation_rk(state: RadialState, k: int) -> float:
    """<r^k> = int u^2 r^k dr for k >= -1."""
    if k < -1:
        raise DomainError(f"<r^k> is only supported for k >= -1, got k={k}")
    r = state.r
    dens = state.u**2
    rk = np.zeros_like(r)
    # u(0) = 0 so the r = 0 node never contributes, even for k = -1
    pos = r > 0
    rk[pos] = r[pos] ** k
    return float(np.sum(measure(state.grid, state.map) * dens * rk))


def radial_density(state: RadialState) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """(r_j, u_j^2) at every node."""
    return state.r, state.u**2


def interpolate_u(state: RadialState, r):
    """u at arbitrary radii via the cardinal-function expansion in x."""
    ra = np.asarray(r, dtype=float)
    r_nodes = state.r
    x = np.asarray(state.map.inverse(ra), dtype=float)
    out = cardinal_matrix(state.grid, x) @ state.u
    # pin exact node hits to the stored samples
    idx = np.clip(np.searchsorted(r_nodes, ra), 0, r_nodes.size - 1)
    hit = r_nodes[idx] == ra
    out = np.where(hit, state.u[idx], out)
    return float(out) if out.ndim == 0 else out


def count_nodes(u: NDArray, rel_tol: float = SIGNIFICANT) -> int:
    """Sign changes of u, ignoring samples below ``rel_tol * max|u|``."""
    u = np.asarray(u, dtype=float)
    big = u[np.abs(u) > rel_tol * np.abs(u).max()]
    return int(np.count_nonzero(np.diff(np.sign(big))))


def count_peaks(density: NDArray, rel_tol: float = 1e-6) -> int:
    """Local maxima of a sampled density, ignoring values below ``rel_tol * max``."""
    d = np.asarray(density, dtype=float)
    keep = d > rel_tol * d.max()
    peaks = 0
    for k in range(1, d.size - 1):
        if keep[k] and d[k] > d[k - 1] and d[k] >= d[k + 1]:
            peaks += 1
    return peaks
