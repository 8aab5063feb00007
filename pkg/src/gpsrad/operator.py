"""Discrete radial Hamiltonian on the interior collocation points.

With F(x) = sqrt(r'(x)) u(r(x)) the radial operator becomes

    -c (1/r') d^2/dx^2 (1/r') + v(r(x)) + v_m(x),

and scaling the unknowns by 1 / P_N(x_j) turns the collocation matrix into a
symmetric one. The coefficient vector of the symmetric problem is therefore
A_j = sqrt(r'_j) u_j / P_N(x_j).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .errors import DomainError, PotentialEvaluationError
from .mapping import RadialMap
from .orthopoly import CollocationGrid
from .potentials import PotentialSpec, eval_potential

ASYMMETRY_TOL = 1e-8


class UnitConvention(enum.Enum):
    """Kinetic prefactor c in -c d^2/dr^2 + V + c l(l+1)/r^2."""

    AU = "au"  # hbar = m = 1
    HBAR2M1 = "hbar2m1"  # hbar = 2m = 1

    @property
    def kinetic_coefficient(self) -> float:
        return 0.5 if self is UnitConvention.AU else 1.0


def effective_potential(potential: PotentialSpec, ell: int, r, convention: UnitConvention):
    """V(r) + c l(l+1) / r^2."""
    if ell < 0:
        raise DomainError(f"angular momentum must be non-negative, got {ell}")
    r = np.asarray(r, dtype=float)
    v = eval_potential(potential, r)
    c = convention.kinetic_coefficient
    out = v + c * ell * (ell + 1) / r**2
    return float(out) if np.ndim(out) == 0 else out


def symmetrized_d2(
    grid: CollocationGrid, rmap: RadialMap | None = None, *, jacobian=None
) -> tuple[NDArray[np.float64], float]:
    """Mapped, symmetrized second-derivative matrix on interior nodes.

    Returns ``(M, asymmetry)`` where
    ``M[i, j] = d2[i, j] P_N(x_j) / (P_N(x_i) r'(x_i) r'(x_j))`` after explicit
    symmetrization, and ``asymmetry`` is ``max|M - M^T| / max|M|`` measured
    before that step. ``jacobian`` overrides r' at the interior nodes.
    """
    inner = grid.interior
    x = grid.nodes[inner]
    p = grid.pn_values[inner]
    if jacobian is None:
        if rmap is None:
            raise TypeError("either a map or explicit Jacobian values are required")
        r1 = rmap.jacobians(x)[0]
    else:
        r1 = np.broadcast_to(np.asarray(jacobian, dtype=float), x.shape)
    d2 = grid.d2[inner, inner]
    m = d2 * (p[None, :] / p[:, None]) / np.outer(r1, r1)
    asym = float(np.abs(m - m.T).max() / np.abs(m).max())
    return 0.5 * (m + m.T), asym


@dataclass(frozen=True, eq=False)
class HamiltonianProblem:
    grid: CollocationGrid
    map: RadialMap
    potential: PotentialSpec
    ell: int
    convention: UnitConvention
    matrix: NDArray[np.float64] = field(repr=False)
    asymmetry: float = 0.0

    @property
    def radii(self) -> NDArray[np.float64]:
        """r_j at all N + 1 nodes."""
        return self.map.forward(self.grid.nodes)

    @property
    def jacobian(self) -> NDArray[np.float64]:
        return self.map.jacobians(self.grid.nodes)[0]


def assemble(
    grid: CollocationGrid,
    rmap: RadialMap,
    potential: PotentialSpec,
    ell: int = 0,
    convention: UnitConvention = UnitConvention.AU,
) -> HamiltonianProblem:
    """Build the symmetric (N-1)x(N-1) Hamiltonian matrix.

    The Dirichlet conditions u(0) = u(r_max) = 0 are imposed by dropping the
    two boundary nodes.
    """
    if ell < 0:
        raise DomainError(f"angular momentum must be non-negative, got {ell}")
    inner = grid.interior
    x = grid.nodes[inner]
    r = rmap.forward(x)
    sym, asym = symmetrized_d2(grid, rmap)
    if asym > ASYMMETRY_TOL:
        raise ArithmeticError(f"mapped second-derivative matrix asymmetry {asym:.3e}")
    try:
        v = effective_potential(potential, ell, r, convention)
    except PotentialEvaluationError as exc:
        raise PotentialEvaluationError(f"assembly failed on the radial grid: {exc}") from exc
    h = -convention.kinetic_coefficient * sym
    h[np.diag_indices_from(h)] += v + rmap.vm(x)
    # exact symmetry so that h[i, j] == h[j, i] holds bitwise
    h = np.triu(h) + np.triu(h, 1).T
    h.setflags(write=False)
    return HamiltonianProblem(
        grid=grid, map=rmap, potential=potential, ell=ell, convention=convention,
        matrix=h, asymmetry=asym,
    )


def reconstruct_wavefunction(problem: HamiltonianProblem, eigvec: NDArray) -> NDArray[np.float64]:
    """Samples u(r_j) at all N + 1 nodes from interior coefficients A_j.

    u_j = A_j P_N(x_j) / sqrt(r'(x_j)); u vanishes at both ends, and the sign is
    chosen so the first significant sample from the origin is positive.
    """
    grid = problem.grid
    n = grid.order
    a = np.asarray(eigvec, dtype=float)
    if a.shape != (n - 1,):
        raise DomainError(f"expected {n - 1} interior coefficients, got shape {a.shape}")
    inner = grid.interior
    u = np.zeros(n + 1)
    u[inner] = a * grid.pn_values[inner] / np.sqrt(problem.map.jacobians(grid.nodes[inner])[0])
    return orient(u)


def orient(u: NDArray) -> NDArray:
    """Flip ``u`` so its first significant entry is positive."""
    mags = np.abs(u)
    if mags.max() == 0:
        return u
    first = int(np.argmax(mags > 1e-10 * mags.max()))
    return -u if u[first] < 0 else u
