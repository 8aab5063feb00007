"""End-to-end bound-state solves for one (potential, l) pair."""

from __future__ import annotations

import functools
import warnings
from dataclasses import dataclass, field

import numpy as np

from .eig import eigs_symmetric
from .errors import DomainError
from .mapping import RadialMap
from .observables import RadialState, count_nodes, normalize
from .operator import HamiltonianProblem, UnitConvention, assemble, reconstruct_wavefunction
from .orthopoly import CollocationGrid, lgl_grid
from .potentials import PotentialSpec

DEFAULT_N = 300
DEFAULT_RMAX = 200.0
DEFAULT_ALPHA = 0.25  # map scale L = 25


class NodeCountWarning(UserWarning):
    """A state's node count disagrees with its position in the spectrum."""


@functools.lru_cache(maxsize=16)
def cached_grid(n: int) -> CollocationGrid:
    return lgl_grid(n)


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    potential: PotentialSpec
    ell: int
    states: list[RadialState] = field(default_factory=list)
    problem: HamiltonianProblem | None = field(default=None, repr=False)

    @property
    def energies(self) -> np.ndarray:
        return np.array([s.energy for s in self.states])


def solve(
    potential: PotentialSpec,
    ell: int = 0,
    n_states: int = 1,
    *,
    N: int = DEFAULT_N,
    r_max: float = DEFAULT_RMAX,
    alpha: float = DEFAULT_ALPHA,
    convention: UnitConvention = UnitConvention.AU,
    bound_filter: bool = True,
) -> SpectrumResult:
    """Lowest ``n_states`` bound states of ``potential`` at angular momentum ``ell``.

    With ``bound_filter`` set, states at or above the potential's asymptotic
    value (for potentials that have one) are dropped as box artifacts, so fewer
    than ``n_states`` may be returned.
    """
    if n_states < 1:
        raise DomainError(f"n_states must be at least 1, got {n_states}")
    grid = cached_grid(N)
    rmap = RadialMap.from_rmax_alpha(r_max, alpha)
    problem = assemble(grid, rmap, potential, ell, convention)
    k = min(n_states, N - 1)
    dec = eigs_symmetric(problem.matrix, k)

    limit = potential.asymptote if bound_filter else None
    states = []
    for i in range(k):
        e = float(dec.values[i])
        if limit is not None and e >= limit:
            break
        q = dec.vectors[:, i]
        residual = float(np.linalg.norm(problem.matrix @ q - e * q))
        u = normalize(reconstruct_wavefunction(problem, q), grid, rmap)
        nodes = count_nodes(u)
        if nodes != i:
            warnings.warn(
                f"state {i} of l={ell} for {potential.label} has {nodes} nodes",
                NodeCountWarning,
                stacklevel=2,
            )
        states.append(
            RadialState(
                ell=ell, n=i, energy=e, u=u, grid=grid, map=rmap,
                convention=convention, residual=residual,
            )
        )
    return SpectrumResult(potential=potential, ell=ell, states=states, problem=problem)
