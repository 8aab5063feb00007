"""Dense symmetric eigensolver (LAPACK via numpy) with deterministic output."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .errors import ConvergenceError, DomainError

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    values: NDArray[np.float64]
    vectors: NDArray[np.float64]  # columns are eigenvectors

    def __len__(self):
        return self.values.size


def eigs_symmetric(matrix: NDArray, k: int | None = None) -> EigenDecomposition:
    """Lowest ``k`` eigenpairs of a real symmetric matrix, ascending.

    Each eigenvector is oriented so its first significant component is
    positive, which makes the output reproducible for identical input.
    """
    h = np.asarray(matrix, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or h.shape[0] < 1:
        raise DomainError(f"expected a non-empty square matrix, got shape {h.shape}")
    m = h.shape[0]
    k = m if k is None else k
    if not 1 <= k <= m:
        raise DomainError(f"requested {k} eigenpairs of a {m}x{m} matrix")
    scale = np.abs(h).max()
    if np.abs(h - h.T).max() > SYMMETRY_TOL * max(scale, np.finfo(float).tiny):
        raise DomainError("matrix is not symmetric")
    if not np.all(np.isfinite(h)):
        raise DomainError("matrix has non-finite entries")
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"symmetric eigensolver failed: {exc}") from exc
    w, v = w[:k], v[:, :k]
    mags = np.abs(v)
    first = np.argmax(mags > 1e-12 * mags.max(axis=0), axis=0)
    signs = np.sign(v[first, np.arange(k)])
    signs[signs == 0] = 1.0
    return EigenDecomposition(values=w, vectors=v * signs)
