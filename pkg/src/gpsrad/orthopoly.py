"""Legendre polynomials, Legendre-Gauss-Lobatto grids and cardinal functions.

Everything here lives on the reference interval [-1, 1]. The grid of order N
has N + 1 nodes: the two endpoints plus the N - 1 roots of P'_N.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import ConvergenceError, DomainError

_DOMAIN_SLACK = 1e-12
# A node is accepted when its Newton correction |P'_N / P''_N| (its distance to the
# exact root, to first order) is below NODE_TOL. |P'_N| itself cannot be driven
# below ~|P''_N| * ulp(x), which exceeds 1e-13 near the endpoints for large N.
NODE_TOL = 1e-13
MAX_NEWTON = 100


def _legendre_arrays(n: int, x: NDArray[np.float64]) -> tuple[NDArray, NDArray]:
    """P_n and P'_n at every entry of ``x`` via the three-term recurrence.

    P'_n comes from (x^2 - 1) P'_n = n (x P_n - P_{n-1}) in the bulk, which is
    the more accurate route at the LGL nodes. Within 1e-6 of the endpoints that
    identity cancels, so the recurrence P'_k = k P_{k-1} + x P'_{k-1} is used.
    """
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev, np.zeros_like(x)
    p = x.copy()
    dp_rec = np.ones_like(x)
    for k in range(2, n + 1):
        dp_rec = k * p + x * dp_rec
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    near_end = 1.0 - np.abs(x) < 1e-6
    denom = np.where(near_end, 1.0, (x - 1.0) * (x + 1.0))
    dp = np.where(near_end, dp_rec, n * (x * p - p_prev) / denom)
    return p, dp


def legendre_pair(n: int, x: float) -> tuple[float, float]:
    """Return ``(P_n(x), P'_n(x))``.

    Raises DomainError when ``|x|`` exceeds 1 by more than a rounding slack.
    """
    if n < 0:
        raise DomainError(f"Legendre degree must be non-negative, got {n}")
    if abs(x) > 1.0 + _DOMAIN_SLACK:
        raise DomainError(f"x={x!r} outside [-1, 1]")
    x = min(1.0, max(-1.0, float(x)))
    p, dp = _legendre_arrays(n, np.array([x]))
    return float(p[0]), float(dp[0])


@dataclass(frozen=True, eq=False)
class CollocationGrid:
    """Legendre-Gauss-Lobatto collocation grid of order N.

    Attributes
    ----------
    order : int
        Polynomial order N.
    nodes : ndarray, shape (N+1,)
        Ascending nodes with ``nodes[0] = -1`` and ``nodes[N] = 1``.
    pn_values : ndarray, shape (N+1,)
        P_N evaluated at each node.
    weights : ndarray, shape (N+1,)
        LGL quadrature weights ``2 / (N(N+1) P_N(x_j)^2)``.
    d2 : ndarray, shape (N+1, N+1)
        ``d2[i, j] = g_j''(x_i)`` for the cardinal functions g_j.
    """

    order: int
    nodes: NDArray[np.float64]
    pn_values: NDArray[np.float64]
    weights: NDArray[np.float64]
    d2: NDArray[np.float64] = field(repr=False)

    def __post_init__(self):
        for arr in (self.nodes, self.pn_values, self.weights, self.d2):
            arr.setflags(write=False)

    @property
    def interior(self) -> slice:
        return slice(1, self.order)


def _interior_nodes(n: int) -> NDArray[np.float64]:
    """Roots of P'_n in ascending order, mirrored so x_j = -x_{n-j} exactly."""
    half = (n - 1) // 2  # roots with x < 0; x = 0 is an extra root when n is even
    j = np.arange(1, half + 1)
    x = -np.cos(np.pi * j / n)
    converged = np.zeros(x.shape, dtype=bool)
    for _ in range(MAX_NEWTON):
        p, dp = _legendre_arrays(n, x)
        # Legendre ODE gives P'' from P and P'
        ddp = (2.0 * x * dp - n * (n + 1) * p) / (1.0 - x * x)
        step = dp / ddp
        x_new = x - step
        # safeguard: a Newton step must not leave the open interval
        bad = (x_new <= -1.0) | (x_new >= 0.0)
        x = np.where(bad, x, x_new)
        converged = (np.abs(step) <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(x))) & ~bad
        if converged.all():
            break
    resid = node_residual(n, x)
    for k in np.flatnonzero(resid >= NODE_TOL):
        x[k] = _bisect_root(n, x[k])
    resid = node_residual(n, x)
    if np.any(resid >= NODE_TOL):
        k = int(np.argmax(resid))
        raise ConvergenceError(
            f"LGL node {k + 1} of order {n} did not converge: |P'_N/P''_N| = {resid[k]:.3e}"
        )
    mid = np.array([0.0]) if n % 2 == 0 else np.empty(0)
    return np.concatenate([x, mid, -x[::-1]])


def node_residual(n: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    """|P'_n(x) / P''_n(x)| at interior points."""
    p, dp = _legendre_arrays(n, x)
    ddp = (2.0 * x * dp - n * (n + 1) * p) / (1.0 - x * x)
    return np.abs(dp / ddp)


def _bisect_root(n: int, guess: float) -> float:
    """Bisection fallback on a bracket of P'_n around ``guess``."""
    width = np.pi / n
    lo, hi = max(-1.0 + 1e-15, guess - width), min(0.0, guess + width)
    xs = np.linspace(lo, hi, 64)
    _, dps = _legendre_arrays(n, xs)
    sign_change = np.flatnonzero(np.sign(dps[:-1]) != np.sign(dps[1:]))
    if sign_change.size == 0:
        raise ConvergenceError(f"no sign change of P'_{n} bracketing x={guess:.16g}")
    k = sign_change[np.argmin(np.abs(xs[sign_change] - guess))]
    a, b = xs[k], xs[k + 1]
    fa = _legendre_arrays(n, np.array([a]))[1][0]
    for _ in range(200):
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = _legendre_arrays(n, np.array([m]))[1][0]
        if np.sign(fm) == np.sign(fa):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def lgl_grid(n: int) -> CollocationGrid:
    """Build the order-``n`` Legendre-Gauss-Lobatto grid (n >= 4)."""
    if n < 4:
        raise DomainError(f"grid order must be at least 4, got {n}")
    x = np.concatenate([[-1.0], _interior_nodes(n), [1.0]])
    p, _ = _legendre_arrays(n, x)
    p[0], p[-1] = (-1.0) ** n, 1.0
    w = 2.0 / (n * (n + 1) * p**2)
    grid = CollocationGrid(order=n, nodes=x, pn_values=p, weights=w, d2=_d2_matrix(n, x, p))
    return grid


def _d2_matrix(n: int, x: NDArray, p: NDArray) -> NDArray[np.float64]:
    """Second derivatives of the cardinal functions, ``d2[i, j] = g_j''(x_i)``.

    Interior rows come from differentiating the closed form of g_j twice:
    off-diagonal ``-2 P_N(x_i) / (P_N(x_j) (x_i - x_j)^2)`` and diagonal
    ``-N(N+1) / (3 (1 - x_i^2))``. The two boundary rows are taken from the
    square of the first-derivative matrix.
    """
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    ratio = p[:, None] / p[None, :]

    d1 = ratio / diff
    np.fill_diagonal(d1, 0.0)
    d1[0, 0] = -n * (n + 1) / 4.0
    d1[n, n] = n * (n + 1) / 4.0

    d2 = -2.0 * ratio / diff**2
    inner = np.arange(1, n)
    d2[inner, inner] = -n * (n + 1) / (3.0 * (1.0 - x[inner] ** 2))
    d2[0] = d1[0] @ d1
    d2[n] = d1[n] @ d1
    return d2


def second_derivative_matrix(grid: CollocationGrid) -> NDArray[np.float64]:
    """Return ``g_j''(x_i)`` on the reference interval (no mapping factors)."""
    return grid.d2


def cardinal_eval(grid: CollocationGrid, j: int, x: ArrayLike) -> NDArray[np.float64] | float:
    """Evaluate the cardinal function g_j at ``x``.

    g_j(x) = -(1 - x^2) P'_N(x) / (N(N+1) P_N(x_j) (x - x_j)), with the removable
    singularities at the nodes replaced by the Kronecker delta.
    """
    n = grid.order
    if not 0 <= j <= n:
        raise DomainError(f"cardinal index {j} outside 0..{n}")
    values = cardinal_matrix(grid, x)[..., j]
    return float(values) if np.ndim(values) == 0 else values


def cardinal_matrix(grid: CollocationGrid, x: ArrayLike) -> NDArray[np.float64]:
    """All cardinal functions at once: result[..., j] = g_j(x)."""
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0 + _DOMAIN_SLACK):
        raise DomainError("evaluation point outside [-1, 1]")
    xa = np.clip(xa, -1.0, 1.0)
    flat = xa.reshape(-1)
    n = grid.order
    _, dp = _legendre_arrays(n, flat.copy())
    diff = flat[:, None] - grid.nodes[None, :]
    # within a few ulps of a node the ratio dp/diff loses all precision; snap instead
    hit = np.abs(diff) <= 4.0 * np.finfo(float).eps
    diff[hit] = 1.0
    g = -((1.0 - flat**2) * dp)[:, None] / (n * (n + 1) * grid.pn_values[None, :] * diff)
    rows = hit.any(axis=1)
    g[rows] = hit[rows].astype(float)
    return g.reshape(xa.shape + (n + 1,))
