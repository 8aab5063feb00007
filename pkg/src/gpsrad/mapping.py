"""Algebraic map from the reference interval [-1, 1] onto the radial box [0, r_max].

    r(x) = L (1 + x) / (1 - x + alpha),    alpha = 2 L / r_max
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from .errors import DomainError

_DOMAIN_SLACK = 1e-12


def _check_x(x: ArrayLike) -> np.ndarray:
    xa = np.asarray(x, dtype=float)
    if np.any(np.abs(xa) > 1.0 + _DOMAIN_SLACK) or np.any(np.isnan(xa)):
        raise DomainError("map argument outside [-1, 1]")
    return np.clip(xa, -1.0, 1.0)


def _scalar_or_array(v: np.ndarray):
    return float(v) if v.ndim == 0 else v


@dataclass(frozen=True)
class RadialMap:
    """Map parameters. Build with :meth:`from_rmax_alpha` or :meth:`from_scale_alpha`."""

    L: float
    alpha: float

    def __post_init__(self):
        if not (self.L > 0 and self.alpha > 0):
            raise DomainError(f"map parameters must be positive, got L={self.L}, alpha={self.alpha}")

    @classmethod
    def from_rmax_alpha(cls, r_max: float, alpha: float) -> "RadialMap":
        if not (r_max > 0 and alpha > 0):
            raise DomainError(f"r_max and alpha must be positive, got {r_max}, {alpha}")
        return cls(L=alpha * r_max / 2.0, alpha=float(alpha))

    @classmethod
    def from_scale_alpha(cls, L: float, alpha: float) -> "RadialMap":
        return cls(L=float(L), alpha=float(alpha))

    @property
    def r_max(self) -> float:
        return 2.0 * self.L / self.alpha

    def forward(self, x: ArrayLike):
        """r(x); strictly increasing from 0 at x = -1 to r_max at x = 1."""
        xa = _check_x(x)
        r = self.L * (1.0 + xa) / (1.0 - xa + self.alpha)
        return _scalar_or_array(r)

    def inverse(self, r: ArrayLike):
        """x(r) = (r (1 + alpha) - L) / (r + L), for r in [0, r_max]."""
        ra = np.asarray(r, dtype=float)
        rmax = self.r_max
        if np.any(ra < 0) or np.any(ra > rmax * (1 + _DOMAIN_SLACK)) or np.any(np.isnan(ra)):
            raise DomainError(f"radius outside [0, {rmax}]")
        x = (ra * (1.0 + self.alpha) - self.L) / (ra + self.L)
        return _scalar_or_array(np.clip(x, -1.0, 1.0))

    def jacobians(self, x: ArrayLike):
        """Analytic (r', r'', r''') at x."""
        xa = _check_x(x)
        s = 1.0 - xa + self.alpha
        c = self.L * (2.0 + self.alpha)
        r1 = c / s**2
        r2 = 2.0 * c / s**3
        r3 = 6.0 * c / s**4
        return _scalar_or_array(r1), _scalar_or_array(r2), _scalar_or_array(r3)

    def vm(self, x: ArrayLike):
        """Map-induced correction term; vanishes identically for this map."""
        return vm_from_jacobians(*self.jacobians(x))


def map_from_rmax_alpha(r_max: float, alpha: float) -> RadialMap:
    return RadialMap.from_rmax_alpha(r_max, alpha)


def map_forward(m: RadialMap, x: ArrayLike):
    return m.forward(x)


def map_jacobians(m: RadialMap, x: ArrayLike):
    return m.jacobians(x)


def vm_from_jacobians(r1, r2, r3):
    """(3 r''^2 - 2 r''' r') / (8 r'^4) for arbitrary Jacobian values."""
    r1, r2, r3 = (np.asarray(v, dtype=float) for v in (r1, r2, r3))
    v = (3.0 * r2**2 - 2.0 * r3 * r1) / (8.0 * r1**4)
    return _scalar_or_array(v)


def vm(m: RadialMap, x: ArrayLike):
    return m.vm(x)
