"""Central potentials V(r): built-in families and parsed expressions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike

from . import expr as _expr
from .errors import DomainError, ExpressionError, PotentialEvaluationError

# Upper clamp applied to steep repulsive walls before matrix assembly.
DEFAULT_CAP = 1e12


@dataclass(frozen=True)
class PowerLaw:
    """sgn(nu) * A * r**nu with nu > -2, nu != 0."""

    A: float
    nu: float

    def __post_init__(self):
        if not self.A > 0:
            raise DomainError(f"power-law strength must be positive, got A={self.A}")
        if not self.nu > -2:
            raise DomainError(f"power-law exponent must exceed -2, got nu={self.nu}")
        if self.nu == 0:
            raise DomainError("power-law exponent nu=0 is a constant potential")

    @property
    def label(self) -> str:
        sign = "-" if self.nu < 0 else ""
        return f"{sign}{self.A:g}*r^{self.nu:g}"

    @property
    def asymptote(self) -> float | None:
        return 0.0 if self.nu < 0 else None

    def __call__(self, r):
        return math.copysign(self.A, self.nu) * np.power(r, self.nu)


@dataclass(frozen=True)
class Logarithmic:
    label: str = "ln(r)"
    asymptote: float | None = None

    def __call__(self, r):
        return np.log(r)


@dataclass(frozen=True)
class Morse:
    """D (exp(-2a(r - r_e)) - 2 exp(-a(r - r_e))); defaults are 25, 2, 3."""

    D: float = 25.0
    a: float = 2.0
    r_e: float = 3.0
    cap: float = DEFAULT_CAP

    @property
    def label(self) -> str:
        return f"morse(D={self.D:g},a={self.a:g},re={self.r_e:g})"

    @property
    def asymptote(self) -> float | None:
        return 0.0

    def __call__(self, r):
        with np.errstate(over="ignore"):
            t = np.exp(-self.a * (np.asarray(r, dtype=float) - self.r_e))
            v = self.D * (t * t - 2.0 * t)
        return np.minimum(v, self.cap)


@dataclass(frozen=True)
class AnharmonicOscillator:
    """m omega^2 r^2 / 2 + lam r^4 / 4."""

    m: float = 1.0
    omega: float = 1.0
    lam: float = 0.0

    def __post_init__(self):
        if self.lam < 0:
            raise DomainError(f"quartic coupling must be non-negative, got {self.lam}")

    @property
    def label(self) -> str:
        return f"aho(m={self.m:g},omega={self.omega:g},lambda={self.lam:g})"

    @property
    def asymptote(self) -> float | None:
        return None

    def __call__(self, r):
        r = np.asarray(r, dtype=float)
        r2 = r * r
        return 0.5 * self.m * self.omega**2 * r2 + 0.25 * self.lam * r2 * r2


@dataclass(frozen=True)
class Expression:
    """User-defined V(r) from the expression language in :mod:`gpsrad.expr`."""

    source: str
    tree: _expr.Node = field(compare=False, repr=False)

    @property
    def label(self) -> str:
        return self.source

    @property
    def asymptote(self) -> float | None:
        return None

    def __call__(self, r):
        return _expr.evaluate(self.tree, r)

    def pretty(self) -> str:
        return _expr.to_source(self.tree)


PotentialSpec = PowerLaw | Logarithmic | Morse | AnharmonicOscillator | Expression


def eval_potential(spec: PotentialSpec, r: ArrayLike):
    """V(r) for r > 0; raises PotentialEvaluationError on NaN or infinity."""
    ra = np.asarray(r, dtype=float)
    if np.any(ra <= 0):
        raise DomainError("potential is only evaluated at r > 0")
    with np.errstate(all="ignore"):
        v = np.asarray(spec(ra), dtype=float)
    bad = ~np.isfinite(v)
    if bad.any():
        where = float(ra.reshape(-1)[np.argmax(bad.reshape(-1))]) if ra.ndim else float(ra)
        raise PotentialEvaluationError(f"{spec.label} is not finite at r={where!r}")
    return float(v) if v.ndim == 0 else v


def morse_exact_level(n: int) -> float:
    """Analytic bound-state energy of the Morse well with D=25, a=2, r_e=3.

    E_n = -(5 - sqrt(2) (n + 1/2))^2 for n = 0..3, in units hbar = m = 1.
    """
    if not 0 <= n <= 3:
        raise DomainError(f"the Morse well supports levels 0..3, got n={n}")
    return -((5.0 - math.sqrt(2.0) * (n + 0.5)) ** 2)


def parse_potential(source: str) -> Expression:
    """Compile an expression string in ``r`` into a potential."""
    tree = _expr.parse_expression(source)
    return Expression(source=source, tree=tree)


_BUILTIN_KEYS = {
    "powerlaw": {"A", "nu"},
    "coulomb": {"Z"},
    "harmonic": {"k"},
    "log": set(),
    "morse": {"D", "a", "re"},
    "aho": {"m", "omega", "lambda"},
}


def potential_from_string(text: str) -> PotentialSpec:
    """Build a potential from the command-line mini-syntax.

    ``name:key=val,key=val`` selects a built-in (powerlaw, coulomb, harmonic,
    log, morse, aho); ``expr:<source>`` compiles an expression.

    >>> potential_from_string("powerlaw:A=1,nu=0.5")
    PowerLaw(A=1.0, nu=0.5)
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name == "expr":
        return parse_potential(rest)
    if name not in _BUILTIN_KEYS:
        raise ExpressionError(f"unknown potential {name!r}")
    params: dict[str, float] = {}
    if rest.strip():
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            key = key.strip()
            if not eq or key not in _BUILTIN_KEYS[name]:
                raise ExpressionError(f"bad parameter {item.strip()!r} for {name}")
            try:
                params[key] = float(val)
            except ValueError:
                raise ExpressionError(f"parameter {key} is not a number: {val.strip()!r}") from None
    if name == "powerlaw":
        return PowerLaw(A=params.get("A", 1.0), nu=params.get("nu", 1.0))
    if name == "coulomb":
        return PowerLaw(A=params.get("Z", 1.0), nu=-1.0)
    if name == "harmonic":
        return PowerLaw(A=params.get("k", 1.0), nu=2.0)
    if name == "log":
        return Logarithmic()
    if name == "morse":
        return Morse(D=params.get("D", 25.0), a=params.get("a", 2.0), r_e=params.get("re", 3.0))
    return AnharmonicOscillator(
        m=params.get("m", 1.0), omega=params.get("omega", 1.0), lam=params.get("lambda", 0.0)
    )
