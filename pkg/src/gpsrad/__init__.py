"""Bound states of the radial Schrodinger equation by generalized pseudospectral collocation."""

from .eig import EigenDecomposition, eigs_symmetric
from .errors import (
    ConvergenceError,
    DomainError,
    ExpressionError,
    GPSError,
    PotentialEvaluationError,
)
from .mapping import RadialMap
from .observables import RadialState, expectation_rk, interpolate_u, normalize, radial_density
from .operator import HamiltonianProblem, UnitConvention, assemble, effective_potential
from .orthopoly import CollocationGrid, lgl_grid
from .potentials import (
    AnharmonicOscillator,
    Expression,
    Logarithmic,
    Morse,
    PowerLaw,
    eval_potential,
    morse_exact_level,
    parse_potential,
    potential_from_string,
)
from .spectrum import SpectrumResult, solve

__version__ = "0.1.0"
