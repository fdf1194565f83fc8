"""Delta-function well in a uniform magnetic field.

Reduced-unit spectral equations in three and two dimensions, the bound-state
wave function with its circulating current, and the weak-field tunnelling
rate, together with independent numerical oracles for each closed form.
"""

from .boundstate import BoundState, ZeroFieldState, circulation, current, density, psi0, vortex_intensity
from .errors import (BracketError, EvaluationError, InvalidParameterError, SingularityError,
                     ToleranceNotMetError, ValidityError)
from .params import DimensionlessSetup, LandauLevel, PhysicalParams, landau_energy, reduce, well_to_lambda
from .spectrum2d import TwoDSetup, f2, relative_gap, solve_ground_2d
from .spectrum3d import SpectralFunction, SpectrumResult, f3, perturbative_shift, solve_spectrum
from .tunneling import TunnelingInput, TunnelingResult, airy_outgoing, decay_rate, overlap_F

__version__ = "0.1.0"

__all__ = [
    "BoundState", "BracketError", "DimensionlessSetup", "EvaluationError", "InvalidParameterError",
    "LandauLevel", "PhysicalParams", "SingularityError", "SpectralFunction", "SpectrumResult",
    "ToleranceNotMetError", "TunnelingInput", "TunnelingResult", "TwoDSetup", "ValidityError",
    "ZeroFieldState", "airy_outgoing", "circulation", "current", "decay_rate", "density", "f2", "f3",
    "landau_energy", "overlap_F", "perturbative_shift", "psi0", "reduce", "relative_gap",
    "solve_ground_2d", "solve_spectrum", "vortex_intensity", "well_to_lambda",
]
