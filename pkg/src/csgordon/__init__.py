"""Combined sine-cosine-Gordon equation: closed-form traveling waves,
direct PDE evolution, and the phase-driven soliton shift."""
from .errors import (CFLError, CsgError, DegenerateParametersError, DivergenceError,
                     IdentityUndefinedError, KinkNotFoundError, NonFiniteError, PoleError)
from .params import CsgParams, PhaseForm, derive_ode_coeffs, to_phase_form, width_parameter
from .solutions import Family, NormalForm, SolutionSpec, evaluate, normal_form

__version__ = "0.1.0"
