"""Exception types raised across the package."""


class CsgError(ValueError):
    """Base class for domain errors (bad parameters, singular evaluation)."""


class DegenerateParametersError(CsgError):
    """alpha = beta = 0, or k - c^2 <= 0: no traveling-wave family exists."""


class IdentityUndefinedError(CsgError):
    """The requested identity has no meaning at this point (e.g. gamma = 0)."""


class PoleError(CsgError):
    """Evaluation at, or too close to, the pole of a coth family."""


class CFLError(CsgError):
    """Time step violates the explicit-scheme stability bound."""


class NonFiniteError(CsgError):
    """A field sample or state entry is NaN or infinite."""


class KinkNotFoundError(CsgError):
    """No single monotone crossing of the kink midpoint level."""


class DivergenceError(CsgError):
    """Phase at an endpoint of (0, 2pi), where the reference-point shift diverges."""
