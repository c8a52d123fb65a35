"""qfib: quantum homogeneous spaces, principal pairs and fibrations, computed exactly."""

from .qfield import Scalar, q, q_integer, q_binomial, specialize

__version__ = "0.1.0"
__all__ = ["Scalar", "q", "q_integer", "q_binomial", "specialize"]
