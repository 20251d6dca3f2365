"""Exact evaluation and verification of Fibonacci/Lucas reciprocal sums."""

from .exact import PHI, SQRT5, BigRational, QuadRat, quad_to_decimal
from .sequences import fib, lucas, phi_pow, sqrt5_pow

__version__ = "0.1.0"

__all__ = ["BigRational", "QuadRat", "SQRT5", "PHI", "quad_to_decimal",
           "fib", "lucas", "phi_pow", "sqrt5_pow"]
