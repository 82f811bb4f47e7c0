"""Exact computations with Takiff algebras, Z2-contractions and their invariants."""

from ._kernels import BACKEND
from .lie import LieAlgebra, Representation, bracket, index

__all__ = ["BACKEND", "LieAlgebra", "Representation", "bracket", "index"]
__version__ = "0.1.0"
