"""Verification workbench for the integrable structures of the critical
quantum-group-invariant XXZ chain: R-matrices and the Yang-Baxter property,
open-boundary Hamiltonians and their symmetry, functional-equation residual
checkers, pairing integrals with their bilinear relations, exact Laurent
polynomial identities, and the hyperelliptic classical limit."""

__version__ = "0.1.0"

from .rmatrix import Anisotropy

__all__ = ["Anisotropy", "__version__"]
