"""Jet-space prolongation package.

This package computes prolongation coefficients of vector fields to jet
spaces by an inductive recursion and by closed combinatorial formulas,
implements the multivariate Faà di Bruno formulas, and cross-verifies all
of them.
"""

__all__ = []
__version__ = "0.1.0"
