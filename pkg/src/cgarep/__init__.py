"""Exact computations with the d=1 conformal Galilei algebras g_ell.

Verma modules, Shapovalov determinants, singular vectors, quotient towers
and the invariant differential operators attached to singular vectors.
"""
from .exact import DELTA, ONE, P, ZERO, ParamPoly, PolyMatrix, Q, poly_det, poly_nullspace
from .liealg import AlgebraConfig, Generator, bracket, omega
from .uea import UEAElement, normal_order
from .verma import BasisLabel, ModulePresentation, VermaVector, Weight, act, act_uea, level_basis

__all__ = [
    "DELTA", "ONE", "P", "ZERO", "ParamPoly", "PolyMatrix", "Q", "poly_det", "poly_nullspace",
    "AlgebraConfig", "Generator", "bracket", "omega", "UEAElement", "normal_order",
    "BasisLabel", "ModulePresentation", "VermaVector", "Weight", "act", "act_uea", "level_basis",
]
