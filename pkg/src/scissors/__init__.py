"""Exact scissors-congruence invariants of Euclidean polytopes, plus the
finite homological machinery (Smith normal form homology, flag complexes,
group and Hochschild homology, Kähler differentials) behind them."""

__version__ = "0.1.0"

from .algebraic import AlgebraicReal, field_ops, make_algebraic, sqrt_nonneg
from .angles import AnglePair, IntegerRelation, find_angle_relations, is_rational_angle
from .dehn import (
    CongruenceVerdict,
    DehnTensor,
    compare_polytopes,
    dehn_invariant,
    is_zero,
    tensor_add,
    tensor_neg,
    tensor_normalize,
)
from .geom import (
    Polytope,
    Simplex,
    SimplexChain,
    boundary,
    dihedral_edges,
    orientation_sign,
    prism,
    signed_indicator,
    simplex_volume,
)
from .geom.refine import phi_boundary_check, verify_dissection

__all__ = [
    "AlgebraicReal", "AnglePair", "CongruenceVerdict", "DehnTensor",
    "IntegerRelation", "Polytope", "Simplex", "SimplexChain",
    "boundary", "compare_polytopes", "dehn_invariant", "dihedral_edges",
    "field_ops", "find_angle_relations", "is_rational_angle", "is_zero",
    "make_algebraic", "orientation_sign", "phi_boundary_check", "prism",
    "signed_indicator", "simplex_volume", "sqrt_nonneg", "tensor_add",
    "tensor_neg", "tensor_normalize", "verify_dissection",
]
