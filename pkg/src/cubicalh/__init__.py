"""Exact h-polynomials, local h-polynomials and formal subdivisions of cubical complexes."""
from .complexes import (
    CubicalComplex,
    FaceComplex,
    SimplicialComplex,
    product_complex,
    standard_cube,
    validate_cubical,
)
from .enumeration import (
    HVector,
    h_long_cubical,
    h_short_cubical,
    h_simplicial,
    hetyei_sum,
    long_from_short,
)
from .errors import CubicalHError
from .formal import (
    FormalSubdivision,
    gamma,
    h_general,
    is_kernel,
    lambda_kernel,
    lift_subdivision,
    local_h_general,
    validate_formal,
    xi,
)
from .polynomial import Polynomial
from .poset import Poset
from .subdivision import (
    SubdivisionMap,
    cbs_closed_form,
    is_locally_quasi_geometric,
    is_quasi_geometric,
    local_h_long,
    local_h_short,
    local_h_short_via_excess,
    locality_decompose_long,
    locality_decompose_short,
    restriction,
    validate_subdivision,
    vertex_contribution,
)

__all__ = [
    "CubicalComplex", "FaceComplex", "SimplicialComplex", "product_complex", "standard_cube",
    "validate_cubical", "HVector", "h_long_cubical", "h_short_cubical", "h_simplicial", "hetyei_sum",
    "long_from_short", "CubicalHError", "FormalSubdivision", "gamma", "h_general", "is_kernel",
    "lambda_kernel", "lift_subdivision", "local_h_general", "validate_formal", "xi", "Polynomial",
    "Poset", "SubdivisionMap", "cbs_closed_form", "is_locally_quasi_geometric", "is_quasi_geometric",
    "local_h_long", "local_h_short", "local_h_short_via_excess", "locality_decompose_long",
    "locality_decompose_short", "restriction", "validate_subdivision", "vertex_contribution",
]
