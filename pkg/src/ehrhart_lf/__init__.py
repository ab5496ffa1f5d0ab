"""Exact lattice-point counting for lattice-face polytopes.

The main entry points::

    from ehrhart_lf import Polytope, is_lattice_face, ehrhart_formula, count_omega

    p = Polytope([(0, 0, 0), (4, 0, 0), (3, 6, 0), (2, 2, 10)])
    ehrhart_formula(p).poly      # 40*m^3 + 12*m^2 + 4*m + 1
"""

from .bernoulli import bernoulli_poly, extended_sum, f_d, g_d, nbar, nested_sum_signed, power_sum_poly
from .decomp import (
    CellDescriptor,
    VerifyReport,
    cell_contains,
    cell_sign,
    chain_points,
    count_cell,
    count_omega,
    decompose,
    decomposition_multiset_check,
    identity_det2,
    identity_gsigma,
    identity_zero5,
)
from .ehrhart import EhrhartResult, brute_count, ehrhart_formula, interior_formula, interpolate_ehrhart
from .errors import (
    BudgetExceeded,
    DimensionError,
    EhrhartError,
    GeneralPositionError,
    NotLatticeFaceError,
    ParseError,
)
from .exactmath import UniPoly, determinant, solve_affine
from .geometry import (
    Facet,
    Fiber,
    Polytope,
    facet_sign,
    fiber,
    general_position_check,
    omega_contains,
    project,
    triangulate,
    volume,
)
from .latticeface import (
    AffineTransform,
    ZVector,
    canonical_order,
    generate_lattice_face_simplex,
    is_lattice_face,
    ratio_integrality,
    t_sigma,
    z_values,
)

__version__ = "0.1.0"

__all__ = [
    "AffineTransform",
    "bernoulli_poly",
    "brute_count",
    "BudgetExceeded",
    "canonical_order",
    "cell_contains",
    "cell_sign",
    "CellDescriptor",
    "chain_points",
    "count_cell",
    "count_omega",
    "decompose",
    "decomposition_multiset_check",
    "determinant",
    "DimensionError",
    "ehrhart_formula",
    "EhrhartError",
    "EhrhartResult",
    "extended_sum",
    "f_d",
    "Facet",
    "facet_sign",
    "Fiber",
    "fiber",
    "g_d",
    "general_position_check",
    "GeneralPositionError",
    "generate_lattice_face_simplex",
    "identity_det2",
    "identity_gsigma",
    "identity_zero5",
    "interior_formula",
    "interpolate_ehrhart",
    "is_lattice_face",
    "nbar",
    "nested_sum_signed",
    "NotLatticeFaceError",
    "omega_contains",
    "ParseError",
    "Polytope",
    "power_sum_poly",
    "project",
    "ratio_integrality",
    "solve_affine",
    "t_sigma",
    "triangulate",
    "UniPoly",
    "VerifyReport",
    "volume",
    "z_values",
    "ZVector",
]
