"""Exact chromatic polynomials and list-color functions of hypergraphs.

The library computes P(H, k) through a signed expansion over edge
subsets free of broken delta-cycles, counts list colorings both by
brute force and through the matching expansion, computes the list-color
function exactly on small instances, and verifies the family of lower
bounds and thresholds relating the two quantities.
"""

from .errors import (
    BudgetExceededError,
    GeneratorError,
    HyperchromError,
    InputError,
    UndefinedStatisticError,
)
from .hypercore import (
    DisjointSet,
    EdgeSubset,
    Hypergraph,
    components,
    gamma,
    is_linear,
    rho,
    uniformity,
    validate,
)
from .cycles import (
    DeltaCycleCatalog,
    broken_delta_cycles,
    enumerate_delta_cycles,
    is_delta_cycle,
    nb_subsets,
    normalize_eta,
)
from .chromatic import IntPolynomial, chromatic_polynomial, count_proper_colorings
from .listcolor import (
    AlphaProfile,
    ListAssignment,
    alpha,
    beta,
    count_L_colorings,
    count_L_colorings_expansion,
    list_color_function_exact,
    list_color_function_search,
)
from .bounds import (
    BoundReport,
    C_THM2,
    C_THM3,
    Psi_r,
    cor_linear_rhs,
    cor_linear_rhs_exact,
    cor_uniform_rhs,
    cor_uniform_rhs_exact,
    phi1_M,
    phi2_M,
    phi_Mkt,
    phi_xy_thm2,
    phi_xy_thm3,
    prop1_rhs,
    psi_Mt,
    psi_identity_relerr,
    psi_x_thm3,
    reports_to_csv,
    scan_assignments_one_extra_color,
    theorem_certify,
    thm2_gap_factor,
    thm3_gap_factor,
    threshold_thm1,
    threshold_thm2,
    threshold_thm3,
    verify_grids,
    x0,
    x1,
)
from ._kernels import available_backends, get_backend, set_backend

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "GeneratorError",
    "HyperchromError",
    "InputError",
    "UndefinedStatisticError",
    "DisjointSet",
    "EdgeSubset",
    "Hypergraph",
    "components",
    "gamma",
    "is_linear",
    "rho",
    "uniformity",
    "validate",
    "DeltaCycleCatalog",
    "broken_delta_cycles",
    "enumerate_delta_cycles",
    "is_delta_cycle",
    "nb_subsets",
    "normalize_eta",
    "IntPolynomial",
    "chromatic_polynomial",
    "count_proper_colorings",
    "AlphaProfile",
    "ListAssignment",
    "alpha",
    "beta",
    "count_L_colorings",
    "count_L_colorings_expansion",
    "list_color_function_exact",
    "list_color_function_search",
    "BoundReport",
    "C_THM2",
    "C_THM3",
    "Psi_r",
    "cor_linear_rhs",
    "cor_linear_rhs_exact",
    "cor_uniform_rhs",
    "cor_uniform_rhs_exact",
    "phi1_M",
    "phi2_M",
    "phi_Mkt",
    "phi_xy_thm2",
    "phi_xy_thm3",
    "prop1_rhs",
    "psi_Mt",
    "psi_identity_relerr",
    "psi_x_thm3",
    "reports_to_csv",
    "scan_assignments_one_extra_color",
    "theorem_certify",
    "thm2_gap_factor",
    "thm3_gap_factor",
    "threshold_thm1",
    "threshold_thm2",
    "threshold_thm3",
    "verify_grids",
    "x0",
    "x1",
    "available_backends",
    "get_backend",
    "set_backend",
]
