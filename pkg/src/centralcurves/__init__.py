"""Exact decision procedures for real affine curves: singularity
classification, centrality, central seminormality, and finite birational
ring extensions, with machine-checkable certificates."""

__version__ = "0.1.0"

from .mpoly import GREVLEX, LEX, MPoly, MonomialOrder, block_order
from .parsing import format_poly, parse_poly
from .groebner import (
    Budget,
    GroebnerBasis,
    Ideal,
    buchberger,
    count_real_solutions,
    eliminate,
    ideal_member,
    ideals_equal,
    is_zero_dimensional,
    minimal_polynomial,
    normal_form,
    radical_member,
    saturate,
    solve_zero_dim,
    standard_monomial_count,
)
from .univar import (
    RootInterval,
    RootIsolation,
    UPoly,
    binary_form_lines,
    isolate_roots,
    resultant,
    squarefree_part,
    sturm_count,
)
from .geometry import (
    PLANE_CURVE,
    SPACE_CURVE,
    SURFACE,
    AffinePresentation,
    Assertions,
    CentralityReport,
    SingularityReport,
    centrality_report,
    classify_singularity,
    is_smooth,
    isolated_point_probe,
    plane_curve,
    singular_points,
)
from .seminormal import (
    SeminormalityCertificate,
    is_centrally_seminormal,
    is_centrally_weakly_normal,
)
from .extension import (
    BijectivityCertificate,
    ExtensionPresentation,
    IntegralElement,
    RationalFunction,
    adjoin,
    central_bijectivity_check,
    continuity_decision,
    fiber_over_point,
    hereditary_birational_check,
    verify_integral_relation,
    wc_normalization_search,
)
from .varspec import VarietySpec, parse_spec, print_spec

__all__ = [
    "GREVLEX",
    "LEX",
    "MPoly",
    "MonomialOrder",
    "block_order",
    "format_poly",
    "parse_poly",
    "Budget",
    "GroebnerBasis",
    "Ideal",
    "buchberger",
    "count_real_solutions",
    "eliminate",
    "ideal_member",
    "ideals_equal",
    "is_zero_dimensional",
    "minimal_polynomial",
    "normal_form",
    "radical_member",
    "saturate",
    "solve_zero_dim",
    "standard_monomial_count",
    "RootInterval",
    "RootIsolation",
    "UPoly",
    "binary_form_lines",
    "isolate_roots",
    "resultant",
    "squarefree_part",
    "sturm_count",
    "PLANE_CURVE",
    "SPACE_CURVE",
    "SURFACE",
    "AffinePresentation",
    "Assertions",
    "CentralityReport",
    "SingularityReport",
    "centrality_report",
    "classify_singularity",
    "is_smooth",
    "isolated_point_probe",
    "plane_curve",
    "singular_points",
    "SeminormalityCertificate",
    "is_centrally_seminormal",
    "is_centrally_weakly_normal",
    "BijectivityCertificate",
    "ExtensionPresentation",
    "IntegralElement",
    "RationalFunction",
    "adjoin",
    "central_bijectivity_check",
    "continuity_decision",
    "fiber_over_point",
    "hereditary_birational_check",
    "verify_integral_relation",
    "wc_normalization_search",
    "VarietySpec",
    "parse_spec",
    "print_spec",
    "__version__",
]
