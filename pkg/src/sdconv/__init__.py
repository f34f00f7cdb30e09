"""Exact-arithmetic toolkit for self-dual convolutional codes over F_q[z]."""

from .classify import (
    ClassificationRecord,
    classify_21,
    classify_42_binary,
    classify_double_diagonal,
    format_catalog,
    reduce_double_triangular,
    scan_21_generators,
)
from .codes import ConvolutionalCode, DistanceReport, STATUS_EXACT, STATUS_UPPER, iter_bounded_polys
from .constructions import (
    NON_TRIVIAL,
    TRIVIAL_ONLY,
    CompletionResult,
    building_up,
    default_a_vec,
    direct_sum,
    find_completion,
    hm_extend,
    is_trivial_completion,
    orthogonal_chain,
)
from .fields import (
    FieldElement,
    FieldSpec,
    make_field,
    parse_element,
    parse_field_selector,
    sqrt_of_minus_one,
)
from .matrices import (
    HermiteDecomposition,
    PolyMatrix,
    SmithDecomposition,
    col_hermite,
    determinant,
    dot,
    format_matrix,
    format_vector,
    inverse_unimodular,
    is_left_prime,
    is_unimodular,
    maximal_minors,
    parse_matrix,
    parse_vector,
    rank,
    right_kernel_basis,
    row_hermite,
    row_matrix,
    smith,
    solve_left,
    vstack,
)
from .polys import NEG_INF, Poly, divrem, gcd, parse_poly, vec_content, xgcd

__version__ = "0.1.0"

__all__ = [
    "ClassificationRecord",
    "CompletionResult",
    "ConvolutionalCode",
    "DistanceReport",
    "FieldElement",
    "FieldSpec",
    "HermiteDecomposition",
    "NEG_INF",
    "NON_TRIVIAL",
    "Poly",
    "PolyMatrix",
    "STATUS_EXACT",
    "STATUS_UPPER",
    "SmithDecomposition",
    "TRIVIAL_ONLY",
    "building_up",
    "classify_21",
    "classify_42_binary",
    "classify_double_diagonal",
    "col_hermite",
    "default_a_vec",
    "determinant",
    "direct_sum",
    "divrem",
    "dot",
    "find_completion",
    "format_catalog",
    "format_matrix",
    "format_vector",
    "gcd",
    "hm_extend",
    "inverse_unimodular",
    "is_left_prime",
    "is_trivial_completion",
    "is_unimodular",
    "iter_bounded_polys",
    "make_field",
    "maximal_minors",
    "orthogonal_chain",
    "parse_element",
    "parse_field_selector",
    "parse_matrix",
    "parse_poly",
    "parse_vector",
    "rank",
    "reduce_double_triangular",
    "right_kernel_basis",
    "row_hermite",
    "row_matrix",
    "scan_21_generators",
    "smith",
    "solve_left",
    "sqrt_of_minus_one",
    "vec_content",
    "vstack",
    "xgcd",
]
