"""Grothendieck polynomials and Pieri-type products in K-theory of flag manifolds."""

from .basis import (
    BasisExpansion,
    code,
    expand_in_grothendieck_basis,
    expand_in_schubert_basis,
    grothendieck_of_column,
    grothendieck_of_partition,
    grothendieck_of_row,
    grothendieck_polynomial,
    permutation_of_code,
    schubert_polynomial,
)
from .chains import (
    ChainClassification,
    MarkedChain,
    classify_chain,
    enumerate_dual_pieri_chains,
    enumerate_monk_chains,
    enumerate_pieri_chains,
    enumerate_xk_chains,
    find_forbidden_segment,
    intertwine_pair,
    markings,
    satisfies_p0_p1,
    unique_chain,
    validate_dual_pieri_chain,
    validate_pieri_chain,
)
from .errors import ExpansionError, InvariantError
from .grassmannian import (
    Partition,
    SkewShape,
    grassmannian_permutation,
    grassmannian_pieri_col,
    grassmannian_pieri_row,
    is_horizontal_strip,
    is_vertical_strip,
    partition_of_grassmannian,
)
from .kernels import BACKEND
from .perm import (
    CoverLabel,
    Permutation,
    is_cover,
    k_bruhat_leq,
    length,
    parse_permutation,
)
from .pieri import (
    cohomology_pieri_product,
    compressed_pieri_product,
    monk_product,
    pieri_e_product,
    pieri_h_by_conjugation,
    pieri_h_product,
    transition_residual,
    xk_product,
)
from .poly import Polynomial, divided_difference, format_polynomial, isobaric_difference

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
