"""Exact kernel for Schubert polynomial multiplication.

Combinatorial rules (Monk, Pieri row/column, hooks, Grassmannian structure
constants) on one side; on the other a brute-force oracle that multiplies
the actual polynomials and expands the product back into the basis.  The
two sides are developed independently so that each verifies the other.
"""

from .errors import (
    DomainError,
    NotGrassmannianError,
    NotInSpanError,
    OutOfRangeError,
    ParseError,
    TooManyPartsError,
    UnsupportedChainError,
)
from .partitions import Partition, SkewShape, format_partition, parse_partition
from .perm import (
    Permutation,
    Transposition,
    all_permutations,
    apply_transposition,
    c_perm,
    compose,
    conjugate_by_w0,
    descents,
    embed,
    format_permutation,
    grassmannian_from_shape,
    h_perm,
    identity,
    inverse,
    is_cover,
    is_grassmannian,
    lehmer_code,
    length,
    longest,
    parse_permutation,
    permutation_from_lehmer,
    permutation_from_word,
    r_perm,
    reduced_word,
    restrict,
    shape,
    trim,
)
from .polyring import (
    Polynomial,
    act,
    add,
    complete_sym,
    divided_difference,
    divided_difference_w,
    elementary_sym,
    format_polynomial,
    mul,
    parse_polynomial,
)
from .schubert import (
    SchubertExpansion,
    coefficient_via_descents,
    expand_in_schubert_basis,
    monk_expand,
    product_oracle,
    schubert_poly,
)
from .schur import (
    classical_pieri,
    complement,
    is_skew_column,
    is_skew_row,
    lr_coefficient,
    schur_expand,
    schur_poly,
    skew_size,
    transpose,
)
from .pieri import (
    BruhatPath,
    enumerate_monotone_paths,
    grassmannian_structure_constant,
    hook_expand,
    is_k_bruhat_leq,
    k_bruhat_covers,
    k_bruhat_layer,
    pieri_targets,
)

__version__ = "0.1.0"
