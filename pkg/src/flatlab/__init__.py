"""flatlab: nonvanishing k-flats of Boolean and vectorial functions over F2.

Core pieces: bit-packed F2 linear algebra, canonical (RREF) subspace
and flat enumeration, ANF/truth-table Boolean and vectorial functions,
F_{2^n} power maps, Walsh spectra, and counting engines that
cross-check each other (direct flat sums, rank-technique one-pass
counts, closed forms, spectrum-based 2-flat counts).
"""

__version__ = "0.1.0"

from .errors import CapacityError
from .f2linalg import F2Matrix, dot, invert, kernel_basis, rank, rref, select_columns
from .subspace import (
    DEFAULT_BUDGET,
    Flat,
    SubspaceRref,
    canonical_rep,
    enumerated_subspace_count,
    flat_total,
    gaussian_binomial,
    iter_flats,
    iter_rref_blocks,
    iter_subspaces,
    orthogonal_complement,
    subspace_from_basis,
)
from .boolfun import (
    AnfPoly,
    AnfSyntaxError,
    TruthTable,
    algebraic_degree,
    anf_from_truth_table,
    complement_function,
    format_anf,
    homogeneous_part,
    intersect_profile,
    is_homogeneous,
    parse_anf,
    permute_variables,
    truth_table_from_anf,
)
from .vecfun import (
    VectorialFn,
    component,
    degree,
    derivative,
    evaluate,
    format_vectorial,
    higher_derivative,
    homogeneous_part_vectorial,
    is_homogeneous_vectorial,
    parse_vectorial_anf,
    set_sum,
    vect_complement,
)
from .gf2n import FieldSpec, default_modulus, field_mul, field_pow, power_map
from .walsh import (
    WalshSpectrum,
    classify,
    count_nonvanishing_2flats_walsh,
    fourth_power_sum,
    nonlinearity,
    vectorial_spectrum,
    wht,
)
from .flats import (
    NonvanishingReport,
    count_nonvanishing_flats_brute,
    count_nonvanishing_homogeneous,
    count_nonvanishing_homogeneous_vectorial,
    d_intersecting_count,
    d_intersecting_intersection_count,
    duality_check,
    flat_is_nonvanishing,
    inclusion_exclusion_count,
    is_sum_free,
    monomial_nonvanishing_test,
    sum_free_complement,
    zero_intersecting_count,
)
from .equiv import (
    AffinePermutation,
    DegreeREquivalence,
    apply_equivalence,
    complement_transport,
    random_affine_permutation,
    random_equivalence,
)
from . import catalog
