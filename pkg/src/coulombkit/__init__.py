"""Exact computer algebra for abelian Coulomb branches, toric hyperkaehler
duality checks, and Kac-Moody weight combinatorics."""

from .cancel import CancellationToken
from .cartan import (
    GeneralizedCartanMatrix,
    KMWeight,
    central_element_as_root_sum,
    dominance_leq,
    langlands_dual,
    level,
    named_gcm,
    validate_and_symmetrize,
)
from .difference_ops import (
    HBAR,
    DifferenceOperator,
    commutator,
    multiply,
    poisson_from_lifts,
    shift_polynomial,
    specialize_hbar,
    w_vars,
)
from .errors import (
    Cancelled,
    CartanError,
    CoulombKitError,
    DimensionError,
    DomainError,
    LatticeError,
    LiftError,
    SymmetrizabilityError,
    UnsupportedError,
)
from .higgs import HiggsTheory, coulomb_higgs_compare, invariant_hilbert, moment_ideal_generators
from .lattices import (
    IntMatrix,
    dual_sequence,
    hermite_column_form,
    integer_kernel,
    pairing,
    saturation,
    smith_diagonal,
    smith_normal_form,
)
from .monopole import (
    AbelianTheory,
    CoulombElement,
    birationality_witness,
    classical_product,
    element_from_operator,
    grading_degree,
    hilbert_series,
    poisson,
    quantize,
    quantum_relation,
)
from .multiplicities import (
    FreudenthalTable,
    RootTable,
    root_multiplicities,
    tensor_decompose,
    tensor_fixed_components,
    tensor_weight_mult,
    weight_multiplicity,
    weight_support,
)
from .quiver import (
    DimVectors,
    Quiver,
    cocharacter_split,
    dims_from_weights,
    fixed_point_nonempty,
    gauge_data,
    jordan_coulomb_hilbert,
    mv_dimension,
    parabolic_codim,
    slice_params,
    strata_affine,
    strata_finite,
)

__version__ = "0.1.0"
