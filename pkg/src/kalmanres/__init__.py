"""Equivariant free resolutions and finite-field checks for the varieties of
matrices fixing an s-dimensional subspace of a marked d-dimensional space.

The library has two halves.  The symbolic half (partitions, schur, bott,
geometric, resolutions) computes Betti tables of the normalizations, assembles
mapping cones against shipped cancellation data, and compares Hilbert series.
The numeric half (kalman) samples matrices over a large prime field to check
the minor equations, the Jacobian codimension, and low-degree Hilbert
function values.
"""

from .bott import CohomologyResult, GrassmannianContext, bott, cohomology_of_summand, kempf_h0
from .geometric import (
    BettiTable,
    HilbertSeries,
    XiSummand,
    cohomology_table,
    hilbert_series,
    hilbert_series_normalization,
    resolution_terms,
    subcomplex_terms,
    weyl_euler_characteristic,
    xi_exterior_decomposition,
)
from .kalman import (
    BudgetExceededError,
    FpMatrix,
    KalmanPoint,
    P_DEFAULT,
    SplitMix64,
    jacobian_codim,
    minors_vanish,
    numeric_hilbert_function,
    reduced_kalman_matrix,
    sample_generic,
    sample_member,
)
from .partitions import (
    Partition,
    Weight,
    dual_weight,
    partitions_in_box,
    partitions_of,
    schur_rank,
    weight_rank,
)
from .resolutions import (
    Cancellation,
    CancellationError,
    ConjectureReport,
    ExactSequenceSpec,
    cancellations_from_json_obj,
    cancellations_to_json_obj,
    cone_table_d2,
    conjecture_consistency,
    d2_cancellations,
    d3_stage1_cancellations,
    d3_stage2_cancellations,
    intermediate_claims_d3,
    intermediate_table_d3,
    kalman_cone_d3,
    kalman_equations_d3,
    kalman_table_d2,
    koszul_table,
    mapping_cone,
    predicted_hilbert_series,
    table_corank1,
    table_s1,
    table_s2_d3,
    table_w_line,
)
from .schur import (
    cauchy_exterior,
    cauchy_symmetric,
    lr_coefficient,
    lr_product,
    pieri_horizontal,
    pieri_vertical,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BudgetExceededError",
    "Cancellation",
    "CancellationError",
    "CohomologyResult",
    "ConjectureReport",
    "ExactSequenceSpec",
    "FpMatrix",
    "GrassmannianContext",
    "HilbertSeries",
    "KalmanPoint",
    "P_DEFAULT",
    "Partition",
    "SplitMix64",
    "Weight",
    "XiSummand",
    "bott",
    "cancellations_from_json_obj",
    "cancellations_to_json_obj",
    "cauchy_exterior",
    "cauchy_symmetric",
    "cohomology_of_summand",
    "cohomology_table",
    "cone_table_d2",
    "conjecture_consistency",
    "d2_cancellations",
    "d3_stage1_cancellations",
    "d3_stage2_cancellations",
    "dual_weight",
    "hilbert_series",
    "hilbert_series_normalization",
    "intermediate_claims_d3",
    "intermediate_table_d3",
    "jacobian_codim",
    "kalman_cone_d3",
    "kalman_equations_d3",
    "kalman_table_d2",
    "kempf_h0",
    "koszul_table",
    "lr_coefficient",
    "lr_product",
    "mapping_cone",
    "minors_vanish",
    "numeric_hilbert_function",
    "partitions_in_box",
    "partitions_of",
    "pieri_horizontal",
    "pieri_vertical",
    "predicted_hilbert_series",
    "reduced_kalman_matrix",
    "resolution_terms",
    "sample_generic",
    "sample_member",
    "schur_rank",
    "subcomplex_terms",
    "table_corank1",
    "table_s1",
    "table_s2_d3",
    "table_w_line",
    "weight_rank",
    "weyl_euler_characteristic",
    "xi_exterior_decomposition",
]
