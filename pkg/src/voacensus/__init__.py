"""Exact character arithmetic and module censuses for the polyhedral
orbifolds of the rank-one lattice vertex algebra at central charge 1."""

from .qseries import (
    EXACT,
    FLOAT,
    QSeries,
    eval_at,
    from_terms,
    min_exponent,
    one,
    partition_series,
    product_form,
    series_inv,
    series_mul,
)
from .lattice import (
    C_SHIFT,
    LatticeLabel,
    QDim,
    char_module,
    char_vl2,
    char_vl2_half,
    conformal_weight,
    coset_sum_identity,
    dual_refinement_identity,
    glob_plus_orbifold,
    irreducible_labels,
    labels_for,
    qdim_formula,
    theta_coset,
    weight_formula,
)
from .groups import GroupData, group_data, normalizer_centralizer_facts
from .galois import (
    base_isotypic_character,
    fixed_point_character,
    isotypic_character,
    regular_decomposition_check,
    twisted_trace,
)

__version__ = "0.1.0"
