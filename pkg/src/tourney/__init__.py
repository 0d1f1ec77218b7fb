"""tourney: bit-parallel tournament counting and carousel diagnostics."""

from .core import (
    SmallClass3,
    SmallClass4,
    Tournament,
    classify3,
    classify4,
    from_arc_list,
    induced,
    score_sequence,
)
from .generators import (
    LayeredSpec,
    carousel,
    digraphon_from_points,
    digraphon_sample,
    layer_sizes,
    layered,
    random_uniform,
    transitive,
)
from .counting import (
    ArcFlagCounts,
    CountProfile,
    EmpiricalDistribution,
    ReferenceDistribution,
    SampledQuadDensities,
    arc_flag_counts,
    arc_flag_distribution,
    count_profile,
    distribution_to_csv,
    ks_distance,
    quad_counts,
    sampled_quad_densities,
    triple_counts,
)
from .loctrans import (
    CyclicOrder,
    Obstruction,
    balance_deficiency,
    brouwer_order,
    carousel_isomorphism,
    find_obstruction,
    flip_distance_given_order,
    is_locally_transitive,
)
from .analysis import (
    DiagnosticReport,
    IdentityResult,
    ReportConfig,
    W4Curve,
    identity_suite,
    maximize_phi_t,
    phi_t_w4,
    quasi_carousel_report,
    quasi_random_report,
    w4_curve_grid,
)
from . import errors, io

__version__ = "0.1.0"

__all__ = [
    "Tournament", "SmallClass3", "SmallClass4",
    "from_arc_list", "induced", "classify3", "classify4", "score_sequence",
    "carousel", "transitive", "random_uniform", "LayeredSpec", "layered",
    "layer_sizes", "digraphon_sample", "digraphon_from_points",
    "ArcFlagCounts", "CountProfile", "EmpiricalDistribution",
    "ReferenceDistribution", "SampledQuadDensities",
    "arc_flag_counts", "triple_counts", "quad_counts", "count_profile",
    "sampled_quad_densities", "arc_flag_distribution", "ks_distance",
    "distribution_to_csv",
    "Obstruction", "CyclicOrder", "find_obstruction", "is_locally_transitive",
    "brouwer_order", "carousel_isomorphism", "balance_deficiency",
    "flip_distance_given_order",
    "W4Curve", "phi_t_w4", "maximize_phi_t", "w4_curve_grid",
    "IdentityResult", "identity_suite",
    "ReportConfig", "DiagnosticReport",
    "quasi_carousel_report", "quasi_random_report",
    "errors", "io",
    "__version__",
]
