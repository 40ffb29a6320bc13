"""Exact hyperplane covers of hypercube subsets with rational arithmetic.

The central quantity is ec(B): the minimum number of (real, affine)
hyperplanes whose traces on {0,1}^n avoid a forbidden set S and whose
union is exactly B = {0,1}^n ∖ S.  The package provides

* exact rational hyperplanes and their cube traces (:mod:`.affine`),
* the catalog of hyperplane intersection patterns (:mod:`.catalog`),
* certified and budgeted exact-cover searches (:mod:`.solver`),
* closed-form cover constructions for small avoided sets, layers,
  dimension reductions and Hamming-sphere covers (:mod:`.constructions`),
* randomized/exhaustive experiments (:mod:`.experiments`),
* a command line interface (:mod:`.cli`, entry point ``hypercover``).
"""

from .affine import (
    Hyperplane,
    affine_closure,
    hull_equations,
    hyperplane_trace,
    is_pattern,
    parse_rational,
    rational_str,
    realize_hyperplane,
    span_of,
    transform_hyperplane,
)
from .catalog import PatternCatalog, count_patterns, enumerate_patterns, maximal_patterns_within
from .constructions import (
    CoverCertificate,
    LayerCoverCertificate,
    cover_full_cube,
    cover_minus_four,
    cover_minus_one,
    cover_minus_three,
    cover_minus_two,
    greedy_total_dominating_set,
    hamming_sphere_cover,
    layer_cover,
    layer_embedding,
    layer_points,
    layer_pullback,
    reduce_fixed_k,
    sphere_subset_hyperplane,
    three_point_form,
    two_point_form,
    venn_form,
    venn_normal_instance,
    verify_layer_cover,
)
from .cube import (
    CubeAutomorphism,
    PointSet,
    all_automorphisms,
    canonical_form,
    hamming_distance,
    parse_point,
    point_str,
    sphere,
    weight,
)
from .experiments import (
    HittingExperimentReport,
    MissingPropertyReport,
    SubcubeHittingResult,
    WagnerReport,
    af_missing_property_test,
    axis_subcubes,
    every_other_layer,
    g_axis_aligned,
    general_subcubes,
    meets_all_general_subcubes,
    random_hitting_experiment,
    wagner_check,
)
from .solver import (
    SolveResult,
    af_lower_bound,
    ec_n_k,
    ec_n_k_detail,
    find_cover_within_budget,
    is_two_dim_subcube,
    min_exact_cover,
    three_covered_one_missed,
    verify_exact_cover,
)

__version__ = "0.1.0"

__all__ = [
    "Hyperplane",
    "PointSet",
    "CubeAutomorphism",
    "PatternCatalog",
    "CoverCertificate",
    "LayerCoverCertificate",
    "SolveResult",
    "HittingExperimentReport",
    "MissingPropertyReport",
    "SubcubeHittingResult",
    "WagnerReport",
    "af_lower_bound",
    "af_missing_property_test",
    "affine_closure",
    "all_automorphisms",
    "axis_subcubes",
    "canonical_form",
    "count_patterns",
    "cover_full_cube",
    "cover_minus_four",
    "cover_minus_one",
    "cover_minus_three",
    "cover_minus_two",
    "ec_n_k",
    "ec_n_k_detail",
    "enumerate_patterns",
    "every_other_layer",
    "find_cover_within_budget",
    "g_axis_aligned",
    "general_subcubes",
    "greedy_total_dominating_set",
    "hamming_distance",
    "hamming_sphere_cover",
    "hull_equations",
    "hyperplane_trace",
    "is_pattern",
    "is_two_dim_subcube",
    "layer_cover",
    "layer_embedding",
    "layer_points",
    "layer_pullback",
    "maximal_patterns_within",
    "meets_all_general_subcubes",
    "min_exact_cover",
    "parse_point",
    "parse_rational",
    "point_str",
    "random_hitting_experiment",
    "rational_str",
    "realize_hyperplane",
    "reduce_fixed_k",
    "span_of",
    "sphere",
    "sphere_subset_hyperplane",
    "three_covered_one_missed",
    "three_point_form",
    "transform_hyperplane",
    "two_point_form",
    "venn_form",
    "venn_normal_instance",
    "verify_exact_cover",
    "verify_layer_cover",
    "wagner_check",
    "weight",
]
