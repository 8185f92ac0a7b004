from .simplex import LinearProgram
from .coloring import chromatic, directed_local_chromatic, directed_local_chromatic_max, enumerate_local_colorings, \
    greedy_coloring, is_proper, local_chromatic, locality, uncovered_patterns, verify_orientation_certificate
from .fractional import FractionalClique, FractionalColoring, fractional_chromatic, is_local_multicoloring, \
    local_weight, multicoloring_from_fractional, psi_d_star, psi_d_star_upper_from_multicoloring, verify_ratio, \
    vertex_transitive_chi_star
from .bounds import alpha_universal_directed, alpha_universal_multi_upper_bound, bound_holds, chi_star_supremum, \
    multi_chi_star_lower_bound, ratio_bound, universal_directed_bounds
from .orientation import max_orientation, tight_independent_set, verify_frakceq
from .sampler import SamplerConfig, chi_upper_bound_from_sampler, distribution_from_fractional_coloring, \
    estimate_membership, fractional_coloring_from_distribution, membership_oracle, membership_probability_exact, \
    optimal_gamma, sample_independent_set
