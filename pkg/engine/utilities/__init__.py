from .map_utils import identity_map, \
    constant_map, \
    first_bit_flip, \
    fold_map, \
    map_from_rules, \
    from_prefix_exchange, \
    evaluate, \
    preimage_clopen, \
    compose, \
    sup_distance, \
    surjectivity_decide, \
    injectivity_certificate
from .homeo_utils import balance_antichains, \
    canonical_clopen_homeo, \
    approx_homeo
from .measure_utils import clopen_measure, \
    mu_mesh, \
    delta_for_epsilon, \
    check_preserves
from .good_measure_utils import clopen_values, \
    restricted_values, \
    group_like_check, \
    find_clopen_subset, \
    goodness_scan, \
    measure_clopen_iso, \
    approx_measure_homeo, \
    half_fold, \
    value_inclusion_check
from .algebra_utils import boolean_distance, \
    caratheodory_tower, \
    interval_realize, \
    algebra_pullback, \
    approx_algebra_iso, \
    evaluate_matched_tower, \
    matched_tower_distance
