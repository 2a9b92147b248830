"""Signed graphs up to switching isomorphism."""

from ._core import (
    Classifier,
    Cycle,
    Graph,
    Signature,
    SwitchIsoError,
    apply_automorphism,
    automorphic_type_count,
    automorphism_group,
    check_min_degree_bound,
    coset_reduce,
    cut_space_rank,
    cycle_sign,
    enumerate_cycles,
    enumerate_isomorphism_classes,
    frustration_index,
    is_balanced,
    is_switching_equivalent,
    named_k6_representatives,
    negative_cycle_spectrum,
    spanning_forest,
    switch_at,
    switching_witness,
    unbalanced_cycle_set,
)

__all__ = [
    "Classifier",
    "Cycle",
    "Graph",
    "Signature",
    "SwitchIsoError",
    "apply_automorphism",
    "automorphic_type_count",
    "automorphism_group",
    "check_min_degree_bound",
    "coset_reduce",
    "cut_space_rank",
    "cycle_sign",
    "enumerate_cycles",
    "enumerate_isomorphism_classes",
    "frustration_index",
    "is_balanced",
    "is_switching_equivalent",
    "named_k6_representatives",
    "negative_cycle_spectrum",
    "spanning_forest",
    "switch_at",
    "switching_witness",
    "unbalanced_cycle_set",
]
