"""Sidon sequences over finite abelian groups and doubly periodic
distinct difference configurations, linked by folding and unfolding."""

from .fields import Field, make_field
from .groups import (
    CrtIsomorphism,
    DifferenceCollision,
    GroupSpec,
    SidonSequence,
    SumCollision,
    crt_flatten,
    sequence_from_json,
    sequence_to_json,
    sidon_upper_bound,
    verify_sidon,
    verify_sidon_sums,
    verify_weak_sidon,
)
from .lattices import (
    Lattice,
    PeriodPair,
    Shape,
    Tiling,
    fundamental_shape,
    is_lattice_tiling,
    minimal_period,
)
from .folding import (
    defines_folding,
    defines_folding_gcd,
    fold,
    folded_row,
    folding_directions,
    unfold,
)
from .sidon import (
    OptimalityReport,
    abelian_group_specs,
    check_optimality,
    construct_bose,
    construct_power_pairs,
    construct_ruzsa,
    construct_singer,
    max_sidon_size,
)
from .ddc import (
    PeriodicDdc,
    SegmentCollision,
    construct_golomb,
    construct_welch,
    fold_sidon_to_ddc,
    is_ddc,
    is_doubly_periodic_ddc,
    lower_left_dot,
    max_ddc_dots,
    pattern_from_json,
    pattern_to_json,
    render_ascii,
    unfold_to_sidon,
    window_ddc_violation,
)

__version__ = "0.1.0"

__all__ = [
    "Field",
    "make_field",
    "CrtIsomorphism",
    "DifferenceCollision",
    "GroupSpec",
    "SidonSequence",
    "SumCollision",
    "crt_flatten",
    "sequence_from_json",
    "sequence_to_json",
    "sidon_upper_bound",
    "verify_sidon",
    "verify_sidon_sums",
    "verify_weak_sidon",
    "Lattice",
    "PeriodPair",
    "Shape",
    "Tiling",
    "fundamental_shape",
    "is_lattice_tiling",
    "minimal_period",
    "defines_folding",
    "defines_folding_gcd",
    "fold",
    "folded_row",
    "folding_directions",
    "unfold",
    "OptimalityReport",
    "abelian_group_specs",
    "check_optimality",
    "construct_bose",
    "construct_power_pairs",
    "construct_ruzsa",
    "construct_singer",
    "max_sidon_size",
    "PeriodicDdc",
    "SegmentCollision",
    "construct_golomb",
    "construct_welch",
    "fold_sidon_to_ddc",
    "is_ddc",
    "is_doubly_periodic_ddc",
    "lower_left_dot",
    "max_ddc_dots",
    "pattern_from_json",
    "pattern_to_json",
    "render_ascii",
    "unfold_to_sidon",
    "window_ddc_violation",
    "__version__",
]
