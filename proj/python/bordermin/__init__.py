"""Exact solvers for exhaustive border minimization on synthesis arrays."""

from bordermin._bordermin import (  # noqa: F401
    AbGrid,
    Alphabet,
    BorderminError,
    Instance,
    Mask,
    ParsedInstance,
    PartitionResult,
    Placement,
    ReducedInstance,
    ReductionConstants,
    Solution,
    SolveStats,
    VerifyReport,
    balanced_partition_instance,
    border_pair,
    build_separator,
    compute_bl,
    derive_masks,
    embed,
    encode_placement_instance,
    enumerate_good_depositions,
    enumerate_primal_sequences,
    enveloping_probe,
    expand_primal,
    extract_partition,
    faithful_reduction_constants,
    is_good,
    make_ab_grid,
    make_consecutive,
    parse_instance,
    primal_of,
    separator_min_u,
    serialize_instance,
    solve_bmp_budget,
    solve_bmp_oracle,
    solve_bmp_template,
    solve_pbmp,
    solve_pbmp_budget,
    strip_redundant,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
