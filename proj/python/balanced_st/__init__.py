"""Balanced st-connectivity: decision, witness construction and checking."""

from ._core import (
    DirectedGraph,
    Instance,
    Verdict,
    WalkReport,
    Decomposition,
    ExcisedCycle,
    ReducedSolution,
    ParseError,
    WalkError,
    ResourceLimitError,
    parse_instance,
    serialize_instance,
    parse_walk,
    serialize_walk,
    classify,
    walk_imbalance,
    decide,
    build_witness,
    rebalance,
    verify_walk,
    decompose,
    oracle_shortest,
    oracle_walk,
    gen_figure1,
    figure1_canonical_walk,
    gen_random,
    gen_degenerate,
    reduce_coefficients,
    solve_bounded,
    __version__,
)

__all__ = [
    "DirectedGraph",
    "Instance",
    "Verdict",
    "WalkReport",
    "Decomposition",
    "ExcisedCycle",
    "ReducedSolution",
    "ParseError",
    "WalkError",
    "ResourceLimitError",
    "parse_instance",
    "serialize_instance",
    "parse_walk",
    "serialize_walk",
    "classify",
    "walk_imbalance",
    "decide",
    "build_witness",
    "rebalance",
    "verify_walk",
    "decompose",
    "oracle_shortest",
    "oracle_walk",
    "gen_figure1",
    "figure1_canonical_walk",
    "gen_random",
    "gen_degenerate",
    "reduce_coefficients",
    "solve_bounded",
    "__version__",
]
