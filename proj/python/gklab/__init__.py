"""Python face of the GKL ring laboratory (thin wrapper over the C++ core)."""

from ._core import (
    AlphaConstant,
    CellState,
    EnumerationCapExceeded,
    Ring,
    RingParseError,
    analysis_json,
    bound_for,
    check_configuration,
    derive_seed,
    diagram_bytes,
    enumerate_segment_texts,
    erosion_time,
    fibonacci_string,
    intervals,
    is_valid_segment,
    killing_scenario,
    necklace_count,
    necklaces,
    random_ring,
    segments,
    simulate,
    solid_hierarchy,
    solids_audit,
    solve_alpha,
    step_text,
    theorem_campaign,
    verify_fibonacci_kill,
    verify_killing,
)

__all__ = [
    "AlphaConstant",
    "CellState",
    "EnumerationCapExceeded",
    "Ring",
    "RingParseError",
    "analysis_json",
    "bound_for",
    "check_configuration",
    "derive_seed",
    "diagram_bytes",
    "enumerate_segment_texts",
    "erosion_time",
    "fibonacci_string",
    "intervals",
    "is_valid_segment",
    "killing_scenario",
    "necklace_count",
    "necklaces",
    "random_ring",
    "segments",
    "simulate",
    "solid_hierarchy",
    "solids_audit",
    "solve_alpha",
    "step_text",
    "theorem_campaign",
    "verify_fibonacci_kill",
    "verify_killing",
]
