from ldseq.services.reduction.gadgets import (
    build_lldsplus_instance,
    canonical_solution,
    expected_solution_length,
    extract_assignment,
    gadget_sequence,
)
from ldseq.services.reduction.transform import classify_shape, occurrence_roles, to_le2_1_le3_sat

__all__ = [
    "build_lldsplus_instance",
    "canonical_solution",
    "classify_shape",
    "expected_solution_length",
    "extract_assignment",
    "gadget_sequence",
    "occurrence_roles",
    "to_le2_1_le3_sat",
]
