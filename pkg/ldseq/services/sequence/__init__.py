from ldseq.services.sequence.decomposition import decompose_to_generalized, merge_generalized, split_sizes
from ldseq.services.sequence.parsing import parse_sequence, serialize_sequence
from ldseq.services.sequence.validation import validate_lds

__all__ = [
    "decompose_to_generalized",
    "merge_generalized",
    "parse_sequence",
    "serialize_sequence",
    "split_sizes",
    "validate_lds",
]
