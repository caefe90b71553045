from ldseq.services.weighted.engine import best_length, compute_weighted_lds, score_solution
from ldseq.services.weighted.tables import (
    block_weights,
    build_weighted_tables,
    occurrence_counts,
    prefix_max_table,
    prefix_max_weights,
)

__all__ = [
    "best_length",
    "block_weights",
    "build_weighted_tables",
    "compute_weighted_lds",
    "occurrence_counts",
    "prefix_max_table",
    "prefix_max_weights",
    "score_solution",
]
