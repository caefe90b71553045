from ldseq.services.oracle.sat import brute_2sat, brute_sat, satisfying_assignments
from ldseq.services.oracle.search import (
    brute_ft,
    brute_ft_witness,
    brute_llds,
    brute_llds_plus,
    brute_llds_plus_by_intervals,
    brute_weighted,
    maximal_lds,
)

__all__ = [
    "brute_2sat",
    "brute_ft",
    "brute_ft_witness",
    "brute_llds",
    "brute_llds_plus",
    "brute_llds_plus_by_intervals",
    "brute_sat",
    "brute_weighted",
    "maximal_lds",
    "satisfying_assignments",
]
