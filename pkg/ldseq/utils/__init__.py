from ldseq.utils.formats import (
    format_assignment,
    format_dimacs,
    format_rational,
    format_solution,
    format_weights,
    parse_2sat_dimacs,
    parse_assignment,
    parse_dimacs,
    parse_solution,
    parse_weights,
)

__all__ = [
    "format_assignment",
    "format_dimacs",
    "format_rational",
    "format_solution",
    "format_weights",
    "parse_2sat_dimacs",
    "parse_assignment",
    "parse_dimacs",
    "parse_solution",
    "parse_weights",
]
