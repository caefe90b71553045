"""
Sequence Parsing
Whitespace-token and per-character readers for sequence text
"""
from ldseq.models.sequence import Sequence


def parse_sequence(text: str, chars: bool = False) -> Sequence:
    """
    Parse sequence text into a Sequence.

    Lines whose first non-blank character is '#' are comments. By default
    tokens are separated by any whitespace; with chars=True every
    non-whitespace character is its own letter.
    """
    kept = [line for line in text.splitlines() if not line.lstrip().startswith("#")]
    if chars:
        return Sequence.from_chars("\n".join(kept))
    return Sequence(tuple(token for line in kept for token in line.split()))


def serialize_sequence(s: Sequence) -> str:
    """Single-space normal form; parse_sequence(serialize_sequence(s)) == s"""
    return " ".join(s.letters)
