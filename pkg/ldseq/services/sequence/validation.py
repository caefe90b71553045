"""
Solution Validation
Checks a candidate LD-subsequence against the sequence it claims to come from
"""
import logging

from ldseq.models.sequence import LDSubsequence, Sequence

logger = logging.getLogger(__name__)


def validate_lds(s: Sequence, cand: LDSubsequence) -> bool:
    """
    True iff cand is a letter-duplicated subsequence of s.

    Every block has >= 2 positions, positions increase strictly across the
    concatenation of all blocks, neighbouring blocks use different letters and
    S[p] equals the block letter at every position p.
    """
    letters = s.letters
    n = len(letters)
    last = 0
    previous_letter = None
    for block in cand.blocks:
        if len(block.positions) < 2:
            logger.debug("short block", extra={"letter": block.letter})
            return False
        if block.letter == previous_letter:
            logger.debug("adjacent blocks share a letter", extra={"letter": block.letter})
            return False
        for p in block.positions:
            if p <= last or p > n or letters[p - 1] != block.letter:
                logger.debug("bad position", extra={"letter": block.letter, "position": p})
                return False
            last = p
        previous_letter = block.letter
    return True
