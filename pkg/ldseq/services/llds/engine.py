"""
LLDS Engine
Linear-time longest letter-duplicated subsequence
"""
import logging
from typing import List, Tuple

from ldseq.exceptions import InvariantViolation
from ldseq.models.sequence import Block, LDSubsequence, Sequence
from ldseq.models.tables import Choice, LldsTable
from ldseq.services.sequence import validate_lds

logger = logging.getLogger(__name__)

_SKIP = int(Choice.SKIP)
_TAKE_PAIR = int(Choice.TAKE_PAIR)
_TAKE_ONE = int(Choice.TAKE_ONE)


def llds_table(s: Sequence) -> LldsTable:
    """
    Fill L(0..n) left to right.

    With p the closest earlier copy of S[i]:
        L(i) = max(L(p-1) + 2, L(p) + 1, L(i-1))
    Ties go TAKE_PAIR, then TAKE_ONE, then SKIP. TAKE_ONE only wins when
    L(p) >= L(p-1) + 2, so position p is the tail of the prefix solution and
    S[i] extends that block.
    """
    n = len(s.letters)
    L = [0] * (n + 1)
    prev_occ = [0] * (n + 1)
    choice = bytearray(n + 1)
    last = {}
    seen = last.get
    take_pair, take_one = _TAKE_PAIR, _TAKE_ONE
    current = 0
    for i, letter in enumerate(s.letters, 1):
        p = seen(letter)
        last[letter] = i
        if p is not None:
            prev_occ[i] = p
            pair = L[p - 1] + 2
            one = L[p] + 1
            if pair >= one:
                if pair >= current:
                    current = pair
                    choice[i] = take_pair
            elif one >= current:
                current = one
                choice[i] = take_one
        L[i] = current
    return LldsTable(L=L, prev_occ=prev_occ, choice=choice)


def _trace_runs(table: LldsTable) -> List[List[int]]:
    """Walk the choices back from n; each TAKE_PAIR opens a run, TAKE_ONE extends it"""
    runs: List[List[int]] = []
    carry: List[int] = []
    choice, prev_occ = table.choice, table.prev_occ
    i = table.n
    while i > 0:
        tag = choice[i]
        if tag == _SKIP:
            if carry:
                raise InvariantViolation(f"pending positions {carry} reached a skipped index {i}")
            i -= 1
        elif tag == _TAKE_ONE:
            carry.append(i)
            i = prev_occ[i]
        else:
            p = prev_occ[i]
            run = [p, i]
            if carry:
                carry.reverse()
                run.extend(carry)
                carry = []
            runs.append(run)
            i = p - 1
    if carry:
        raise InvariantViolation(f"pending positions {carry} left after traceback")
    runs.reverse()
    return runs


def _merge_runs(letters: Tuple[str, ...], runs: List[List[int]]) -> LDSubsequence:
    """Neighbouring runs of one letter become a single block"""
    blocks: List[Block] = []
    run_letter = None
    positions: List[int] = []
    for run in runs:
        letter = letters[run[0] - 1]
        if letter == run_letter:
            positions.extend(run)
            continue
        if run_letter is not None:
            blocks.append(Block.certified(run_letter, tuple(positions)))
        run_letter, positions = letter, run
    if run_letter is not None:
        blocks.append(Block.certified(run_letter, tuple(positions)))
    return LDSubsequence(tuple(blocks))


def compute_llds(s: Sequence) -> Tuple[int, LDSubsequence]:
    """
    Length and one optimal LD-subsequence of s, in O(n).

    The traceback yields runs of one letter, each a concatenation of
    generalized 2/3-blocks; neighbouring runs of the same letter are merged
    in the same pass and the result is checked with validate_lds.
    """
    table = llds_table(s)
    solution = _merge_runs(s.letters, _trace_runs(table))

    if solution.length != table.length or not validate_lds(s, solution):
        raise InvariantViolation(
            f"reconstructed solution of length {solution.length} does not certify L(n) = {table.length}"
        )
    logger.debug("llds computed", extra={"n": table.n, "length": table.length, "blocks": len(solution)})
    return table.length, solution
