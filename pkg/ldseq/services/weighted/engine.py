"""
Weighted-LDS Engine
O(n^2) maximum-weight letter-duplicated subsequence under arbitrary positive block weights
"""
import logging
from bisect import bisect_left
from fractions import Fraction
from math import lcm
from typing import Dict, List, Tuple

import numpy as np

from ldseq.exceptions import InvariantViolation
from ldseq.models.sequence import Block, LDSubsequence, Sequence
from ldseq.models.weights import WeightTable
from ldseq.services.sequence import validate_lds
from ldseq.services.weighted.tables import letter_codes, prefix_max_weights

logger = logging.getLogger(__name__)

_INT64_HEADROOM = 2 ** 62


def score_solution(s: Sequence, wt: WeightTable, solution: LDSubsequence) -> Fraction:
    """Blockwise weight sum: a block of letter x and size l scores w_x(l)"""
    return sum((wt.weight(b.letter, len(b)) for b in solution.blocks), Fraction(0))


def best_length(wt: WeightTable, letter: str, available: int) -> int:
    """Smallest l in [2, available] with the largest w_x(l)"""
    best, best_weight = 2, wt.weight(letter, 2)
    for length in range(3, available + 1):
        weight = wt.weight(letter, length)
        if weight > best_weight:
            best, best_weight = length, weight
    return best


def _scaled_rows(
    s: Sequence, wprime: Dict[Tuple[str, int], Fraction], n: int
) -> Tuple[Dict[int, np.ndarray], int, object]:
    """Per letter code, w' indexed by window count (0 below 2) as exact integers"""
    scale = 1
    for value in wprime.values():
        scale = lcm(scale, value.denominator)
    largest = max((int(v * scale) for v in wprime.values()), default=0)
    dtype = np.int64 if largest * (n // 2 + 1) < _INT64_HEADROOM else object

    rows: Dict[int, np.ndarray] = {}
    for code, (letter, positions) in enumerate(s.occ.items(), 1):
        row = np.zeros(len(positions) + 1, dtype=dtype)
        for count in range(2, len(positions) + 1):
            row[count] = int(wprime[(letter, count)] * scale)
        rows[code] = row
    return rows, scale, dtype


def compute_weighted_lds(s: Sequence, wt: WeightTable) -> Tuple[Fraction, LDSubsequence]:
    """
    Maximum total weight of an LD-subsequence of s, with a witness.

    T(i) is the best solution of S[1..i] whose last block ends at i:
        T(i) = max over y < i, S[y] != S[i], of T(y) + w[y+1, i]
    where w[y+1, i] = w'_{S[i]}(N(y+1, i)) and S[0] matches no letter.
    Column i of N is a suffix count of S[i] over S[1..i], so each step is
    a handful of O(i) vector operations and nothing n x n is stored.
    The answer is max_i T(i), smallest i on ties.
    """
    wt.require(s)
    n = len(s.letters)
    if n == 0:
        return Fraction(0), LDSubsequence()

    wprime = prefix_max_weights(wt, s)
    codes = letter_codes(s)
    rows, scale, dtype = _scaled_rows(s, wprime, n)

    T = np.zeros(n + 1, dtype=dtype)
    trace = np.full(n + 1, -1, dtype=np.int64)
    for i in range(1, n + 1):
        c = codes[i]
        # counts[y] = copies of S[i] in S[y+1..i], for y = 0..i-1
        counts = np.cumsum(codes[i:0:-1] == c)[::-1]
        gains = rows[int(c)][counts]
        eligible = (gains > 0) & (codes[:i] != c)
        if not eligible.any():
            continue
        candidates = np.where(eligible, T[:i] + gains, -1)
        y = int(np.argmax(candidates))
        T[i] = candidates[y]
        trace[i] = y

    end = int(np.argmax(T))
    best = T[end]
    value = Fraction(int(best), scale)
    solution = _reconstruct(s, wt, T, trace, end) if best > 0 else LDSubsequence()

    if not validate_lds(s, solution) or score_solution(s, wt, solution) != value:
        raise InvariantViolation(f"weighted witness does not certify value {value}")
    logger.debug(
        "weighted lds computed",
        extra={"n": n, "value": str(value), "blocks": len(solution), "dtype": str(dtype)},
    )
    return value, solution


def _reconstruct(s: Sequence, wt: WeightTable, T: np.ndarray, trace: np.ndarray, end: int) -> LDSubsequence:
    """
    Follow trace back from `end`. For the step (y, i) the block keeps the
    last l* copies of S[i] in (y, i], where l* is the best length that fits.
    """
    blocks: List[Block] = []
    i = end
    while i > 0:
        y = int(trace[i])
        letter = s.letters[i - 1]
        positions = s.occ[letter]
        r = bisect_left(positions, i)
        available = r - bisect_left(positions, y + 1) + 1
        length = best_length(wt, letter, available)
        blocks.append(Block(letter, positions[r - length + 1:r + 1]))
        if y == 0 or T[y] <= 0:
            break
        i = y
    blocks.reverse()
    return LDSubsequence(tuple(blocks))
