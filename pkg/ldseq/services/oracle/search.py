"""
Sequence Oracles
Exponential exact solvers for LLDS, LLDS+, FT and Weighted-LDS on small inputs
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Set, Tuple

from ldseq.exceptions import InputError, InvariantViolation
from ldseq.models.oracle import OracleBudget
from ldseq.models.sequence import Block, LDSubsequence, Sequence
from ldseq.models.weights import WeightTable
from ldseq.services.sequence import validate_lds

logger = logging.getLogger(__name__)

_NONE = -1


def _group(s: Sequence, taken: List[int]) -> LDSubsequence:
    """Consecutive kept positions of one letter form one block"""
    blocks: List[Tuple[str, List[int]]] = []
    for p in taken:
        letter = s.letters[p - 1]
        if blocks and blocks[-1][0] == letter:
            blocks[-1][1].append(p)
        else:
            blocks.append((letter, [p]))
    return LDSubsequence(tuple(Block(x, tuple(ps)) for x, ps in blocks))


def _longest(s: Sequence, cover: bool) -> Optional[Tuple[int, LDSubsequence]]:
    """
    Exhaustive search over subsequences with state (position, letter of the
    open block, its size capped at 2, letters already in a finished block).
    The covered set is only tracked when every letter is required.
    """
    letters = s.letters
    n = len(letters)
    bit = {x: 1 << k for k, x in enumerate(s.occ)}
    full = (1 << len(bit)) - 1 if cover else 0

    def moves(i: int, cur: Optional[str], run: int, covered: int):
        c = letters[i]
        yield False, (i + 1, cur, run, covered)
        if c == cur:
            yield True, (i + 1, cur, 2, covered | bit[c] if cover else 0)
        elif run != 1:
            yield True, (i + 1, c, 1, covered)

    @lru_cache(maxsize=None)
    def best(i: int, cur: Optional[str], run: int, covered: int) -> int:
        if i == n:
            return 0 if run != 1 and covered == full else _NONE
        result = _NONE
        for take, state in moves(i, cur, run, covered):
            value = best(*state)
            if value != _NONE:
                result = max(result, value + take)
        return result

    state = (0, None, 0, 0)
    total = best(*state)
    if total == _NONE:
        return None
    taken: List[int] = []
    remaining = total
    while state[0] < n:
        for take, nxt in moves(*state):
            value = best(*nxt)
            if value != _NONE and value + take == remaining:
                if take:
                    taken.append(state[0] + 1)
                remaining -= take
                state = nxt
                break
    solution = _group(s, taken)
    if not validate_lds(s, solution) or solution.length != total:
        raise InvariantViolation("oracle witness does not validate")
    return total, solution


def brute_llds(s: Sequence, budget: Optional[OracleBudget] = None) -> Tuple[int, LDSubsequence]:
    """Longest LD-subsequence by exhaustive search"""
    (budget or OracleBudget()).check_n(len(s))
    return _longest(s, cover=False)


def brute_llds_plus(s: Sequence, budget: Optional[OracleBudget] = None) -> Optional[Tuple[int, LDSubsequence]]:
    """Longest LD-subsequence using every letter, or None when there is none"""
    (budget or OracleBudget()).check_n(len(s))
    if any(len(p) == 1 for p in s.occ.values()):
        return None
    return _longest(s, cover=True)


def _pick_disjoint(options: List[List[Tuple[int, ...]]], score) -> Optional[List[Tuple[int, ...]]]:
    """
    One option per letter with pairwise disjoint spans, maximising `score`
    (first found when score is None).
    """
    order = sorted(range(len(options)), key=lambda k: (len(options[k]), options[k][0][0]))
    chosen: List[Tuple[int, ...]] = [()] * len(options)
    spans: List[Tuple[int, int]] = []
    best: List = [None, None]

    def free(positions: Tuple[int, ...]) -> bool:
        return all(positions[-1] < a or b < positions[0] for a, b in spans)

    def walk(depth: int) -> bool:
        if depth == len(order):
            value = score(chosen) if score else 0
            if best[0] is None or value > best[0]:
                best[0], best[1] = value, list(chosen)
            return score is None
        k = order[depth]
        for positions in options[k]:
            if free(positions):
                chosen[k] = positions
                spans.append((positions[0], positions[-1]))
                done = walk(depth + 1)
                spans.pop()
                if done:
                    return True
        return False

    walk(0)
    return best[1]


def _blocks(s: Sequence, picks: List[Tuple[int, ...]]) -> LDSubsequence:
    blocks = sorted((Block(s.letters[p[0] - 1], p) for p in picks), key=lambda b: b.start)
    return LDSubsequence(tuple(blocks))


def brute_llds_plus_by_intervals(
    s: Sequence, budget: Optional[OracleBudget] = None
) -> Optional[Tuple[int, LDSubsequence]]:
    """
    LLDS+ for d <= 3 by choosing, per letter, a 2-block of consecutive
    occurrences or the full 3-block, with pairwise disjoint spans.
    """
    (budget or OracleBudget()).check_n(len(s))
    if s.d > 3:
        raise InputError(f"interval search needs d <= 3, got d = {s.d}")
    if any(len(p) == 1 for p in s.occ.values()):
        return None
    if not s.occ:
        return 0, LDSubsequence()
    options = []
    for positions in s.occ.values():
        pairs = [positions[k:k + 2] for k in range(len(positions) - 1)]
        options.append(([positions] if len(positions) == 3 else []) + pairs)
    picks = _pick_disjoint(options, score=lambda chosen: sum(len(p) for p in chosen))
    if picks is None:
        return None
    solution = _blocks(s, picks)
    return solution.length, solution


def brute_ft_witness(s: Sequence, budget: Optional[OracleBudget] = None) -> Optional[LDSubsequence]:
    """
    A covering LD-subsequence with one 2-block per letter, or None.

    Any covering solution shrinks to one pair of consecutive occurrences
    per letter, so searching those pairs for disjoint spans is exact.
    """
    (budget or OracleBudget()).check_n(len(s))
    if any(len(p) == 1 for p in s.occ.values()):
        return None
    if not s.occ:
        return LDSubsequence()
    options = [
        [positions[k:k + 2] for k in range(len(positions) - 1)] for positions in s.occ.values()
    ]
    picks = _pick_disjoint(options, score=None)
    return None if picks is None else _blocks(s, picks)


def brute_ft(s: Sequence, budget: Optional[OracleBudget] = None) -> bool:
    return brute_ft_witness(s, budget) is not None


def brute_weighted(s: Sequence, wt: WeightTable, budget: Optional[OracleBudget] = None) -> Fraction:
    """Maximum blockwise weight over all LD-subsequences; state keeps the exact open-block size"""
    (budget or OracleBudget()).check_weighted_n(len(s))
    wt.require(s)
    letters = s.letters
    n = len(letters)

    def close(cur: Optional[str], run: int) -> Fraction:
        return wt.weight(cur, run) if run >= 2 else Fraction(0)

    @lru_cache(maxsize=None)
    def best(i: int, cur: Optional[str], run: int) -> Optional[Fraction]:
        if i == n:
            return None if run == 1 else close(cur, run)
        c = letters[i]
        candidates = [best(i + 1, cur, run)]
        if c == cur:
            candidates.append(best(i + 1, cur, run + 1))
        elif run != 1:
            rest = best(i + 1, c, 1)
            candidates.append(None if rest is None else close(cur, run) + rest)
        return max((v for v in candidates if v is not None), default=None)

    value = best(0, None, 0)
    return value if value is not None else Fraction(0)


def maximal_lds(s: Sequence, budget: Optional[OracleBudget] = None) -> Set[Tuple[str, ...]]:
    """Words of the LD-subsequences of s that are not a proper subsequence of another one"""
    (budget or OracleBudget()).check_n(len(s))
    words: Set[Tuple[str, ...]] = set()
    n = len(s)
    for size in range(2, n + 1):
        for positions in combinations(range(1, n + 1), size):
            word = tuple(s.letters[p - 1] for p in positions)
            runs = Sequence(word).run_length()
            if all(count >= 2 for _, count in runs):
                words.add(word)

    def within(short: Tuple[str, ...], long: Tuple[str, ...]) -> bool:
        it = iter(long)
        return all(letter in it for letter in short)

    return {w for w in words if not any(len(v) > len(w) and within(w, v) for v in words)}
