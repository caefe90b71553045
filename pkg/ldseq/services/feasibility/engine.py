"""
Feasibility Engine
FT(3) through 2-SAT and the obstacle-enumeration approximation for LLDS+(3)
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, islice
from typing import Iterable, List, Optional, Tuple

from ldseq.exceptions import InvariantViolation
from ldseq.models.feasibility import (
    ApproxConfig,
    ApproxResult,
    CandidateModel,
    FeasibilityResult,
    ImmediatelyInfeasible,
)
from ldseq.models.sequence import Block, LDSubsequence, Sequence
from ldseq.services.feasibility.model import build_ft3_model, build_obstacle_model, require_ft3
from ldseq.services.sequence import validate_lds
from ldseq.services.twosat import solve_2sat

logger = logging.getLogger(__name__)


def _assemble(s: Sequence, model: CandidateModel, extra: Iterable[Block] = ()) -> Optional[LDSubsequence]:
    """Solve the model and lay out the selected intervals plus `extra` blocks; None when UNSAT"""
    result = solve_2sat(model.instance)
    if not result.satisfiable:
        return None
    blocks = list(extra)
    for letter, options in model.candidates.items():
        chosen = next(iv for iv in options if iv.lit.holds(result.assignment))
        blocks.append(Block(letter, (chosen.start, chosen.end)))
    blocks.sort(key=lambda b: b.start)
    solution = LDSubsequence(tuple(blocks))
    if not validate_lds(s, solution):
        raise InvariantViolation("2-SAT assignment selected intersecting intervals")
    return solution


def ft3(s: Sequence) -> FeasibilityResult:
    """
    Decide whether some LD-subsequence of s uses every letter, for d <= 3.

    A feasible witness has exactly one 2-block per letter, length 2|Sigma|.
    """
    model = build_ft3_model(s)
    if isinstance(model, ImmediatelyInfeasible):
        return FeasibilityResult(feasible=False, reason=model.reason)
    solution = _assemble(s, model)
    if solution is None:
        return FeasibilityResult(feasible=False, reason="interval conflicts are unsatisfiable")
    logger.debug("ft3 feasible", extra={"n": len(s), "letters": model.letter_count})
    return FeasibilityResult(feasible=True, solution=solution)


def _disjoint(spans: List[Tuple[int, int]]) -> bool:
    return all(later[0] > earlier[1] for earlier, later in zip(spans, spans[1:]))


def _try_obstacles(s: Sequence, letters: Tuple[str, ...]) -> Tuple[bool, Optional[LDSubsequence]]:
    """
    (reached 2-SAT, solution) for committing 3-blocks of `letters`.

    The first flag is False when the spans overlap or some other letter
    lost all its intervals.
    """
    spans = sorted((s.occ[x][0], s.occ[x][2]) for x in letters)
    if not _disjoint(spans):
        return False, None
    model = build_obstacle_model(s, obstacles=spans, fixed=letters)
    if isinstance(model, ImmediatelyInfeasible):
        return False, None
    three_blocks = [Block(x, s.occ[x]) for x in letters]
    return True, _assemble(s, model, three_blocks)


def _first_feasible(s: Sequence, sets: Iterable[Tuple[str, ...]], workers: int):
    """
    First set in iteration order with a solution, plus the number of sets
    that reached 2-SAT up to and including it.
    """
    tried = 0
    if workers <= 1:
        for letters in sets:
            reached, solution = _try_obstacles(s, letters)
            tried += reached
            if solution is not None:
                return letters, solution, tried
        return None, None, tried

    iterator = iter(sets)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        while True:
            chunk = list(islice(iterator, workers * 8))
            if not chunk:
                return None, None, tried
            for letters, (reached, solution) in zip(chunk, pool.map(lambda x: _try_obstacles(s, x), chunk)):
                tried += reached
                if solution is not None:
                    return letters, solution, tried


def approx_llds_plus_3(s: Sequence, cfg: ApproxConfig = ApproxConfig()) -> ApproxResult:
    """
    Covering LD-subsequence of value 2|Sigma| + t for d <= 3.

    t runs from min(D, #3-occurrence letters) down to 1; for each t the
    size-t letter sets are tried in lexicographic order and each chosen
    letter keeps its full 3-block as an obstacle for the others. The first
    set that 2-SAT accepts wins. With no such set the plain FT(3) witness
    is returned (t = 0), which is already within a factor 1.5 of optimal.
    """
    require_ft3(s)
    base = ft3(s)
    if not base.feasible:
        return ApproxResult(feasible=False)

    sigma = len(s.occ)
    triples = sorted(x for x, positions in s.occ.items() if len(positions) == 3)
    tried = 0
    for t in range(min(cfg.depth, len(triples)), 0, -1):
        letters, solution, count = _first_feasible(s, combinations(triples, t), cfg.workers)
        tried += count
        if solution is not None:
            logger.debug("approx3 found obstacle set", extra={"t": t, "sets_tried": tried, "value": 2 * sigma + t})
            return ApproxResult(
                feasible=True,
                value=2 * sigma + t,
                solution=solution,
                three_blocks=frozenset(letters),
                sets_tried=tried,
            )
    logger.debug("approx3 fell back to ft3", extra={"sets_tried": tried, "value": 2 * sigma})
    return ApproxResult(feasible=True, value=2 * sigma, solution=base.solution, sets_tried=tried)
