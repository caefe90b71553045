"""
FT(3) Candidate Model
Candidate 2-block intervals per letter and the 2-SAT instance over them
"""
import logging
from typing import Collection, Dict, List, Sequence as Seq, Tuple, Union

from ldseq.exceptions import InputError
from ldseq.models.cnf import Lit, TwoSatInstance
from ldseq.models.feasibility import CandidateModel, ImmediatelyInfeasible, Interval
from ldseq.models.sequence import Sequence

logger = logging.getLogger(__name__)

Span = Tuple[int, int]


def require_ft3(s: Sequence) -> None:
    """Reject sequences where some letter occurs more than 3 times"""
    for letter, positions in s.occ.items():
        if len(positions) > 3:
            raise InputError(
                f"letter {letter!r} occurs {len(positions)} times; FT(3) allows at most 3"
            )


def build_ft3_model(s: Sequence) -> Union[CandidateModel, ImmediatelyInfeasible]:
    """
    Candidate intervals and conflict clauses for a d <= 3 sequence.

    A 3-occurrence letter x at a1 < a2 < a3 gets variable v_x: v_x picks
    (a1, a2), ~v_x picks (a2, a3). A 2-occurrence letter gets one interval
    forced by a unit clause. Two intervals of different letters conflict
    when their ranges intersect, giving the clause (~lit1 | ~lit2).
    """
    require_ft3(s)
    return build_obstacle_model(s, obstacles=(), fixed=())


def build_obstacle_model(
    s: Sequence, obstacles: Seq[Span], fixed: Collection[str]
) -> Union[CandidateModel, ImmediatelyInfeasible]:
    """
    Same model with some letters committed elsewhere.

    Letters in `fixed` get no variable. Any interval intersecting one of the
    obstacle spans is dropped; a letter left with one interval gets a unit
    clause, a letter left with none makes the model infeasible.
    """
    variables: Dict[str, int] = {}
    candidates: Dict[str, Tuple[Interval, ...]] = {}
    clauses: List[Tuple[Lit, Lit]] = []

    for letter, positions in s.occ.items():
        if letter in fixed:
            continue
        if len(positions) == 1:
            return ImmediatelyInfeasible(f"letter {letter!r} occurs once", letter)
        var = len(variables) + 1
        variables[letter] = var
        if len(positions) == 2:
            options = [Interval(letter, positions[0], positions[1], Lit(var, True))]
        else:
            options = [
                Interval(letter, positions[0], positions[1], Lit(var, True)),
                Interval(letter, positions[1], positions[2], Lit(var, False)),
            ]
        options = [iv for iv in options if not any(iv.intersects(a, b) for a, b in obstacles)]
        if not options:
            return ImmediatelyInfeasible(f"every interval of {letter!r} meets a committed 3-block", letter)
        if len(options) == 1:
            clauses.append((options[0].lit, options[0].lit))
        candidates[letter] = tuple(options)

    # sweep by start: an interval only meets later-starting ones up to its end
    ordered = sorted((iv for group in candidates.values() for iv in group), key=lambda iv: (iv.start, iv.end))
    conflicts: List[Tuple[Interval, Interval]] = []
    for index, first in enumerate(ordered):
        for second in ordered[index + 1:]:
            if second.start > first.end:
                break
            if second.letter != first.letter:
                conflicts.append((first, second))
                clauses.append((-first.lit, -second.lit))

    logger.debug(
        "candidate model built",
        extra={"letters": len(candidates), "conflicts": len(conflicts), "obstacles": len(obstacles)},
    )
    return CandidateModel(
        variables=variables,
        candidates=candidates,
        conflicts=tuple(conflicts),
        instance=TwoSatInstance(len(variables), tuple(clauses)),
    )
