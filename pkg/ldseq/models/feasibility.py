"""
Feasibility Models
Candidate intervals, the FT(3) conflict model and solver results
"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from ldseq.exceptions import InputError
from ldseq.models.cnf import Lit, TwoSatInstance
from ldseq.models.sequence import LDSubsequence


@dataclass(frozen=True)
class Interval:
    """
    Candidate 2-block (start, end) of one letter.

    `lit` is the 2-SAT literal that selects it: v_x for (a1, a2), ~v_x for
    (a2, a3), and v_x (forced by a unit clause) for a 2-occurrence letter.
    """
    letter: str
    start: int
    end: int
    lit: Lit

    def intersects(self, start: int, end: int) -> bool:
        return self.start <= end and start <= self.end


@dataclass(frozen=True)
class CandidateModel:
    """Per-letter candidate intervals plus the pairwise conflicts between letters"""
    variables: Dict[str, int]
    candidates: Dict[str, Tuple[Interval, ...]]
    conflicts: Tuple[Tuple[Interval, Interval], ...]
    instance: TwoSatInstance

    @property
    def letter_count(self) -> int:
        return len(self.candidates)


@dataclass(frozen=True)
class ImmediatelyInfeasible:
    """Some letter cannot contribute any candidate interval"""
    reason: str
    letter: Optional[str] = None


@dataclass(frozen=True)
class ApproxConfig:
    """D: cap on the number of enumerated 3-blocks; workers: obstacle-set threads"""
    depth: int = 3
    workers: int = 1

    def __post_init__(self):
        if self.depth < 0:
            raise InputError(f"depth must be non-negative, got {self.depth}")
        if self.workers < 1:
            raise InputError(f"workers must be positive, got {self.workers}")


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    solution: Optional[LDSubsequence] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class ApproxResult:
    """
    Best covering solution found: value = 2|Sigma| + t where t = |three_blocks|.

    `sets_tried` counts the obstacle sets that reached the 2-SAT stage.
    """
    feasible: bool
    value: int = 0
    solution: Optional[LDSubsequence] = None
    three_blocks: FrozenSet[str] = field(default_factory=frozenset)
    sets_tried: int = 0
