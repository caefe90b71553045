"""
Gadget Models
Variable shape classification and the SAT-to-sequence layout
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ldseq.models.sequence import Sequence


class ShapeKind(str, Enum):
    ONE_ONE = "(1,1)"
    TWO_ONE = "(2,1)"
    UNUSED = "unused"
    OUT_OF_SHAPE = "out-of-shape"


@dataclass(frozen=True)
class VariableShape:
    var: int
    positive: int
    negative: int

    @property
    def kind(self) -> ShapeKind:
        if self.positive == 1 and self.negative == 1:
            return ShapeKind.ONE_ONE
        if self.positive == 2 and self.negative == 1:
            return ShapeKind.TWO_ONE
        if self.positive == 0 and self.negative == 0:
            return ShapeKind.UNUSED
        return ShapeKind.OUT_OF_SHAPE


@dataclass(frozen=True)
class ShapeReport:
    variables: Tuple[VariableShape, ...]

    def __getitem__(self, var: int) -> VariableShape:
        return self.variables[var - 1]

    @property
    def out_of_shape(self) -> Tuple[int, ...]:
        return tuple(v.var for v in self.variables if v.kind is ShapeKind.OUT_OF_SHAPE)

    @property
    def is_valid(self) -> bool:
        return not self.out_of_shape


@dataclass(frozen=True)
class VariableGadget:
    """
    L_i for one variable, occupying positions start..end of the sequence.

    Roles are 1-based clause indices: for (1,1) j is the positive clause and
    k the negative one (ell is None); for (2,1) j < k are the positive
    clauses and ell the negative one.
    """
    var: int
    kind: ShapeKind
    j: int
    k: int
    ell: Optional[int]
    start: int
    end: int

    @property
    def positive_clauses(self) -> Tuple[int, ...]:
        return (self.j, self.k) if self.kind is ShapeKind.TWO_ONE else (self.j,)

    @property
    def negative_clause(self) -> int:
        return self.ell if self.kind is ShapeKind.TWO_ONE else self.k


@dataclass(frozen=True)
class GadgetLayout:
    """
    S = g1 g1 L_1 g2 g2 ... L_n g_{n+1} g_{n+1}.

    `separators[i]` holds the two positions of g_{i+1}.
    """
    sequence: Sequence
    gadgets: Tuple[VariableGadget, ...]
    separators: Tuple[Tuple[int, int], ...]
    clause_count: int
    var_count: int


def clause_symbol(index: int) -> str:
    return f"F{index}"


def separator_symbol(index: int) -> str:
    return f"g{index}"
