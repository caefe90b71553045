"""
Weight Models
Positive block weights w_x(l) for the weighted problem
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence as SequenceType, Tuple, Union

from ldseq.exceptions import InputError
from ldseq.models.sequence import Sequence

WeightValue = Union[int, Fraction]


@dataclass(frozen=True)
class WeightTable:
    """
    Weights keyed by (letter, block length).

    Entries for length 1 are accepted but never score a block. Weights are
    kept as exact Fractions.
    """
    w: Mapping[Tuple[str, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        table: Dict[Tuple[str, int], Fraction] = {}
        for (letter, length), weight in dict(self.w).items():
            if not isinstance(length, int) or length < 1:
                raise InputError(f"block length must be a positive integer, got {length!r} for {letter!r}")
            value = Fraction(weight)
            if value <= 0:
                raise InputError(f"weight for ({letter}, {length}) must be positive, got {value}")
            table[(letter, length)] = value
        object.__setattr__(self, "w", table)

    @classmethod
    def from_rows(cls, rows: Mapping[str, SequenceType[WeightValue]], start: int = 1) -> "WeightTable":
        """Build from per-letter rows; rows[x][0] is the weight of length `start`"""
        return cls({
            (letter, start + offset): Fraction(weight)
            for letter, row in rows.items()
            for offset, weight in enumerate(row)
        })

    @classmethod
    def uniform_length(cls, s: Sequence) -> "WeightTable":
        """w_x(l) = l, which turns the weighted problem into plain LLDS"""
        return cls({
            (letter, length): Fraction(length)
            for letter, positions in s.occ.items()
            for length in range(1, len(positions) + 1)
        })

    def weight(self, letter: str, length: int) -> Fraction:
        try:
            return self.w[(letter, length)]
        except KeyError:
            raise InputError(f"missing weight for ({letter}, {length})") from None

    def require(self, s: Sequence) -> None:
        """Every (x, l) with 2 <= l <= |occ[x]| must have an entry"""
        for letter, positions in s.occ.items():
            for length in range(2, len(positions) + 1):
                if (letter, length) not in self.w:
                    raise InputError(f"missing weight for ({letter}, {length})")

    def items(self) -> Iterable[Tuple[Tuple[str, int], Fraction]]:
        return self.w.items()
