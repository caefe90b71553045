"""
DP Table Models
Tables produced by the LLDS and weighted dynamic programs
"""
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np


class Choice(IntEnum):
    """Which LLDS case produced L(i)"""
    SKIP = 0
    TAKE_PAIR = 1
    TAKE_ONE = 2


@dataclass(frozen=True)
class LldsTable:
    """
    L[0..n], prev_occ[0..n] (0 when S[i] has no earlier copy) and the
    winning case per index (choice[0] unused).
    """
    L: List[int]
    prev_occ: List[int]
    choice: bytearray

    @property
    def n(self) -> int:
        return len(self.L) - 1

    @property
    def length(self) -> int:
        return self.L[-1]


@dataclass(frozen=True)
class WeightedTables:
    """
    Every table of the weighted DP for one (sequence, weights) pair.

    N and wblock are (n+1) x (n+1) with row/column 0 unused and zeros below
    the diagonal; T[0] = 0 and trace[i] is the best predecessor y of i
    (-1 when T(i) = 0).
    """
    wprime: Dict[Tuple[str, int], Fraction]
    N: np.ndarray
    wblock: np.ndarray
    T: List[Fraction]
    trace: List[int]

    def wblock_row(self, i: int) -> List[Fraction]:
        return list(self.wblock[i, 1:])

    def n_row(self, i: int) -> List[int]:
        return [int(v) for v in self.N[i, 1:]]
