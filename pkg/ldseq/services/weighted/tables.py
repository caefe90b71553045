"""
Weighted Tables
w'_x(l), N(i, j) and w[i, j] for the Weighted-LDS dynamic program
"""
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from ldseq.models.sequence import Sequence
from ldseq.models.tables import WeightedTables
from ldseq.models.weights import WeightTable

ZERO = Fraction(0)


def letter_codes(s: Sequence) -> np.ndarray:
    """codes[0] = 0 stands for S[0] (matches no letter); letters get 1, 2, ... by first occurrence"""
    index: Dict[str, int] = {}
    codes = np.zeros(len(s.letters) + 1, dtype=np.int64)
    for position, letter in enumerate(s.letters, 1):
        codes[position] = index.setdefault(letter, len(index) + 1)
    return codes


def prefix_max_weights(wt: WeightTable, s: Sequence) -> Dict[Tuple[str, int], Fraction]:
    """
    w'_x(l) = max(w'_x(l-1), w_x(l)) for 2 <= l <= |occ[x]|, seeded at l = 2.

    Length-1 weights never enter: a single occurrence is not a block.
    """
    wprime: Dict[Tuple[str, int], Fraction] = {}
    for letter, positions in s.occ.items():
        best = None
        for length in range(2, len(positions) + 1):
            weight = wt.weight(letter, length)
            best = weight if best is None or weight > best else best
            wprime[(letter, length)] = best
    return wprime


def prefix_max_table(wt: WeightTable) -> Dict[Tuple[str, int], Fraction]:
    """w'_x(l) for every letter of the table and 2 <= l <= its longest listed length"""
    longest: Dict[str, int] = {}
    for (letter, length), _ in wt.items():
        longest[letter] = max(longest.get(letter, 0), length)
    wprime: Dict[Tuple[str, int], Fraction] = {}
    for letter, top in longest.items():
        best = None
        for length in range(2, top + 1):
            weight = wt.weight(letter, length)
            best = weight if best is None or weight > best else best
            wprime[(letter, length)] = best
    return wprime


def occurrence_counts(s: Sequence) -> np.ndarray:
    """
    N(i, j) = number of copies of S[j] in S[i..j], as an (n+1) x (n+1) array.

    Row 1 chains each position to the previous copy of its letter
    (N(1, j) = N(1, k) + 1); every later row drops the letter that left the
    window: N(i, j) = N(i-1, j) - [S[i-1] = S[j]]. Entries with j < i are 0.
    """
    n = len(s.letters)
    codes = letter_codes(s)
    N = np.zeros((n + 1, n + 1), dtype=np.int32)
    last: Dict[int, int] = {}
    for j in range(1, n + 1):
        k = last.get(int(codes[j]), 0)
        N[1, j] = (N[1, k] if k else 0) + 1
        last[int(codes[j])] = j
    for i in range(2, n + 1):
        N[i, i:] = N[i - 1, i:] - (codes[i:] == codes[i - 1])
    return N


def block_weights(wprime: Dict[Tuple[str, int], Fraction], N: np.ndarray, s: Sequence) -> np.ndarray:
    """w[i, j] = w'_{S[j]}(N(i, j)) when N(i, j) >= 2, else 0 (object array of Fractions)"""
    n = len(s.letters)
    wblock = np.full((n + 1, n + 1), ZERO, dtype=object)
    for j in range(1, n + 1):
        letter = s.letters[j - 1]
        for i in range(1, j + 1):
            count = int(N[i, j])
            if count >= 2:
                wblock[i, j] = wprime[(letter, count)]
    return wblock


def build_weighted_tables(s: Sequence, wt: WeightTable) -> WeightedTables:
    """
    Materialise every table, including T(i) from the O(n^2) recurrence

        T(i) = max over y < i with S[y] != S[i] and w[y+1, i] > 0 of T(y) + w[y+1, i]

    (0 when no y qualifies). Meant for inspection at desk scale; the solver
    itself streams columns instead of holding n x n tables.
    """
    wt.require(s)
    wprime = prefix_max_weights(wt, s)
    N = occurrence_counts(s)
    wblock = block_weights(wprime, N, s)

    n = len(s.letters)
    letters = (None,) + s.letters
    T: List[Fraction] = [ZERO] * (n + 1)
    trace: List[int] = [-1] * (n + 1)
    for i in range(1, n + 1):
        for y in range(i):
            gain = wblock[y + 1, i]
            if gain > 0 and letters[y] != letters[i]:
                value = T[y] + gain
                if value > T[i]:
                    T[i] = value
                    trace[i] = y
    return WeightedTables(wprime=wprime, N=N, wblock=wblock, T=T, trace=trace)
