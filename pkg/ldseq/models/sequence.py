"""
Sequence Models
Tokenized sequences and the letter-duplicated solution objects built over them
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Tuple

from ldseq.exceptions import InputError


@dataclass(frozen=True)
class Sequence:
    """
    Sequence S[1..n] over the alphabet of its own tokens.

    The occurrence index and d are derived lazily so that building a
    sequence of millions of tokens stays a single tuple copy.
    """
    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not letters:
            return
        joined = " " + " ".join(letters)
        # C-level passes: an empty token drops out of the split and a token
        # with inner whitespace splits in two
        if len(joined.split()) != len(letters):
            bad = next(t for t in letters if not t or len(t.split()) != 1)
            raise InputError(f"invalid letter token {bad!r}")
        # a leading "#" would read back as a comment
        if " #" in joined:
            bad = next(t for t in letters if t.startswith("#"))
            raise InputError(f"letter token {bad!r} starts with '#'")

    @classmethod
    def from_chars(cls, text: str) -> "Sequence":
        """Each non-whitespace character becomes one letter"""
        return cls(tuple(ch for ch in text if not ch.isspace()))

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, position: int) -> str:
        """1-based access, S[i]"""
        if position < 1 or position > len(self.letters):
            raise IndexError(f"position {position} outside [1, {len(self.letters)}]")
        return self.letters[position - 1]

    @property
    def n(self) -> int:
        return len(self.letters)

    @cached_property
    def occ(self) -> Dict[str, Tuple[int, ...]]:
        """Inverted index: letter -> increasing 1-based positions, first-occurrence order"""
        index: Dict[str, List[int]] = {}
        for position, letter in enumerate(self.letters, 1):
            bucket = index.get(letter)
            if bucket is None:
                index[letter] = [position]
            else:
                bucket.append(position)
        return {letter: tuple(positions) for letter, positions in index.items()}

    @cached_property
    def d(self) -> int:
        """Maximum occurrence count of any letter (0 for the empty sequence)"""
        return max((len(p) for p in self.occ.values()), default=0)

    @property
    def alphabet(self) -> Tuple[str, ...]:
        """Letters in order of first occurrence"""
        return tuple(self.occ)

    def run_length(self) -> List[Tuple[str, int]]:
        """Standard run-length representation y1^a1 ... yq^aq"""
        runs: List[Tuple[str, int]] = []
        for letter in self.letters:
            if runs and runs[-1][0] == letter:
                runs[-1] = (letter, runs[-1][1] + 1)
            else:
                runs.append((letter, 1))
        return runs

    def __str__(self) -> str:
        return " ".join(self.letters)


@dataclass(frozen=True)
class Block:
    """One LD-block: a letter taken at >= 2 strictly increasing positions"""
    letter: str
    positions: Tuple[int, ...]

    def __post_init__(self):
        positions = tuple(self.positions)
        object.__setattr__(self, "positions", positions)
        if len(positions) < 2:
            raise InputError(f"block {self.letter!r} needs at least 2 positions, got {len(positions)}")
        if positions[0] < 1:
            raise InputError(f"block {self.letter!r} has non-positive position {positions[0]}")
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise InputError(f"block {self.letter!r} positions are not strictly increasing")

    @classmethod
    def certified(cls, letter: str, positions: Tuple[int, ...]) -> "Block":
        """Build without the checks; the caller runs validate_lds on the result"""
        block = object.__new__(cls)
        object.__setattr__(block, "letter", letter)
        object.__setattr__(block, "positions", positions)
        return block

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def start(self) -> int:
        return self.positions[0]

    @property
    def end(self) -> int:
        return self.positions[-1]

    def __str__(self) -> str:
        return f"{self.letter}^{len(self.positions)}@{self.positions}"


@dataclass(frozen=True)
class LDSubsequence:
    """
    Candidate letter-duplicated subsequence x1^d1 ... xk^dk.

    Construction does not check the cross-block invariants; that is
    validate_lds's job, which must be able to reject a bad candidate.
    """
    blocks: Tuple[Block, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    @property
    def length(self) -> int:
        """Total number of letters, sum of block sizes"""
        return sum(len(b) for b in self.blocks)

    def letters(self) -> List[str]:
        """The subsequence itself, one entry per kept position"""
        return [b.letter for b in self.blocks for _ in b.positions]

    def word(self, separator: str = "") -> str:
        return separator.join(self.letters())


@dataclass(frozen=True)
class GeneralizedLDSeq:
    """Blocks of size 2 or 3 whose neighbours may share a letter"""
    blocks: Tuple[Block, ...] = field(default_factory=tuple)

    def __post_init__(self):
        blocks = tuple(self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for block in blocks:
            if len(block) not in (2, 3):
                raise InputError(
                    f"generalized block {block.letter!r} has size {len(block)}, expected 2 or 3"
                )

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        return sum(len(b) for b in self.blocks)
