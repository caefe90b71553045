"""
Generalized Decomposition
Splitting LD-blocks into 2/3-blocks and merging them back
"""
from typing import List

from ldseq.exceptions import InputError
from ldseq.models.sequence import Block, GeneralizedLDSeq, LDSubsequence


def split_sizes(length: int) -> List[int]:
    """Greedy 2s with one trailing 3 when length is odd: 7 -> [2, 2, 3]"""
    if length < 2:
        raise InputError(f"cannot split a block of size {length}")
    if length % 2 == 0:
        return [2] * (length // 2)
    return [2] * ((length - 3) // 2) + [3]


def decompose_to_generalized(lds: LDSubsequence) -> GeneralizedLDSeq:
    """Split every block left to right into consecutive sub-blocks of size 2 or 3"""
    pieces = []
    for block in lds.blocks:
        offset = 0
        for size in split_sizes(len(block)):
            pieces.append(Block(block.letter, block.positions[offset:offset + size]))
            offset += size
    return GeneralizedLDSeq(tuple(pieces))


def merge_generalized(g: GeneralizedLDSeq) -> LDSubsequence:
    """Merge maximal runs of same-letter neighbouring blocks into single blocks"""
    merged = []
    run_letter = None
    run_positions: List[int] = []
    last = 0
    for block in g.blocks:
        if block.start <= last:
            raise InputError(f"generalized blocks overlap at position {block.start}")
        last = block.end
        if block.letter == run_letter:
            run_positions.extend(block.positions)
            continue
        if run_letter is not None:
            merged.append(Block(run_letter, tuple(run_positions)))
        run_letter = block.letter
        run_positions = list(block.positions)
    if run_letter is not None:
        merged.append(Block(run_letter, tuple(run_positions)))
    return LDSubsequence(tuple(merged))
