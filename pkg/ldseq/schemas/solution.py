"""
Solution Schemas
Pydantic models for LD-subsequence blocks in JSON output
"""
from typing import List

from pydantic import BaseModel, Field

from ldseq.models.sequence import Block, LDSubsequence


class BlockSchema(BaseModel):
    """One block: letter and its 1-based positions"""
    letter: str = Field(..., min_length=1)
    positions: List[int] = Field(..., min_length=2)

    @classmethod
    def from_block(cls, block: Block) -> "BlockSchema":
        return cls(letter=block.letter, positions=list(block.positions))

    def to_block(self) -> Block:
        return Block(self.letter, tuple(self.positions))


def blocks_schema(solution: LDSubsequence) -> List[BlockSchema]:
    return [BlockSchema.from_block(b) for b in solution.blocks]


def solution_from_schema(blocks: List[BlockSchema]) -> LDSubsequence:
    return LDSubsequence(tuple(b.to_block() for b in blocks))
