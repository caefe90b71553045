"""
Layout Schemas
JSON sidecar describing a generated gadget sequence
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ldseq.models.gadget import GadgetLayout, ShapeKind, VariableGadget
from ldseq.models.sequence import Sequence


class GadgetSchema(BaseModel):
    """One variable's L_i region with its clause roles"""
    var: int = Field(..., ge=1)
    kind: ShapeKind
    j: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    ell: Optional[int] = None
    start: int = Field(..., ge=1)
    end: int = Field(..., ge=1)


class GadgetLayoutSchema(BaseModel):
    """Everything extract needs: the sequence itself, separators and gadgets"""
    var_count: int = Field(..., ge=0)
    clause_count: int = Field(..., ge=0)
    sequence: List[str]
    separators: List[Tuple[int, int]]
    gadgets: List[GadgetSchema]

    @classmethod
    def from_layout(cls, layout: GadgetLayout) -> "GadgetLayoutSchema":
        return cls(
            var_count=layout.var_count,
            clause_count=layout.clause_count,
            sequence=list(layout.sequence.letters),
            separators=[tuple(pair) for pair in layout.separators],
            gadgets=[
                GadgetSchema(
                    var=g.var, kind=g.kind, j=g.j, k=g.k, ell=g.ell, start=g.start, end=g.end
                )
                for g in layout.gadgets
            ],
        )

    def to_layout(self) -> GadgetLayout:
        return GadgetLayout(
            sequence=Sequence(tuple(self.sequence)),
            gadgets=tuple(VariableGadget(**g.model_dump()) for g in self.gadgets),
            separators=tuple(tuple(pair) for pair in self.separators),
            clause_count=self.clause_count,
            var_count=self.var_count,
        )
