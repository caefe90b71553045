"""
Report Schemas
JSON documents printed by the solving commands (--json)
"""
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from ldseq.schemas.solution import BlockSchema


class RunReport(BaseModel):
    """Fields shared by every command report"""
    command: str
    input_digest: str = Field(..., min_length=64, max_length=64)
    wall_time: float = Field(..., ge=0)


class LldsReport(RunReport):
    length: int = Field(..., ge=0)
    blocks: List[BlockSchema] = []


class WeightedReport(RunReport):
    """value is an integer, or 'p/q' for a non-integral optimum"""
    value: Union[int, str]
    blocks: List[BlockSchema] = []


class FeasibilityReport(RunReport):
    feasible: bool
    reason: Optional[str] = None
    blocks: List[BlockSchema] = []


class ApproxReport(RunReport):
    feasible: bool
    depth: int = Field(..., ge=0)
    value: Optional[int] = None
    three_blocks: List[str] = []
    sets_tried: int = 0
    blocks: List[BlockSchema] = []


class TwoSatReport(RunReport):
    satisfiable: bool
    assignment: Optional[Dict[int, bool]] = None


class OracleReport(RunReport):
    """feasible is False for an infeasible LLDS+/FT instance or an UNSAT formula"""
    oracle: str
    feasible: bool
    value: Optional[Union[int, str]] = None
    blocks: List[BlockSchema] = []


class AssignmentReport(RunReport):
    assignment: Dict[int, bool]
    satisfies: Optional[bool] = None
