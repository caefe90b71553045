"""
Schemas
Pydantic models for every JSON artifact the CLI reads or writes
"""
from ldseq.schemas.layout import GadgetLayoutSchema, GadgetSchema
from ldseq.schemas.report import (
    ApproxReport,
    AssignmentReport,
    FeasibilityReport,
    LldsReport,
    OracleReport,
    RunReport,
    TwoSatReport,
    WeightedReport,
)
from ldseq.schemas.solution import BlockSchema, blocks_schema, solution_from_schema

__all__ = [
    "ApproxReport",
    "AssignmentReport",
    "BlockSchema",
    "FeasibilityReport",
    "GadgetLayoutSchema",
    "GadgetSchema",
    "LldsReport",
    "OracleReport",
    "RunReport",
    "TwoSatReport",
    "WeightedReport",
    "blocks_schema",
    "solution_from_schema",
]
