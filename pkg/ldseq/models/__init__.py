"""
Domain Models
Immutable types shared by every solver
"""
from ldseq.models.cnf import CnfFormula, Lit, TwoSatInstance, TwoSatResult
from ldseq.models.feasibility import (
    ApproxConfig,
    ApproxResult,
    CandidateModel,
    FeasibilityResult,
    ImmediatelyInfeasible,
    Interval,
)
from ldseq.models.gadget import GadgetLayout, ShapeKind, ShapeReport, VariableGadget, VariableShape
from ldseq.models.oracle import OracleBudget
from ldseq.models.sequence import Block, GeneralizedLDSeq, LDSubsequence, Sequence
from ldseq.models.tables import Choice, LldsTable, WeightedTables
from ldseq.models.weights import WeightTable

# Export all models
__all__ = [
    "ApproxConfig",
    "ApproxResult",
    "Block",
    "CandidateModel",
    "Choice",
    "CnfFormula",
    "FeasibilityResult",
    "GadgetLayout",
    "GeneralizedLDSeq",
    "ImmediatelyInfeasible",
    "Interval",
    "LDSubsequence",
    "Lit",
    "LldsTable",
    "OracleBudget",
    "Sequence",
    "ShapeKind",
    "ShapeReport",
    "TwoSatInstance",
    "TwoSatResult",
    "VariableGadget",
    "VariableShape",
    "WeightTable",
    "WeightedTables",
]
