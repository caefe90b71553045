"""
Gadget Construction
SAT-to-sequence instances, their solution-length formula and assignment extraction
"""
import logging
from typing import Dict, List, Mapping, Optional

from ldseq.exceptions import InputError
from ldseq.models.cnf import CnfFormula
from ldseq.models.gadget import (
    GadgetLayout,
    ShapeKind,
    ShapeReport,
    VariableGadget,
    clause_symbol,
    separator_symbol,
)
from ldseq.models.sequence import Block, LDSubsequence, Sequence
from ldseq.services.reduction.transform import classify_shape, occurrence_roles
from ldseq.services.sequence import validate_lds

logger = logging.getLogger(__name__)

_GADGET_FACTS = {
    ShapeKind.TWO_ONE: "A C A B C B",
    ShapeKind.ONE_ONE: "A C C A",
}


def gadget_sequence(kind: ShapeKind) -> Sequence:
    """The abstract (2,1)- or (1,1)-sequence over A, B, C"""
    try:
        return Sequence(tuple(_GADGET_FACTS[ShapeKind(kind)].split()))
    except (KeyError, ValueError):
        raise InputError(f"no gadget sequence for {kind}") from None


def _require_shape(shape: ShapeReport) -> None:
    if not shape.is_valid:
        names = ", ".join(f"x{v}" for v in shape.out_of_shape)
        raise InputError(f"variables out of (<=2,1,<=3) shape: {names}")


def build_lldsplus_instance(phi: CnfFormula, shape: Optional[ShapeReport] = None) -> GadgetLayout:
    """
    S = g1 g1 L_1 g2 g2 ... L_n g_{n+1} g_{n+1} over the used variables in
    ascending order, with

        (1,1): L = F_j F_k F_k F_j          (x in F_j, ~x in F_k)
        (2,1): L = F_j F_l F_j F_k F_l F_k  (x in F_j, F_k with j < k, ~x in F_l)
    """
    for index, clause in enumerate(phi.clauses, 1):
        if not 2 <= len(clause) <= 3:
            raise InputError(f"clause {index} has {len(clause)} literals; the gadget needs 2 or 3")
    shape = shape or classify_shape(phi)
    _require_shape(shape)
    roles = occurrence_roles(phi)

    tokens: List[str] = []
    gadgets: List[VariableGadget] = []
    separators = []

    def separator(index: int) -> None:
        tokens.extend((separator_symbol(index),) * 2)
        separators.append((len(tokens) - 1, len(tokens)))

    index = 1
    for entry in shape.variables:
        if entry.kind is ShapeKind.UNUSED:
            continue
        separator(index)
        index += 1
        positive, negative = roles[entry.var]
        if entry.kind is ShapeKind.ONE_ONE:
            j, k, ell = positive[0], negative[0], None
            body = (j, k, k, j)
        else:
            (j, k), ell = positive, negative[0]
            body = (j, ell, j, k, ell, k)
        start = len(tokens) + 1
        tokens.extend(clause_symbol(c) for c in body)
        gadgets.append(VariableGadget(entry.var, entry.kind, j, k, ell, start, len(tokens)))
    separator(index)

    layout = GadgetLayout(
        sequence=Sequence(tuple(tokens)),
        gadgets=tuple(gadgets),
        separators=tuple(separators),
        clause_count=phi.clause_count,
        var_count=phi.var_count,
    )
    logger.debug("gadget instance built", extra={"gadgets": len(gadgets), "n": len(tokens)})
    return layout


def expected_solution_length(assignment: Mapping[int, bool], shape: ShapeReport) -> int:
    """2(n+1) + 4*K1 + 2*K2 + 2*J over the n used variables (K1/K2: true/false (2,1)-variables, J: (1,1))"""
    _require_shape(shape)
    n = k1 = k2 = j = 0
    for entry in shape.variables:
        if entry.kind is ShapeKind.UNUSED:
            continue
        if entry.var not in assignment:
            raise InputError(f"assignment has no value for x{entry.var}")
        n += 1
        if entry.kind is ShapeKind.ONE_ONE:
            j += 1
        elif assignment[entry.var]:
            k1 += 1
        else:
            k2 += 1
    return 2 * (n + 1) + 4 * k1 + 2 * k2 + 2 * j


def _pair(layout: GadgetLayout, gadget: VariableGadget, clause: int) -> Block:
    symbol = clause_symbol(clause)
    letters = layout.sequence.letters
    positions = tuple(
        p for p in range(gadget.start, gadget.end + 1) if letters[p - 1] == symbol
    )
    return Block(symbol, positions)


def canonical_solution(layout: GadgetLayout, assignment: Mapping[int, bool]) -> LDSubsequence:
    """
    The solution S' an assignment induces: every g pair, and per gadget the
    clause-strings of the literal the assignment makes true.
    """
    blocks: List[Block] = []
    for index, (first, second) in enumerate(layout.separators):
        blocks.append(Block(separator_symbol(index + 1), (first, second)))
        if index == len(layout.gadgets):
            break
        gadget = layout.gadgets[index]
        if gadget.var not in assignment:
            raise InputError(f"assignment has no value for x{gadget.var}")
        clauses = gadget.positive_clauses if assignment[gadget.var] else (gadget.negative_clause,)
        blocks.extend(_pair(layout, gadget, c) for c in clauses)
    return LDSubsequence(tuple(blocks))


def extract_assignment(layout: GadgetLayout, solution: LDSubsequence) -> Dict[int, bool]:
    """
    Read a truth assignment off a solution that keeps every g pair.

    Inside the region of variable x: keeping the clause-string of its
    negative literal means False, anything else (including nothing) True.
    Variables without a gadget default to True.
    """
    if not validate_lds(layout.sequence, solution):
        raise InputError("solution is not an LD-subsequence of the gadget sequence")
    kept = {b.letter for b in solution.blocks}
    missing = [
        separator_symbol(i) for i in range(1, len(layout.separators) + 1) if separator_symbol(i) not in kept
    ]
    if missing:
        raise InputError(f"solution drops separator pairs: {' '.join(missing)}")

    assignment = {v: True for v in range(1, layout.var_count + 1)}
    for gadget in layout.gadgets:
        negative = clause_symbol(gadget.negative_clause)
        inside = {b.letter for b in solution.blocks if gadget.start <= b.start and b.end <= gadget.end}
        assignment[gadget.var] = negative not in inside
    return assignment
