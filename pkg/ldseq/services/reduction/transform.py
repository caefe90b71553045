"""
SAT Shape Transform
Rewrites a <=3-literal CNF into the (<=2,1,<=3) shape and classifies variables
"""
import logging
from typing import Dict, List, Tuple

from ldseq.exceptions import InputError
from ldseq.models.cnf import CnfFormula, Lit
from ldseq.models.gadget import ShapeReport, VariableShape

logger = logging.getLogger(__name__)


def classify_shape(phi: CnfFormula) -> ShapeReport:
    """Positive and negative occurrence counts for every variable 1..var_count"""
    positive = [0] * (phi.var_count + 1)
    negative = [0] * (phi.var_count + 1)
    for clause in phi.clauses:
        for lit in clause:
            if lit.positive:
                positive[lit.var] += 1
            else:
                negative[lit.var] += 1
    return ShapeReport(
        tuple(VariableShape(v, positive[v], negative[v]) for v in range(1, phi.var_count + 1))
    )


def to_le2_1_le3_sat(phi: CnfFormula) -> CnfFormula:
    """
    Equisatisfiable formula where every used variable is (1,1) or (2,1).

    Per variable x with p positive and q negative literals:
      (1,1), (2,1)  kept as is
      (1,2)         fresh z: ~x becomes z, x becomes ~z
      p + q >= 4    fresh y_1..y_k replace the k literals (reading order),
                    with z_j = y_j for a positive literal and ~y_j otherwise,
                    plus the cycle (z_j | ~z_{j+1}) for j < k and (z_k | ~z_1)
    A unit clause (l) first becomes (l | w) and (l | ~w) with a fresh w, so
    every output clause has 2 or 3 literals.
    Fresh variables are appended after var_count: padding variables in clause
    order, then replacements in order of the original variable index;
    replaced variables stay declared but unused.
    A used variable with fewer than 4 literals that lacks a polarity is
    rejected.
    """
    for clause in phi.clauses:
        if len(clause) > 3:
            raise InputError(f"clause {clause} has more than 3 literals")

    clauses: List[List[Lit]] = []
    next_var = phi.var_count + 1
    for clause in phi.clauses:
        if len(clause) == 1:
            clauses.append([clause[0], Lit(next_var, True)])
            clauses.append([clause[0], Lit(next_var, False)])
            next_var += 1
        else:
            clauses.append(list(clause))

    shape = classify_shape(CnfFormula(next_var - 1, tuple(tuple(c) for c in clauses)))
    extra: List[Tuple[Lit, ...]] = []

    for entry in shape.variables:
        p, q = entry.positive, entry.negative
        total = p + q
        if total == 0 or (p, q) in ((1, 1), (2, 1)):
            continue
        sites = [
            (ci, li)
            for ci, clause in enumerate(clauses)
            for li, lit in enumerate(clause)
            if lit.var == entry.var
        ]
        if total <= 3:
            if (p, q) != (1, 2):
                raise InputError(
                    f"variable x{entry.var} occurs {p} times positively and {q} times negatively; "
                    "both polarities are required"
                )
            z = next_var
            next_var += 1
            for ci, li in sites:
                clauses[ci][li] = Lit(z, not clauses[ci][li].positive)
            continue

        zs: List[Lit] = []
        for ci, li in sites:
            y = next_var
            next_var += 1
            zs.append(Lit(y, clauses[ci][li].positive))
            clauses[ci][li] = Lit(y, True)
        for j in range(total):
            extra.append((zs[j], -zs[(j + 1) % total]))

    result = CnfFormula(next_var - 1, tuple(tuple(c) for c in clauses) + tuple(extra))
    logger.debug(
        "shape transform",
        extra={"vars_in": phi.var_count, "vars_out": result.var_count, "clauses_out": result.clause_count},
    )
    return result


def occurrence_roles(phi: CnfFormula) -> Dict[int, Tuple[List[int], List[int]]]:
    """var -> (clauses with the positive literal, clauses with the negative one), ascending"""
    roles: Dict[int, Tuple[List[int], List[int]]] = {v: ([], []) for v in range(1, phi.var_count + 1)}
    for index, clause in enumerate(phi.clauses, 1):
        for lit in clause:
            roles[lit.var][0 if lit.positive else 1].append(index)
    return roles
