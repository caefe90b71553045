"""
SAT Oracles
Exhaustive satisfiability checks for small CNF and 2-CNF instances
"""
from itertools import product
from typing import Dict, Iterator, List, Optional

from ldseq.models.cnf import CnfFormula, TwoSatInstance
from ldseq.models.oracle import OracleBudget


def satisfying_assignments(phi: CnfFormula, budget: Optional[OracleBudget] = None) -> Iterator[Dict[int, bool]]:
    """
    Every satisfying assignment, by backtracking over x1, x2, ... (False first).

    A clause is checked as soon as its highest variable is assigned.
    """
    budget = budget or OracleBudget()
    budget.check_vars(phi.var_count)
    closing: List[List[tuple]] = [[] for _ in range(phi.var_count + 1)]
    for clause in phi.clauses:
        closing[max(lit.var for lit in clause)].append(clause)

    assignment: Dict[int, bool] = {}

    def extend(var: int) -> Iterator[Dict[int, bool]]:
        if var > phi.var_count:
            yield dict(assignment)
            return
        for value in (False, True):
            assignment[var] = value
            if all(any(lit.holds(assignment) for lit in clause) for clause in closing[var]):
                yield from extend(var + 1)
        del assignment[var]

    return extend(1)


def brute_sat(phi: CnfFormula, budget: Optional[OracleBudget] = None) -> bool:
    return next(satisfying_assignments(phi, budget), None) is not None


def brute_2sat(inst: TwoSatInstance, budget: Optional[OracleBudget] = None) -> bool:
    """Truth-table check of a 2-CNF instance"""
    budget = budget or OracleBudget()
    budget.check_vars(inst.var_count)
    variables = range(1, inst.var_count + 1)
    return any(
        inst.evaluate(dict(zip(variables, values)))
        for values in product((False, True), repeat=inst.var_count)
    )
