"""
2-SAT Solver
Implication graph plus Tarjan strongly connected components, linear time
"""
import logging
from typing import List

from ldseq.exceptions import InvariantViolation
from ldseq.models.cnf import Lit, TwoSatInstance, TwoSatResult

logger = logging.getLogger(__name__)


def _vertex(lit: Lit, var_count: int) -> int:
    """x_v -> v-1, ~x_v -> var_count + v-1 (variables first, then negations)"""
    return lit.var - 1 if lit.positive else var_count + lit.var - 1


def implication_graph(inst: TwoSatInstance) -> List[List[int]]:
    """Clause (a | b) contributes ~a -> b and ~b -> a, in clause order"""
    size = 2 * inst.var_count
    adjacency: List[List[int]] = [[] for _ in range(size)]
    for a, b in inst.clauses:
        adjacency[_vertex(-a, inst.var_count)].append(_vertex(b, inst.var_count))
        adjacency[_vertex(-b, inst.var_count)].append(_vertex(a, inst.var_count))
    return adjacency


def strongly_connected_components(adjacency: List[List[int]]) -> List[int]:
    """
    Iterative Tarjan; roots are visited in ascending vertex order.

    Component ids come out in reverse topological order (sinks first).
    """
    size = len(adjacency)
    index = [-1] * size
    low = [0] * size
    on_stack = [False] * size
    component = [-1] * size
    stack: List[int] = []
    counter = 0
    components = 0

    for root in range(size):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, edge = work[-1]
            if edge < len(adjacency[v]):
                work[-1] = (v, edge + 1)
                w = adjacency[v][edge]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component[w] = components
                    if w == v:
                        break
                components += 1
    return component


def solve_2sat(inst: TwoSatInstance) -> TwoSatResult:
    """
    Decide a 2-CNF instance.

    Unsatisfiable iff some x_v and ~x_v share a component; otherwise x_v is
    true iff its component comes later in topological order than ~x_v's,
    i.e. has the smaller Tarjan id. The assignment is re-checked against
    every clause before it is returned.
    """
    component = strongly_connected_components(implication_graph(inst))
    V = inst.var_count
    assignment = {}
    for v in range(1, V + 1):
        positive, negative = component[v - 1], component[V + v - 1]
        if positive == negative:
            logger.debug("2-sat unsatisfiable", extra={"vars": V, "clauses": len(inst.clauses), "var": v})
            return TwoSatResult(satisfiable=False)
        assignment[v] = positive < negative

    if not inst.evaluate(assignment):
        raise InvariantViolation("2-SAT assignment falsifies a clause")
    logger.debug("2-sat satisfiable", extra={"vars": V, "clauses": len(inst.clauses)})
    return TwoSatResult(satisfiable=True, assignment=assignment)
