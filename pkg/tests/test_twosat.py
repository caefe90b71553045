"""
Tests for the 2-SAT solver
"""
import pytest

from ldseq.exceptions import InputError
from ldseq.models.cnf import Lit, TwoSatInstance
from ldseq.services.oracle import brute_2sat
from ldseq.services.twosat import implication_graph, solve_2sat, strongly_connected_components
from ldseq.utils.formats import parse_2sat_dimacs

x = lambda v: Lit(v, True)  # noqa: E731
nx = lambda v: Lit(v, False)  # noqa: E731


def test_unique_model():
    inst = TwoSatInstance(2, ((x(1), x(2)), (nx(1), x(2)), (x(1), nx(2))))
    result = solve_2sat(inst)
    assert result.satisfiable
    assert result.assignment == {1: True, 2: True}


def test_contradicting_units():
    inst = TwoSatInstance.from_clauses(1, [(x(1),), (nx(1),)])
    result = solve_2sat(inst)
    assert not result.satisfiable
    assert result.assignment is None


def test_free_variables_get_values():
    result = solve_2sat(TwoSatInstance(3, ((x(1), x(1)),)))
    assert result.satisfiable
    assert set(result.assignment) == {1, 2, 3}
    assert result.assignment[1] is True


def test_empty_instance():
    assert solve_2sat(TwoSatInstance(0, ())).satisfiable


def test_rejects_out_of_range_variable():
    with pytest.raises(InputError):
        TwoSatInstance(1, ((x(1), x(2)),))


def test_from_clauses_rejects_long_clause():
    with pytest.raises(InputError):
        TwoSatInstance.from_clauses(3, [(x(1), x(2), x(3))])


def test_implication_edges():
    graph = implication_graph(TwoSatInstance(2, ((x(1), x(2)),)))
    # vertex v-1 is x_v, V+v-1 is ~x_v; (x1 | x2) gives ~x1 -> x2 and ~x2 -> x1
    assert 1 in graph[2]
    assert 0 in graph[3]


def test_components_of_a_cycle():
    comp = strongly_connected_components([[1], [2], [0], []])
    assert comp[0] == comp[1] == comp[2] != comp[3]


def test_implication_cycle_through_both_polarities_is_unsat():
    clauses = ((x(1), x(2)), (x(1), nx(2)), (nx(1), x(3)), (nx(1), nx(3)))
    assert not solve_2sat(TwoSatInstance(3, clauses)).satisfiable


def test_dimacs_reader(fixtures_dir):
    inst = parse_2sat_dimacs((fixtures_dir / "twosat_sat.cnf").read_text())
    assert inst.var_count == 2
    assert len(inst.clauses) == 3
    with pytest.raises(InputError, match="at most 2"):
        parse_2sat_dimacs("p cnf 3 1\n1 2 3 0\n")


def test_agrees_with_truth_table(rng):
    for _ in range(2000):
        var_count = rng.randint(1, 8)
        clauses = []
        for _ in range(rng.randint(0, 14)):
            a = Lit(rng.randint(1, var_count), rng.random() < 0.5)
            b = Lit(rng.randint(1, var_count), rng.random() < 0.5)
            clauses.append((a, b))
        inst = TwoSatInstance(var_count, tuple(clauses))
        result = solve_2sat(inst)
        assert result.satisfiable == brute_2sat(inst), inst
        if result.satisfiable:
            assert inst.evaluate(result.assignment)
