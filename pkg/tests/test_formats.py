"""
Tests for the text file formats and JSON schemas
"""
from fractions import Fraction

import pytest

from ldseq.exceptions import InputError
from ldseq.models.cnf import Lit
from ldseq.models.sequence import Block, LDSubsequence
from ldseq.schemas import GadgetLayoutSchema, LldsReport, OracleReport, TwoSatReport, WeightedReport
from ldseq.schemas.solution import blocks_schema, solution_from_schema
from ldseq.services.reduction import build_lldsplus_instance
from ldseq.utils.formats import (
    format_assignment,
    format_dimacs,
    format_rational,
    format_solution,
    format_weights,
    parse_assignment,
    parse_dimacs,
    parse_solution,
    parse_weights,
)

DIGEST = "0" * 64


class TestSolutionFormat:
    def test_one_block_per_line(self):
        sol = LDSubsequence((Block("a", (1, 3)), Block("b", (4, 5))))
        assert format_solution(sol) == "a 1 3\nb 4 5"
        assert parse_solution(format_solution(sol)) == sol

    def test_comments_and_blank_lines(self):
        assert len(parse_solution("# c\n\nF1 3 5\n")) == 1

    def test_bad_position(self):
        with pytest.raises(InputError, match="line 1"):
            parse_solution("a 1 x\n")


class TestWeightsFormat:
    def test_worked_table(self, fixtures_dir, worked_weights):
        assert parse_weights((fixtures_dir / "t1.tsv").read_text()) == worked_weights

    def test_rational_and_decimal(self):
        wt = parse_weights("a\t2\t1/3\nb\t2\t0.5\n")
        assert wt.weight("a", 2) == Fraction(1, 3)
        assert wt.weight("b", 2) == Fraction(1, 2)

    @pytest.mark.parametrize("text", ["a\t2\n", "a\ttwo\t3\n", "a\t2\tx\n", "a\t2\t1\na\t2\t2\n", "a\t2\t-1\n"])
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_weights(text)

    def test_write_then_read(self, worked_weights):
        assert parse_weights(format_weights(worked_weights)) == worked_weights

    def test_format_rational(self):
        assert format_rational(Fraction(36)) == 36
        assert format_rational(Fraction(3, 4)) == "3/4"


class TestDimacs:
    def test_worked_formula(self, fixtures_dir, worked_phi):
        phi = parse_dimacs((fixtures_dir / "phi.cnf").read_text())
        assert phi == worked_phi
        assert parse_dimacs(format_dimacs(phi)) == phi

    def test_clause_spanning_lines(self):
        phi = parse_dimacs("p cnf 3 1\n1 -2\n3 0\n")
        assert phi.clauses == ((Lit(1), Lit(2, False), Lit(3)),)

    @pytest.mark.parametrize(
        "text",
        ["1 2 0\n", "p cnf 2 2\n1 2 0\n", "p cnf 1 1\n2 0\n", "p cnf 2 1\n1 -1 0\n", "p dnf 1 1\n1 0\n"],
    )
    def test_rejects(self, text):
        with pytest.raises(InputError):
            parse_dimacs(text)


class TestAssignments:
    def test_round_trip(self, fixtures_dir):
        assignment = parse_assignment((fixtures_dir / "phi_assignment.txt").read_text())
        assert assignment == {1: True, 2: False, 3: False, 4: True, 5: False}
        assert format_assignment(assignment) == "1 -2 -3 4 -5 0"

    def test_duplicate_variable(self):
        with pytest.raises(InputError):
            parse_assignment("1 -1 0")


class TestSchemas:
    def test_report_json_round_trip(self):
        sol = LDSubsequence((Block("a", (1, 3)), Block("b", (4, 5))))
        report = LldsReport(command="llds", input_digest=DIGEST, wall_time=0.01, length=4, blocks=blocks_schema(sol))
        again = LldsReport.model_validate_json(report.model_dump_json())
        assert again == report
        assert solution_from_schema(again.blocks) == sol

    def test_field_order_is_stable(self):
        report = WeightedReport(command="wlds", input_digest=DIGEST, wall_time=0.0, value=36)
        assert list(report.model_dump()) == ["command", "input_digest", "wall_time", "value", "blocks"]

    def test_rational_value_kept_as_string(self):
        report = OracleReport(
            command="oracle wlds", input_digest=DIGEST, wall_time=0.0, oracle="wlds", feasible=True, value="7/2"
        )
        assert OracleReport.model_validate_json(report.model_dump_json()).value == "7/2"

    def test_assignment_keys_survive_json(self):
        report = TwoSatReport(command="twosat", input_digest=DIGEST, wall_time=0.0, satisfiable=True,
                              assignment={1: True, 2: False})
        assert TwoSatReport.model_validate_json(report.model_dump_json()) == report

    def test_layout_sidecar_round_trip(self, worked_phi):
        layout = build_lldsplus_instance(worked_phi)
        schema = GadgetLayoutSchema.from_layout(layout)
        assert GadgetLayoutSchema.model_validate_json(schema.model_dump_json()).to_layout() == layout
