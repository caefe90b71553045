"""
Reduction Commands
`reduce 3sat-to-213sat`, `reduce sat-to-seq` and `reduce extract`
"""
import argparse
import logging

from ldseq.cli.dependencies import decode, digest, emit, load_cnf, read_bytes, timed, write_text
from ldseq.config import Settings
from ldseq.exceptions import InputError
from ldseq.schemas.layout import GadgetLayoutSchema
from ldseq.schemas.report import AssignmentReport
from ldseq.services.reduction import (
    build_lldsplus_instance,
    canonical_solution,
    classify_shape,
    expected_solution_length,
    extract_assignment,
    to_le2_1_le3_sat,
)
from ldseq.services.sequence import serialize_sequence
from ldseq.utils.formats import format_assignment, format_dimacs, format_solution, parse_assignment, parse_solution

logger = logging.getLogger(__name__)


def run_to_shape(args: argparse.Namespace, settings: Settings) -> int:
    """Rewrite a <=3-literal CNF into (<=2,1,<=3) shape, DIMACS on stdout"""
    phi, _ = load_cnf(args.file)
    result = to_le2_1_le3_sat(phi)
    print(format_dimacs(result), end="")
    return 0


def run_to_sequence(args: argparse.Namespace, settings: Settings) -> int:
    """Gadget sequence on stdout, layout sidecar to --layout"""
    if (args.assignment is None) != (args.solution is None):
        raise InputError("--assignment and --solution go together")
    phi, _ = load_cnf(args.file)
    shape = classify_shape(phi)
    layout = build_lldsplus_instance(phi, shape)
    write_text(args.layout, GadgetLayoutSchema.from_layout(layout).model_dump_json(indent=2) + "\n")

    if args.assignment is not None:
        data = read_bytes(args.assignment)
        assignment = parse_assignment(decode(data, args.assignment))
        expected = expected_solution_length(assignment, shape)
        solution = canonical_solution(layout, assignment)
        write_text(args.solution, f"# length {solution.length}, expected {expected}\n{format_solution(solution)}\n")
        logger.info("canonical solution written", extra={"length": solution.length, "expected": expected})

    print(serialize_sequence(layout.sequence))
    return 0


def run_extract(args: argparse.Namespace, settings: Settings) -> int:
    """Assignment read off a solution of a generated sequence; with --cnf, exit 1 unless it satisfies"""
    layout_data = read_bytes(args.layout)
    solution_data = read_bytes(args.solution)
    layout = GadgetLayoutSchema.model_validate_json(layout_data).to_layout()
    solution = parse_solution(decode(solution_data, args.solution))
    with timed() as watch:
        assignment = extract_assignment(layout, solution)

    satisfies = None
    chunks = [layout_data, solution_data]
    if args.cnf:
        phi, cnf_data = load_cnf(args.cnf)
        chunks.append(cnf_data)
        satisfies = phi.evaluate(assignment)

    report = AssignmentReport(
        command="reduce extract",
        input_digest=digest(*chunks),
        wall_time=watch.elapsed,
        assignment=assignment,
        satisfies=satisfies,
    )
    emit([format_assignment(assignment)], report, args.json)
    return 1 if satisfies is False else 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("reduce", help="hardness-reduction instance generators")
    commands = parser.add_subparsers(dest="reduction", required=True, metavar="{3sat-to-213sat,sat-to-seq,extract}")

    sub = commands.add_parser("3sat-to-213sat", help="rewrite a CNF into (<=2,1,<=3) shape")
    sub.add_argument("file", help="DIMACS CNF, clauses of at most 3 literals")
    sub.set_defaults(handler=run_to_shape)

    sub = commands.add_parser("sat-to-seq", help="build the gadget sequence of a shaped CNF")
    sub.add_argument("file", help="DIMACS CNF in (<=2,1,<=3) shape")
    sub.add_argument("--layout", required=True, help="where to write the JSON layout sidecar")
    sub.add_argument("--assignment", help="signed-literal assignment to build the canonical solution from")
    sub.add_argument("--solution", help="where to write the canonical solution")
    sub.set_defaults(handler=run_to_sequence)

    sub = commands.add_parser("extract", help="read an assignment off a solution")
    sub.add_argument("layout", help="JSON layout sidecar")
    sub.add_argument("solution", help="solution file, one block per line")
    sub.add_argument("--cnf", help="formula to check the assignment against")
    sub.add_argument("--json", action="store_true", help="print a JSON report")
    sub.set_defaults(handler=run_extract)
