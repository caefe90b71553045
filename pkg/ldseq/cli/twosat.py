"""
2-SAT Command
`twosat`: decide a DIMACS formula whose clauses have at most two literals
"""
import argparse
import logging

from ldseq.cli.dependencies import digest, emit, load_2sat, timed
from ldseq.config import Settings
from ldseq.schemas.report import TwoSatReport
from ldseq.services.twosat import solve_2sat
from ldseq.utils.formats import format_assignment

logger = logging.getLogger(__name__)


def run_twosat(args: argparse.Namespace, settings: Settings) -> int:
    inst, data = load_2sat(args.file)
    with timed() as watch:
        result = solve_2sat(inst)
    logger.info("twosat finished", extra={"vars": inst.var_count, "sat": result.satisfiable})

    report = TwoSatReport(
        command="twosat",
        input_digest=digest(data),
        wall_time=watch.elapsed,
        satisfiable=result.satisfiable,
        assignment=result.assignment,
    )
    if result.satisfiable:
        emit(["s SATISFIABLE", "v " + format_assignment(result.assignment)], report, args.json)
        return 0
    emit(["s UNSATISFIABLE"], report, args.json)
    return 1


def register(subparsers) -> None:
    parser = subparsers.add_parser("twosat", help="2-SAT via strongly connected components")
    parser.add_argument("file", help="DIMACS CNF with 1- or 2-literal clauses")
    parser.add_argument("--json", action="store_true", help="print a JSON report")
    parser.set_defaults(handler=run_twosat)
