"""
Oracle Commands
`oracle {llds,lldsplus,ft,wlds,sat}`: exhaustive solvers for small inputs
"""
import argparse
import logging

from ldseq.cli.dependencies import budget, digest, emit, load_cnf, load_sequence, load_weights, timed
from ldseq.config import Settings
from ldseq.exceptions import InputError
from ldseq.schemas.report import OracleReport
from ldseq.schemas.solution import blocks_schema
from ldseq.services.oracle import brute_ft_witness, brute_llds, brute_llds_plus, brute_sat, brute_weighted
from ldseq.utils.formats import format_rational, format_solution

logger = logging.getLogger(__name__)

ORACLES = ("llds", "lldsplus", "ft", "wlds", "sat")


def _solve(args: argparse.Namespace, settings: Settings):
    """(feasible, value, solution, raw input chunks) for the selected oracle"""
    caps = budget(args, settings)
    if args.oracle == "sat":
        phi, data = load_cnf(args.file)
        return brute_sat(phi, caps), None, None, [data]

    s, data = load_sequence(args.file, args.chars)
    if args.oracle == "llds":
        length, solution = brute_llds(s, caps)
        return True, length, solution, [data]
    if args.oracle == "lldsplus":
        found = brute_llds_plus(s, caps)
        if found is None:
            return False, None, None, [data]
        return True, found[0], found[1], [data]
    if args.oracle == "ft":
        witness = brute_ft_witness(s, caps)
        return witness is not None, None, witness, [data]

    if not args.weights:
        raise InputError("oracle wlds needs --weights")
    wt, weight_data = load_weights(args.weights)
    return True, format_rational(brute_weighted(s, wt, caps)), None, [data, weight_data]


def run_oracle(args: argparse.Namespace, settings: Settings) -> int:
    """Exit 1 for an infeasible LLDS+/FT instance or an unsatisfiable formula"""
    with timed() as watch:
        feasible, value, solution, chunks = _solve(args, settings)
    logger.info("oracle finished", extra={"oracle": args.oracle, "feasible": feasible, "seconds": watch.elapsed})

    report = OracleReport(
        command=f"oracle {args.oracle}",
        input_digest=digest(*chunks),
        wall_time=watch.elapsed,
        oracle=args.oracle,
        feasible=feasible,
        value=value,
        blocks=blocks_schema(solution) if solution else [],
    )
    if args.oracle in ("sat", "ft", "lldsplus") and not feasible:
        emit(["unsatisfiable" if args.oracle == "sat" else "infeasible"], report, args.json)
        return 1
    lines = ["satisfiable" if args.oracle == "sat" else "feasible" if value is None else str(value)]
    if solution is not None:
        lines.append(format_solution(solution))
    emit(lines, report, args.json)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="exhaustive reference solvers (small inputs only)")
    parser.add_argument("oracle", choices=ORACLES)
    parser.add_argument("file", help="sequence file, or DIMACS CNF for 'sat'")
    parser.add_argument("--weights", help="weight table for 'wlds'")
    parser.add_argument("--chars", action="store_true", help="every character is one letter")
    parser.add_argument("--max-n", type=int, default=None, help="sequence length cap")
    parser.add_argument("--max-vars", type=int, default=None, help="variable cap for 'sat'")
    parser.add_argument("--json", action="store_true", help="print a JSON report")
    parser.set_defaults(handler=run_oracle)
