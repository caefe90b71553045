"""
LLDS Commands
`llds` and `wlds`: longest and maximum-weight LD-subsequences
"""
import argparse
import logging

from ldseq.cli.dependencies import add_sequence_arguments, digest, emit, load_sequence, load_weights, timed
from ldseq.config import Settings
from ldseq.schemas.report import LldsReport, WeightedReport
from ldseq.schemas.solution import blocks_schema
from ldseq.services.llds import compute_llds
from ldseq.services.weighted import compute_weighted_lds
from ldseq.utils.formats import format_rational, format_solution

logger = logging.getLogger(__name__)


def run_llds(args: argparse.Namespace, settings: Settings) -> int:
    """Print L(n) and one optimal witness"""
    s, data = load_sequence(args.file, args.chars)
    with timed() as watch:
        length, solution = compute_llds(s)
    logger.info("llds finished", extra={"n": len(s), "length": length, "seconds": watch.elapsed})

    report = LldsReport(
        command="llds",
        input_digest=digest(data),
        wall_time=watch.elapsed,
        length=length,
        blocks=blocks_schema(solution),
    )
    emit([str(length), format_solution(solution)], report, args.json)
    return 0


def run_wlds(args: argparse.Namespace, settings: Settings) -> int:
    """Print the optimal total weight and a witness"""
    s, data = load_sequence(args.file, args.chars)
    wt, weight_data = load_weights(args.weights)
    with timed() as watch:
        value, solution = compute_weighted_lds(s, wt)
    logger.info("wlds finished", extra={"n": len(s), "value": str(value), "seconds": watch.elapsed})

    report = WeightedReport(
        command="wlds",
        input_digest=digest(data, weight_data),
        wall_time=watch.elapsed,
        value=format_rational(value),
        blocks=blocks_schema(solution),
    )
    emit([str(format_rational(value)), format_solution(solution)], report, args.json)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("llds", help="longest letter-duplicated subsequence, O(n)")
    add_sequence_arguments(parser)
    parser.set_defaults(handler=run_llds)

    parser = subparsers.add_parser("wlds", help="maximum-weight letter-duplicated subsequence, O(n^2)")
    add_sequence_arguments(parser)
    parser.add_argument("--weights", required=True, help="weight table (letter<TAB>length<TAB>weight)")
    parser.set_defaults(handler=run_wlds)
