"""
Feasibility Commands
`ft3` and `approx3` for sequences where no letter occurs more than 3 times
"""
import argparse
import logging

from ldseq.cli.dependencies import add_sequence_arguments, digest, emit, load_sequence, timed
from ldseq.config import Settings
from ldseq.models.feasibility import ApproxConfig
from ldseq.schemas.report import ApproxReport, FeasibilityReport
from ldseq.schemas.solution import blocks_schema
from ldseq.services.feasibility import approx_llds_plus_3, ft3
from ldseq.utils.formats import format_solution

logger = logging.getLogger(__name__)


def run_ft3(args: argparse.Namespace, settings: Settings) -> int:
    """Exit 0 with a covering witness, or 1 when none exists"""
    s, data = load_sequence(args.file, args.chars)
    with timed() as watch:
        result = ft3(s)
    logger.info("ft3 finished", extra={"n": len(s), "feasible": result.feasible, "seconds": watch.elapsed})

    report = FeasibilityReport(
        command="ft3",
        input_digest=digest(data),
        wall_time=watch.elapsed,
        feasible=result.feasible,
        reason=result.reason,
        blocks=blocks_schema(result.solution) if result.solution else [],
    )
    if result.feasible:
        emit(["feasible", format_solution(result.solution)], report, args.json)
        return 0
    emit([f"infeasible: {result.reason}"], report, args.json)
    return 1


def run_approx3(args: argparse.Namespace, settings: Settings) -> int:
    s, data = load_sequence(args.file, args.chars)
    depth = settings.approx_depth if args.depth is None else args.depth
    cfg = ApproxConfig(depth=depth, workers=settings.approx_workers)
    with timed() as watch:
        result = approx_llds_plus_3(s, cfg)
    logger.info(
        "approx3 finished",
        extra={"n": len(s), "value": result.value, "sets_tried": result.sets_tried, "seconds": watch.elapsed},
    )

    report = ApproxReport(
        command="approx3",
        input_digest=digest(data),
        wall_time=watch.elapsed,
        feasible=result.feasible,
        depth=depth,
        value=result.value if result.feasible else None,
        three_blocks=sorted(result.three_blocks),
        sets_tried=result.sets_tried,
        blocks=blocks_schema(result.solution) if result.solution else [],
    )
    if not result.feasible:
        emit(["infeasible"], report, args.json)
        return 1
    emit([str(result.value), format_solution(result.solution)], report, args.json)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser("ft3", help="FT(3): is there an LD-subsequence using every letter?")
    add_sequence_arguments(parser)
    parser.set_defaults(handler=run_ft3)

    parser = subparsers.add_parser("approx3", help="approximate LLDS+ for d <= 3")
    add_sequence_arguments(parser)
    parser.add_argument("--depth", type=int, default=None, help="max number of 3-blocks to enumerate")
    parser.set_defaults(handler=run_approx3)
