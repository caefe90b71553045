"""
CLI Dependencies
Shared input loading, digests and output helpers for the command modules
"""
import argparse
import hashlib
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel

from ldseq.config import Settings
from ldseq.exceptions import InputError
from ldseq.models.cnf import CnfFormula, TwoSatInstance
from ldseq.models.oracle import OracleBudget
from ldseq.models.sequence import Sequence
from ldseq.models.weights import WeightTable
from ldseq.services.sequence import parse_sequence
from ldseq.utils.formats import parse_2sat_dimacs, parse_dimacs, parse_weights


def read_bytes(path: str) -> bytes:
    """Contents of `path`, or stdin for '-'"""
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def decode(data: bytes, path: str) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text") from None


def digest(*chunks: bytes) -> str:
    """SHA-256 hex over the raw input bytes"""
    h = hashlib.sha256()
    for chunk in chunks:
        h.update(chunk)
    return h.hexdigest()


def load_sequence(path: str, chars: bool = False) -> Tuple[Sequence, bytes]:
    data = read_bytes(path)
    return parse_sequence(decode(data, path), chars=chars), data


def load_weights(path: str) -> Tuple[WeightTable, bytes]:
    data = read_bytes(path)
    return parse_weights(decode(data, path)), data


def load_cnf(path: str) -> Tuple[CnfFormula, bytes]:
    data = read_bytes(path)
    return parse_dimacs(decode(data, path)), data


def load_2sat(path: str) -> Tuple[TwoSatInstance, bytes]:
    data = read_bytes(path)
    return parse_2sat_dimacs(decode(data, path)), data


def write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror or exc}") from None


def budget(args: argparse.Namespace, settings: Settings) -> OracleBudget:
    """Settings caps with --max-n / --max-vars overrides"""
    base = OracleBudget.from_settings(settings)
    return OracleBudget(
        max_n=args.max_n or base.max_n,
        max_weighted_n=args.max_n or base.max_weighted_n,
        max_vars=args.max_vars or base.max_vars,
    )


class Stopwatch:
    elapsed: float = 0.0


@contextmanager
def timed() -> Iterator[Stopwatch]:
    watch = Stopwatch()
    start = time.perf_counter()
    try:
        yield watch
    finally:
        watch.elapsed = time.perf_counter() - start


def emit(lines: List[str], report: Optional[BaseModel], as_json: bool) -> None:
    """Print the JSON report or the plain-text lines on stdout"""
    if as_json and report is not None:
        print(report.model_dump_json())
        return
    for line in lines:
        if line:
            print(line)


def add_sequence_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="sequence file ('-' for stdin)")
    parser.add_argument("--chars", action="store_true", help="every character is one letter")
    parser.add_argument("--json", action="store_true", help="print a JSON report")
