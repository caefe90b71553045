"""
CLI
One module per command group; each exposes register(subparsers)
"""
from ldseq.cli import feasibility, llds, oracle, reduce, twosat

COMMAND_MODULES = (llds, feasibility, twosat, reduce, oracle)

__all__ = ["COMMAND_MODULES"]
