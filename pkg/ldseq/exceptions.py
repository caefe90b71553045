"""
Exceptions
Every error the toolkit raises on purpose derives from LdseqError
"""


class LdseqError(Exception):
    """Base class for toolkit errors"""

    exit_code = 2


class InputError(LdseqError, ValueError):
    """Malformed or out-of-contract input (files, weights, formulas, sequences)"""


class BudgetExceeded(LdseqError):
    """An exhaustive oracle refused an instance larger than its budget"""

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"oracle budget exceeded: {what} = {size} > {cap}")


class InvariantViolation(LdseqError, RuntimeError):
    """A solver's self-check on its own output failed"""
