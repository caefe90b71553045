"""
Oracle Models
Budgets for the exhaustive solvers
"""
from dataclasses import dataclass

from ldseq.config import Settings, get_settings
from ldseq.exceptions import BudgetExceeded, InputError


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps: an instance over a cap is refused, never truncated"""
    max_n: int = 15
    max_weighted_n: int = 12
    max_vars: int = 20

    def __post_init__(self):
        for name in ("max_n", "max_weighted_n", "max_vars"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive")

    @classmethod
    def from_settings(cls, settings: Settings = None) -> "OracleBudget":
        settings = settings or get_settings()
        return cls(
            max_n=settings.oracle_max_n,
            max_weighted_n=settings.oracle_max_weighted_n,
            max_vars=settings.oracle_max_vars,
        )

    def check_n(self, n: int) -> None:
        if n > self.max_n:
            raise BudgetExceeded("n", n, self.max_n)

    def check_weighted_n(self, n: int) -> None:
        if n > self.max_weighted_n:
            raise BudgetExceeded("n", n, self.max_weighted_n)

    def check_vars(self, var_count: int) -> None:
        if var_count > self.max_vars:
            raise BudgetExceeded("variables", var_count, self.max_vars)
