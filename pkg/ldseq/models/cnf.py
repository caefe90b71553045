"""
CNF Models
Literals, CNF formulas and 2-SAT instances shared by the reduction and feasibility code
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple

from ldseq.exceptions import InputError


class Lit(NamedTuple):
    """Literal: variable index (1-based) with polarity"""
    var: int
    positive: bool = True

    def __neg__(self) -> "Lit":
        return Lit(self.var, not self.positive)

    def holds(self, assignment: Mapping[int, bool]) -> bool:
        return assignment[self.var] == self.positive

    def to_dimacs(self) -> int:
        return self.var if self.positive else -self.var

    @classmethod
    def from_dimacs(cls, value: int) -> "Lit":
        if value == 0:
            raise InputError("literal 0 is not allowed")
        return cls(abs(value), value > 0)

    def __str__(self) -> str:
        return f"x{self.var}" if self.positive else f"~x{self.var}"


Clause = Tuple[Lit, ...]


@dataclass(frozen=True)
class CnfFormula:
    """
    Conjunction of clauses over variables 1..var_count.

    A clause may not mention a variable twice, neither as a repeated literal
    nor as a tautology.
    """
    var_count: int
    clauses: Tuple[Clause, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.var_count < 0:
            raise InputError(f"var_count must be non-negative, got {self.var_count}")
        clauses = tuple(tuple(Lit(*lit) for lit in clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for index, clause in enumerate(clauses, 1):
            if not clause:
                raise InputError(f"clause {index} is empty")
            seen = set()
            for lit in clause:
                if lit.var < 1 or lit.var > self.var_count:
                    raise InputError(f"clause {index}: variable {lit.var} outside [1, {self.var_count}]")
                if lit.var in seen:
                    kind = "tautological" if -lit in clause else "repeats a literal"
                    raise InputError(f"clause {index} {kind} (variable x{lit.var})")
                seen.add(lit.var)

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        """True iff every clause has a literal that holds"""
        return all(any(lit.holds(assignment) for lit in clause) for clause in self.clauses)

    def occurrences(self, var: int) -> List[Tuple[int, Lit]]:
        """(1-based clause index, literal) for every literal of var, in reading order"""
        return [
            (index, lit)
            for index, clause in enumerate(self.clauses, 1)
            for lit in clause
            if lit.var == var
        ]

    def __str__(self) -> str:
        return " & ".join("(" + " | ".join(str(l) for l in c) + ")" for c in self.clauses)


@dataclass(frozen=True)
class TwoSatInstance:
    """2-CNF; a unit clause is written as (lit, lit). Zero variables is the empty, satisfiable instance"""
    var_count: int
    clauses: Tuple[Tuple[Lit, Lit], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.var_count < 0:
            raise InputError(f"var_count must be non-negative, got {self.var_count}")
        clauses = tuple((Lit(*a), Lit(*b)) for a, b in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for a, b in clauses:
            for lit in (a, b):
                if lit.var < 1 or lit.var > self.var_count:
                    raise InputError(f"variable {lit.var} outside [1, {self.var_count}]")

    @classmethod
    def from_clauses(cls, var_count: int, clauses: Iterable[Tuple[Lit, ...]]) -> "TwoSatInstance":
        """Accept 1- or 2-literal clauses, padding units to (lit, lit)"""
        pairs = []
        for clause in clauses:
            if len(clause) == 1:
                pairs.append((clause[0], clause[0]))
            elif len(clause) == 2:
                pairs.append((clause[0], clause[1]))
            else:
                raise InputError(f"2-SAT clause must have 1 or 2 literals, got {len(clause)}")
        return cls(var_count, tuple(pairs))

    def evaluate(self, assignment: Mapping[int, bool]) -> bool:
        return all(a.holds(assignment) or b.holds(assignment) for a, b in self.clauses)


@dataclass(frozen=True)
class TwoSatResult:
    """Satisfiable with an assignment (var -> value), or unsatisfiable with none"""
    satisfiable: bool
    assignment: Optional[Dict[int, bool]] = None
