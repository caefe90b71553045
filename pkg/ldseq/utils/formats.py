"""
File Formats
Text readers and writers for solutions, weight tables and DIMACS CNF
"""
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from ldseq.exceptions import InputError
from ldseq.models.cnf import CnfFormula, Lit, TwoSatInstance
from ldseq.models.sequence import Block, LDSubsequence
from ldseq.models.weights import WeightTable


def _content_lines(text: str, comment: str = "#"):
    """(1-based line number, stripped line) for non-blank, non-comment lines"""
    for number, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith(comment):
            yield number, stripped


def _int(token: str, where: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"{where}: expected an integer, got {token!r}") from None


# ============================================================================
# SOLUTIONS
# ============================================================================

def format_solution(solution: LDSubsequence) -> str:
    """One block per line: `letter p1 p2 ...`"""
    return "\n".join(
        " ".join([block.letter, *map(str, block.positions)]) for block in solution.blocks
    )


def parse_solution(text: str) -> LDSubsequence:
    blocks = []
    for number, line in _content_lines(text):
        letter, *positions = line.split()
        blocks.append(Block(letter, tuple(_int(p, f"solution line {number}") for p in positions)))
    return LDSubsequence(tuple(blocks))


# ============================================================================
# WEIGHTS
# ============================================================================

def format_rational(value: Fraction) -> Union[int, str]:
    """Integral values stay integers, others become 'p/q'"""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_weights(text: str) -> WeightTable:
    """Lines `letter<TAB>length<TAB>weight`; weights may be integers, decimals or p/q"""
    table = {}
    for number, line in _content_lines(text):
        fields = line.split("\t") if "\t" in line else line.split()
        fields = [f.strip() for f in fields]
        if len(fields) != 3:
            raise InputError(f"weights line {number}: expected 3 fields, got {len(fields)}")
        letter, length, weight = fields
        key = (letter, _int(length, f"weights line {number}"))
        if key in table:
            raise InputError(f"weights line {number}: duplicate entry for {key}")
        try:
            table[key] = Fraction(weight)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"weights line {number}: bad weight {weight!r}") from None
    return WeightTable(table)


def format_weights(wt: WeightTable) -> str:
    return "\n".join(
        f"{letter}\t{length}\t{format_rational(weight)}" for (letter, length), weight in wt.items()
    )


# ============================================================================
# DIMACS
# ============================================================================

def _dimacs_clauses(text: str) -> Tuple[int, List[List[int]]]:
    """Header variable count and raw clauses; a clause may span lines and ends at 0"""
    var_count = None
    declared = None
    clauses: List[List[int]] = []
    current: List[int] = []
    for number, line in _content_lines(text, comment="c"):
        if line.startswith("%"):
            break
        if line.startswith("p"):
            fields = line.split()
            if var_count is not None or len(fields) != 4 or fields[1] != "cnf":
                raise InputError(f"DIMACS line {number}: bad problem line {line!r}")
            var_count = _int(fields[2], f"DIMACS line {number}")
            declared = _int(fields[3], f"DIMACS line {number}")
            continue
        if var_count is None:
            raise InputError(f"DIMACS line {number}: clause before the 'p cnf' line")
        for token in line.split():
            value = _int(token, f"DIMACS line {number}")
            if value == 0:
                if not current:
                    raise InputError(f"DIMACS line {number}: empty clause")
                clauses.append(current)
                current = []
            else:
                current.append(value)
    if var_count is None:
        raise InputError("DIMACS input has no 'p cnf' line")
    if current:
        clauses.append(current)
    if declared != len(clauses):
        raise InputError(f"DIMACS header declares {declared} clauses, found {len(clauses)}")
    return var_count, clauses


def parse_dimacs(text: str) -> CnfFormula:
    var_count, clauses = _dimacs_clauses(text)
    return CnfFormula(var_count, tuple(tuple(Lit.from_dimacs(v) for v in c) for c in clauses))


def parse_2sat_dimacs(text: str) -> TwoSatInstance:
    """DIMACS restricted to clauses of one or two literals"""
    var_count, clauses = _dimacs_clauses(text)
    for index, clause in enumerate(clauses, 1):
        if len(clause) > 2:
            raise InputError(f"clause {index} has {len(clause)} literals; 2-SAT allows at most 2")
    return TwoSatInstance.from_clauses(
        var_count, [tuple(Lit.from_dimacs(v) for v in c) for c in clauses]
    )


def format_dimacs(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.var_count} {phi.clause_count}"]
    lines.extend(" ".join([*(str(lit.to_dimacs()) for lit in clause), "0"]) for clause in phi.clauses)
    return "\n".join(lines) + "\n"


# ============================================================================
# ASSIGNMENTS
# ============================================================================

def parse_assignment(text: str) -> Dict[int, bool]:
    """Signed variable indices (`1 -2 3`), optionally 0-terminated; 'c' and '#' lines are comments"""
    assignment: Dict[int, bool] = {}
    for number, line in _content_lines(text, comment="c"):
        if line.startswith("#"):
            continue
        for token in line.split():
            value = _int(token, f"assignment line {number}")
            if value == 0:
                continue
            if abs(value) in assignment:
                raise InputError(f"assignment line {number}: x{abs(value)} assigned twice")
            assignment[abs(value)] = value > 0
    return assignment


def format_assignment(assignment: Mapping[int, bool]) -> str:
    return " ".join([*(str(v if assignment[v] else -v) for v in sorted(assignment)), "0"])
