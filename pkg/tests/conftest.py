"""
Shared fixtures and generators for the test suite
"""
import random
from fractions import Fraction
from pathlib import Path
from typing import List

import pytest
from hypothesis import strategies as st

from ldseq.models.cnf import CnfFormula, Lit
from ldseq.models.oracle import OracleBudget
from ldseq.models.sequence import Sequence
from ldseq.models.weights import WeightTable
from ldseq.services.sequence import parse_sequence

FIXTURES = Path(__file__).parent / "fixtures"


def seq(text: str) -> Sequence:
    """'a b a b' or 'abab' -> Sequence"""
    return parse_sequence(text, chars=" " not in text.strip())


def sequences(alphabet: str = "abc", max_size: int = 10):
    return st.lists(st.sampled_from(list(alphabet)), max_size=max_size).map(lambda xs: Sequence(tuple(xs)))


def random_sequence(rng: random.Random, n: int, alphabet: str) -> Sequence:
    return Sequence(tuple(rng.choice(alphabet) for _ in range(n)))


def random_d3_sequence(rng: random.Random, max_n: int, alphabet: str = "abcdefg") -> Sequence:
    """Shuffle of letters with 1 to 3 copies each (mostly 2 or 3), total length <= max_n"""
    tokens: List[str] = []
    for letter in rng.sample(alphabet, rng.randint(1, len(alphabet))):
        copies = rng.choice((1, 2, 2, 3, 3, 3)) if rng.random() < 0.15 else rng.choice((2, 3))
        if len(tokens) + copies > max_n:
            break
        tokens.extend([letter] * copies)
    rng.shuffle(tokens)
    return Sequence(tuple(tokens))


def random_sequence_with_copies(rng: random.Random, max_n: int, max_copies: int, alphabet: str = "abcdefg") -> Sequence:
    """Shuffle of letters with 1 to max_copies copies each, total length <= max_n"""
    tokens: List[str] = []
    for letter in rng.sample(alphabet, rng.randint(1, len(alphabet))):
        copies = rng.randint(1, max_copies) if rng.random() < 0.2 else rng.randint(2, max_copies)
        if len(tokens) + copies > max_n:
            break
        tokens.extend([letter] * copies)
    rng.shuffle(tokens)
    return Sequence(tuple(tokens))


def random_weights(rng: random.Random, s: Sequence, monotone: bool) -> WeightTable:
    table = {}
    for letter, positions in s.occ.items():
        values = [rng.randint(1, 20) for _ in positions]
        if monotone:
            values.sort()
        for length, value in enumerate(values, 1):
            table[(letter, length)] = Fraction(value, rng.choice((1, 1, 2, 3)))
    return WeightTable(table)


def random_shaped_formula(rng: random.Random, max_vars: int, max_clauses: int) -> CnfFormula:
    """
    Random (<=2,1,<=3) formula: each variable places its literals into
    distinct clauses; empty clauses are dropped and draws with a 1-literal
    clause are rejected.
    """
    for _ in range(1000):
        var_count = rng.randint(1, max_vars)
        clause_count = rng.randint(2, max_clauses)
        clauses: List[List[Lit]] = [[] for _ in range(clause_count)]
        for var in range(1, var_count + 1):
            lits = [Lit(var, True)] * rng.choice((1, 2)) + [Lit(var, False)]
            slots = [c for c in range(clause_count) if len(clauses[c]) < 3]
            if len(slots) < len(lits):
                break
            for lit, c in zip(lits, rng.sample(slots, len(lits))):
                clauses[c].append(lit)
        else:
            kept = [tuple(c) for c in clauses if c]
            if all(len(c) >= 2 for c in kept):
                return CnfFormula(var_count, tuple(kept))
    raise RuntimeError("could not draw a shaped formula")


def random_3cnf(rng: random.Random, max_vars: int, max_clauses: int) -> CnfFormula:
    var_count = rng.randint(1, max_vars)
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        size = rng.randint(1, min(3, var_count))
        chosen = rng.sample(range(1, var_count + 1), size)
        clauses.append(tuple(Lit(v, rng.random() < 0.5) for v in chosen))
    return CnfFormula(var_count, tuple(clauses))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


@pytest.fixture
def big_budget() -> OracleBudget:
    return OracleBudget(max_n=60, max_weighted_n=14, max_vars=40)


@pytest.fixture
def worked_weights() -> WeightTable:
    return WeightTable.from_rows({
        "a": [5, 10, 20, 15],
        "b": [4, 16, 8, 3],
        "c": [1, 3, 5, 7],
    })


@pytest.fixture
def worked_phi() -> CnfFormula:
    p, n = (lambda v: Lit(v, True)), (lambda v: Lit(v, False))
    return CnfFormula(5, (
        (p(1), p(2), p(3)),
        (n(1), n(2), p(3)),
        (p(2), n(3), p(4)),
        (p(1), p(4), p(5)),
        (n(4), n(5)),
    ))
