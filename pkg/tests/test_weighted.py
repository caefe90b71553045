"""
Tests for the Weighted-LDS dynamic program
"""
from fractions import Fraction

import pytest

from ldseq.exceptions import InputError
from ldseq.models.weights import WeightTable
from ldseq.services.llds import compute_llds
from ldseq.services.oracle import brute_weighted
from ldseq.services.sequence import validate_lds
from ldseq.services.weighted import (
    best_length,
    build_weighted_tables,
    compute_weighted_lds,
    occurrence_counts,
    prefix_max_table,
    prefix_max_weights,
    score_solution,
)
from tests.conftest import random_sequence, random_weights, seq

WORKED = "a b a b b a c a"


class TestWorkedExample:
    def test_prefix_max_table(self, worked_weights):
        wprime = prefix_max_table(worked_weights)
        assert [wprime[("a", l)] for l in (2, 3, 4)] == [10, 20, 20]
        assert [wprime[("b", l)] for l in (2, 3, 4)] == [16, 16, 16]
        assert [wprime[("c", l)] for l in (2, 3, 4)] == [3, 5, 7]

    def test_prefix_max_for_the_sequence(self, worked_weights):
        wprime = prefix_max_weights(worked_weights, seq(WORKED))
        assert wprime == {
            ("a", 2): 10, ("a", 3): 20, ("a", 4): 20,
            ("b", 2): 16, ("b", 3): 16,
        }

    def test_occurrence_rows(self):
        N = occurrence_counts(seq(WORKED))
        assert list(N[1, 1:]) == [1, 1, 2, 2, 3, 3, 1, 4]
        assert list(N[2, 1:]) == [0, 1, 1, 2, 3, 2, 1, 3]
        assert list(N[3, 1:]) == [0, 0, 1, 1, 2, 2, 1, 3]
        assert list(N[8, 1:]) == [0, 0, 0, 0, 0, 0, 0, 1]

    def test_tables(self, worked_weights):
        tables = build_weighted_tables(seq(WORKED), worked_weights)
        assert tables.wblock_row(1) == [0, 0, 10, 16, 16, 20, 0, 20]
        assert tables.n_row(3) == [0, 0, 1, 1, 2, 2, 1, 3]
        assert tables.T[8] == 36
        assert max(tables.T) == 36

    def test_value_and_witness(self, worked_weights):
        s = seq(WORKED)
        value, solution = compute_weighted_lds(s, worked_weights)
        assert value == 36
        assert solution.word() == "aabbaa"
        assert [b.positions for b in solution.blocks] == [(1, 3), (4, 5), (6, 8)]
        assert validate_lds(s, solution)

    def test_oracle_agrees(self, worked_weights):
        assert brute_weighted(seq(WORKED), worked_weights) == 36


def test_best_length_takes_smallest_argmax(worked_weights):
    assert best_length(worked_weights, "a", 4) == 3
    assert best_length(worked_weights, "b", 3) == 2


def test_length_one_weight_never_scores():
    s = seq("a a")
    wt = WeightTable.from_rows({"a": [100, 1]})
    value, solution = compute_weighted_lds(s, wt)
    assert value == 1
    assert solution.word() == "aa"
    assert brute_weighted(s, wt) == 1
    assert ("a", 1) not in prefix_max_table(wt)


def test_no_repeats_scores_zero():
    s = seq("a b c")
    value, solution = compute_weighted_lds(s, WeightTable.uniform_length(s))
    assert value == 0
    assert len(solution) == 0


def test_empty_sequence():
    value, solution = compute_weighted_lds(seq(""), WeightTable())
    assert value == 0 and len(solution) == 0


def test_missing_weight_is_an_input_error():
    with pytest.raises(InputError, match=r"missing weight for \(a, 3\)"):
        compute_weighted_lds(seq("a a a"), WeightTable.from_rows({"a": [1, 2]}))


def test_non_positive_weight_rejected():
    with pytest.raises(InputError):
        WeightTable({("a", 2): 0})


def test_rational_weights_stay_exact():
    s = seq("a a b b")
    wt = WeightTable({("a", 2): Fraction(1, 3), ("b", 2): Fraction(1, 6)})
    value, solution = compute_weighted_lds(s, wt)
    assert value == Fraction(1, 2)
    assert score_solution(s, wt, solution) == value


def test_huge_weights_fall_back_to_exact_integers():
    s = seq("a a b b a a")
    wt = WeightTable.from_rows({"a": [1, 10 ** 30, 1, 10 ** 30], "b": [1, 10 ** 30]})
    value, _ = compute_weighted_lds(s, wt)
    assert value == 3 * 10 ** 30


def test_uniform_weights_match_llds(rng):
    for _ in range(300):
        s = random_sequence(rng, rng.randint(0, 40), "abcd")
        value, solution = compute_weighted_lds(s, WeightTable.uniform_length(s))
        assert value == compute_llds(s)[0]
        assert validate_lds(s, solution)


def test_streaming_solver_matches_tables(rng):
    for _ in range(200):
        s = random_sequence(rng, rng.randint(1, 14), "abc")
        wt = random_weights(rng, s, monotone=rng.random() < 0.5)
        assert compute_weighted_lds(s, wt)[0] == max(build_weighted_tables(s, wt).T)


def test_agrees_with_oracle_on_random_instances(rng):
    for trial in range(1000):
        s = random_sequence(rng, rng.randint(0, 12), "abc")
        wt = random_weights(rng, s, monotone=trial % 3 != 0)
        value, solution = compute_weighted_lds(s, wt)
        assert value == brute_weighted(s, wt), (s, wt)
        assert validate_lds(s, solution)
        assert score_solution(s, wt, solution) == value


@pytest.mark.slow
def test_agrees_with_oracle_campaign(rng):
    for trial in range(10_000):
        s = random_sequence(rng, rng.randint(0, 12), "abcd")
        wt = random_weights(rng, s, monotone=trial % 3 != 0)
        assert compute_weighted_lds(s, wt)[0] == brute_weighted(s, wt)
