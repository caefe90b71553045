"""
Tests for sequences, blocks, validation and the generalized form
"""
import itertools
import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ldseq.exceptions import InputError
from ldseq.models.sequence import Block, GeneralizedLDSeq, LDSubsequence, Sequence
from ldseq.services.llds import compute_llds
from ldseq.services.sequence import (
    decompose_to_generalized,
    merge_generalized,
    parse_sequence,
    serialize_sequence,
    split_sizes,
    validate_lds,
)
from tests.conftest import seq, sequences

LD_WORD = re.compile(r"(?:(.)\1+)*")


@st.composite
def ld_subsequences(draw, alphabet: str = "abc"):
    """Valid LD-subsequences: blocks of 2..9 increasing positions, neighbours differ"""
    blocks = []
    position = 0
    previous = None
    for _ in range(draw(st.integers(0, 6))):
        letter = draw(st.sampled_from([x for x in alphabet if x != previous]))
        gaps = draw(st.lists(st.integers(1, 3), min_size=2, max_size=9))
        positions = tuple(itertools.accumulate(gaps, initial=position))[1:]
        blocks.append(Block(letter, positions))
        position, previous = positions[-1], letter
    return LDSubsequence(tuple(blocks))


class TestSequence:
    def test_occ_and_d(self):
        s = seq("a b a b b a c a")
        assert s.occ == {"a": (1, 3, 6, 8), "b": (2, 4, 5), "c": (7,)}
        assert s.d == 4
        assert s.alphabet == ("a", "b", "c")
        assert s[1] == "a" and s[7] == "c"

    def test_empty(self):
        s = Sequence(())
        assert len(s) == 0
        assert s.d == 0
        assert s.occ == {}

    def test_rejects_bad_tokens(self):
        with pytest.raises(InputError):
            Sequence(("a", ""))
        with pytest.raises(InputError):
            Sequence(("a b",))

    def test_rejects_comment_tokens(self):
        with pytest.raises(InputError, match="#x"):
            Sequence(("#x", "a"))
        with pytest.raises(InputError):
            parse_sequence("a #x #x b b")
        assert Sequence(("a#", "a#")).letters == ("a#", "a#")

    def test_index_is_one_based(self):
        with pytest.raises(IndexError):
            seq("a b")[0]

    def test_run_length(self):
        assert seq("aaabba").run_length() == [("a", 3), ("b", 2), ("a", 1)]

    def test_parse_skips_comments(self):
        s = parse_sequence("# header\n  F1 F2\n\n# more\nF1\n")
        assert s.letters == ("F1", "F2", "F1")

    def test_parse_chars(self):
        assert parse_sequence("ab a\nb", chars=True).letters == ("a", "b", "a", "b")

    @given(sequences("xyz", 12))
    def test_serialize_parse_identity(self, s):
        assert parse_sequence(serialize_sequence(s)) == s


class TestBlock:
    @pytest.mark.parametrize("positions", [(3,), (0, 1), (2, 2), (4, 3)])
    def test_rejects_bad_positions(self, positions):
        with pytest.raises(InputError):
            Block("a", positions)

    def test_span(self):
        b = Block("a", (2, 5, 9))
        assert (b.start, b.end, len(b)) == (2, 9, 3)


class TestValidate:
    def test_worked_witness(self):
        s = seq("a b a b b a c a")
        cand = LDSubsequence((Block("a", (1, 3)), Block("b", (4, 5)), Block("a", (6, 8))))
        assert validate_lds(s, cand)
        assert cand.word() == "aabbaa"

    def test_empty_is_valid(self):
        assert validate_lds(seq("a b"), LDSubsequence())

    @pytest.mark.parametrize(
        "blocks",
        [
            (Block("a", (1, 3)), Block("a", (6, 8))),  # adjacent same letter
            (Block("b", (1, 2)),),  # wrong letter at 1
            (Block("a", (3, 6)), Block("b", (2, 4))),  # positions go back
            (Block("a", (6, 9)),),  # past the end
        ],
    )
    def test_rejects(self, blocks):
        assert not validate_lds(seq("a b a b b a c a"), LDSubsequence(blocks))

    def test_rejects_short_certified_block(self):
        short = Block.certified("a", (1,))
        assert not validate_lds(seq("a a"), LDSubsequence((short,)))

    def test_matches_the_run_pattern_on_every_short_string(self):
        for n in range(11):
            for letters in itertools.product("abc", repeat=n):
                s = Sequence(letters)
                blocks = []
                start = 1
                for letter, count in s.run_length():
                    blocks.append(Block.certified(letter, tuple(range(start, start + count))))
                    start += count
                accepted = validate_lds(s, LDSubsequence(tuple(blocks)))
                assert accepted == bool(LD_WORD.fullmatch("".join(letters))), letters


class TestGeneralized:
    @pytest.mark.parametrize("size,parts", [(2, [2]), (3, [3]), (4, [2, 2]), (5, [2, 3]), (7, [2, 2, 3])])
    def test_split_sizes(self, size, parts):
        assert split_sizes(size) == parts

    def test_split_rejects_singletons(self):
        with pytest.raises(InputError):
            split_sizes(1)

    def test_generalized_rejects_size_four(self):
        with pytest.raises(InputError):
            GeneralizedLDSeq((Block("a", (1, 2, 3, 4)),))

    def test_decompose_then_merge(self):
        sol = LDSubsequence((Block("a", (1, 2, 3, 4, 5)), Block("b", (6, 7))))
        g = decompose_to_generalized(sol)
        assert [len(b) for b in g.blocks] == [2, 3, 2]
        assert merge_generalized(g) == sol

    def test_merge_rejects_overlap(self):
        g = GeneralizedLDSeq((Block("a", (1, 3)), Block("b", (2, 4))))
        with pytest.raises(InputError):
            merge_generalized(g)

    @given(ld_subsequences())
    def test_merge_undoes_decompose(self, x):
        g = decompose_to_generalized(x)
        assert all(len(b) in (2, 3) for b in g.blocks)
        assert merge_generalized(g) == x

    @given(sequences("ab", 12))
    def test_optimal_solution_survives_the_generalized_form(self, s):
        length, sol = compute_llds(s)
        g = decompose_to_generalized(sol)
        assert g.length == length
        assert validate_lds(s, merge_generalized(g))
