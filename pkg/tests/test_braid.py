import pytest
from hypothesis import given
from hypothesis import strategies as st

from fillsurg.braid import (
    BraidParseError,
    BraidValidationError,
    BraidWord,
    Permutation,
    closure_components,
    embedded_band,
    exponent_sum,
    format_braid,
    free_reduce,
    parse_braid,
    permutation,
    word_length,
)
from oracles import cycles_of_closure
from strategies import braid_words


class TestParse:
    def test_basic(self):
        assert parse_braid("B4: 1 2 2 -3") == BraidWord(4, (1, 2, 2, -3))

    def test_empty_word(self):
        assert parse_braid("B2:") == BraidWord(2, ())

    def test_letter_out_of_range(self):
        with pytest.raises(BraidValidationError):
            parse_braid("B3: 1 3")

    @pytest.mark.parametrize("text", ["", "3: 1", "B: 1", "B3 1 2", "B3: 1 x", "B3: 1 0", "B3: 1 --2", "B0:"])
    def test_malformed(self, text):
        with pytest.raises((BraidParseError, BraidValidationError)):
            parse_braid(text)

    def test_error_position(self):
        with pytest.raises(BraidParseError) as info:
            parse_braid("B3: 1 2 x")
        assert info.value.position == 9  # 1-based column

    def test_whitespace_is_flexible(self):
        assert parse_braid("  B3:1   -2\t1 ") == BraidWord(3, (1, -2, 1))
        assert format_braid(parse_braid("  B3:1   -2\t1 ")) == "B3: 1 -2 1"

    @given(braid_words())
    def test_round_trip(self, w):
        assert parse_braid(format_braid(w)) == w


class TestFreeReduce:
    @pytest.mark.parametrize(
        "letters, expected",
        [((1, -1, 2), (2,)), ((1, 2, -2, -1), ()), ((1, 2, 1), (1, 2, 1))],
    )
    def test_examples(self, letters, expected):
        assert free_reduce(BraidWord(3, letters)).letters == expected

    @given(braid_words())
    def test_idempotent_and_invariant(self, w):
        r = free_reduce(w)
        assert free_reduce(r) == r
        assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))
        assert permutation(r) == permutation(w)
        assert exponent_sum(r) == exponent_sum(w)


class TestPermutation:
    def test_three_cycle(self):
        p = permutation(BraidWord(3, (1, 2)))
        assert (p(1), p(2), p(3)) == (2, 3, 1)

    def test_identity_cases(self):
        assert permutation(BraidWord(3, ())) == Permutation.identity(3)
        assert permutation(BraidWord(2, (1, 1))) == Permutation.identity(2)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))

    @given(braid_words(), braid_words())
    def test_concatenation_composes(self, a, b):
        if a.strands != b.strands:
            b = BraidWord(a.strands, tuple(x for x in b.letters if abs(x) < a.strands))
        pa, pb, pab = permutation(a), permutation(b), permutation(a * b)
        # images record where each final strand started, so a*b composes as pa after pb
        assert all(pab(k) == pa(pb(k)) for k in range(1, a.strands + 1))

    @given(braid_words())
    def test_components_match_strand_tracing(self, w):
        assert closure_components(w) == cycles_of_closure(w.strands, w.letters)
        assert closure_components(w) == len(permutation(w).cycles())


class TestCounts:
    def test_closure_components(self):
        assert closure_components(BraidWord(3, (1, 2))) == 1
        assert closure_components(BraidWord(3, ())) == 3

    def test_exponent_sum(self):
        assert exponent_sum(BraidWord(4, (1, 2, 2, -3))) == 2
        assert exponent_sum(BraidWord(4, ())) == 0
        assert exponent_sum(parse_braid("B3: 1 2 2 1 1 2 2 2 2 2 2 2")) == 12

    def test_word_length(self):
        assert word_length(BraidWord(4, (1, -2, 3))) == 3


class TestEmbeddedBand:
    def test_examples(self):
        assert embedded_band(2, 2, 4).letters == (2,)
        assert embedded_band(1, 2, 3).letters == (1, 2, -1)
        assert embedded_band(1, 3, 4).letters == (1, 2, 3, -2, -1)

    @pytest.mark.parametrize("i, j, n", [(0, 1, 3), (2, 1, 3), (1, 3, 3)])
    def test_bounds(self, i, j, n):
        with pytest.raises(BraidValidationError):
            embedded_band(i, j, n)

    @given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n - 1), st.integers(1, n - 1))))
    def test_reduced_transposition(self, nij):
        n, i, j = nij
        i, j = min(i, j), max(i, j)
        w = embedded_band(i, j, n)
        assert free_reduce(w) == w
        p = permutation(w)
        moved = {k for k in range(1, n + 1) if p(k) != k}
        assert moved == {i, j + 1}
        assert p(i) == j + 1 and p(j + 1) == i


class TestWordOps:
    def test_inverse_and_conjugate(self):
        w = BraidWord(3, (1, -2))
        assert w.inverse().letters == (2, -1)
        assert free_reduce(w * w.inverse()).letters == ()
        assert w.conjugate((2,)).letters == (2, 1, -2, -2)

    def test_stabilize(self):
        w = BraidWord(2, (1, 1, 1)).stabilize()
        assert w == BraidWord(3, (1, 1, 1, 2))

    def test_mixed_groups_rejected(self):
        with pytest.raises(BraidValidationError):
            BraidWord(2, (1,)) * BraidWord(3, (2,))
