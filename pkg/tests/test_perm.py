from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from descent123.perm import (
    Permutation,
    PermutationError,
    all_permutations,
    avoiders,
    avoiders_by_filter,
    avoids_123,
    avoids_123_bruteforce,
    descent_count,
    descent_positions,
    find_123,
    left_to_right_minima,
    min_decompose,
    parse_permutation,
)
from descent123.sequences import catalan_numbers

from conftest import avoiders_123

CATALAN = catalan_numbers(12)


def perms(max_n=9):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(range(1, n + 1)))


class TestParse:
    def test_worked_example(self):
        assert parse_permutation("5 7 2 6 4 3 1") == Permutation([5, 7, 2, 6, 4, 3, 1])

    def test_commas_and_mixed_separators(self):
        assert parse_permutation("3,1, 2").entries == (3, 1, 2)

    def test_empty(self):
        p = parse_permutation("")
        assert len(p) == 0 and p.entries == ()

    def test_duplicate(self):
        with pytest.raises(PermutationError, match="duplicate value 1"):
            parse_permutation("1 1 2")

    def test_missing(self):
        with pytest.raises(PermutationError, match="missing value 2"):
            parse_permutation("1 3")

    def test_non_integer(self):
        with pytest.raises(PermutationError, match="non-integer"):
            parse_permutation("1 two 3")

    def test_constructor_validates(self):
        with pytest.raises(PermutationError):
            Permutation([0, 1])

    @given(perms())
    def test_str_round_trip(self, p):
        perm = Permutation(p)
        assert parse_permutation(str(perm)) == perm


class TestAvoidance:
    def test_known_avoider(self):
        assert avoids_123([5, 7, 2, 6, 4, 3, 1])

    def test_pattern_itself(self):
        assert not avoids_123([1, 2, 3])

    def test_s4_count(self):
        assert sum(avoids_123_bruteforce(p) for p in permutations(range(1, 5))) == 14
        assert sum(avoids_123(p) for p in permutations(range(1, 5))) == 14

    @pytest.mark.parametrize("n", range(0, 9))
    def test_filter_counts_are_catalan(self, n):
        assert sum(1 for _ in avoiders_by_filter(n)) == CATALAN[n]

    @pytest.mark.parametrize("n", range(0, 9))
    def test_generator_matches_filter(self, n):
        assert list(avoiders(n)) == list(avoiders_by_filter(n))

    @pytest.mark.parametrize("n", [9, 10])
    def test_generator_count_large(self, n):
        seen = set()
        for p in avoiders(n):
            assert avoids_123(p)
            seen.add(p)
        assert len(seen) == CATALAN[n]

    @given(perms())
    def test_fast_test_agrees_with_triple_scan(self, p):
        assert avoids_123(p) == avoids_123_bruteforce(p)

    @given(perms())
    def test_find_123_witness(self, p):
        hit = find_123(p)
        assert (hit is None) == avoids_123(p)
        if hit:
            i, j, k = hit
            assert i < j < k and p[i] < p[j] < p[k]


class TestDescents:
    def test_worked_example(self):
        assert descent_count([5, 7, 2, 6, 4, 3, 1]) == 4
        assert descent_positions([5, 7, 2, 6, 4, 3, 1]) == (2, 4, 5, 6)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_identity(self, n):
        assert descent_count(range(1, n + 1)) == 0

    def test_reverse(self):
        assert descent_count([3, 2, 1]) == 2
        # 321 is the only element of S_3(123) with two descents
        assert [p for p in avoiders(3) if descent_count(p) == 2] == [(3, 2, 1)]

    def test_empty(self):
        assert descent_count([]) == 0


class TestMinDecomposition:
    def test_worked_example(self):
        d = min_decompose([5, 7, 2, 6, 4, 3, 1])
        assert d.blocks == ((5, (7,)), (2, (6, 4, 3)), (1, ()))
        assert d.minima == (5, 2, 1)

    def test_singleton(self):
        assert min_decompose([1]).blocks == ((1, ()),)

    def test_all_minima(self):
        assert min_decompose([3, 2, 1]).blocks == ((3, ()), (2, ()), (1, ()))

    def test_empty(self):
        assert min_decompose([]).blocks == ()

    @given(perms())
    def test_round_trip(self, p):
        d = min_decompose(p)
        assert d.flatten() == tuple(p)
        assert d.minima == left_to_right_minima(p)
        assert list(d.minima) == sorted(d.minima, reverse=True)
        if p:
            assert d.minima[-1] == 1

    @given(avoiders_123())
    def test_words_decreasing_for_avoiders(self, p):
        words = [v for w in min_decompose(p).words for v in w]
        assert all(u > v for u, v in zip(words, words[1:]))


def test_all_permutations_count():
    assert sum(1 for _ in all_permutations(5)) == 120
