from collections import Counter

import pytest
from hypothesis import given

from descent123.config import BoundExceededError
from descent123.dyck import (
    DyckPath,
    PathError,
    elevate,
    enumerate_paths,
    is_irreducible,
    last_return_split,
    parse_path,
    path_from_runs,
    returns,
    run_form,
    triple_falls,
    valleys,
)
from descent123.sequences import catalan_numbers, motzkin_numbers, narayana

from conftest import dyck_paths, runs

CATALAN = catalan_numbers(15)
MOTZKIN = motzkin_numbers(15)

FIG1 = runs((5, 2), (1, 4), (1, 1), (3, 1), (1, 3))  # U5 D2 U D4 U D U3 D U D3
FIG2 = runs((3, 2), (3, 4), (1, 1))  # U3 D2 U3 D4 U D


class TestParse:
    def test_valid(self):
        p = parse_path("UUUDDUUUDDDDUD")
        assert p.semilength == 7 and str(p) == FIG2

    def test_case_insensitive(self):
        assert parse_path("uUdD") == DyckPath("UUDD")

    def test_empty(self):
        assert parse_path("").semilength == 0

    def test_dips_below(self):
        with pytest.raises(PathError) as e:
            parse_path("UDDU")
        assert e.value.position == 3

    def test_unbalanced(self):
        with pytest.raises(PathError, match="unbalanced"):
            parse_path("UUD")

    def test_illegal_char(self):
        with pytest.raises(PathError, match="illegal"):
            parse_path("UXD")


class TestStatistics:
    @pytest.mark.parametrize(
        "steps, v, tf",
        [
            (FIG2, 2, 2),
            ("UDUDUD", 2, 0),
            ("UUUDDD", 0, 1),
            ("", 0, 0),
            (runs((5, 3), (2, 3), (1, 2)), 2, 2),  # elevation example with appended UD
            (runs((5, 3), (2, 2), (1, 3)), 2, 2),
            (runs((4, 3), (2, 3)), 1, 2),
            (runs((4, 3), (2, 2), (1, 2)), 2, 1),
        ],
    )
    def test_valleys_and_triple_falls(self, steps, v, tf):
        p = DyckPath(steps)
        assert valleys(p) == v
        assert triple_falls(p) == tf

    def test_returns(self):
        # heights 5,3,4,0 | 1,0 | 3,2,3,0: three returns
        assert returns(DyckPath(FIG1)) == 3
        assert returns(DyckPath("UUUDDD")) == 1
        assert returns(DyckPath("")) == 0

    def test_irreducible(self):
        assert is_irreducible(DyckPath(runs((3, 1), (1, 3))))
        assert not is_irreducible(DyckPath("UDUD"))
        assert is_irreducible(DyckPath("UD"))
        assert not is_irreducible(DyckPath(""))

    @given(dyck_paths())
    def test_bounds(self, p):
        n = p.semilength
        if n:
            assert valleys(p) <= n - 1
            assert triple_falls(p) <= max(n - 2, 0)

    @given(dyck_paths())
    def test_triple_falls_from_runs(self, p):
        if p.semilength:
            assert triple_falls(p) == sum(max(d - 2, 0) for _, d in run_form(p).runs)
            assert valleys(p) == len(run_form(p).runs) - 1


class TestDecomposition:
    def test_figure_split(self):
        left, right = last_return_split(DyckPath(FIG1))
        assert str(left) == runs((5, 2), (1, 4), (1, 1))
        assert str(right) == runs((3, 1), (1, 3))

    def test_small(self):
        assert last_return_split(DyckPath("UD")) == (DyckPath(""), DyckPath("UD"))
        assert last_return_split(DyckPath("UDUD")) == (DyckPath("UD"), DyckPath("UD"))

    def test_empty_rejected(self):
        with pytest.raises(PathError):
            last_return_split(DyckPath(""))

    @given(dyck_paths())
    def test_split_round_trip(self, p):
        if not p.semilength:
            return
        left, right = last_return_split(p)
        assert left + right == p
        assert is_irreducible(right)
        if left.semilength:
            assert valleys(p) == valleys(left) + valleys(right) + 1
            assert triple_falls(p) == triple_falls(left) + triple_falls(right)


class TestElevate:
    def test_append_ud_then_elevate(self):
        base = DyckPath(runs((4, 3), (2, 3)))
        assert str(elevate(base + DyckPath("UD"))) == runs((5, 3), (2, 3), (1, 2))

    def test_elevate(self):
        assert str(elevate(DyckPath(runs((4, 3), (2, 2), (1, 2))))) == runs((5, 3), (2, 2), (1, 3))

    def test_empty(self):
        assert elevate(DyckPath("")) == DyckPath("UD")

    @given(dyck_paths())
    def test_statistics(self, p):
        e = elevate(p)
        assert is_irreducible(e)
        assert e.semilength == p.semilength + 1
        assert valleys(e) == valleys(p)
        assert triple_falls(e) == triple_falls(p) + p.steps.endswith("DD")


class TestEnumerate:
    @pytest.mark.parametrize("n", range(0, 11))
    def test_counts(self, n):
        paths = list(enumerate_paths(n))
        assert len(paths) == CATALAN[n]
        assert len(set(paths)) == len(paths)
        assert [p.steps for p in paths] == sorted(p.steps for p in paths)

    def test_n3(self):
        assert [p.steps for p in enumerate_paths(3)] == [
            "UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD",
        ]

    def test_n12(self):
        assert sum(1 for _ in enumerate_paths(12)) == 208012 == CATALAN[12]

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            next(enumerate_paths(15))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_narayana_and_motzkin(self, n):
        by_valleys = Counter(valleys(p) for p in enumerate_paths(n))
        assert all(by_valleys[p] == narayana(n, p + 1) for p in range(n))
        assert sum(1 for p in enumerate_paths(n) if triple_falls(p) == 0) == MOTZKIN[n]


@given(dyck_paths())
def test_run_form_round_trip(p):
    assert run_form(p).to_path() == p
    assert path_from_runs(run_form(p).runs) == p
