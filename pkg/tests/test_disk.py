import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fillsurg import kernels
from fillsurg.disk import (
    PUBLISHED_GAP_LIST,
    DiskClass,
    ImpossibleInput,
    NoUnitPart,
    blow_down,
    blow_up_point,
    consistent_classes,
    gap_report,
    gap_set,
    genus_of,
    min_coefficient_for_genus,
    mu_bounds,
    strong_fill_predicate,
    surgery_coefficient,
)
from oracles import brute_min_coefficient, classes_by_square_sum, disk_classes_brute, square_monoid_gaps

classes = st.lists(st.integers(1, 6), max_size=8).map(lambda xs: DiskClass(tuple(xs)))


class TestDiskClass:
    def test_sorted_and_text(self):
        d = DiskClass((2, 3, 2))
        assert d.parts == (3, 2, 2)
        assert str(d) == "3,2,2"
        assert DiskClass.parse("2,3,2") == d
        assert DiskClass.parse("") == DiskClass(()) == DiskClass.parse("-")

    @pytest.mark.parametrize("text", ["3,0", "a", "3,,2", "-1"])
    def test_parse_errors(self, text):
        with pytest.raises(ValueError):
            DiskClass.parse(text)

    @given(classes)
    def test_text_round_trip(self, d):
        assert DiskClass.parse(str(d)) == d


class TestArithmetic:
    def test_examples(self):
        assert surgery_coefficient((3, 2, 2)) == 17
        assert surgery_coefficient(()) == 0
        assert surgery_coefficient((2,) * 5) == 20
        assert genus_of((3, 2, 2)) == 5
        assert genus_of((1, 1, 1)) == 0
        for g in range(8):
            assert genus_of((2,) * g) == g and surgery_coefficient((2,) * g) == 4 * g

    def test_identity_exhaustive(self):
        for size in range(0, 9):
            for parts in itertools.combinations_with_replacement(range(1, 7), size):
                assert surgery_coefficient(parts) - 2 * genus_of(parts) == sum(parts)


class TestMoves:
    def test_blow_down(self):
        assert blow_down((3, 2, 1)) == DiskClass((3, 2))
        assert blow_down((1,)) == DiskClass(())
        with pytest.raises(NoUnitPart):
            blow_down((3, 2, 2))

    def test_blow_up(self):
        assert blow_up_point(()) == DiskClass((1,))
        assert blow_up_point((3, 2, 2)) == DiskClass((3, 2, 2, 1))
        assert blow_up_point((2,)) == DiskClass((2, 1))
        assert consistent_classes(18, 5) == [DiskClass((3, 2, 2, 1))]

    @given(classes)
    def test_moves_inverse_and_bookkeeping(self, d):
        up = blow_up_point(d)
        assert up.surgery_coefficient == d.surgery_coefficient + 1 and up.genus == d.genus
        assert blow_down(up) == d
        if 1 in d.parts:
            down = blow_down(d)
            assert blow_up_point(down) == d
            assert down.surgery_coefficient == d.surgery_coefficient - 1 and down.genus == d.genus


class TestConsistentClasses:
    def test_examples(self):
        assert consistent_classes(16, 5) == []
        assert consistent_classes(17, 5) == [DiskClass((3, 2, 2))]
        assert consistent_classes(0, 0) == [DiskClass(())]

    def test_against_oracles(self):
        for r in range(0, 61):
            by_genus = {}
            for parts in classes_by_square_sum(r):
                by_genus.setdefault(genus_of(parts), set()).add(tuple(sorted(parts, reverse=True)))
            for g in range(0, 9):
                got = {d.parts for d in consistent_classes(r, g)}
                assert got == by_genus.get(g, set()), (r, g)
                if r <= 24:
                    assert got == set(disk_classes_brute(r, g))

    def test_sorted_output(self):
        out = consistent_classes(40, 6)
        assert out == sorted(out)

    def test_upward_closure(self):
        for r in range(0, 50):
            for g in range(0, 8):
                if consistent_classes(r, g):
                    assert consistent_classes(r + 1, g)

    def test_negative_input(self):
        with pytest.raises(ValueError):
            consistent_classes(-1, 0)

    @pytest.mark.parametrize("backend", kernels.available_backends())
    def test_backends_agree(self, backend):
        impl = kernels.get_backend(backend)
        for r in range(0, 40):
            for s in range(0, r + 1):
                assert sorted(impl.square_partitions(r, s)) == sorted(kernels.get_backend("python").square_partitions(r, s))


class TestGapSet:
    def test_published_list(self):
        assert gap_set(19) == set(PUBLISHED_GAP_LIST)
        assert gap_set(3) == {1, 2, 3}

    def test_23(self):
        assert gap_set(30) == set(PUBLISHED_GAP_LIST) | {23}
        rep = gap_report(30)
        assert rep.discrepancy and rep.missing_from_published == {23} and not rep.not_computed
        assert not gap_report(19).discrepancy

    def test_oracle_to_200(self):
        assert gap_set(200) == square_monoid_gaps(200)
        assert gap_set(200) == gap_set(24)

    def test_limit(self):
        with pytest.raises(ValueError):
            gap_set(0)

    @pytest.mark.parametrize("backend", kernels.available_backends())
    def test_backends_agree(self, backend):
        impl = kernels.get_backend(backend)
        assert list(impl.square_sum_table(300, 2)) == list(kernels.get_backend("python").square_sum_table(300, 2))
        assert list(impl.square_sum_table(50, 1)) == [True] * 51


class TestBounds:
    def test_mu_bounds(self):
        assert mu_bounds(0, True) == (0, 0)
        assert mu_bounds(1) == (3, 4)
        assert mu_bounds(5) == (11, 20)
        with pytest.raises(ValueError):
            mu_bounds(-1)

    def test_genus_one_forces_four(self):
        lo, hi = mu_bounds(1)
        assert min(r for r in range(lo, hi + 1) if r not in gap_set(hi)) == 4

    def test_min_coefficient(self):
        assert [min_coefficient_for_genus(g) for g in range(8)] == [brute_min_coefficient(g) for g in range(8)]
        assert min_coefficient_for_genus(2) == 8
        for g in range(1, 12):
            lo, hi = mu_bounds(g)
            assert lo <= min_coefficient_for_genus(g) <= hi

    def test_strong_fill(self):
        assert strong_fill_predicate(17, False)
        assert strong_fill_predicate(0, True)
        with pytest.raises(ImpossibleInput):
            strong_fill_predicate(0, False)
