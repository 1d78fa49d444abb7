import pytest

from gridorbits import (
    GridShape,
    SolveFailure,
    assemble_canonical,
    borel_act,
    decompose,
    enumerate_indecomposables,
    enumerate_orbits,
    flat_intersections,
    heights_rank_vector,
    identity_tuple,
    independence_check,
    make_point,
    rank_vector,
    same_rank_vector,
    validate_heights,
    zero_tuple,
)
from gridorbits.decomposition import _sweep_decompose, full_vector

from conftest import DECOMP_N3, INDECOMPOSABLE_VECTORS_12, random_borel, random_point


class TestRankVector:
    def test_worked_example(self, diag011):
        assert flat_intersections(rank_vector(diag011)) == (0, 0, 1, 0, 1, 2)

    def test_identity(self, shape2):
        assert flat_intersections(rank_vector(identity_tuple(shape2))) == (1, 1, 2, 1, 2, 3)

    def test_zero(self, shape2):
        assert flat_intersections(rank_vector(zero_tuple(shape2))) == (0,) * 6

    def test_dims_part_constant(self, shape3, pair_n3):
        rv = rank_vector(pair_n3)
        assert rv.dims == tuple(tuple(i for _ in range(3)) for i in range(1, 5))

    def test_rank_slot_duplicates_last_intersection(self, rng, shape3):
        rv = rank_vector(random_point(shape3, rng))
        pos = 0
        from gridorbits import windows

        for _ in windows(shape3):
            for i in range(1, 5):
                row = rv.inter[pos:pos + i + 1]
                assert row[-1] == row[-2]
                pos += i + 1


class TestHeightsRankVector:
    @pytest.mark.parametrize("h,expected", sorted(INDECOMPOSABLE_VECTORS_12.items()))
    def test_published_list(self, shape2, h, expected):
        rv = heights_rank_vector(validate_heights(shape2, h))
        dims = tuple(rv.dims[i][j] for j in range(2) for i in range(3))
        assert dims + flat_intersections(rv) == expected

    def test_all_twelve_covered(self, shape2):
        assert {hv.h for hv in enumerate_indecomposables(shape2)} == set(
            INDECOMPOSABLE_VECTORS_12
        )


class TestDecompose:
    def test_published_pair(self, shape3, pair_n3):
        dec = decompose(pair_n3)
        assert set(dec.heights()) == DECOMP_N3
        assert len(dec.heights()) == 7
        assert assemble_canonical(dec) == pair_n3

    @pytest.mark.parametrize("n", [2, 3])
    def test_identity(self, n):
        shape = GridShape(n)
        dec = decompose(identity_tuple(shape))
        assert dec.heights() == [tuple([k] * n) for k in range(1, n + 2)]

    @pytest.mark.parametrize("n", [2, 3])
    def test_zero(self, n):
        shape = GridShape(n)
        dec = decompose(zero_tuple(shape))
        expected = sorted(
            tuple(h if t == j else 0 for t in range(n))
            for j in range(n)
            for h in range(1, n + 2)
        )
        assert dec.heights() == expected

    def test_no_thin_decomposition_raises(self, shape3):
        # the two windows force incompatible matchings through the middle
        # column, so this point is not a direct sum of thin summands
        f1 = [[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
        f2 = [[1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
        with pytest.raises(SolveFailure):
            decompose(make_point(shape3, [f1, f2]))

    def test_solve_and_sweep_agree(self, shape2, paper_points):
        for pt in paper_points.values():
            assert decompose(pt) == _sweep_decompose(pt)

    def test_round_trip_all_orbits(self, shape2):
        for dec in enumerate_orbits(shape2):
            assert decompose(assemble_canonical(dec)) == dec

    def test_canonical_form_idempotent(self, rng, shape2):
        for _ in range(10):
            f = random_point(shape2, rng)
            once = assemble_canonical(decompose(f))
            assert assemble_canonical(decompose(once)) == once


class TestIndependence:
    def test_small_family_independent(self, shape2):
        assert independence_check(shape2) is True

    def test_larger_families_dependent(self):
        # 52 indecomposables for n=3 span only 42 coordinates; 205 for n=4
        # exceed the vector length outright
        assert independence_check(GridShape(3)) is False
        assert independence_check(GridShape(4)) is False

    def test_vector_lengths(self, shape2):
        vec = full_vector(heights_rank_vector(validate_heights(shape2, (1, 1))))
        assert len(vec) == 15  # 6 dims + 9 window entries


class TestOrbitInvariance:
    @pytest.mark.parametrize("n", [2, 3])
    def test_rank_vector_constant_on_orbits(self, n, rng):
        shape = GridShape(n)
        for _ in range(25):
            f = random_point(shape, rng)
            moved = borel_act(f, random_borel(shape, rng))
            assert same_rank_vector(rank_vector(f), rank_vector(moved))
            if n == 2:
                canon = assemble_canonical(decompose(f))
                assert same_rank_vector(rank_vector(f), rank_vector(canon))
