import pytest

from gridorbits import (
    InvalidTable,
    Order,
    ReconstructInvalid,
    SWArray,
    assemble_canonical,
    borel_act,
    compare,
    degenerates,
    enumerate_orbits,
    make_point,
    pivots,
    rank_vector,
    reconstruct,
    same_orbit,
    same_rank_vector,
    sw_array,
    validate_array_inequalities,
    zero_tuple,
)

from conftest import random_borel, random_point


@pytest.fixture
def single_one_12(shape2):
    return make_point(shape2, [[[0, 1, 0], [0, 0, 0], [0, 0, 0]]])


@pytest.fixture
def single_one_11(shape2):
    return make_point(shape2, [[[1, 0, 0], [0, 0, 0], [0, 0, 0]]])


class TestSwArray:
    def test_worked_example(self, diag011):
        assert sw_array(diag011).tables[0] == ((0, 1, 2), (1, 2), (1,))

    def test_relation_example(self, single_one_12):
        assert sw_array(single_one_12).tables[0] == ((0, 1, 1), (0, 0), (0,))

    def test_zero(self, shape2):
        assert sw_array(zero_tuple(shape2)).tables[0] == ((0, 0, 0), (0, 0), (0,))


class TestSameOrbit:
    def test_borel_translates(self, rng, shape2):
        f = random_point(shape2, rng)
        assert same_orbit(f, borel_act(f, random_borel(shape2, rng)))

    def test_distinct_ranks(self, diag011, single_one_12):
        assert not same_orbit(diag011, single_one_12)

    def test_distinct_representatives(self, paper_points):
        assert not same_orbit(paper_points[9], paper_points[10])


class TestDegenerates:
    def test_worked_direction(self, diag011, single_one_12):
        # the rank-1 point lies in the closure of the rank-2 orbit
        assert degenerates(diag011, single_one_12)
        assert not degenerates(single_one_12, diag011)

    def test_incomparable(self, diag011, single_one_11):
        assert not degenerates(diag011, single_one_11)
        assert not degenerates(single_one_11, diag011)

    def test_reflexive(self, diag011):
        assert degenerates(diag011, diag011)

    def test_compare_enum(self, diag011, single_one_12, single_one_11):
        a, b, c = sw_array(diag011), sw_array(single_one_12), sw_array(single_one_11)
        assert compare(a, a) is Order.EQ
        assert compare(b, a) is Order.LT
        assert compare(a, b) is Order.GT
        assert compare(a, c) is Order.INCOMPARABLE


class TestPivots:
    def test_worked_example(self, diag011):
        assert pivots(sw_array(diag011).tables[0]) == {(2, 2), (3, 3)}

    def test_zero_table(self):
        assert pivots(((0, 0, 0), (0, 0), (0,))) == set()

    def test_identity_table(self):
        table = ((1, 2, 3), (1, 2), (1,))
        assert pivots(table) == {(1, 1), (2, 2), (3, 3)}

    def test_invalid_double_difference(self):
        with pytest.raises(InvalidTable):
            pivots(((2, 2, 2), (0, 0), (0,)))


class TestReconstruct:
    @pytest.mark.parametrize("n", [2])
    def test_round_trip_all_orbits(self, n):
        from gridorbits import GridShape

        for dec in enumerate_orbits(GridShape(n)):
            pt = assemble_canonical(dec)
            assert reconstruct(sw_array(pt)) == pt

    def test_worked_example(self, shape2, diag011):
        assert reconstruct(sw_array(diag011)) == diag011

    def test_composite_rank_exceeding_factors(self, shape3, pair_n3):
        arr = sw_array(pair_n3)
        # claim full rank on the composite window while the factors stay small
        tables = list(arr.tables)
        tables[1] = ((1, 2, 3, 4), (1, 2, 3), (1, 2), (1,))  # window (1,2)
        bad = SWArray(shape3, tuple(tables))
        with pytest.raises(ReconstructInvalid):
            reconstruct(bad)
        ok, violations = validate_array_inequalities(bad)
        assert not ok and violations


class TestValidateArrayInequalities:
    def test_all_orbit_arrays_pass(self, shape2):
        for dec in enumerate_orbits(shape2):
            ok, violations = validate_array_inequalities(sw_array(assemble_canonical(dec)))
            assert ok, violations

    def test_column_jump_of_two(self, shape2):
        bad = SWArray(shape2, (((2, 2, 2), (0, 0), (0,)),))
        ok, violations = validate_array_inequalities(bad)
        assert not ok
        assert violations

    def test_size_bound(self, shape2):
        ok, violations = validate_array_inequalities(SWArray(shape2, (((1, 2, 3), (1, 3), (1,)),)))
        assert not ok


class TestParametrisationEquivalence:
    @pytest.mark.parametrize("n", [2, 3])
    def test_equality_agreement_on_samples(self, n, rng):
        from gridorbits import GridShape

        shape = GridShape(n)
        pts = [random_point(shape, rng) for _ in range(12)]
        pts += [borel_act(p, random_borel(shape, rng)) for p in pts[:6]]
        for a in pts:
            rva, swa = rank_vector(a), sw_array(a)
            for b in pts:
                assert same_rank_vector(rva, rank_vector(b)) == (swa == sw_array(b))
