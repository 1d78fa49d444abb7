import re

import pytest

from gridorbits import (
    OrbitPoset,
    assemble_canonical,
    bell,
    build_poset,
    count_report,
    enumerate_orbits,
    export_dot,
    f2_distinct_count,
    flat_intersections,
    order_matchings,
    rank_vector,
)

from conftest import CANONICAL_15, HASSE_EDGES_15, RANK_VECTORS_15


def paper_index_map(poset):
    """Match poset nodes to the published numbering via their matrices."""
    out = {}
    for node in poset.nodes:
        mat = [[int(x) for x in row] for row in node.canonical.maps[0].data]
        out[node.id] = next(k for k, m in CANONICAL_15.items() if m == mat)
    return out


class TestBell:
    def test_published_value(self):
        assert bell(4) == 15

    def test_base_case(self):
        assert bell(0) == 1

    def test_recursion_values(self):
        assert [bell(m) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]


class TestEnumeration:
    def test_matchings_counted_by_bell(self):
        assert len(order_matchings(3)) == bell(4)
        assert len(order_matchings(4)) == bell(5)

    def test_census_small(self, shape2):
        assert len(enumerate_orbits(shape2)) == 15

    def test_canonical_matrices_match_published(self, shape2):
        got = {
            tuple(tuple(int(x) for x in row) for row in assemble_canonical(dec).maps[0].data)
            for dec in enumerate_orbits(shape2)
        }
        want = {tuple(tuple(row) for row in m) for m in CANONICAL_15.values()}
        assert got == want

    def test_rank_vectors_match_published(self, paper_points):
        for idx, pt in paper_points.items():
            assert flat_intersections(rank_vector(pt)) == RANK_VECTORS_15[idx]

    def test_column_height_invariant(self, shape3):
        from gridorbits import column_heights

        for dec in enumerate_orbits(shape3)[:300]:
            for j in (1, 2, 3):
                assert column_heights(dec, j) == [1, 2, 3, 4]


class TestBijectivity:
    @pytest.mark.parametrize("n", [2, 3])
    def test_orbits_rank_vectors_arrays_in_bijection(self, n):
        from gridorbits import GridShape, rank_vector, sw_array
        from gridorbits.decomposition import full_vector

        decs = enumerate_orbits(GridShape(n))
        points = [assemble_canonical(dec) for dec in decs]
        rvs = {full_vector(rank_vector(pt)) for pt in points}
        arrays = {sw_array(pt) for pt in points}
        assert len(decs) == len(rvs) == len(arrays)


class TestCountReport:
    def test_small_shape_all_agree(self, shape2):
        rep = count_report(shape2)
        assert (rep.enumerated, rep.f2_distinct, rep.paper_formula) == (15, 15, 15)

    def test_f2_census_small(self, shape2):
        assert f2_distinct_count(shape2) == 15

    def test_formula_value(self, shape3):
        assert count_report(shape3).paper_formula == 2 * bell(5) == 104

    def test_larger_shape_counts_differ(self, shape3):
        # frozen computed behaviour: the array census strictly exceeds the
        # decomposition census once tuples can fail simultaneous reduction
        rep = count_report(shape3)
        assert rep.enumerated == bell(5) ** 2 == 2704
        assert rep.f2_distinct == 3402


class TestPoset:
    def test_published_hasse_diagram(self, shape2):
        poset = build_poset(shape2)
        assert len(poset.nodes) == 15
        to_paper = paper_index_map(poset)
        edges = {(to_paper[u], to_paper[v]) for u, v in poset.edges}
        assert edges == set(HASSE_EDGES_15)

    def test_unique_top_and_bottom(self, shape2):
        poset = build_poset(shape2)
        to_paper = paper_index_map(poset)
        assert [to_paper[i] for i in poset.maximal()] == [1]
        assert [to_paper[i] for i in poset.minimal()] == [15]

    def test_covers_have_no_intermediate(self, shape2):
        from gridorbits import array_leq

        poset = build_poset(shape2)
        arrays = {n.id: n.sw for n in poset.nodes}
        for u, v in poset.edges:
            assert array_leq(arrays[v], arrays[u])
            for w in poset.nodes:
                if w.id in (u, v):
                    continue
                between = (
                    array_leq(arrays[w.id], arrays[u])
                    and array_leq(arrays[v], arrays[w.id])
                    and arrays[w.id] not in (arrays[u], arrays[v])
                )
                assert not between

    def test_larger_poset_extremes(self, shape3):
        poset = build_poset(shape3)
        assert len(poset.nodes) == 2704
        top = poset.maximal()
        bottom = poset.minimal()
        assert len(top) == 1 and len(bottom) == 1
        top_dec = next(n.decomposition for n in poset.nodes if n.id == top[0])
        bottom_dec = next(n.decomposition for n in poset.nodes if n.id == bottom[0])
        assert str(top_dec) == "U(1,1,1)+U(2,2,2)+U(3,3,3)+U(4,4,4)"
        assert all(h.count(0) == 2 for h, _m in bottom_dec.summands)

    def test_partial_order_axioms(self, shape2):
        from gridorbits import array_leq

        arrays = [n.sw for n in build_poset(shape2).nodes]
        for a in arrays:
            assert array_leq(a, a)
        for a in arrays:
            for b in arrays:
                if array_leq(a, b) and array_leq(b, a):
                    assert a == b
                for c in arrays:
                    if array_leq(a, b) and array_leq(b, c):
                        assert array_leq(a, c)


DOT_NODE = re.compile(r'^  (o\d+) \[label="[^"]*"\];$')
DOT_EDGE = re.compile(r"^  (o\d+) -> (o\d+);$")


def parse_dot(text):
    """Tiny directed-graph DOT parser for the dialect the exporter emits."""
    lines = text.strip().splitlines()
    assert lines[0].startswith("digraph ") and lines[0].endswith("{")
    assert lines[-1] == "}"
    nodes, edges = [], []
    for line in lines[1:-1]:
        m = DOT_NODE.match(line)
        if m:
            nodes.append(m.group(1))
            continue
        m = DOT_EDGE.match(line)
        if m:
            edges.append((m.group(1), m.group(2)))
            continue
        assert line.startswith("  ") and line.endswith(";"), f"unparsed: {line!r}"
    assert len(set(nodes)) == len(nodes)
    for u, v in edges:
        assert u in nodes and v in nodes
    return nodes, edges


class TestDot:
    def test_export_parses_and_matches(self, shape2):
        poset = build_poset(shape2)
        text = export_dot(poset)
        nodes, edges = parse_dot(text)
        assert len(nodes) == 15
        assert len(edges) == len(poset.edges) == len(HASSE_EDGES_15)

    def test_single_node_poset(self, shape2):
        poset = build_poset(shape2)
        tiny = OrbitPoset(shape2, poset.nodes[:1], ())
        nodes, edges = parse_dot(export_dot(tiny))
        assert len(nodes) == 1 and edges == []

    def test_byte_deterministic(self, shape2):
        assert export_dot(build_poset(shape2)) == export_dot(build_poset(shape2))
