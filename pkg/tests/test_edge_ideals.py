import pytest

from bei.edge_ideals import (binomial_edge_ideal, colon_bridge_formula,
                             colon_path_formula, default_ring, edge_binomial,
                             edge_binomials, sequence_for_ordering,
                             simple_paths)
from bei.errors import InputError
from bei.graphs import Graph, analyze, cycle_graph, path_graph
from bei.groebner import ideal_equal
from bei.ideal_ops import colon_by_poly

from oracles import all_graphs, edge_binomial_direct, fresh_edge_ring


class TestBinomials:

    def test_definition(self):
        ring = default_ring(3)
        f = edge_binomial(ring, 1, 2)
        assert f == ring.parse("x_1*y_2 - x_2*y_1")
        # Orientation does not matter.
        assert edge_binomial(ring, 2, 1) == f

    def test_matches_hand_construction(self):
        ring = fresh_edge_ring(4)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                assert edge_binomial(ring, i, j) == \
                    edge_binomial_direct(ring, i, j)

    def test_leading_term_is_antidiagonal(self):
        # Under the default order the x_j*y_i term leads for i < j.
        ring = default_ring(4)
        f = edge_binomial(ring, 2, 4)
        mono = {ring.names[k]: e for k, e in enumerate(f.leading_monomial())
                if e}
        assert mono == {"x_4": 1, "y_2": 1}

    def test_bidegree(self):
        ring = default_ring(3)
        f = edge_binomial(ring, 1, 3)
        assert f.is_homogeneous()
        assert f.total_degree() == 2

    def test_edge_binomials_follow_edge_order(self):
        g = Graph(4, [(3, 4), (1, 2)])
        polys = edge_binomials(g)
        ring = polys[0].ring
        assert polys == [edge_binomial(ring, 1, 2), edge_binomial(ring, 3, 4)]

    def test_sequence_for_ordering_preserves_order(self):
        edges = [(2, 3), (1, 2)]
        polys = sequence_for_ordering(edges, n=3)
        ring = polys[0].ring
        assert polys == [edge_binomial(ring, 2, 3), edge_binomial(ring, 1, 2)]


class TestSimplePaths:

    def test_path_graph_interior(self):
        g = path_graph(4)
        assert simple_paths(g, 1, 4) == [(2, 3)]
        assert simple_paths(g, 1, 3) == [(2,)]
        assert simple_paths(g, 1, 2) == []

    def test_two_routes(self):
        g = cycle_graph(4)
        routes = set(simple_paths(g, 1, 3))
        assert routes == {(2,), (4,)}


class TestColonFormulas:

    def test_rejects_existing_edge_and_loop(self):
        g = path_graph(3)
        for formula in (colon_bridge_formula, colon_path_formula):
            with pytest.raises(InputError):
                formula(g, (1, 2))
            with pytest.raises(InputError):
                formula(g, (2, 2))

    def test_bridge_case_agrees_with_direct_colon(self):
        # e joining two components: the colon is the completed graph's
        # ideal, no monomials appear.
        g = Graph(5, [(1, 2), (2, 3), (4, 5)])
        e = (3, 4)
        ideal = binomial_edge_ideal(g)
        f = edge_binomial(ideal.ring, *e)
        direct = colon_by_poly(ideal, f)
        closed = colon_bridge_formula(g, e, ring=ideal.ring)
        assert ideal_equal(direct, closed)
        also = colon_path_formula(g, e, ring=ideal.ring)
        assert ideal_equal(direct, also)

    def test_general_case_needs_path_monomials(self):
        # Inside one component the bridge formula alone is too small.
        g = path_graph(4)
        e = (1, 4)
        ideal = binomial_edge_ideal(g)
        f = edge_binomial(ideal.ring, *e)
        direct = colon_by_poly(ideal, f)
        closed = colon_path_formula(g, e, ring=ideal.ring)
        assert ideal_equal(direct, closed)
        bridge_only = colon_bridge_formula(g, e, ring=ideal.ring)
        assert not ideal_equal(direct, bridge_only)
        # The interior of the single path 1-2-3-4 contributes the three
        # switch monomials.
        monos = {str(p) for p in closed.gens if p.is_monomial()}
        assert monos == {"x_2*x_3", "x_3*y_2", "y_2*y_3"}

    def test_exhaustive_small_graphs(self):
        # Every graph on 4 vertices, every non-edge: formula == colon.
        checked = 0
        for edges in all_graphs(4):
            g = Graph(4, edges)
            ideal = binomial_edge_ideal(g)
            non_edges = [(i, j) for i in range(1, 5) for j in range(i + 1, 5)
                         if not g.has_edge(i, j)]
            for e in non_edges:
                f = edge_binomial(ideal.ring, *e)
                direct = colon_by_poly(ideal, f)
                closed = colon_path_formula(g, e, ring=ideal.ring)
                assert ideal_equal(direct, closed), (edges, e)
                checked += 1
        assert checked > 100


class TestIdealConstruction:

    def test_empty_graph_gives_zero_ideal(self):
        ideal = binomial_edge_ideal(Graph(3, []))
        assert not ideal.gens

    def test_generator_count(self):
        g = cycle_graph(5)
        ideal = binomial_edge_ideal(g)
        assert len(ideal.gens) == 5

    def test_ring_has_two_blocks(self):
        ideal = binomial_edge_ideal(path_graph(3))
        assert ideal.ring.names == ("x_1", "x_2", "x_3", "y_1", "y_2", "y_3")
