import pytest

from bei.edge_ideals import binomial_edge_ideal, sequence_for_ordering
from bei.errors import ComputationLimitError, UsageError
from bei.graphs import Graph, path_graph, star_graph, tree_edge_ordering
from bei.groebner import Ideal
from bei.ideal_ops import colon_by_poly
from bei.ring import PolyRing
from bei.sequences import (ColonCache, eq23_containment_check, is_d_sequence,
                           is_p_sequence, minimal_generation_witness,
                           monomial_p_criterion, permutation_scan)


@pytest.fixture
def ring():
    return PolyRing(["x", "y", "z"])


def edge_sequence(graph):
    ordering = tree_edge_ordering(graph)
    return sequence_for_ordering(ordering.edges, n=graph.n)


class TestRegularSequences:

    def test_variables_are_both(self, ring):
        z = [ring.var(n) for n in ring.names]
        assert is_p_sequence(z).holds
        assert is_d_sequence(z).holds

    def test_empty_sequence(self):
        assert is_p_sequence([]).holds
        assert is_d_sequence([]).holds

    def test_single_element(self, ring):
        assert is_p_sequence([ring.parse("x^2 - y*z")]).holds


class TestMinimality:

    def test_redundant_entry_fails_first(self, ring):
        z = [ring.parse("x"), ring.parse("x^2")]
        report = is_d_sequence(z)
        assert not report.holds
        assert report.witness["condition"] == "minimal"
        assert report.witness["index"] == 2
        assert report.witness["element"] == "x^2"

    def test_witness_helper_direct(self, ring):
        z = [ring.parse("x + y"), ring.parse("x"), ring.parse("y")]
        assert minimal_generation_witness(z) == 1

    def test_rejects_inhomogeneous(self, ring):
        with pytest.raises(UsageError):
            is_p_sequence([ring.parse("x^2 + y")])

    def test_rejects_zero_entry(self, ring):
        with pytest.raises(UsageError):
            is_p_sequence([ring.var("x"), ring.zero()])


class TestEdgeSequences:

    def test_path_ordering_is_p_sequence(self):
        for n in (3, 4, 5):
            report = is_p_sequence(edge_sequence(path_graph(n)))
            assert report.holds, n

    def test_star_ordering_is_p_sequence(self):
        report = is_p_sequence(edge_sequence(star_graph(4)))
        assert report.holds

    def test_path_and_star_orders_are_both(self):
        for g in (path_graph(4), star_graph(3)):
            z = edge_sequence(g)
            assert is_p_sequence(z).holds
            assert is_d_sequence(z).holds

    def test_decorated_square_natural_order_fails(self):
        # Square 2-3-5-4 with pendants 1 and 6; the level ordering of the
        # spanning tree with the chord last is not a p-sequence.
        g = Graph(6, [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)])
        edges = [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)]
        z = sequence_for_ordering(edges, n=6)
        report = is_p_sequence(z)
        assert not report.holds
        w = report.witness
        assert w["condition"] == "colon"
        assert (w["i"], w["i1"], w["i2"]) == (4, 5, 6)
        assert w["element"] == "-y_2"

    def test_witness_is_genuine(self):
        # Re-derive the reported failure by hand: the element lies in
        # ((prefix) : z_5) : z_6 but not in (prefix) : z_5.
        g = Graph(6, [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)])
        edges = [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)]
        z = sequence_for_ordering(edges, n=6)
        ring = z[0].ring
        prefix = Ideal(ring, z[:4])
        base = colon_by_poly(prefix, z[4])
        grown = colon_by_poly(base, z[5])
        w = ring.parse("-y_2")
        assert grown.member(w)
        assert not base.member(w)


class TestDSequenceOnly:

    def test_monomial_trio_is_d_not_p(self):
        ring = PolyRing(["x_%d" % k for k in range(1, 7)])

        def m(text):
            return ring.parse(text)

        z = [m("x_1*x_3*x_4*x_5"), m("x_1^2*x_2*x_6"), m("x_1^2*x_2^2*x_3*x_5")]
        assert is_d_sequence(z).holds
        assert not is_p_sequence(z).holds

    def test_no_ordering_rescues_p(self):
        ring = PolyRing(["x_%d" % k for k in range(1, 7)])
        z = [ring.parse("x_1*x_3*x_4*x_5"), ring.parse("x_1^2*x_2*x_6"),
             ring.parse("x_1^2*x_2^2*x_3*x_5")]
        report = permutation_scan(z, property="p")
        assert report.scanned == 6
        assert not report.any_true


class TestPermutationScan:

    def test_full_scan_counts(self, ring):
        z = [ring.var("x"), ring.var("y"), ring.var("z")]
        report = permutation_scan(z, property="p")
        assert report.total_orderings == 6
        assert report.scanned == 6
        assert report.true_count == 6
        assert not report.sampled

    def test_sampling_deterministic(self, ring):
        z = [ring.var(n) for n in ring.names]
        a = permutation_scan(z, property="d", sample=3, seed=42)
        b = permutation_scan(z, property="d", sample=3, seed=42)
        assert a.verdicts == b.verdicts
        assert a.sampled and a.scanned == 3

    def test_cap_enforced(self, ring):
        z = [ring.var("x")] * 9
        with pytest.raises(ComputationLimitError):
            permutation_scan(z, cap=8)

    def test_unknown_property(self, ring):
        with pytest.raises(UsageError):
            permutation_scan([ring.var("x")], property="q")

    def test_json_shape(self, ring):
        report = permutation_scan([ring.var("x"), ring.var("y")])
        data = report.to_json()
        assert data["verdicts"] == [{"order": [1, 2], "holds": True},
                                    {"order": [2, 1], "holds": True}]


class TestMonomialCriterion:

    def test_regular_monomials_pass(self, ring):
        z = [ring.var("x"), ring.var("y"), ring.var("z")]
        assert monomial_p_criterion(z).holds

    def test_divisibility_violation(self, ring):
        z = [ring.parse("x*y"), ring.parse("x")]
        report = monomial_p_criterion(z)
        assert not report.holds
        assert report.witness["condition"] == "divisibility"

    def test_gcd_product_violation(self):
        ring = PolyRing(["x_%d" % k for k in range(1, 7)])
        z = [ring.parse("x_1*x_3*x_4*x_5"), ring.parse("x_1^2*x_2*x_6"),
             ring.parse("x_1^2*x_2^2*x_3*x_5")]
        report = monomial_p_criterion(z)
        assert not report.holds
        assert report.witness == {"condition": "gcd-product",
                                  "i": 1, "i1": 2, "i2": 3}

    def test_criterion_sufficient_for_p(self, ring):
        # Whenever the gcd test passes, the real decision agrees.
        cases = [["x", "y", "z"], ["x^2", "y^2"], ["x*y", "y*z"]]
        for texts in cases:
            z = [ring.parse(t) for t in texts]
            if monomial_p_criterion(z).holds:
                assert is_p_sequence(z).holds

    def test_rejects_non_monomial(self, ring):
        with pytest.raises(UsageError):
            monomial_p_criterion([ring.parse("x + y")])


class TestPrefixPowerContainment:

    def test_holds_on_path_tree(self):
        z = edge_sequence(path_graph(4))
        for i in (1, 2, 3):
            for s in (1, 2):
                assert eq23_containment_check(z, i, s).holds, (i, s)

    def test_fails_on_decorated_square(self):
        edges = [(1, 2), (2, 3), (2, 4), (4, 5), (4, 6), (3, 5)]
        z = sequence_for_ordering(edges, n=6)
        report = eq23_containment_check(z, 3, 2)
        assert not report.holds
        assert report.witness
        assert report.index == 3 and report.power == 2

    def test_index_bounds(self):
        z = edge_sequence(path_graph(3))
        with pytest.raises(UsageError):
            eq23_containment_check(z, 0, 1)
        with pytest.raises(UsageError):
            eq23_containment_check(z, 3, 0)


class TestColonCacheSharing:

    def test_shared_cache_same_answers(self):
        z = edge_sequence(path_graph(5))
        cache = ColonCache()
        first = is_p_sequence(z, cache=cache)
        second = is_p_sequence(z, cache=cache)
        assert first.holds and second.holds
        fresh = is_p_sequence(z)
        assert fresh.holds == first.holds
