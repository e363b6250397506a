import random

import pytest

from bei.errors import RingError
from bei.groebner import (Ideal, buchberger_with_syzygies, groebner_basis,
                          ideal_equal, spoly)
from bei.ring import DegRevLex, Lex, PolyRing, PrimeField

from oracles import homogeneous_membership


@pytest.fixture
def ring():
    return PolyRing(["x", "y", "z"])


class TestBasics:

    def test_single_polynomial(self, ring):
        p = ring.parse("x^2 - y")
        basis = groebner_basis([p])
        assert len(basis) == 1
        assert basis.polys[0] == p.monic()

    def test_reduce_to_zero(self, ring):
        p = ring.parse("x^2*y - z^3")
        basis = groebner_basis([p])
        q = ring.parse("(x^2*y - z^3) * (x + 7*y)")
        assert basis.reduce(q).is_zero()
        assert basis.contains(q)

    def test_nonmember(self, ring):
        basis = groebner_basis([ring.parse("x^2"), ring.parse("y^2")])
        assert not basis.contains(ring.parse("x*y"))
        assert basis.contains(ring.parse("x^2*y + y^2"))

    def test_classic_intersection_pair(self, ring):
        # x^2+y^2-1 and x-y: the basis must expose 2y^2-1 (up to scaling).
        g1 = ring.parse("x^2 + y^2 - 1")
        g2 = ring.parse("x - y")
        basis = groebner_basis([g1, g2], order=Lex())
        assert basis.contains(ring.parse("y^2 - 1/2"))

    def test_unit_ideal(self, ring):
        basis = groebner_basis([ring.parse("x + 1"), ring.parse("x")])
        assert basis.polys == (ring.one(),)
        assert basis.contains(ring.parse("z^5 - 3"))

    def test_zero_generators_dropped(self, ring):
        ideal = Ideal(ring, [ring.zero(), ring.var("x")])
        assert len(ideal.gens) == 1


class TestReducedForm:

    def test_basis_is_reduced(self, ring):
        gens = [ring.parse("x^2 + y"), ring.parse("x^2 + z")]
        basis = groebner_basis(gens)
        leads = basis.leading_monomials()
        # No leading monomial divides another, and every tail monomial
        # is outside the leading ideal.
        for i, mi in enumerate(leads):
            for j, mj in enumerate(leads):
                if i != j:
                    assert not all(a <= b for a, b in zip(mi, mj))
        for p in basis.polys:
            for mono, _ in p.terms[1:]:
                for lead in leads:
                    assert not all(a <= b for a, b in zip(lead, mono))

    def test_invariance_under_generator_shuffle(self, ring):
        gens = [ring.parse(t) for t in
                ["x*y - z^2", "y^2 - x*z", "x^2 - y*z"]]
        reference = groebner_basis(gens).polys
        rng = random.Random(5)
        for _ in range(6):
            shuffled = gens[:]
            rng.shuffle(shuffled)
            assert groebner_basis(shuffled).polys == reference

    def test_invariance_under_scaling(self, ring):
        gens = [ring.parse("x^2 - y"), ring.parse("y^2 - z")]
        scaled = [7 * gens[0], -3 * gens[1]]
        assert groebner_basis(gens).polys == groebner_basis(scaled).polys


class TestIdealClass:

    def test_member_matches_brute_force(self, ring):
        gens = [ring.parse("x^2 - y*z"), ring.parse("x*y - z^2")]
        ideal = Ideal(ring, gens)
        probes = [ring.parse("x^3 - y^2*z + x*y^2 - x*z^2"),
                  ring.parse("x^2*z"),
                  ring.parse("y^3 - x*z^2"),
                  ring.parse("z^3")]
        for p in probes:
            assert ideal.member(p) == homogeneous_membership(p, gens)

    def test_equals_ignores_generator_choice(self, ring):
        a = Ideal(ring, [ring.parse("x"), ring.parse("y")])
        b = Ideal(ring, [ring.parse("x + y"), ring.parse("x - y")])
        c = Ideal(ring, [ring.parse("x"), ring.parse("y^2")])
        assert ideal_equal(a, b)
        assert not ideal_equal(a, c)

    def test_equals_different_ring(self, ring):
        other = PolyRing(["x", "y"])
        with pytest.raises(RingError):
            ideal_equal(Ideal(ring, [ring.var("x")]),
                        Ideal(other, [other.var("x")]))

    def test_gb_cache_reused(self, ring):
        ideal = Ideal(ring, [ring.parse("x^2 - y")])
        assert ideal.gb() is ideal.gb()

    def test_empty_ideal(self, ring):
        zero = Ideal(ring, [])
        assert zero.member(ring.zero())
        assert not zero.member(ring.var("x"))


class TestSPolynomial:

    def test_cancels_leading_terms(self, ring):
        f = ring.parse("x^2*y + x")
        g = ring.parse("x*y^2 + y")
        s = spoly(f, g)
        # lcm is x^2 y^2; both leading terms cancel.
        assert s == ring.parse("x*y - x*y")  or s.leading_monomial() != (2, 2, 0)

    def test_coprime_leads_reduce_to_zero(self, ring):
        f = ring.parse("x^2 + y")
        g = ring.parse("z^3 + x")
        basis = groebner_basis([f, g])
        assert basis.reduce(spoly(f, g)).is_zero()


class TestSyzygies:

    def test_cofactors_and_syzygies(self, ring):
        gens = [ring.parse(t) for t in
                ["x*y - z^2", "y^2 - x*z", "x^2 - y*z"]]
        basis, rows, syz = buchberger_with_syzygies(gens)
        # Every basis element is an explicit combination of the inputs;
        # rows and syzygy vectors are sparse dicts keyed by index.
        for b, row in zip(basis, rows):
            total = ring.zero()
            for j, coeff in row.items():
                total = total + coeff * gens[j]
            assert total == b
        assert syz, "twisted cubic generators have nontrivial relations"
        for vec in syz:
            total = ring.zero()
            for k, coeff in vec.items():
                total = total + coeff * basis[k]
            assert total.is_zero()


class TestPrimeFieldBasis:

    def test_membership_matches_rationals(self):
        rq = PolyRing(["x", "y", "z"])
        rp = PolyRing(["x", "y", "z"], field=PrimeField(32003))
        texts = ["x^2*y - z^3", "x*z - y^2"]
        probe = "x^3*z - x*y^2*z"
        bq = groebner_basis([rq.parse(t) for t in texts])
        bp = groebner_basis([rp.parse(t) for t in texts])
        assert bq.contains(rq.parse(probe)) == bp.contains(rp.parse(probe))

    def test_elimination_order_respected(self):
        ring = PolyRing(["t", "x", "y"], blocks=(("t",), ("x", "y")))
        # Parametrize the parabola and eliminate t.
        gens = [ring.parse("x - t"), ring.parse("y - t^2")]
        basis = groebner_basis(gens)
        t_free = [p for p in basis.polys
                  if all(m[0] == 0 for m, _ in p.terms)]
        assert any(p == ring.parse("x^2 - y") or p == ring.parse("y - x^2")
                   for p in t_free)
