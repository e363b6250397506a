from fractions import Fraction

import pytest

from bei.errors import ParseError, RingError, UsageError
from bei.ring import (DegRevLex, Lex, PolyRing, PrimeField, QQ, mono_deg,
                      mono_div, mono_divides, mono_gcd, mono_lcm, mono_mul)


@pytest.fixture
def ring():
    return PolyRing(["x", "y", "z"])


class TestConstruction:

    def test_variable_access(self, ring):
        x = ring.var("x")
        assert str(x) == "x"
        assert x.total_degree() == 1

    def test_unknown_variable(self, ring):
        with pytest.raises(RingError):
            ring.var("w")

    def test_bad_names_rejected(self):
        with pytest.raises(RingError):
            PolyRing(["1bad"])
        with pytest.raises(RingError):
            PolyRing(["x", "x"])
        with pytest.raises(RingError):
            PolyRing([])

    def test_blocks_must_partition(self):
        with pytest.raises(RingError):
            PolyRing(["x", "y"], blocks=(("x",), ("x", "y")))

    def test_monomial_rejects_negative_exponent(self, ring):
        with pytest.raises(RingError):
            ring.monomial((1, -1, 0))


class TestArithmetic:

    def test_add_cancel(self, ring):
        x, y = ring.var("x"), ring.var("y")
        assert (x + y - x - y).is_zero()

    def test_product_expansion(self, ring):
        x, y = ring.var("x"), ring.var("y")
        p = (x + y) * (x - y)
        assert p == x * x - y * y

    def test_binomial_power(self, ring):
        x, y = ring.var("x"), ring.var("y")
        p = (x + y) ** 3
        assert p.num_terms() == 4
        assert p.coeff((2, 1, 0)) == 3

    def test_power_zero_is_one(self, ring):
        x = ring.var("x")
        assert x ** 0 == ring.one()

    def test_scalar_coercion(self, ring):
        x = ring.var("x")
        assert 2 * x - x == x
        assert (x + 1) - 1 == x

    def test_cross_ring_mixing_fails(self, ring):
        other = PolyRing(["x", "y", "z", "w"])
        with pytest.raises(RingError):
            ring.var("x") + other.var("x")

    def test_hash_consistent_with_eq(self, ring):
        x, y = ring.var("x"), ring.var("y")
        assert hash(x + y) == hash(y + x)

    def test_prime_field_arithmetic(self):
        ring = PolyRing(["a", "b"], field=PrimeField(7))
        a = ring.var("a")
        assert (7 * a).is_zero()
        p = (a + ring.one()) ** 7
        # Freshman's dream holds in characteristic 7.
        assert p == a ** 7 + ring.one()


class TestQueries:

    def test_degree_and_homogeneity(self, ring):
        x, y = ring.var("x"), ring.var("y")
        assert (x * x + y).total_degree() == 2
        assert not (x * x + y).is_homogeneous()
        assert (x * x + x * y).is_homogeneous()
        assert ring.zero().is_homogeneous()
        assert ring.zero().total_degree() == -1

    def test_leading_data_default_order(self, ring):
        x, y, z = ring.gens()
        p = x * y + z ** 2
        # Same degree; reverse lexicographic tie break prefers x*y.
        assert p.leading_monomial() == (1, 1, 0)

    def test_leading_data_other_order(self, ring):
        x, y, z = ring.gens()
        p = y ** 3 + x * z ** 2
        assert p.leading_monomial(Lex()) == (1, 0, 2)
        assert p.leading_monomial(DegRevLex()) == (0, 3, 0)

    def test_leading_term_of_zero(self, ring):
        with pytest.raises(UsageError):
            ring.zero().leading_term()

    def test_monic(self, ring):
        x = ring.var("x")
        p = (3 * x * x + 6 * x).monic()
        assert p.leading_coeff() == 1
        assert p == x * x + 2 * x

    def test_bidegree_with_fiber(self):
        ring = PolyRing(["x", "y", "T"], fiber=("T",))
        x, y, t = ring.gens()
        assert (x * y * t).bidegree() == (2, 1)
        assert (x * t + y * t).bidegree() == (1, 1)
        assert (x + t).bidegree() is None
        assert ring.zero().bidegree() is None


class TestParsing:

    def test_simple(self, ring):
        assert ring.parse("x + y") == ring.var("x") + ring.var("y")

    def test_coefficients_and_powers(self, ring):
        x, y = ring.var("x"), ring.var("y")
        assert ring.parse("2*x^2 - 3/4*y") == 2 * x * x - ring.const(Fraction(3, 4)) * y

    def test_juxtaposition(self, ring):
        x, y = ring.var("x"), ring.var("y")
        assert ring.parse("2x") == 2 * x
        assert ring.parse("x y") == x * y
        assert ring.parse("2 x^2 y") == 2 * x * x * y

    def test_parentheses(self, ring):
        x, y = ring.var("x"), ring.var("y")
        assert ring.parse("(x + y)^2") == (x + y) ** 2
        assert ring.parse("-(x - y)*(x + y)") == y * y - x * x
        assert ring.parse("((x))") == x

    def test_leading_sign(self, ring):
        x = ring.var("x")
        assert ring.parse("-x") == -x
        assert ring.parse("+x") == x

    def test_subscripted_names_do_not_split(self):
        ring = PolyRing(["x_1", "y_2", "x_1y_2x"])
        # The longest declared name wins; no silent splitting of x_1y_2.
        assert ring.parse("x_1y_2x") == ring.var("x_1y_2x")
        with pytest.raises(ParseError):
            ring.parse("x_1y_2")

    def test_rational_constant(self, ring):
        assert ring.parse("1/2 + 1/2") == ring.one()

    @pytest.mark.parametrize("text", [
        "", "   ", "x +", "* x", "x ^", "x^-1", "(x", "x)", "1/0", "x & y",
    ])
    def test_rejects_malformed(self, ring, text):
        with pytest.raises(ParseError):
            ring.parse(text)

    def test_roundtrip(self, ring):
        x, y, z = ring.gens()
        for p in [x ** 3 - 2 * y * z + ring.const(Fraction(5, 7)),
                  -x * y * z,
                  (x - y) ** 4,
                  ring.one(),
                  z - 1]:
            assert ring.parse(str(p)) == p


class TestMapping:

    def test_map_to_larger_ring(self, ring):
        big = PolyRing(["x", "y", "z", "w"])
        p = ring.parse("x^2 - y*z")
        q = p.map_to(big)
        assert str(q) == str(p)
        assert q.ring is big

    def test_map_with_rename(self, ring):
        other = PolyRing(["a", "b", "c"])
        p = ring.parse("x*y - z")
        q = p.map_to(other, rename={"x": "a", "y": "b", "z": "c"})
        assert q == other.parse("a*b - c")

    def test_map_missing_image(self, ring):
        small = PolyRing(["x", "y"])
        with pytest.raises(RingError):
            ring.parse("z^2").map_to(small)
        # But a variable that never occurs needs no image.
        assert ring.parse("x*y").map_to(small) == small.parse("x*y")

    def test_substitute(self, ring):
        x, y, z = ring.gens()
        p = x * x - y
        q = p.substitute({"x": y + z, "y": ring.one()})
        assert q == (y + z) ** 2 - 1


class TestMonomialHelpers:

    def test_mul_div_roundtrip(self):
        a, b = (1, 2, 0), (0, 1, 3)
        ab = mono_mul(a, b)
        assert ab == (1, 3, 3)
        assert mono_div(ab, a) == b
        assert mono_divides(a, ab)
        assert not mono_divides(ab, a)

    def test_gcd_lcm(self):
        a, b = (2, 1, 0), (1, 3, 0)
        assert mono_gcd(a, b) == (1, 1, 0)
        assert mono_lcm(a, b) == (2, 3, 0)
        assert mono_deg(a) == 3


class TestOrders:

    def test_block_order_eliminates(self):
        ring = PolyRing(["t", "x", "y"], blocks=(("t",), ("x", "y")))
        t, x, y = ring.gens()
        # Any monomial containing t beats any t-free monomial.
        p = t + x ** 5
        assert p.leading_monomial() == (1, 0, 0)

    def test_degrevlex_vs_lex_disagree(self):
        ring = PolyRing(["x", "y", "z"], order=Lex())
        p = ring.parse("x*z^2 + y^3")
        assert p.leading_monomial() == (1, 0, 2)
        ring2 = PolyRing(["x", "y", "z"])
        q = ring2.parse("x*z^2 + y^3")
        assert q.leading_monomial() == (0, 3, 0)

    def test_field_equality(self):
        assert QQ == QQ
        assert PrimeField(7) == PrimeField(7)
        assert PrimeField(7) != PrimeField(11)
        assert QQ != PrimeField(7)
