"""Multivectors, the wedge product, and extended matrix actions."""

from fractions import Fraction

import pytest

from wedgeshift import (
    GroundMismatchError,
    HomogeneityError,
    LinearMap,
    Multivector,
    ParseError,
    apply_linear,
    format_multivector,
    linear_combine,
    merge_sign,
    parse_multivector,
    wedge,
)
from wedgeshift.sampling import (
    random_invertible,
    random_multivector,
    random_rational,
)


def e(n, i):
    return Multivector.basis(n, i)


class TestWedge:
    def test_anticommutes_on_generators(self, mv):
        assert wedge(e(3, 2), e(3, 1)) == mv(3, "-e1^e2")

    def test_repeated_index_kills(self, mv):
        assert wedge(mv(3, "e1^e2"), mv(3, "e1^e3")).is_zero

    def test_even_grade_square_doubles(self, mv):
        v = mv(4, "e1^e2 + e3^e4")
        assert wedge(v, v) == mv(4, "2*e1^e2^e3^e4")

    def test_mismatched_ground_dimension(self, mv):
        with pytest.raises(GroundMismatchError):
            wedge(mv(3, "e1"), mv(4, "e1"))

    def test_graded_anticommutativity(self, rng):
        for _ in range(40):
            n = rng.randint(2, 5)
            p = rng.randint(1, min(3, n))
            q = rng.randint(1, min(3, n))
            x = random_multivector(rng, n, p)
            y = random_multivector(rng, n, q)
            lhs = wedge(x, y)
            rhs = wedge(y, x).scale((-1) ** (p * q))
            assert lhs == rhs

    def test_associativity(self, rng):
        for _ in range(30):
            n = rng.randint(3, 5)
            x = random_multivector(rng, n, rng.randint(1, 2))
            y = random_multivector(rng, n, rng.randint(1, 2))
            z = random_multivector(rng, n, 1)
            assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))

    def test_odd_grade_squares_vanish(self, rng):
        for _ in range(30):
            n = rng.randint(3, 6)
            k = rng.choice([g for g in (1, 3) if g <= n])
            x = random_multivector(rng, n, k)
            assert wedge(x, x).is_zero


class TestLinearCombine:
    def test_cancellation(self, mv):
        assert linear_combine([(1, mv(3, "e1^e2")), (-1, mv(3, "e1^e2"))]).is_zero

    def test_simple_sum(self, mv):
        assert linear_combine([(2, e(3, 1)), (3, e(3, 2))]) == mv(3, "2*e1 + 3*e2")

    def test_half_sums(self, mv):
        out = linear_combine(
            [
                (Fraction(1, 2), mv(3, "e1^e3 + e2^e3")),
                (Fraction(1, 2), mv(3, "e1^e3 - e2^e3")),
            ]
        )
        assert out == mv(3, "e1^e3")

    def test_mismatched_n(self, mv):
        with pytest.raises(GroundMismatchError):
            linear_combine([(1, mv(3, "e1")), (1, mv(4, "e1"))])


class TestApplyLinear:
    def test_identity(self, rng):
        g = LinearMap.identity(4)
        for _ in range(5):
            x = random_multivector(rng, 4, rng.randint(1, 3))
            assert apply_linear(g, x) == x

    def test_shear_on_monomial(self, mv):
        g = LinearMap.shear(3, 2, 1, 1)
        assert apply_linear(g, mv(3, "e2^e3")) == mv(3, "e1^e3 + e2^e3")

    def test_diagonal_scaling(self, mv):
        g = LinearMap.diagonal([2, 1, 1])
        assert apply_linear(g, mv(3, "e1^e2")) == mv(3, "2*e1^e2")

    def test_multiplicative_over_wedge(self, rng):
        for _ in range(15):
            n = rng.randint(3, 5)
            g = random_invertible(rng, n)
            x = random_multivector(rng, n, rng.randint(1, 2))
            y = random_multivector(rng, n, rng.randint(1, 2))
            assert apply_linear(g, wedge(x, y)) == wedge(apply_linear(g, x), apply_linear(g, y))

    def test_composition(self, rng):
        for _ in range(10):
            n = rng.randint(2, 4)
            g = random_invertible(rng, n)
            h = random_invertible(rng, n)
            x = random_multivector(rng, n, rng.randint(1, n))
            assert apply_linear(g.compose(h), x) == apply_linear(g, apply_linear(h, x))

    def test_mismatched_n(self, mv):
        with pytest.raises(GroundMismatchError):
            apply_linear(LinearMap.identity(3), mv(4, "e1"))


class TestMultivector:
    def test_zero_coefficients_dropped(self):
        x = Multivector(3, {(1, 2): 1, (2, 3): 0})
        assert list(x.terms) == [(1, 2)]

    def test_grades_and_homogeneity(self, mv):
        x = mv(4, "e1 + e1^e2")
        assert x.grades() == frozenset({1, 2})
        assert not x.is_homogeneous
        with pytest.raises(HomogeneityError):
            x.grade
        assert mv(4, "0").grade is None

    def test_unsorted_support_rejected(self):
        with pytest.raises(ValueError):
            Multivector(3, {(2, 1): 1})

    def test_out_of_range_support(self):
        with pytest.raises(ValueError):
            Multivector(3, {(1, 4): 1})

    def test_merge_sign(self):
        assert merge_sign((2,), (1,)) == -1
        assert merge_sign((1, 2), (3, 4)) == 1
        assert merge_sign((3, 4), (1, 2)) == 1


class TestLinearMapPredicates:
    def test_shear_is_unipotent(self):
        g = LinearMap.shear(4, 3, 1, 5)
        assert g.is_upper_triangular
        assert g.is_unipotent_upper
        assert g.is_invertible
        assert not g.is_diagonal_invertible

    def test_lower_shear_is_not_upper(self):
        g = LinearMap.shear(4, 1, 3, 5)
        assert not g.is_upper_triangular

    def test_diagonal(self):
        g = LinearMap.diagonal([1, 2, 3])
        assert g.is_diagonal_invertible and g.is_upper_triangular
        assert not LinearMap.diagonal([1, 0, 3]).is_diagonal_invertible

    def test_inverse_roundtrip(self, rng):
        for _ in range(10):
            n = rng.randint(2, 4)
            g = random_invertible(rng, n)
            assert g.compose(g.inverse()) == LinearMap.identity(n)

    def test_singular_inverse(self):
        with pytest.raises(ValueError):
            LinearMap([[1, 1], [1, 1]]).inverse()

    def test_weight_diagonal_entries(self):
        g = LinearMap.weight_diagonal(3, 2)
        assert g.entry(1, 1) == Fraction(1, 4)
        assert g.entry(2, 2) == Fraction(1, 16)
        assert g.entry(3, 3) == Fraction(1, 256)


class TestTextForm:
    def test_spec_shape(self, mv):
        x = mv(6, "e1^e2^e3 - 1/2*e4^e5^e6")
        assert format_multivector(x) == "e1^e2^e3 - 1/2*e4^e5^e6"

    def test_roundtrip(self, rng):
        for _ in range(40):
            n = rng.randint(2, 6)
            x = random_multivector(rng, n, rng.randint(1, min(3, n)), nonzero=False)
            assert parse_multivector(format_multivector(x), n) == x

    def test_zero(self):
        assert format_multivector(Multivector.zero(3)) == "0"
        assert parse_multivector("0", 3).is_zero

    def test_unsorted_input_normalized(self, mv):
        assert parse_multivector("e2^e1", 3) == mv(3, "-e1^e2")

    def test_parse_errors(self):
        for bad in ["", "e1^e1", "e1 %", "x3", "2**e1", "e1^", "e9", "1/0"]:
            with pytest.raises((ParseError, ZeroDivisionError)):
                parse_multivector(bad, 4)

    def test_scalar_term(self):
        x = parse_multivector("3/2", 3)
        assert x.coefficient(()) == Fraction(3, 2)
        assert format_multivector(x) == "3/2"


class TestScalarContract:
    def test_fraction_invariants(self, rng):
        from math import gcd

        for _ in range(50):
            c = random_rational(rng) + random_rational(rng) * random_rational(rng)
            assert c.denominator > 0
            assert gcd(abs(c.numerator), c.denominator) == 1
        assert Fraction(0) == Fraction(0, 1)
        assert (Fraction(0)).denominator == 1

    def test_exact_field_axioms(self, rng):
        for _ in range(30):
            a, b, c = (random_rational(rng) for _ in range(3))
            assert (a + b) * c == a * c + b * c
            if a != 0:
                assert a * (1 / a) == 1
