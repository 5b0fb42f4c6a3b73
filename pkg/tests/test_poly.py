import random
from fractions import Fraction

import pytest

from cichar.errors import NonUnitError, StructureError
from cichar.poly import GradedPoly, PolyRing, poly_add, poly_invert_unit, poly_mul


def ring1(truncation=2):
    return PolyRing(("h",), None, truncation)


def rand_poly(ring, rng, max_terms=4, max_coeff=6):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exps = tuple(rng.randrange(ring.truncation + 1) for _ in ring.names)
        num = rng.randint(-max_coeff, max_coeff)
        den = rng.randint(1, 4)
        terms[exps] = terms.get(exps, 0) + Fraction(num, den)
    return ring.from_terms(terms)


def test_additive_inverse_cancels():
    R = ring1()
    h = R.gen()
    assert poly_add(h, -h).is_zero()


def test_coefficient_sum():
    R = ring1()
    h = R.gen()
    assert poly_add(R.one() + h, R.one() + 2 * h) == R.constant(2) + 3 * h


def test_sum_within_bound():
    R = ring1()
    h2 = R.monomial((2,))
    assert poly_add(h2, h2) == R.monomial((2,), 2)


def test_product_truncates():
    R = ring1()
    one_plus_h = R.one() + R.gen()
    assert poly_mul(one_plus_h, one_plus_h) == R.from_terms({(0,): 1, (1,): 2, (2,): 1})
    cubed = poly_mul(poly_mul(one_plus_h, one_plus_h), one_plus_h)
    assert cubed == R.from_terms({(0,): 1, (1,): 3, (2,): 3})


def test_zero_absorbs():
    R = ring1()
    assert poly_mul(R.one() + R.gen(), R.zero()).is_zero()


def test_invert_geometric_series():
    R = ring1()
    inv = poly_invert_unit(R.one() + 2 * R.gen())
    assert inv == R.from_terms({(0,): 1, (1,): -2, (2,): 4})


def test_invert_identity():
    R = ring1()
    assert poly_invert_unit(R.one()) == R.one()


def test_invert_defining_property():
    R = ring1()
    a = R.one() + 3 * R.gen()
    assert poly_mul(poly_invert_unit(a), a) == R.one()


def test_invert_non_unit_rejected():
    R = ring1()
    with pytest.raises(NonUnitError):
        poly_invert_unit(R.gen())


def test_mismatched_rings_rejected():
    a = ring1(2).one()
    b = ring1(3).one()
    with pytest.raises(StructureError):
        poly_add(a, b)
    with pytest.raises(StructureError):
        poly_mul(a, b)
    c = PolyRing(("x",), None, 2).one()
    with pytest.raises(StructureError):
        poly_add(a, c)


def test_ring_axioms_randomized():
    rng = random.Random(7)
    R = PolyRing(("x", "y"), (1, 2), 5)
    for _ in range(60):
        a, b, c = (rand_poly(R, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_coefficients_are_exact_fractions():
    rng = random.Random(11)
    R = PolyRing(("x", "y"), (1, 2), 5)
    for _ in range(20):
        p = rand_poly(R, rng) * rand_poly(R, rng)
        assert all(isinstance(c, Fraction) for _, c in p.items())


def test_random_units_invert():
    rng = random.Random(13)
    R = PolyRing(("x", "y"), (1, 1), 4)
    for _ in range(25):
        a = R.constant(Fraction(rng.randint(1, 5), rng.randint(1, 3))) + rand_poly(
            R, rng
        ).homogeneous_part(1) + rand_poly(R, rng).homogeneous_part(2)
        assert poly_mul(poly_invert_unit(a), a) == R.one()


def test_truncation_is_ring_homomorphism():
    rng = random.Random(17)
    big = PolyRing(("x", "y"), (1, 1), 8)
    small = PolyRing(("x", "y"), (1, 1), 4)

    def cut(p):
        return small.from_terms(dict(p.items()))

    for _ in range(40):
        a, b = rand_poly(big, rng, max_terms=5), rand_poly(big, rng, max_terms=5)
        assert cut(a * b) == cut(a) * cut(b)
        assert cut(a + b) == cut(a) + cut(b)


def test_power_matches_repeated_multiplication():
    R = PolyRing(("x",), None, 6)
    p = R.one() + 2 * R.gen()
    by_mul = R.one()
    for k in range(6):
        assert p**k == by_mul
        by_mul = by_mul * p


def test_string_rendering():
    R = ring1()
    p = R.one() - 2 * R.gen() + R.monomial((2,), Fraction(1, 2))
    assert str(p) == "1 - 2*h + 1/2*h^2"
    assert str(R.zero()) == "0"
