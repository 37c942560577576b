from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nlie.scalar import I, INV_SQRT2, SQRT2, Scalar, WeightPoly, format_scalar, poly_vars, simplify

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(Scalar, small, small, small, small)
nonzero = scalars.filter(bool)


def test_generators():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert (I * SQRT2) * (I * SQRT2) == -2
    assert INV_SQRT2 * SQRT2 == 1


def test_mixes_with_rationals():
    x = Scalar(1, 2, 3, 4)
    assert x + 1 == Scalar(2, 2, 3, 4)
    assert 1 - x == Scalar(0, -2, -3, -4)
    assert x * Fraction(1, 2) == Scalar(Fraction(1, 2), 1, Fraction(3, 2), 2)
    assert Scalar(3) == 3


def test_simplify_returns_plain_numbers():
    assert simplify(Scalar(4)) == 4 and type(simplify(Scalar(4))) is int
    assert type(simplify(Scalar(Fraction(1, 3)))) is Fraction
    assert isinstance(simplify(I), Scalar)


def test_format():
    assert format_scalar(Scalar(1, -1)) == "1-i"
    assert format_scalar(Scalar(0, 0, Fraction(1, 2))) == "(1/2)√2"
    assert format_scalar(Scalar()) == "0"


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        Scalar().inverse()
    with pytest.raises(ZeroDivisionError):
        I / 0


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x


@given(nonzero)
def test_inverse(x):
    assert x * x.inverse() == 1
    assert x / x == 1


@given(scalars, scalars)
def test_conjugations_are_automorphisms(x, y):
    for c in (Scalar.conj_i, Scalar.conj_sqrt2):
        assert c(x * y) == c(x) * c(y)
        assert c(x + y) == c(x) + c(y)


@given(scalars, scalars)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(scalars)
def test_hash_consistent_with_eq(x):
    if x.is_rational():
        assert hash(x) == hash(x.a)


# -- polynomials ------------------------------------------------------------

def test_poly_basics():
    l1, l2 = poly_vars(2)
    p = l2 * (l1 + 1)
    assert p.degree() == 2
    assert p.evaluate((Fraction(-1), Fraction(7))) == 0
    assert p.evaluate((Fraction(2), Fraction(3))) == 9
    assert (p * -2).monic() == p
    assert (p * I).monic() == p


def test_poly_substitute():
    l1, l2 = poly_vars(2)
    p = l1 * l1 - l2
    q = p.substitute([l2, l1 + 1])
    assert q == l2 * l2 - l1 - 1


def test_poly_to_str_names():
    x, = poly_vars(1)
    assert "x" in (x * 2 + 1).to_str(["x"])


polys = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2)), max_size=5).map(
    lambda ts: sum((WeightPoly.var(0, 2) ** a * WeightPoly.var(1, 2) ** b * c for c, a, b in ts),
                   WeightPoly.zero(2)))


@given(polys, polys, st.tuples(small, small))
def test_evaluation_is_a_ring_map(p, q, pt):
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


@given(polys, polys)
def test_poly_commutative(p, q):
    assert p * q == q * p
    assert p - p == WeightPoly.zero(2)
