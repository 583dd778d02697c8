from fractions import Fraction

from hypothesis import given, strategies as st

from sgalg.scalars import GaussianRational, I_UNIT, ONE, ZERO


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(GaussianRational, rationals, rationals)


@given(scalars, scalars, scalars)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(scalars)
def test_conjugation_and_modulus(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0
    assert (a * a.conjugate()).re == a.abs2()


@given(scalars)
def test_division(a):
    if not a.is_zero:
        assert a / a == ONE
        assert ONE / a * a == ONE


def test_coercion_and_identities():
    assert GaussianRational(2) + 1 == GaussianRational(3)
    assert 2 * GaussianRational(Fraction(1, 2)) == ONE
    assert I_UNIT * I_UNIT == GaussianRational(-1)
    assert ZERO.is_zero and not ONE.is_zero
    assert GaussianRational(Fraction(1, 2), 3) == GaussianRational(Fraction(1, 2), 3)


def test_string_forms():
    assert str(GaussianRational(Fraction(1, 2), 3)) == "1/2+3i"
    assert str(GaussianRational(2, -1)) == "2-i"
    assert str(GaussianRational(0)) == "0"
    assert str(GaussianRational(-3)) == "-3"


def test_hash_consistent_with_int_equality():
    assert GaussianRational(2) == 2
    assert hash(GaussianRational(2)) == hash(2)
