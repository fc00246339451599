from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfkit.fields import Field, FieldError, QQ


def test_rationals_basics():
    assert QQ.char == 0
    assert QQ.zero == 0
    assert QQ.one == 1
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(2, 7)) == Fraction(7, 2)


def test_prime_field_basics():
    f5 = Field.prime(5)
    assert f5.add(3, 4) == 2
    assert f5.mul(2, 4) == 3
    assert f5.neg(2) == 3
    assert f5.inv(2) == 3  # 2 * 3 = 6 = 1 mod 5
    assert f5.coerce(-1) == 4


def test_characteristic_must_be_prime():
    with pytest.raises(FieldError):
        Field(4)
    with pytest.raises(FieldError):
        Field(6)
    Field(2)
    Field(97)


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        QQ.inv(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        Field.prime(3).inv(0)


def test_coerce_rejects_fractions_in_prime_field():
    with pytest.raises(FieldError):
        Field.prime(5).coerce(Fraction(1, 2))
    assert Field.prime(5).coerce(Fraction(4, 1)) == 4


def test_parse_and_format_round_trip():
    assert QQ.parse("2/4") == Fraction(1, 2)
    assert QQ.format(QQ.parse("2/4")) == "1/2"
    assert QQ.parse("-3") == Fraction(-3)
    f7 = Field.prime(7)
    assert f7.parse("-1") == 6
    assert f7.format(f7.parse("10")) == "3"
    with pytest.raises(FieldError):
        QQ.parse("x")
    with pytest.raises(FieldError):
        f7.parse("1/2")


def test_tokens():
    assert QQ.token() == "Q"
    assert Field.prime(5).token() == "GF:5"
    assert Field.from_token("Q") == QQ
    assert Field.from_token("GF:11") == Field.prime(11)
    with pytest.raises(FieldError):
        Field.from_token("R")
    with pytest.raises(FieldError):
        Field.from_token("GF:abc")


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_gf7_is_a_field(a, b, c):
    f = Field.prime(7)
    a, b, c = f.coerce(a), f.coerce(b), f.coerce(c)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    if a != 0:
        assert f.mul(a, f.inv(a)) == 1
