from fractions import Fraction

import pytest

from grassmann.errors import MismatchError, ParseError
from grassmann.fields import QQ, GFElem, PrimeField, parse_field


def test_rational_field_reduces():
    assert QQ(2, 4) == Fraction(1, 2)
    assert QQ(-3, -6) == Fraction(1, 2)
    assert str(QQ(3, 2)) == "3/2"


def test_prime_field_arithmetic():
    F = PrimeField(5)
    a, b = F(3), F(4)
    assert a + b == F(2)
    assert a * b == F(2)
    assert a - b == F(4)
    assert a / b == F(2)  # 3 * 4^{-1} = 3 * 4 = 12 = 2
    assert -a == F(2)
    assert str(F(7)) == "2"


def test_prime_field_inverse_roundtrip():
    F = PrimeField(13)
    for v in range(1, 13):
        assert F(v) * (F.one / F(v)) == F.one


def test_odd_prime_required():
    for bad in (2, 4, 9, 1, 15, 21):
        with pytest.raises(ParseError):
            PrimeField(bad)
    PrimeField(3)
    PrimeField(10007)


def test_mixed_moduli_rejected():
    with pytest.raises(MismatchError):
        GFElem(1, 3) + GFElem(1, 5)


def test_zero_is_falsy():
    assert not QQ.zero
    assert not PrimeField(7).zero
    assert QQ.one
    assert PrimeField(7)(3)


def test_parse_field():
    assert parse_field("q") is QQ
    assert parse_field("fp:5") == PrimeField(5)
    with pytest.raises(ParseError):
        parse_field("fp:4")
    with pytest.raises(ParseError):
        parse_field("r")
    with pytest.raises(ParseError):
        parse_field("fp:abc")
