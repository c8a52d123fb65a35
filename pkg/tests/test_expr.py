import pytest

from qfib.expr import ParseError, parse, parse_scalar
from qfib.qfield import q


def test_scalar_expressions():
    assert parse_scalar("q^-1") == 1 / q
    assert parse_scalar("(q - q^-1)*(q + q^-1)") == q ** 2 - q ** -2
    assert parse_scalar("-2/3 + 1") == parse_scalar("1/3")
    assert parse_scalar("q·q") == q * q


def test_precedence():
    assert parse_scalar("1 + 2*3") == 7
    assert parse_scalar("2*3^2") == 18
    assert parse_scalar("-2^2") == -4


def test_errors_carry_byte_offsets():
    with pytest.raises(ParseError) as e:
        parse("a*(b")
    assert e.value.offset == 4
    assert e.value.caret().splitlines()[1] == "    ^"
    with pytest.raises(ParseError) as e:
        parse_scalar("q + x")
    assert e.value.offset == 4
    with pytest.raises(ParseError) as e:
        parse("·+")
    # the middle dot is two bytes
    assert e.value.offset in (0, 2)


def test_trailing_input():
    with pytest.raises(ParseError):
        parse("a b")
