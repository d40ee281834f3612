import pytest
from hypothesis import given, strategies as st

from checksieve.digits import (digits_to_number, format_digit_string, format_isbn, is_digit_string,
                               number_to_digits, parse_digit_string, parse_isbn)
from checksieve.errors import EmptyInput, InvalidDigit, NonDigitCharacter, WrongLength
from checksieve.models import IsbnBody

digit_strings = st.lists(st.integers(0, 9), max_size=40).map(tuple)


def test_parse_grouped_ticket():
    assert parse_digit_string("12345|67890|12340") == (1, 2, 3, 4, 5, 6, 7, 8, 9, 0, 1, 2, 3, 4, 0)
    assert parse_digit_string("1 2 3 4 5 | 6 7 8 9 0") == (1, 2, 3, 4, 5, 6, 7, 8, 9, 0)
    assert parse_digit_string("0210-0002-1") == (0, 2, 1, 0, 0, 0, 2, 1)
    assert parse_digit_string("0") == (0,)


def test_parse_rejects_non_digits():
    with pytest.raises(NonDigitCharacter) as excinfo:
        parse_digit_string("12a4")
    assert excinfo.value.position == 2
    assert excinfo.value.character == "a"
    with pytest.raises(EmptyInput):
        parse_digit_string(" | - ")
    with pytest.raises(EmptyInput):
        parse_digit_string("")


def test_digits_to_number():
    assert digits_to_number((1, 2, 3, 4, 5, 6, 7, 8, 9, 0, 1, 2, 3, 4)) == 12345678901234
    assert digits_to_number(()) == 0
    assert digits_to_number((0, 0, 7)) == 7


def test_number_to_digits():
    assert number_to_digits(7, 3) == (0, 0, 7)
    assert number_to_digits(0, 0) == ()
    with pytest.raises(WrongLength):
        number_to_digits(1000, 3)


def test_format_digit_string():
    assert format_digit_string((1, 2, 3)) == "123"
    assert format_digit_string(parse_digit_string("123456789012340"), group=5) == "12345|67890|12340"
    assert format_digit_string(()) == ""
    assert format_digit_string((), group=3) == ""
    with pytest.raises(ValueError):
        format_digit_string((1,), group=0)


def test_is_digit_string():
    assert is_digit_string((0, 9))
    assert is_digit_string(())
    assert not is_digit_string([0, 9])
    assert not is_digit_string((0, 10))
    assert not is_digit_string((True,))


def test_isbn_parsing():
    body = parse_isbn("0-306-40615-2")
    assert body == IsbnBody((0, 3, 0, 6, 4, 0, 6, 1, 5), 2)
    assert parse_isbn("000000001x").check == 10
    assert format_isbn(IsbnBody((0,) * 9, 10)) == "000000000X"
    with pytest.raises(NonDigitCharacter):
        parse_isbn("00000X0001")
    with pytest.raises(WrongLength):
        parse_isbn("123")


def test_isbn_body_invariants():
    with pytest.raises(WrongLength):
        IsbnBody((0,) * 8, 0)
    with pytest.raises(InvalidDigit):
        IsbnBody((0,) * 9, 11)
    assert IsbnBody((1,) * 9, 10).values == (1,) * 9 + (10,)


@given(digit_strings.filter(bool), st.integers(1, 20))
def test_parse_inverts_format(ds, group):
    assert parse_digit_string(format_digit_string(ds, group)) == ds
    assert parse_digit_string(format_digit_string(ds)) == ds


@given(digit_strings, st.integers(0, 9))
def test_appending_a_digit_shifts_the_number(ds, d):
    assert digits_to_number(ds + (d,)) == 10 * digits_to_number(ds) + d
    assert digits_to_number(ds) < 10**len(ds)
    assert number_to_digits(digits_to_number(ds), len(ds)) == ds
