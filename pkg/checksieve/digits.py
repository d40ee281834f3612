from functools import reduce
from typing import Any, Optional

from .constants import GROUPING_CHARACTERS, GROUP_SEPARATOR, ISBN_LENGTH, ISBN_X
from .errors import EmptyInput, NonDigitCharacter, WrongLength
from .models import Digit, DigitString, IsbnBody

__all__ = ["Digit", "DigitString", "IsbnBody", "is_digit", "is_digit_string", "parse_digit_string",
           "digits_to_number", "number_to_digits", "format_digit_string", "parse_isbn", "format_isbn"]


def is_digit(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and 0 <= value <= 9


def is_digit_string(value: Any) -> bool:
    return isinstance(value, tuple) and all(is_digit(d) for d in value)


def _significant(text: str) -> list[tuple[int, str]]:
    "Characters of text that are not grouping characters, with their original positions"
    return [(i, ch) for i, ch in enumerate(text) if ch not in GROUPING_CHARACTERS]


def parse_digit_string(text: str) -> DigitString:
    chars = _significant(text)
    if not chars:
        raise EmptyInput("digit string")
    for position, ch in chars:
        if ch not in "0123456789":
            raise NonDigitCharacter(position, ch)
    return tuple(int(ch) for _, ch in chars)


def digits_to_number(ds: DigitString) -> int:
    return reduce(lambda acc, d: acc * 10 + d, ds, 0)


def number_to_digits(n: int, length: int) -> DigitString:
    "Inverse of digits_to_number, padded with zeros on the left"
    if n < 0 or n >= 10**length:
        raise WrongLength(length, len(str(n)))
    return tuple(int(ch) for ch in str(n).zfill(length)) if length else ()


def format_digit_string(ds: DigitString, group: Optional[int] = None) -> str:
    text = "".join(str(d) for d in ds)
    if group is None:
        return text
    if group < 1:
        raise ValueError(f"Group size must be positive, got {group}")
    return GROUP_SEPARATOR.join(text[i:i + group] for i in range(0, len(text), group))


def parse_isbn(text: str) -> IsbnBody:
    '''Parse an ISBN-10, where a trailing X stands for a check value of 10'''
    chars = _significant(text)
    if not chars:
        raise EmptyInput("ISBN")
    values = []
    for k, (position, ch) in enumerate(chars):
        if ch in "0123456789":
            values.append(int(ch))
        elif ch in "Xx" and k == len(chars) - 1:
            values.append(ISBN_X)
        else:
            raise NonDigitCharacter(position, ch)
    if len(values) != ISBN_LENGTH:
        raise WrongLength(ISBN_LENGTH, len(values))
    return IsbnBody(tuple(values[:-1]), values[-1])


def format_isbn(body: IsbnBody) -> str:
    check = "X" if body.check == ISBN_X else str(body.check)
    return format_digit_string(body.digits) + check
