from dataclasses import dataclass, field
from typing import Any, Callable, Sequence, Union

from .constants import (AIRLINE_LENGTH, AIRLINE_MODULUS, ROUTING_LENGTH, ROUTING_MODULUS, ROUTING_WEIGHTS,
                        LUHN_LENGTH, LUHN_MODULUS, ISBN_LENGTH, ISBN_MODULUS, ISBN_X)
from .digits import digits_to_number, is_digit_string
from .errors import EmptyInput, WrongLength
from .models import Digit, DigitString, IsbnBody, SchemeId

Instance = Union[DigitString, IsbnBody]


def _check_length(ds: Sequence[int], expected: int) -> None:
    if len(ds) != expected:
        raise WrongLength(expected, len(ds))


def airline_weights() -> tuple[int, ...]:
    "Per-position weights of the 14-digit body: reading it as a number is a weighted sum mod 7"
    return tuple(pow(10, AIRLINE_LENGTH - 2 - i, AIRLINE_MODULUS) for i in range(AIRLINE_LENGTH - 1))


def airline_check_digit(body: DigitString) -> Digit:
    _check_length(body, AIRLINE_LENGTH - 1)
    return digits_to_number(body) % AIRLINE_MODULUS


def validate_airline(ticket: DigitString) -> bool:
    _check_length(ticket, AIRLINE_LENGTH)
    return ticket[-1] == airline_check_digit(ticket[:-1])


def routing_weight(position: int) -> int:
    return ROUTING_WEIGHTS[position % len(ROUTING_WEIGHTS)]


def _routing_partial_sum(ds: Sequence[int]) -> int:
    return sum(d * routing_weight(i) for i, d in enumerate(ds))


def routing_weighted_sum(route: DigitString) -> int:
    _check_length(route, ROUTING_LENGTH)
    return _routing_partial_sum(route)


def validate_routing(route: DigitString) -> bool:
    return routing_weighted_sum(route) % ROUTING_MODULUS == 0


def luhn_sum(card: DigitString) -> int:
    '''Luhn total: every second digit from the right is doubled, and 9 is subtracted when that exceeds 9'''
    if not card:
        raise EmptyInput("card number")
    total = 0
    for k, d in enumerate(reversed(card)):
        if k % 2 == 1:
            d *= 2
            if d > 9:
                d -= 9
        total += d
    return total


def validate_luhn(card: DigitString) -> bool:
    _check_length(card, LUHN_LENGTH)
    return luhn_sum(card) % LUHN_MODULUS == 0


def isbn10_weighted_sum(values: Sequence[int]) -> int:
    "Weights run 10, 9, ..., 1 from the left; the last value is the check value"
    _check_length(values, ISBN_LENGTH)
    return sum((ISBN_LENGTH - i) * v for i, v in enumerate(values))


def isbn_values_valid(values: Sequence[int]) -> bool:
    '''Total recognizer for a raw sequence of ISBN values, such as a mutated one'''
    if len(values) != ISBN_LENGTH:
        return False
    if not all(isinstance(v, int) and 0 <= v <= 9 for v in values[:-1]):
        return False
    if not isinstance(values[-1], int) or not 0 <= values[-1] <= ISBN_X:
        return False
    return isbn10_weighted_sum(values) % ISBN_MODULUS == 0


def validate_isbn10(body: IsbnBody) -> bool:
    return isbn10_weighted_sum(body.values) % ISBN_MODULUS == 0


def _complete_airline(body: DigitString) -> DigitString:
    return tuple(body) + (airline_check_digit(body),)


def _complete_routing(body: DigitString) -> DigitString:
    _check_length(body, ROUTING_LENGTH - 1)
    last_weight = routing_weight(ROUTING_LENGTH - 1)
    check = (-_routing_partial_sum(body) * pow(last_weight, -1, ROUTING_MODULUS)) % ROUTING_MODULUS
    return tuple(body) + (check,)


def _complete_luhn(body: DigitString) -> DigitString:
    _check_length(body, LUHN_LENGTH - 1)
    # The check digit sits in an undoubled position, so it adds to the total as is
    check = (-luhn_sum(tuple(body) + (0,))) % LUHN_MODULUS
    return tuple(body) + (check,)


def _complete_isbn10(body: DigitString) -> IsbnBody:
    _check_length(body, ISBN_LENGTH - 1)
    check = (-isbn10_weighted_sum(tuple(body) + (0,))) % ISBN_MODULUS
    return IsbnBody(tuple(body), check)


def _accepts_digits(length: int, validator: Callable[[DigitString], bool]) -> Callable[[Any], bool]:
    def accepts(value: Any) -> bool:
        return isinstance(value, tuple) and len(value) == length and is_digit_string(value) and validator(value)
    return accepts


def _accepts_isbn(value: Any) -> bool:
    if isinstance(value, IsbnBody):
        return validate_isbn10(value)
    return isinstance(value, tuple) and isbn_values_valid(value)


@dataclass(frozen=True, slots=True)
class SchemeSpec:
    '''Represents a checksum scheme: its shape, modulus, weighting and behavior'''
    id: SchemeId
    total_length: int
    modulus: int
    weights: str
    validator: Callable[[Any], bool] = field(repr=False, compare=False)
    completer: Callable[[DigitString], Instance] = field(repr=False, compare=False)
    recognizer: Callable[[Any], bool] = field(repr=False, compare=False)
    values_validator: Callable[[Sequence[int]], bool] = field(repr=False, compare=False)

    def validate(self, value: Instance) -> bool:
        return self.validator(value)

    def complete(self, body: DigitString) -> Instance:
        return self.completer(body)

    def accepts(self, value: Any) -> bool:
        "Like validate, but False instead of an error for values of the wrong shape"
        return self.recognizer(value)

    def validate_values(self, values: Sequence[int]) -> bool:
        """Validity of raw values already known to have the scheme's shape,
        such as a well-formed instance after substitution or transposition"""
        return self.values_validator(values)

    @property
    def body_length(self) -> int:
        return self.total_length - 1


SCHEMES: dict[SchemeId, SchemeSpec] = {
    SchemeId.airline: SchemeSpec(SchemeId.airline, AIRLINE_LENGTH, AIRLINE_MODULUS,
                                 "body read as a number (powers of 10 mod 7)",
                                 validate_airline, _complete_airline,
                                 _accepts_digits(AIRLINE_LENGTH, validate_airline), validate_airline),
    SchemeId.routing: SchemeSpec(SchemeId.routing, ROUTING_LENGTH, ROUTING_MODULUS,
                                 "cycle 7, 3, 9",
                                 validate_routing, _complete_routing,
                                 _accepts_digits(ROUTING_LENGTH, validate_routing), validate_routing),
    SchemeId.luhn: SchemeSpec(SchemeId.luhn, LUHN_LENGTH, LUHN_MODULUS,
                              "Luhn doubling from the right",
                              validate_luhn, _complete_luhn,
                              _accepts_digits(LUHN_LENGTH, validate_luhn), validate_luhn),
    SchemeId.isbn10: SchemeSpec(SchemeId.isbn10, ISBN_LENGTH, ISBN_MODULUS,
                                "descending 10..1",
                                validate_isbn10, _complete_isbn10,
                                _accepts_isbn, isbn_values_valid),
}


def scheme_spec(scheme: SchemeId) -> SchemeSpec:
    return SCHEMES[SchemeId(scheme)]


def validate(scheme: SchemeId, value: Instance) -> bool:
    return scheme_spec(scheme).validate(value)


def complete_check_digit(scheme: SchemeId, body: DigitString) -> Instance:
    '''Append the unique check value that makes body valid under scheme'''
    return scheme_spec(scheme).complete(body)
