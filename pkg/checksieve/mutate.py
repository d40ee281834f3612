from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Sequence

from .digits import is_digit
from .errors import IndexOutOfRange, InvalidDigit, WrongLength
from .models import BitString, Digit, DigitString


def _check_index(n: int, length: int) -> None:
    if not 0 <= n < length:
        raise IndexOutOfRange(n, length)


def replace_nth(values: Sequence[int], n: int, value: int) -> tuple[int, ...]:
    "Substitution without a payload check, for value sequences such as ISBNs"
    _check_index(n, len(values))
    return tuple(values[:n]) + (value,) + tuple(values[n + 1:])


def change_nth_digit(ds: DigitString, n: int, d: Digit) -> DigitString:
    if not is_digit(d):
        raise InvalidDigit(d)
    return replace_nth(ds, n, d)


def transpose_nth(ds: Sequence[int], n: int) -> tuple[int, ...]:
    '''Swap positions n and n+1'''
    _check_index(n, len(ds) - 1)
    return tuple(ds[:n]) + (ds[n + 1], ds[n]) + tuple(ds[n + 2:])


def is_effective(original: Sequence[Any], mutated: Sequence[Any]) -> bool:
    return tuple(original) != tuple(mutated)


def flip_bit(bits: BitString, i: int) -> BitString:
    _check_index(i, len(bits))
    return tuple(bits[:i]) + (1 - bits[i],) + tuple(bits[i + 1:])


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"Hamming distance needs equal lengths, got {len(a)} and {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


class MutationKind(str, Enum):
    '''Represents the kind of injected error'''
    substitute = "substitute"
    transpose = "transpose"
    flipbit = "flipbit"


@dataclass(frozen=True, slots=True)
class Mutation:
    '''Represents one injected error, bound to the length of the value it applies to'''
    kind: MutationKind
    position: int
    length: int
    digit: Optional[Digit] = None

    def __post_init__(self) -> None:
        if self.kind == MutationKind.transpose:
            _check_index(self.position, self.length - 1)
        else:
            _check_index(self.position, self.length)
        if self.kind == MutationKind.substitute and not is_digit(self.digit):
            raise InvalidDigit(self.digit)

    def apply(self, values: Sequence[int]) -> tuple[int, ...]:
        if len(values) != self.length:
            raise WrongLength(self.length, len(values))
        match self.kind:
            case MutationKind.substitute:
                assert self.digit is not None
                return change_nth_digit(tuple(values), self.position, self.digit)
            case MutationKind.transpose:
                return transpose_nth(values, self.position)
            case MutationKind.flipbit:
                return flip_bit(tuple(values), self.position)
        raise ValueError(f"Unknown mutation kind {self.kind}")


def apply_mutation(values: Sequence[int], mutation: Mutation) -> tuple[int, ...]:
    return mutation.apply(values)
