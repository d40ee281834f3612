import itertools
import math
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator, Optional, Union

from typing_extensions import override

from ..constants import DEFAULT_CAP, ISBN_LENGTH, ISBN_X
from ..errors import DomainTooLarge
from ..models import IsbnBody


class TypeDef(ABC):
    '''Represents the domain of one bound variable'''

    @abstractmethod
    def generate(self, rng: random.Random) -> Any:
        raise NotImplementedError

    @abstractmethod
    def size(self) -> Optional[int]:
        "Number of values in the domain, None when infinite"
        raise NotImplementedError

    @abstractmethod
    def values(self) -> Iterator[Any]:
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Fixed:
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"Fixed length must be non-negative, got {self.n}")

    def draw(self, rng: random.Random) -> int:
        _ = rng
        return self.n

    def lengths(self) -> range:
        return range(self.n, self.n + 1)


@dataclass(frozen=True, slots=True)
class Bounded:
    '''Any length from 0 to max, drawn uniformly'''
    max: int

    def __post_init__(self) -> None:
        if self.max < 0:
            raise ValueError(f"Length bound must be non-negative, got {self.max}")

    def draw(self, rng: random.Random) -> int:
        return rng.randint(0, self.max)

    def lengths(self) -> range:
        return range(0, self.max + 1)


@dataclass(frozen=True, slots=True)
class Sized:
    '''Any length from 0 to max, drawn as the number of heads before the first tail of a fair coin.
    Short lists dominate, as with generators that grow values by size'''
    max: int

    def __post_init__(self) -> None:
        if self.max < 0:
            raise ValueError(f"Length bound must be non-negative, got {self.max}")

    def draw(self, rng: random.Random) -> int:
        n = 0
        while n < self.max and rng.random() < 0.5:
            n += 1
        return n

    def lengths(self) -> range:
        return range(0, self.max + 1)


LengthSpec = Union[Fixed, Bounded, Sized]


@dataclass(frozen=True, slots=True)
class NatRange(TypeDef):
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"NatRange needs 0 <= lo <= hi, got {self.lo}..{self.hi}")

    @override
    def generate(self, rng: random.Random) -> int:
        return rng.randint(self.lo, self.hi)

    @override
    def size(self) -> int:
        return self.hi - self.lo + 1

    @override
    def values(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))


@dataclass(frozen=True, slots=True)
class DigitT(TypeDef):
    @override
    def generate(self, rng: random.Random) -> int:
        return rng.randrange(10)

    @override
    def size(self) -> int:
        return 10

    @override
    def values(self) -> Iterator[int]:
        return iter(range(10))


def _sequences(alphabet: int, lengths: range) -> Iterator[tuple[int, ...]]:
    for k in lengths:
        yield from itertools.product(range(alphabet), repeat=k)


@dataclass(frozen=True, slots=True)
class DigitList(TypeDef):
    length: LengthSpec

    @override
    def generate(self, rng: random.Random) -> tuple[int, ...]:
        return tuple(rng.randrange(10) for _ in range(self.length.draw(rng)))

    @override
    def size(self) -> int:
        return sum(10**k for k in self.length.lengths())

    @override
    def values(self) -> Iterator[tuple[int, ...]]:
        return _sequences(10, self.length.lengths())


@dataclass(frozen=True, slots=True)
class BitList(TypeDef):
    length: Fixed

    @override
    def generate(self, rng: random.Random) -> tuple[int, ...]:
        return tuple(rng.randrange(2) for _ in range(self.length.n))

    @override
    def size(self) -> int:
        return 2**self.length.n

    @override
    def values(self) -> Iterator[tuple[int, ...]]:
        return _sequences(2, self.length.lengths())


@dataclass(frozen=True, slots=True)
class Product(TypeDef):
    fields: tuple[TypeDef, ...]

    @override
    def generate(self, rng: random.Random) -> tuple[Any, ...]:
        return tuple(t.generate(rng) for t in self.fields)

    @override
    def size(self) -> Optional[int]:
        sizes = [t.size() for t in self.fields]
        if any(s is None for s in sizes):
            return None
        return math.prod(s for s in sizes if s is not None)

    @override
    def values(self) -> Iterator[tuple[Any, ...]]:
        return itertools.product(*(t.values() for t in self.fields))


@dataclass(frozen=True, slots=True)
class OneOf(TypeDef):
    '''A finite domain given by its values, in the order listed'''
    choices: tuple[Any, ...]

    @override
    def generate(self, rng: random.Random) -> Any:
        return rng.choice(self.choices)

    @override
    def size(self) -> int:
        return len(self.choices)

    @override
    def values(self) -> Iterator[Any]:
        return iter(self.choices)


@dataclass(frozen=True, slots=True)
class IsbnT(TypeDef):
    @override
    def generate(self, rng: random.Random) -> IsbnBody:
        return IsbnBody(tuple(rng.randrange(10) for _ in range(ISBN_LENGTH - 1)), rng.randint(0, ISBN_X))

    @override
    def size(self) -> int:
        return 10**(ISBN_LENGTH - 1) * (ISBN_X + 1)

    @override
    def values(self) -> Iterator[IsbnBody]:
        for digits in itertools.product(range(10), repeat=ISBN_LENGTH - 1):
            for check in range(ISBN_X + 1):
                yield IsbnBody(digits, check)


def generate(t: TypeDef, rng: random.Random) -> Any:
    return t.generate(rng)


def enumerate_domain(t: TypeDef, cap: int = DEFAULT_CAP) -> Iterator[Any]:
    '''Every value of t exactly once, in lexicographic order.
    Raises DomainTooLarge when the domain is infinite or larger than cap'''
    size = t.size()
    if size is None or size > cap:
        raise DomainTooLarge(size, cap)
    return t.values()
