from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from .constants import ISBN_LENGTH, ISBN_X
from .errors import InvalidDigit, WrongLength

Digit = int
DigitString = tuple[int, ...]
BitString = tuple[int, ...]
Codeword = tuple[int, ...]
Environment = dict[str, Any]


class SchemeId(str, Enum):
    '''Represents one of the check-digit schemes'''
    airline = "airline"
    routing = "routing"
    luhn = "luhn"
    isbn10 = "isbn10"


@dataclass(frozen=True, slots=True)
class IsbnBody:
    '''Represents an ISBN-10: nine digits and a check value in 0..10 (10 is written X)'''
    digits: DigitString
    check: int

    def __post_init__(self) -> None:
        if len(self.digits) != ISBN_LENGTH - 1:
            raise WrongLength(ISBN_LENGTH - 1, len(self.digits))
        for d in self.digits:
            if not isinstance(d, int) or not 0 <= d <= 9:
                raise InvalidDigit(d)
        if not isinstance(self.check, int) or not 0 <= self.check <= ISBN_X:
            raise InvalidDigit(self.check)

    @property
    def values(self) -> tuple[int, ...]:
        return self.digits + (self.check,)


class CorrectionStatus(str, Enum):
    '''Represents the outcome of a barcode correction attempt'''
    clean = "Clean"
    corrected = "CorrectedDigit"
    uncorrectable = "Uncorrectable"


@dataclass(frozen=True, slots=True)
class CorrectionReport:
    '''Represents what detect_and_correct found in a received bit string'''
    status: CorrectionStatus
    recovered: Optional[DigitString] = None
    position: Optional[int] = None
    received: Optional[Codeword] = None
    corrected_to: Optional[Digit] = None
    reason: Optional[str] = None


class RunMode(str, Enum):
    random = "random"
    exhaustive = "exhaustive"


class SummaryStyle(str, Enum):
    '''Represents how to render a TestSummary'''
    cgen = "cgen"
    json = "json"


class Outcome(Enum):
    '''Represents what happened to one generated environment'''
    filtered = 0
    witness = 1
    counterexample = 2


class Expectation(str, Enum):
    '''Represents the verdict a catalog property is known to have'''
    expect_true = "ExpectTrue"
    expect_counterexample = "ExpectCounterexample"
    expect_vacuous = "ExpectTrueVacuous"


@dataclass(frozen=True, slots=True)
class TestSummary:
    '''Represents the result of running a property, in the shape of a cgen summary'''
    __test__ = False  # not a pytest class

    property_name: str
    mode: RunMode
    tested: int
    satisfied: int
    unique: int
    counterexamples: tuple[Environment, ...] = ()
    witnesses_count: int = 0
    witnesses_sample: tuple[Environment, ...] = ()
    vacuous: bool = True
    seed: Optional[int] = None
    trials: Optional[int] = None

    def __post_init__(self) -> None:
        if self.satisfied != len(self.counterexamples) + self.witnesses_count:
            raise ValueError(f"satisfied={self.satisfied} does not equal counterexamples plus witnesses")
        if self.tested < self.satisfied:
            raise ValueError(f"tested={self.tested} is smaller than satisfied={self.satisfied}")
        if self.vacuous != (self.satisfied == 0):
            raise ValueError("vacuous must be set exactly when no environment satisfied the hypothesis")

    @property
    def falsified(self) -> bool:
        return bool(self.counterexamples)


@dataclass(frozen=True, slots=True)
class UnitResult:
    '''Represents the result of a single check-expect assertion'''
    passed: bool
    actual: str
    expected: str


@dataclass(slots=True)
class CorpusLine:
    '''Represents one checked line of a corpus file'''
    lineno: int
    text: str
    valid: bool = False
    error: Optional[str] = None


@dataclass(slots=True)
class CorpusReport:
    '''Represents the outcome of verifying a corpus file'''
    scheme: SchemeId
    lines: list[CorpusLine] = field(default_factory=list)

    @property
    def n_valid(self) -> int:
        return sum(1 for line in self.lines if line.valid)

    @property
    def all_valid(self) -> bool:
        return self.n_valid == len(self.lines)
