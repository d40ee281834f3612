from typing import Any, Optional


class ChecksieveError(Exception):
    '''Base class for every error raised by checksieve'''


class EmptyInput(ChecksieveError, ValueError):
    def __init__(self, what: str = "input") -> None:
        super().__init__(f"Empty {what}: at least one digit is required")
        self.what = what


class NonDigitCharacter(ChecksieveError, ValueError):
    def __init__(self, position: int, character: str) -> None:
        super().__init__(f"Non-digit character {character!r} at position {position}")
        self.position = position
        self.character = character


class WrongLength(ChecksieveError, ValueError):
    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"Expected {expected} digits, got {got}")
        self.expected = expected
        self.got = got


class IndexOutOfRange(ChecksieveError, IndexError):
    def __init__(self, index: int, length: int) -> None:
        super().__init__(f"Index {index} is out of range for a sequence of length {length}")
        self.index = index
        self.length = length


class InvalidDigit(ChecksieveError, ValueError):
    def __init__(self, value: Any) -> None:
        super().__init__(f"{value!r} is not a digit between 0 and 9")
        self.value = value


class InvalidBit(ChecksieveError, ValueError):
    def __init__(self, position: int, character: str) -> None:
        super().__init__(f"Invalid bit {character!r} at position {position}, only 0 and 1 are allowed")
        self.position = position
        self.character = character


class InvalidCodeword(ChecksieveError, ValueError):
    def __init__(self, bits: tuple[int, ...], block: Optional[int] = None) -> None:
        where = f" in block {block}" if block is not None else ""
        rendered = "".join(str(b) for b in bits)
        super().__init__(f"Invalid codeword {rendered}{where}: a codeword has exactly three 1s out of five bits")
        self.bits = bits
        self.block = block


class BadLength(ChecksieveError, ValueError):
    def __init__(self, length: int) -> None:
        super().__init__(f"Bit string of length {length} is not a whole number of codewords (at least two)")
        self.length = length


class ChecksumMismatch(ChecksieveError, ValueError):
    def __init__(self, total: int) -> None:
        super().__init__(f"Digit total {total} is not a multiple of 10")
        self.total = total


class DomainTooLarge(ChecksieveError, ValueError):
    def __init__(self, size: Optional[int], cap: int) -> None:
        shown = "infinite" if size is None else str(size)
        super().__init__(f"Domain size {shown} exceeds the enumeration cap {cap}")
        self.size = size
        self.cap = cap


class PredicateFailure(ChecksieveError, RuntimeError):
    def __init__(self, environment: dict[str, Any], message: str) -> None:
        super().__init__(f"Predicate raised on {environment!r}: {message}")
        self.environment = environment
        self.message = message


class UnknownProperty(ChecksieveError, KeyError):
    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"No property named {self.name!r}, see `checksieve prop list`"
