"""POSTNET-style barcode digits with single-bit error correction"""
from typing import Optional, Sequence

from bidict import bidict

from .constants import CODEWORD_LENGTH, CODEWORD_WEIGHT, GROUP_SEPARATOR, postal_two_of_five
from .digits import is_digit
from .errors import BadLength, ChecksumMismatch, EmptyInput, InvalidBit, InvalidCodeword, InvalidDigit
from .global_names import logger
from .models import BitString, Codeword, CorrectionReport, CorrectionStatus, Digit, DigitString
from .mutate import hamming_distance

# Complement of the standard postal table: two long bars become three 1s
CODEBOOK: bidict[Digit, Codeword] = bidict(
    {digit: tuple(1 - int(ch) for ch in word) for digit, word in sorted(postal_two_of_five.items())}
)


def weight(bits: Sequence[int]) -> int:
    return sum(bits)


def encode_digit(d: Digit) -> Codeword:
    if not is_digit(d):
        raise InvalidDigit(d)
    return CODEBOOK[d]


def decode_codeword(cw: Codeword, block: Optional[int] = None) -> Digit:
    try:
        return CODEBOOK.inverse[tuple(cw)]
    except KeyError:
        raise InvalidCodeword(tuple(cw), block) from None


def message_check_digit(ds: DigitString) -> Digit:
    return (10 - sum(ds) % 10) % 10


def encode_message(ds: DigitString) -> BitString:
    if not ds:
        raise EmptyInput("message")
    bits: list[int] = []
    for d in tuple(ds) + (message_check_digit(ds),):
        bits.extend(encode_digit(d))
    return tuple(bits)


def _blocks(bits: BitString) -> list[Codeword]:
    if len(bits) % CODEWORD_LENGTH or len(bits) < 2 * CODEWORD_LENGTH:
        raise BadLength(len(bits))
    return [tuple(bits[i:i + CODEWORD_LENGTH]) for i in range(0, len(bits), CODEWORD_LENGTH)]


def decode_message(bits: BitString) -> DigitString:
    '''Strict decoding: any invalid codeword or checksum failure is an error'''
    digits = tuple(decode_codeword(block, i) for i, block in enumerate(_blocks(bits)))
    if sum(digits) % 10:
        raise ChecksumMismatch(sum(digits))
    return digits[:-1]


def detect_and_correct(bits: BitString) -> CorrectionReport:
    '''Decode bits, repairing at most one corrupted codeword.
    Corruption is reported through the status, only BadLength is raised'''
    blocks = _blocks(bits)
    invalid = [i for i, block in enumerate(blocks) if weight(block) != CODEWORD_WEIGHT]

    if not invalid:
        digits = tuple(decode_codeword(block) for block in blocks)
        if sum(digits) % 10:
            return CorrectionReport(CorrectionStatus.uncorrectable,
                                    reason=f"all codewords are valid but the digit total {sum(digits)} "
                                           "is not a multiple of 10")
        return CorrectionReport(CorrectionStatus.clean, recovered=digits[:-1])

    if len(invalid) > 1:
        return CorrectionReport(CorrectionStatus.uncorrectable,
                                reason=f"{len(invalid)} codewords are invalid: blocks {invalid}")

    position = invalid[0]
    others = sum(decode_codeword(block) for i, block in enumerate(blocks) if i != position)
    needed = (-others) % 10
    if hamming_distance(CODEBOOK[needed], blocks[position]) != 1:
        return CorrectionReport(CorrectionStatus.uncorrectable,
                                position=position,
                                received=blocks[position],
                                reason=f"block {position} is not one bit away from the codeword "
                                       f"for the checksum digit {needed}")
    digits = tuple(needed if i == position else decode_codeword(block) for i, block in enumerate(blocks))
    logger.debug(f"Corrected block {position} to digit {needed}")
    return CorrectionReport(CorrectionStatus.corrected,
                            recovered=digits[:-1],
                            position=position,
                            received=blocks[position],
                            corrected_to=needed)


def parse_bits(text: str) -> BitString:
    bits = []
    for position, ch in enumerate(text):
        if ch in " \t" + GROUP_SEPARATOR:
            continue
        if ch not in "01":
            raise InvalidBit(position, ch)
        bits.append(int(ch))
    if not bits:
        raise EmptyInput("bit string")
    return tuple(bits)


def format_bits(bits: BitString, group: Optional[int] = None) -> str:
    text = "".join(str(b) for b in bits)
    if group is None:
        return text
    return GROUP_SEPARATOR.join(text[i:i + group] for i in range(0, len(text), group))
