import os

from bidict import bidict

DEBUG_ENV = os.environ.get("CHECKSIEVE_DEBUG", "")
LOG_FILE_ENV = os.environ.get("CHECKSIEVE_LOG_FILE", "")
SETTINGS_PREFIX = "CHECKSIEVE"

DEFAULT_TRIALS = 1000
DEFAULT_CAP = 10**7
DEFAULT_SEED = 0
DEFAULT_SAMPLE_SIZE = 1000
DEFAULT_WORKERS = 1
DEFAULT_SHOW = 10
WITNESS_SAMPLE_LIMIT = 3

# Characters accepted between digits on input and dropped
GROUPING_CHARACTERS = frozenset(" \t|-")
GROUP_SEPARATOR = "|"

AIRLINE_LENGTH = 15
AIRLINE_MODULUS = 7
ROUTING_LENGTH = 9
ROUTING_MODULUS = 10
ROUTING_WEIGHTS = (7, 3, 9)
LUHN_LENGTH = 16
LUHN_MODULUS = 10
ISBN_LENGTH = 10
ISBN_MODULUS = 11
ISBN_X = 10

CODEWORD_LENGTH = 5
CODEWORD_WEIGHT = 3

# Standard two-out-of-five postal table (two long bars per digit).
# Note: Do NOT use this table for encoding! The codebook in postnet.py is its complement.
postal_two_of_five = bidict({1: "00011",
                             2: "00101",
                             3: "00110",
                             4: "01001",
                             5: "01010",
                             6: "01100",
                             7: "10001",
                             8: "10010",
                             9: "10100",
                             0: "11000"})
