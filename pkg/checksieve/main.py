"""
Command line front end.

Exit status: 0 valid / passed / no counterexample, 1 invalid / counterexample
found, 2 usage or input error.
"""
import argparse
import sys
from typing import Optional

from .constants import DEFAULT_SEED, DEFAULT_SHOW, CODEWORD_LENGTH
from .corpus import corpus_verify, format_corpus_report, format_instance, parse_instance
from .digits import format_digit_string, parse_digit_string
from .errors import ChecksieveError, ChecksumMismatch, InvalidCodeword
from .global_names import app_title, logger, settings
from .models import CorrectionStatus, SchemeId, SummaryStyle
from .mutate import Mutation, MutationKind, is_effective
from .postnet import decode_message, detect_and_correct, encode_message, format_bits, parse_bits
from .properties import catalog, exhaustive_property, family_violations, lookup
from .proptest import format_summary, run_exhaustive, run_property
from .schemes import complete_check_digit, scheme_spec

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def read_input(value: str) -> str:
    "A flag value of - means read from stdin"
    if value == "-":
        return sys.stdin.read().strip()
    return value


def cmd_verify(args: argparse.Namespace) -> int:
    scheme = SchemeId(args.scheme)
    value = parse_instance(scheme, read_input(args.digits))
    if scheme_spec(scheme).validate(value):
        print("VALID")
        return EXIT_OK
    print("INVALID")
    return EXIT_FAIL


def cmd_complete(args: argparse.Namespace) -> int:
    body = parse_digit_string(read_input(args.digits))
    print(format_instance(complete_check_digit(SchemeId(args.scheme), body)))
    return EXIT_OK


def cmd_mutate(args: argparse.Namespace) -> int:
    kind = MutationKind(args.op)
    text = read_input(args.digits)
    values = parse_bits(text) if kind == MutationKind.flipbit else parse_digit_string(text)
    if kind == MutationKind.substitute and args.digit is None:
        logger.error("--digit is required for --op substitute")
        return EXIT_ERROR
    mutated = Mutation(kind, args.pos, len(values), args.digit).apply(values)
    print(format_bits(mutated) if kind == MutationKind.flipbit else format_digit_string(mutated))
    if not is_effective(values, mutated):
        logger.warning("The mutation did not change the input")
    return EXIT_OK


def cmd_postnet_encode(args: argparse.Namespace) -> int:
    bits = encode_message(parse_digit_string(read_input(args.digits)))
    print(format_bits(bits, CODEWORD_LENGTH if args.grouped else None))
    return EXIT_OK


def cmd_postnet_decode(args: argparse.Namespace) -> int:
    bits = parse_bits(read_input(args.bits))
    try:
        digits = decode_message(bits)
    except (InvalidCodeword, ChecksumMismatch) as e:
        print(f"INVALID: {e}")
        return EXIT_FAIL
    print(format_digit_string(digits))
    return EXIT_OK


def cmd_postnet_correct(args: argparse.Namespace) -> int:
    report = detect_and_correct(parse_bits(read_input(args.bits)))
    match report.status:
        case CorrectionStatus.clean:
            print(f"Clean: {format_digit_string(report.recovered or ())}")
        case CorrectionStatus.corrected:
            print(f"CorrectedDigit: block {report.position} "
                  f"{format_bits(report.received or ())} -> {report.corrected_to}: "
                  f"{format_digit_string(report.recovered or ())}")
        case CorrectionStatus.uncorrectable:
            print(f"Uncorrectable: {report.reason}")
            return EXIT_FAIL
    return EXIT_OK


def cmd_prop_list(args: argparse.Namespace) -> int:
    _ = args
    for entry in catalog():
        expected = entry.expected.value
        if entry.family_text:
            expected += f" ({entry.family_text})"
        print(f"{entry.name:<4} {entry.slug:<32} {expected}")
    return EXIT_OK


def _show_limit(args: argparse.Namespace) -> Optional[int]:
    show = args.show if args.show is not None else settings.value("show", DEFAULT_SHOW, type=int)
    return None if show < 0 else show


def cmd_prop_run(args: argparse.Namespace) -> int:
    entry = lookup(args.name)
    summary = run_property(entry.property, trials=args.trials, seed=args.seed, workers=args.workers)
    print(format_summary(summary, SummaryStyle(args.format), limit=_show_limit(args)))
    return EXIT_FAIL if summary.falsified else EXIT_OK


def cmd_prop_exhaustive(args: argparse.Namespace) -> int:
    entry = lookup(args.name)
    summary = run_exhaustive(exhaustive_property(entry, args.sample_size, args.seed))
    if entry.family is not None:
        stray = family_violations(entry, summary)
        logger.info(f"{len(summary.counterexamples) - len(stray)} counterexamples match "
                    f"'{entry.family_text}', {len(stray)} do not")
    print(format_summary(summary, SummaryStyle(args.format), limit=_show_limit(args)))
    return EXIT_FAIL if summary.falsified else EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    report = corpus_verify(SchemeId(args.scheme), args.path)
    print(format_corpus_report(report))
    return EXIT_OK if report.all_valid else EXIT_FAIL


def _add_scheme(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", required=True, choices=[s.value for s in SchemeId])


def _add_summary_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--name", required=True, help="catalog name (C1..C12) or slug")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--format", choices=[s.value for s in SummaryStyle], default=SummaryStyle.cgen.value)
    parser.add_argument("--show", type=int, default=None,
                        help="counterexample lines in cgen output, negative for all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="checksieve", description=app_title(include_version=True) +
                                     ": check digits, error models and randomized property testing")
    parser.add_argument("--version", action="version", version=app_title(include_version=True))
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="validate a number under a scheme")
    _add_scheme(verify)
    verify.add_argument("--digits", required=True, help="the number, or - for stdin")
    verify.set_defaults(handler=cmd_verify)

    complete = commands.add_parser("complete", help="append the check digit to a body")
    _add_scheme(complete)
    complete.add_argument("--digits", required=True, help="the body, or - for stdin")
    complete.set_defaults(handler=cmd_complete)

    mutate = commands.add_parser("mutate", help="inject one error")
    mutate.add_argument("--op", required=True, choices=[k.value for k in MutationKind])
    mutate.add_argument("--pos", required=True, type=int)
    mutate.add_argument("--digit", type=int)
    mutate.add_argument("--digits", "--bits", dest="digits", required=True,
                        help="digits (bits for flipbit), or - for stdin")
    mutate.set_defaults(handler=cmd_mutate)

    postnet = commands.add_parser("postnet", help="barcode encoding with single-error correction")
    postnet_commands = postnet.add_subparsers(dest="postnet_command", required=True)
    encode = postnet_commands.add_parser("encode")
    encode.add_argument("--digits", required=True)
    encode.add_argument("--grouped", action="store_true", help="separate codewords with |")
    encode.set_defaults(handler=cmd_postnet_encode)
    decode = postnet_commands.add_parser("decode")
    decode.add_argument("--bits", required=True)
    decode.set_defaults(handler=cmd_postnet_decode)
    correct = postnet_commands.add_parser("correct")
    correct.add_argument("--bits", required=True)
    correct.set_defaults(handler=cmd_postnet_correct)

    prop = commands.add_parser("prop", help="catalogued conjectures")
    prop_commands = prop.add_subparsers(dest="prop_command", required=True)
    prop_commands.add_parser("list").set_defaults(handler=cmd_prop_list)
    run = prop_commands.add_parser("run", help="randomized testing")
    _add_summary_options(run)
    run.add_argument("--trials", type=int, default=None)
    run.add_argument("--workers", type=int, default=None)
    run.set_defaults(handler=cmd_prop_run)
    exhaustive = prop_commands.add_parser("exhaustive", help="total search over sampled valid instances")
    _add_summary_options(exhaustive)
    exhaustive.add_argument("--sample-size", type=int, default=None)
    exhaustive.set_defaults(handler=cmd_prop_exhaustive)

    corpus = commands.add_parser("corpus", help="validate every line of a file")
    _add_scheme(corpus)
    corpus.add_argument("--path", required=True, help="plain, .gz, .bz2 or .xz file, or - for stdin")
    corpus.set_defaults(handler=cmd_corpus)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return int(args.handler(args))
    except (ChecksieveError, ValueError, OSError) as e:
        logger.error(str(e))
        return EXIT_ERROR
