import bz2
import contextlib
import gzip
import lzma
import sys
from typing import ContextManager, TextIO

from .digits import format_digit_string, format_isbn, parse_digit_string, parse_isbn
from .errors import ChecksieveError
from .global_names import logger
from .models import CorpusLine, CorpusReport, SchemeId
from .schemes import Instance, scheme_spec


def zopen(path: str) -> TextIO:
    if path.endswith('.xz'):
        return lzma.open(path, 'rt', encoding='utf-8')  # type:ignore
    if path.endswith('.gz'):
        return gzip.open(path, 'rt', encoding='utf-8')  # type:ignore
    if path.endswith('.bz2'):
        return bz2.open(path, 'rt', encoding='utf-8')  # type:ignore
    return open(path, 'rt', encoding='utf-8')  # type:ignore


def open_corpus(path: str) -> ContextManager[TextIO]:
    if path == "-":
        # stdin stays open
        return contextlib.nullcontext(sys.stdin)
    return zopen(path)


def parse_instance(scheme: SchemeId, text: str) -> Instance:
    "ISBNs may end in X, everything else is a plain digit string"
    if scheme == SchemeId.isbn10:
        return parse_isbn(text)
    return parse_digit_string(text)


def format_instance(value: Instance) -> str:
    if isinstance(value, tuple):
        return format_digit_string(value)
    return format_isbn(value)


def check_line(scheme: SchemeId, lineno: int, text: str) -> CorpusLine:
    line = CorpusLine(lineno, text)
    try:
        line.valid = scheme_spec(scheme).validate(parse_instance(scheme, text))
    except ChecksieveError as e:
        logger.warning(f"Line {lineno}: {e}")
        line.error = f"{type(e).__name__}: {e}"
    return line


def corpus_verify(scheme: SchemeId, path: str) -> CorpusReport:
    '''Check every line of a corpus file (or stdin for "-"); blank lines and # comments are skipped'''
    report = CorpusReport(SchemeId(scheme))
    with open_corpus(path) as f:
        for lineno, raw in enumerate(f, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            report.lines.append(check_line(report.scheme, lineno, text))
    logger.info(f"Checked {len(report.lines)} lines of {path}")
    return report


def format_corpus_report(report: CorpusReport) -> str:
    lines = []
    for line in report.lines:
        if line.error is not None:
            status = f"ERROR({line.error})"
        else:
            status = "VALID" if line.valid else "INVALID"
        lines.append(f"{line.lineno}: {status}")
    lines.append(f"{report.n_valid}/{len(report.lines)} valid")
    return "\n".join(lines)
