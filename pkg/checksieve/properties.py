"""Catalog of error-detection conjectures for each scheme, with their known verdicts"""
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Optional

from .constants import DEFAULT_SAMPLE_SIZE, DEFAULT_SEED, AIRLINE_LENGTH, ISBN_X
from .errors import UnknownProperty
from .global_names import settings
from .models import Environment, Expectation, IsbnBody, SchemeId, TestSummary
from .mutate import change_nth_digit, flip_bit, is_effective, replace_nth, transpose_nth
from .postnet import decode_message, detect_and_correct, encode_message
from .proptest import (TypeDef, Property, NatRange, DigitT, DigitList, IsbnT, OneOf,
                       Fixed, Bounded, Sized)
from .schemes import Instance, scheme_spec

Mutator = Callable[[Environment, str], tuple[int, ...]]


@dataclass(frozen=True)
class CatalogEntry:
    '''Represents a catalogued conjecture and the verdict it is known to have'''
    name: str
    slug: str
    property: Property
    expected: Expectation
    note: str
    family_text: Optional[str] = None
    family: Optional[Callable[[Environment], bool]] = None
    scheme: Optional[SchemeId] = None
    instance: Optional[str] = None
    small_domain: Optional[TypeDef] = None


def _values(instance: Any) -> tuple[int, ...]:
    return instance.values if isinstance(instance, IsbnBody) else tuple(instance)


def _substitute(env: Environment, var: str) -> tuple[int, ...]:
    return change_nth_digit(env[var], env["n"], env["d"])


def _substitute_value(env: Environment, var: str) -> tuple[int, ...]:
    return replace_nth(_values(env[var]), env["n"], env["d"])


def _transpose(env: Environment, var: str) -> tuple[int, ...]:
    return transpose_nth(_values(env[var]), env["n"])


def mutation_property(name: str, scheme: SchemeId, var: str, bindings: tuple[tuple[str, TypeDef], ...],
                      mutator: Mutator, guarded: bool = True) -> Property:
    '''valid(x) and mutant differs from x  ==>  mutant is not valid
    The mutator must keep the shape of a well-formed instance'''
    spec = scheme_spec(scheme)
    # exhaustive runs repeat each instance across consecutive environments
    instance_valid = lru_cache(maxsize=1024)(spec.accepts)

    def hypothesis(env: Environment) -> bool:
        if not instance_valid(env[var]):
            return False
        return not guarded or is_effective(_values(env[var]), mutator(env, var))

    def conclusion(env: Environment) -> bool:
        return not spec.validate_values(mutator(env, var))

    return Property(name, bindings, hypothesis, conclusion)


def _mod7_substitution(env: Environment) -> bool:
    ticket, n, d = env["ticket"], env["n"], env["d"]
    return n < AIRLINE_LENGTH - 1 and abs(d - ticket[n]) == 7


def _adjacent_gap(var: str, gap: int) -> Callable[[Environment], bool]:
    def family(env: Environment) -> bool:
        values = _values(env[var])
        return abs(values[env["n"]] - values[env["n"] + 1]) == gap
    return family


def _zero_nine_swap(env: Environment) -> bool:
    card, n = env["card"], env["n"]
    return {card[n], card[n + 1]} == {0, 9}


def _roundtrip_hypothesis(env: Environment) -> bool:
    return len(env["ds"]) >= 1


def _roundtrip_conclusion(env: Environment) -> bool:
    return decode_message(encode_message(env["ds"])) == env["ds"]


def _flip_hypothesis(env: Environment) -> bool:
    ds = env["ds"]
    return len(ds) >= 1 and env["i"] < 5 * (len(ds) + 1)


def _flip_conclusion(env: Environment) -> bool:
    report = detect_and_correct(flip_bit(encode_message(env["ds"]), env["i"]))
    return report.recovered == env["ds"]


def _build_catalog() -> tuple[CatalogEntry, ...]:
    ticket15 = ("ticket", DigitList(Fixed(15)))
    route9 = ("route", DigitList(Fixed(9)))
    card16 = ("card", DigitList(Fixed(16)))
    isbn = ("isbn", IsbnT())
    d = ("d", DigitT())
    airline, routing, luhn, isbn10 = SchemeId.airline, SchemeId.routing, SchemeId.luhn, SchemeId.isbn10
    return (
        CatalogEntry("C1", "airline-substitution",
                     mutation_property("C1", airline, "ticket", (ticket15, ("n", NatRange(0, 14)), d), _substitute),
                     Expectation.expect_counterexample,
                     "A digit replaced by one equivalent mod 7 goes unnoticed.",
                     family_text="substituted pair congruent mod 7, position < 14",
                     family=_mod7_substitution, scheme=airline, instance="ticket"),
        CatalogEntry("C2", "airline-substitution-vacuous",
                     mutation_property("C2", airline, "ticket",
                                       (("ticket", DigitList(Sized(20))), ("n", NatRange(0, 14)), d), _substitute),
                     Expectation.expect_vacuous,
                     "Free-length digit lists almost never form a valid ticket, so nothing gets tested.",
                     family_text="substituted pair congruent mod 7, position < 14",
                     family=_mod7_substitution, scheme=airline, instance="ticket"),
        CatalogEntry("C3", "routing-substitution",
                     mutation_property("C3", routing, "route", (route9, ("n", NatRange(0, 8)), d), _substitute),
                     Expectation.expect_true,
                     "Weights 7, 3 and 9 are relatively prime to 10, so every 1-digit error is caught.",
                     scheme=routing, instance="route"),
        CatalogEntry("C4", "routing-transposition",
                     mutation_property("C4", routing, "route", (route9, ("n", NatRange(0, 7))), _transpose),
                     Expectation.expect_counterexample,
                     "Swapping digits that differ by 5 goes unnoticed, and 5 divides 10.",
                     family_text="adjacent digits differing by 5",
                     family=_adjacent_gap("route", 5), scheme=routing, instance="route"),
        CatalogEntry("C5", "luhn-substitution",
                     mutation_property("C5", luhn, "card", (card16, ("n", NatRange(0, 15)), d), _substitute),
                     Expectation.expect_true,
                     "Doubling with digit folding permutes the digits, so every 1-digit error is caught.",
                     scheme=luhn, instance="card"),
        CatalogEntry("C6", "luhn-transposition",
                     mutation_property("C6", luhn, "card", (card16, ("n", NatRange(0, 14))), _transpose),
                     Expectation.expect_counterexample,
                     "Only swapping an adjacent 0 and 9 goes unnoticed; random runs may miss it.",
                     family_text="adjacent 0 and 9",
                     family=_zero_nine_swap, scheme=luhn, instance="card"),
        CatalogEntry("C7", "isbn-substitution",
                     mutation_property("C7", isbn10, "isbn",
                                       (isbn, ("n", NatRange(0, 9)), ("d", NatRange(0, ISBN_X))), _substitute_value),
                     Expectation.expect_true,
                     "11 is prime, so it is relatively prime to every weight.",
                     scheme=isbn10, instance="isbn"),
        CatalogEntry("C8", "isbn-transposition",
                     mutation_property("C8", isbn10, "isbn", (isbn, ("n", NatRange(0, 8))), _transpose),
                     Expectation.expect_true,
                     "Adjacent weights differ by 1, which is relatively prime to 11.",
                     scheme=isbn10, instance="isbn"),
        CatalogEntry("C9", "postnet-roundtrip",
                     Property("C9", (("ds", DigitList(Bounded(12))),), _roundtrip_hypothesis, _roundtrip_conclusion),
                     Expectation.expect_true,
                     "Barcode encode and decode are inverses.",
                     instance="ds", small_domain=DigitList(Bounded(3))),
        CatalogEntry("C10", "postnet-correction",
                     Property("C10", (("ds", DigitList(Bounded(12))), ("i", NatRange(0, 64))),
                              _flip_hypothesis, _flip_conclusion),
                     Expectation.expect_true,
                     "Any single flipped bit is located by codeword weight and repaired from the check digit.",
                     instance="ds", small_domain=DigitList(Bounded(3))),
        CatalogEntry("C11", "airline-substitution-unguarded",
                     mutation_property("C11", airline, "ticket", (ticket15, ("n", NatRange(0, 14)), d), _substitute,
                                       guarded=False),
                     Expectation.expect_counterexample,
                     "Without the effectiveness hypothesis, replacing a digit by itself counts as an undetected error.",
                     family_text="no-op substitution, or substituted pair congruent mod 7 at position < 14",
                     family=lambda env: env["d"] == env["ticket"][env["n"]] or _mod7_substitution(env),
                     scheme=airline, instance="ticket"),
        CatalogEntry("C12", "airline-transposition",
                     mutation_property("C12", airline, "ticket", (ticket15, ("n", NatRange(0, 13))), _transpose),
                     Expectation.expect_counterexample,
                     "Swapping adjacent body digits that differ by 7 goes unnoticed. "
                     "The check digit is at most 6, so swaps involving it are caught.",
                     family_text="adjacent digits differing by 7",
                     family=_adjacent_gap("ticket", 7), scheme=airline, instance="ticket"),
    )


@lru_cache(maxsize=1)
def _catalog() -> tuple[CatalogEntry, ...]:
    return _build_catalog()


def catalog() -> list[CatalogEntry]:
    return list(_catalog())


def lookup(name: str) -> CatalogEntry:
    for entry in _catalog():
        if name.upper() == entry.name or name.lower() == entry.slug:
            return entry
    raise UnknownProperty(name)


def valid_instance_sampler(scheme: SchemeId, seed: int, count: int) -> list[Instance]:
    '''count valid instances of scheme: a random body completed with its check value'''
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    spec = scheme_spec(scheme)
    rng = random.Random(f"sampler:{spec.id.value}:{seed}")
    return [spec.complete(tuple(rng.randrange(10) for _ in range(spec.body_length))) for _ in range(count)]


def exhaustive_property(entry: CatalogEntry,
                        sample_size: Optional[int] = None,
                        seed: Optional[int] = None) -> Property:
    '''The entry's property with its instance domain made small enough to enumerate'''
    if sample_size is None:
        sample_size = settings.value("sample_size", DEFAULT_SAMPLE_SIZE, type=int)
    if seed is None:
        seed = DEFAULT_SEED
    if entry.scheme is not None and entry.instance is not None:
        instances = valid_instance_sampler(entry.scheme, seed, sample_size)
        return entry.property.rebind(entry.instance, OneOf(tuple(instances)))
    if entry.small_domain is not None and entry.instance is not None:
        return entry.property.rebind(entry.instance, entry.small_domain)
    return entry.property


def family_violations(entry: CatalogEntry, summary: TestSummary) -> list[Environment]:
    '''Counterexamples the entry's explanation does not account for'''
    if entry.family is None:
        return list(summary.counterexamples)
    return [env for env in summary.counterexamples if not entry.family(env)]
