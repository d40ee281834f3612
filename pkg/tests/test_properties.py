from functools import lru_cache

import pytest

from checksieve.errors import UnknownProperty
from checksieve.models import Expectation, Outcome, SchemeId
from checksieve.properties import (catalog, exhaustive_property, family_violations, lookup,
                                   valid_instance_sampler)
from checksieve.proptest import domain_size, reevaluate, run_exhaustive, run_property
from checksieve.schemes import scheme_spec

SAMPLE_SIZE = 1000


@lru_cache(maxsize=None)
def exhaustive_summary(name):
    return run_exhaustive(exhaustive_property(lookup(name), sample_size=SAMPLE_SIZE, seed=0))


def samples(scheme):
    return valid_instance_sampler(scheme, 0, SAMPLE_SIZE)


def test_catalog_names():
    names = [entry.name for entry in catalog()]
    assert names == [f"C{i}" for i in range(1, 13)]
    assert len({entry.slug for entry in catalog()}) == len(names)


def test_lookup():
    assert lookup("C4").slug == "routing-transposition"
    assert lookup("c4").name == "C4"
    assert lookup("luhn-transposition").name == "C6"
    with pytest.raises(UnknownProperty):
        lookup("C99")
    with pytest.raises(KeyError):
        lookup("nonsense")


@pytest.mark.parametrize("scheme", list(SchemeId))
def test_sampler_produces_valid_instances(scheme):
    spec = scheme_spec(scheme)
    instances = valid_instance_sampler(scheme, 3, 50)
    assert len(instances) == 50
    assert all(spec.validate(x) for x in instances)
    assert instances == valid_instance_sampler(scheme, 3, 50)
    assert instances != valid_instance_sampler(scheme, 4, 50)


def test_sampler_needs_a_positive_count():
    with pytest.raises(ValueError):
        valid_instance_sampler(SchemeId.routing, 0, 0)


@pytest.mark.parametrize("entry", [e for e in catalog() if e.expected != Expectation.expect_vacuous],
                         ids=lambda e: e.name)
def test_catalog_verdicts_hold_exhaustively(entry):
    summary = exhaustive_summary(entry.name)
    assert summary.tested == domain_size(exhaustive_property(entry, sample_size=SAMPLE_SIZE, seed=0))
    assert summary.satisfied == len(summary.counterexamples) + summary.witnesses_count
    assert not summary.vacuous
    if entry.expected == Expectation.expect_true:
        assert not summary.falsified
    else:
        assert summary.falsified
        assert family_violations(entry, summary) == []
    for env in summary.counterexamples[:50]:
        assert reevaluate(entry.property, env) == Outcome.counterexample


def test_airline_substitution_misses_exactly_mod_7_pairs():
    expected = [{"ticket": t, "n": n, "d": d}
                for t in samples(SchemeId.airline)
                for n in range(15)
                for d in range(10)
                if n < 14 and abs(d - t[n]) == 7]
    assert list(exhaustive_summary("C1").counterexamples) == expected


def test_airline_counterexample_from_a_zero_heavy_ticket():
    env = {"ticket": (4, 2) + (0,) * 13, "n": 11, "d": 7}
    assert reevaluate(lookup("C1").property, env) == Outcome.counterexample
    assert lookup("C1").family(env)


def test_free_length_tickets_are_vacuous():
    entry = lookup("C2")
    assert entry.expected == Expectation.expect_vacuous
    for seed in range(3):
        summary = run_property(entry.property, trials=3000, seed=seed)
        assert summary.tested == 3000
        assert summary.satisfied <= 1
        assert summary.vacuous == (summary.satisfied == 0)


def test_routing_substitutions_are_all_detected():
    summary = exhaustive_summary("C3")
    assert summary.tested == SAMPLE_SIZE * 9 * 10
    assert not summary.counterexamples


def test_routing_transposition_misses_exactly_gap_5():
    expected = [{"route": r, "n": n}
                for r in samples(SchemeId.routing)
                for n in range(8)
                if abs(r[n] - r[n + 1]) == 5]
    assert list(exhaustive_summary("C4").counterexamples) == expected


def test_routing_transposition_counterexample_route():
    env = {"route": (3, 8, 8, 0, 0, 7, 0, 0, 0), "n": 0}
    assert reevaluate(lookup("C4").property, env) == Outcome.counterexample


def test_luhn_substitutions_are_all_detected():
    assert not exhaustive_summary("C5").counterexamples


def test_luhn_transposition_misses_exactly_zero_nine():
    expected = [{"card": c, "n": n}
                for c in samples(SchemeId.luhn)
                for n in range(15)
                if {c[n], c[n + 1]} == {0, 9}]
    assert expected
    assert list(exhaustive_summary("C6").counterexamples) == expected


@pytest.mark.parametrize("name", ["C7", "C8"])
def test_isbn_catches_every_single_error(name):
    summary = exhaustive_summary(name)
    assert summary.satisfied > 0
    assert not summary.counterexamples


def test_postnet_round_trip_and_correction_on_short_messages():
    roundtrip = exhaustive_summary("C9")
    assert roundtrip.tested == 1111
    assert roundtrip.satisfied == 1110
    assert not roundtrip.counterexamples
    correction = exhaustive_summary("C10")
    assert correction.satisfied == 10 * 10 + 100 * 15 + 1000 * 20
    assert not correction.counterexamples


def test_postnet_random_longer_messages():
    assert not run_property(lookup("C9").property, trials=10_000, seed=0).counterexamples
    summary = run_property(lookup("C10").property, trials=5000, seed=0)
    assert summary.satisfied > 0
    assert not summary.counterexamples


def test_unguarded_substitution_counts_no_ops():
    summary = exhaustive_summary("C11")
    no_ops = [env for env in summary.counterexamples if env["d"] == env["ticket"][env["n"]]]
    assert len(no_ops) == SAMPLE_SIZE * 15
    assert len(summary.counterexamples) == len(no_ops) + len(exhaustive_summary("C1").counterexamples)


def test_airline_transposition_never_moves_the_check_digit_unnoticed():
    summary = exhaustive_summary("C12")
    assert summary.counterexamples
    assert all(env["n"] < 13 for env in summary.counterexamples)


def test_random_airline_run_finds_a_mod_7_substitution():
    entry = lookup("C1")
    summary = run_property(entry.property, trials=2000, seed=42)
    assert summary.falsified
    assert family_violations(entry, summary) == []
