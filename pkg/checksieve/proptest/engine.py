import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional

from ..constants import DEFAULT_CAP, DEFAULT_SEED, DEFAULT_TRIALS, DEFAULT_WORKERS, WITNESS_SAMPLE_LIMIT
from ..errors import DomainTooLarge, PredicateFailure
from ..global_names import logger, settings
from ..models import Environment, Outcome, RunMode, TestSummary, UnitResult
from ..tools import chunked, profile
from .report import render_value
from .types import TypeDef

Predicate = Callable[[Environment], bool]


@dataclass(frozen=True)
class Property:
    '''Represents a conjecture: typed bindings, a hypothesis and a conclusion'''
    name: str
    bindings: tuple[tuple[str, TypeDef], ...]
    hypothesis: Predicate
    conclusion: Predicate

    def __post_init__(self) -> None:
        names = self.variables
        if len(set(names)) != len(names):
            raise ValueError(f"Property {self.name} binds a variable twice: {names}")

    @property
    def variables(self) -> list[str]:
        return [name for name, _ in self.bindings]

    def rebind(self, name: str, t: TypeDef) -> "Property":
        "Same property with the domain of one variable replaced"
        if name not in self.variables:
            raise KeyError(f"Property {self.name} has no variable {name}")
        bindings = tuple((n, t if n == name else old) for n, old in self.bindings)
        return Property(self.name, bindings, self.hypothesis, self.conclusion)


def trial_rng(seed: int, index: int) -> random.Random:
    "Random source for one trial, independent of every other trial"
    return random.Random(f"{seed}:{index}")


def generate_environment(p: Property, rng: random.Random) -> Environment:
    return {name: t.generate(rng) for name, t in p.bindings}


def reevaluate(p: Property, env: Environment) -> Outcome:
    '''Classify one environment as filtered, witness or counterexample'''
    try:
        if not p.hypothesis(env):
            return Outcome.filtered
    except Exception as e:  # pylint: disable=broad-except
        raise PredicateFailure(env, f"hypothesis of {p.name} raised {e!r}") from e
    try:
        return Outcome.witness if p.conclusion(env) else Outcome.counterexample
    except Exception as e:  # pylint: disable=broad-except
        raise PredicateFailure(env, f"conclusion of {p.name} raised {e!r}") from e


def _freeze(env: Environment) -> tuple[tuple[str, Any], ...]:
    return tuple(sorted(env.items()))


class _Tally:
    '''Accumulates outcomes in the order they are added'''

    def __init__(self) -> None:
        self.tested = 0
        self.counterexamples: list[Environment] = []
        self.witnesses_count = 0
        self.witnesses_sample: list[Environment] = []
        self.unique: set[tuple[tuple[str, Any], ...]] = set()

    def add(self, env: Environment, outcome: Outcome) -> None:
        self.tested += 1
        if outcome == Outcome.filtered:
            return
        self.unique.add(_freeze(env))
        if outcome == Outcome.counterexample:
            self.counterexamples.append(env)
        else:
            self.witnesses_count += 1
            if len(self.witnesses_sample) < WITNESS_SAMPLE_LIMIT:
                self.witnesses_sample.append(env)

    def summary(self, name: str, mode: RunMode,
                seed: Optional[int] = None, trials: Optional[int] = None) -> TestSummary:
        satisfied = len(self.counterexamples) + self.witnesses_count
        return TestSummary(property_name=name,
                           mode=mode,
                           tested=self.tested,
                           satisfied=satisfied,
                           unique=len(self.unique),
                           counterexamples=tuple(self.counterexamples),
                           witnesses_count=self.witnesses_count,
                           witnesses_sample=tuple(self.witnesses_sample),
                           vacuous=satisfied == 0,
                           seed=seed,
                           trials=trials)


def _run_trials(p: Property, seed: int, indices: Iterable[int]) -> list[tuple[Environment, Outcome]]:
    results = []
    for index in indices:
        env = generate_environment(p, trial_rng(seed, index))
        results.append((env, reevaluate(p, env)))
    return results


@profile
def run_property(p: Property,
                 trials: Optional[int] = None,
                 seed: Optional[int] = None,
                 workers: Optional[int] = None) -> TestSummary:
    '''Random testing with hypothesis filtering.
    The same (p, trials, seed) gives the same summary for any number of workers'''
    if trials is None:
        trials = settings.value("trials", DEFAULT_TRIALS, type=int)
    if seed is None:
        seed = DEFAULT_SEED
    if workers is None:
        workers = settings.value("workers", DEFAULT_WORKERS, type=int)
    if trials < 1:
        raise ValueError(f"At least one trial is required, got {trials}")
    workers = max(1, workers)
    logger.info(f"Testing {p.name}: {trials} random trials, seed {seed}, {workers} worker(s)")

    tally = _Tally()
    if workers == 1:
        batches = [_run_trials(p, seed, range(trials))]
    else:
        chunks = list(chunked(range(trials), math.ceil(trials / workers)))
        with ThreadPoolExecutor(max_workers=workers) as executor:
            # map yields in submission order, so trial order is preserved
            batches = list(executor.map(lambda chunk: _run_trials(p, seed, chunk), chunks))
    for batch in batches:
        for env, outcome in batch:
            tally.add(env, outcome)

    summary = tally.summary(p.name, RunMode.random, seed=seed, trials=trials)
    logger.info(f"{p.name}: {summary.satisfied} of {summary.tested} satisfied the hypotheses, "
                f"{len(summary.counterexamples)} counterexamples")
    return summary


def domain_size(p: Property) -> Optional[int]:
    sizes = [t.size() for _, t in p.bindings]
    if any(s is None for s in sizes):
        return None
    return math.prod(s for s in sizes if s is not None)


@profile
def run_exhaustive(p: Property, cap: Optional[int] = None) -> TestSummary:
    '''Evaluate every environment of the product domain once, in enumeration order'''
    if cap is None:
        cap = settings.value("cap", DEFAULT_CAP, type=int)
    size = domain_size(p)
    if size is None or size > cap:
        raise DomainTooLarge(size, cap)
    logger.info(f"Testing {p.name}: all {size} environments")

    names = p.variables
    tally = _Tally()
    for combo in itertools.product(*(t.values() for _, t in p.bindings)):
        env = dict(zip(names, combo))
        tally.add(env, reevaluate(p, env))

    summary = tally.summary(p.name, RunMode.exhaustive)
    logger.info(f"{p.name}: {summary.satisfied} of {summary.tested} satisfied the hypotheses, "
                f"{len(summary.counterexamples)} counterexamples")
    return summary


def check_expect(actual: Any, expected: Any) -> UnitResult:
    return UnitResult(passed=actual == expected,
                      actual=render_value(actual),
                      expected=render_value(expected))
