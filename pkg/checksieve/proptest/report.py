import json
from typing import Any, Optional

from ..constants import ISBN_X
from ..models import Environment, IsbnBody, RunMode, SummaryStyle, TestSummary

CGEN_HEADER = "**Summary of Cgen/testing**"
VERDICT_FALSIFIED = "Test? found a counterexample."
VERDICT_SUCCEEDED = "Test? succeeded. No counterexamples were found."


def render_value(value: Any) -> str:
    if isinstance(value, IsbnBody):
        check = "X" if value.check == ISBN_X else str(value.check)
        return "'(" + " ".join(str(d) for d in value.digits) + f" {check})"
    if isinstance(value, (tuple, list)):
        return "'(" + " ".join(render_value(v).removeprefix("'") for v in value) + ")"
    return str(value)


def render_environment(env: Environment) -> str:
    return "(" + " ".join(f"({name.upper()} {render_value(env[name])})" for name in sorted(env)) + ")"


def _format_cgen(s: TestSummary, limit: Optional[int]) -> str:
    lines = [CGEN_HEADER,
             f"We tested {s.tested} examples across 1 subgoals, of which {s.satisfied} ({s.unique} unique) "
             f"satisfied the hypotheses, and found {len(s.counterexamples)} counterexamples "
             f"and {s.witnesses_count} witnesses."]
    if s.counterexamples:
        shown = s.counterexamples if limit is None else s.counterexamples[:limit]
        lines += ["", "We falsified the conjecture. Here are counterexamples:"]
        lines += [f" -- {render_environment(env)}" for env in shown]
        if len(shown) < len(s.counterexamples):
            lines.append(f" -- ... and {len(s.counterexamples) - len(shown)} more")
    if s.witnesses_sample:
        lines += ["", "Cases in which the conjecture is true include:"]
        lines += [f" -- {render_environment(env)}" for env in s.witnesses_sample]
    lines += ["", VERDICT_FALSIFIED if s.counterexamples else VERDICT_SUCCEEDED]
    return "\n".join(lines)


def _to_json(value: Any) -> Any:
    if isinstance(value, IsbnBody):
        return {"digits": list(value.digits), "check": value.check}
    if isinstance(value, (tuple, list)):
        return [_to_json(v) for v in value]
    return value


def _from_json(value: Any) -> Any:
    if isinstance(value, dict) and set(value) == {"digits", "check"}:
        return IsbnBody(tuple(value["digits"]), value["check"])
    if isinstance(value, list):
        return tuple(_from_json(v) for v in value)
    return value


def summary_to_dict(s: TestSummary) -> dict[str, Any]:
    return {
        "property": s.property_name,
        "mode": s.mode.value,
        "seed": s.seed,
        "trials": s.trials,
        "tested": s.tested,
        "satisfied": s.satisfied,
        "unique": s.unique,
        "counterexamples": [{k: _to_json(v) for k, v in env.items()} for env in s.counterexamples],
        "witnesses": s.witnesses_count,
        "witnesses_sample": [{k: _to_json(v) for k, v in env.items()} for env in s.witnesses_sample],
        "vacuous": s.vacuous,
    }


def summary_from_json(text: str) -> TestSummary:
    '''Rebuild a TestSummary from its json rendering'''
    data = json.loads(text)
    return TestSummary(property_name=data["property"],
                       mode=RunMode(data["mode"]),
                       tested=data["tested"],
                       satisfied=data["satisfied"],
                       unique=data["unique"],
                       counterexamples=tuple({k: _from_json(v) for k, v in env.items()}
                                             for env in data["counterexamples"]),
                       witnesses_count=data["witnesses"],
                       witnesses_sample=tuple({k: _from_json(v) for k, v in env.items()}
                                              for env in data["witnesses_sample"]),
                       vacuous=data["vacuous"],
                       seed=data["seed"],
                       trials=data["trials"])


def format_summary(s: TestSummary, style: SummaryStyle = SummaryStyle.cgen, limit: Optional[int] = None) -> str:
    '''Render a summary as the cgen text block or as json.
    limit only shortens the cgen counterexample listing'''
    if SummaryStyle(style) == SummaryStyle.json:
        return json.dumps(summary_to_dict(s), indent=2)
    return _format_cgen(s, limit)
