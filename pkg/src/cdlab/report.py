"""Structured evidence for one theorem check on one group."""

from __future__ import annotations

from dataclasses import dataclass, field

from cdlab.subgroups import Subgroup

SCHEMA = 1

THEOREM_IDS = ("T1", "C2", "C3", "T4", "T5", "T5COR", "T6", "PCONV")

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class TheoremReport:
    group_label: str
    order: int
    theorem_id: str
    applicable: bool
    verdict: str
    witnesses: list[tuple[str, object]] = field(default_factory=list)
    detail: str = ""
    restricted: bool = False

    def __post_init__(self):
        if self.theorem_id not in THEOREM_IDS:
            raise ValueError(f"unknown theorem id {self.theorem_id!r}")
        if (self.verdict == NOT_APPLICABLE) == self.applicable:
            raise ValueError("verdict must be not-applicable exactly when applicable is false")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def witness(self, name: str):
        for key, value in self.witnesses:
            if key == name:
                return value
        raise KeyError(name)

    def to_record(self) -> dict:
        return {
            "schema": SCHEMA,
            "group": self.group_label,
            "order": self.order,
            "theorem": self.theorem_id,
            "applicable": self.applicable,
            "verdict": self.verdict,
            "mode": "restricted" if self.restricted else "full",
            "witnesses": [{"name": k, "value": _serialize(v)} for k, v in self.witnesses],
            "detail": self.detail,
        }


def _serialize(value):
    if isinstance(value, Subgroup):
        return value.element_list()
    if isinstance(value, (list, tuple)):
        return [_serialize(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _serialize(v) for k, v in value.items()}
    if hasattr(value, "item"):
        return value.item()
    return value


class Checklist:
    """Collects named sub-checks; the first failure of each is kept as evidence."""

    def __init__(self):
        self.results: dict[str, bool] = {}
        self.failures: list[tuple[str, object]] = []

    def check(self, name: str, ok: bool, evidence=None) -> bool:
        ok = bool(ok)
        previous = self.results.get(name, True)
        self.results[name] = previous and ok
        if not ok and previous:
            self.failures.append((f"counterexample:{name}", evidence))
        return ok

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def summary(self) -> str:
        return "; ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in self.results.items())


def report(G, theorem_id: str, applicable: bool, ok: bool = True, witnesses=None, detail: str = "", restricted: bool = False) -> TheoremReport:
    verdict = NOT_APPLICABLE if not applicable else (PASS if ok else FAIL)
    return TheoremReport(
        group_label=G.label or "",
        order=G.order,
        theorem_id=theorem_id,
        applicable=applicable,
        verdict=verdict,
        witnesses=list(witnesses or []),
        detail=detail,
        restricted=restricted,
    )
