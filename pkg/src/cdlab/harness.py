"""Batch verification over a catalog, plus report and diagram emission."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from cdlab.catalog import Catalog, CatalogEntry
from cdlab.families import named
from cdlab.group import DEFAULT_MAX_ORDER, Group
from cdlab.lattice import cd_lattice, lattice_dot
from cdlab.report import FAIL, NOT_APPLICABLE, PASS, SCHEMA, THEOREM_IDS, TheoremReport
from cdlab.theorems import VERIFIERS

BUCKETS = (PASS, FAIL, NOT_APPLICABLE, "restricted")


@dataclass
class HarnessRun:
    catalog: Catalog
    theorems: tuple[str, ...]
    reports: list[TheoremReport] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict[str, dict[str, int]]:
        counts = {t: dict.fromkeys(BUCKETS, 0) for t in self.theorems}
        for r in self.reports:
            counts[r.theorem_id][bucket(r)] += 1
        return counts

    @property
    def failed(self) -> bool:
        return any(r.verdict == FAIL for r in self.reports)


def bucket(r: TheoremReport) -> str:
    if r.verdict == FAIL:
        return FAIL
    if r.restricted:
        return "restricted"
    return r.verdict


def _check_group(args) -> list[dict]:
    spec, cap, theorems = args
    try:
        G = named(spec, max_order=cap)
    except Exception as exc:
        return [_failure_record(spec, t, f"build failed: {type(exc).__name__}: {exc}") for t in theorems]
    out = []
    for t in theorems:
        try:
            out.append(VERIFIERS[t](G).to_record())
        except Exception as exc:
            out.append(_failure_record(spec, t, f"{type(exc).__name__}: {exc}", G.order))
    return out


def _failure_record(spec: str, theorem: str, detail: str, order: int = 0) -> dict:
    return TheoremReport(spec, order, theorem, True, FAIL, [], detail).to_record()


def from_record(rec: dict) -> TheoremReport:
    return TheoremReport(
        group_label=rec["group"],
        order=rec["order"],
        theorem_id=rec["theorem"],
        applicable=rec["applicable"],
        verdict=rec["verdict"],
        witnesses=[(w["name"], w["value"]) for w in rec["witnesses"]],
        detail=rec["detail"],
        restricted=rec["mode"] == "restricted",
    )


def run_harness(
    catalog: Catalog,
    theorems=THEOREM_IDS,
    jobs: int = 1,
    max_order: int = DEFAULT_MAX_ORDER,
) -> HarnessRun:
    """Run the selected checks on every catalog group.

    Reports come back in catalog order, then theorem order, whatever ``jobs``
    is. Each worker builds and checks one group end to end.
    """
    theorems = tuple(t for t in THEOREM_IDS if t in set(theorems))
    tasks = [(str(e.spec), _cap(e, max_order), theorems) for e in catalog]
    start = time.perf_counter()
    if jobs <= 1 or len(tasks) <= 1:
        results = [_check_group(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_check_group, tasks, chunksize=1))
    run = HarnessRun(catalog, theorems)
    run.reports = [from_record(rec) for recs in results for rec in recs]
    run.wall_time = time.perf_counter() - start
    return run


def _cap(entry: CatalogEntry, max_order: int) -> int:
    return entry.max_order if entry.max_order is not None else max_order


def emit_report(run: HarnessRun, fmt: str = "text") -> bytes:
    if fmt == "records":
        return _records(run).encode()
    if fmt == "text":
        return _text(run).encode()
    raise ValueError(f"unknown report format {fmt!r}")


def _records(run: HarnessRun) -> str:
    header = {
        "schema": SCHEMA,
        "kind": "header",
        "catalog": run.catalog.source,
        "groups": len(run.catalog),
        "theorems": list(run.theorems),
    }
    lines = [json.dumps(header)]
    lines += [json.dumps(r.to_record()) for r in run.reports]
    return "\n".join(lines) + "\n"


def _text(run: HarnessRun) -> str:
    rows = [("group", "order", "theorem", "verdict", "mode", "detail")]
    for r in run.reports:
        detail = r.detail if len(r.detail) <= 100 else r.detail[:97] + "..."
        rows.append((r.group_label, str(r.order), r.theorem_id, r.verdict, "restricted" if r.restricted else "full", detail))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row[:5], widths)) + "  " + row[5] for row in rows]
    if not run.reports:
        return lines[0].rstrip() + "\n"
    lines.append("")
    for t, counts in run.summary.items():
        total = sum(counts.values())
        parts = " ".join(f"{k}={v}" for k, v in counts.items())
        lines.append(f"summary {t}: {parts} total={total}")
    lines.append(f"groups={len(run.catalog)} wall_time={run.wall_time:.2f}s")
    return "\n".join(lines) + "\n"


def emit_lattice_dot(G: Group) -> bytes:
    return lattice_dot(cd_lattice(G)).encode()
