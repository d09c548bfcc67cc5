"""Verification harness: run catalog entries and seeds, emit reports.

A verification row compares the quadrature value of an entry's left-hand
side against its closed-form right-hand side at one grid point:

* ``Pass``          - quadrature converged and the relative error
                      |lhs - rhs| / (1 + |rhs|) is within tolerance;
* ``Fail``          - quadrature converged but the identity is violated;
* ``Inconclusive``  - quadrature did not converge, so no verdict.

Failure-seed rows check the integrability condition instead: ``Pass``
means the verdict (inadmissible, at the documented endpoint) matches the
catalog's expectation.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import catalog
from .errors import InconclusiveConditionError
from .hankel import check_condition

__all__ = [
    "SCHEMA_VERSION",
    "VerificationRow",
    "FailureRow",
    "Report",
    "verify_entry",
    "verify_failure",
    "run_all",
]

SCHEMA_VERSION = 1

PASS = "Pass"
FAIL = "Fail"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class VerificationRow:
    entry_id: str
    grid_index: int
    params: dict
    status: str
    lhs: float
    rhs: float
    rel_err: float
    quad_abs_err: float
    tolerance: float
    evaluations: int
    tol_class: str
    provenance: str
    seconds: float = field(compare=False, default=0.0)

    def as_dict(self) -> dict:
        return {
            "entry_id": self.entry_id,
            "grid_index": self.grid_index,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "rel_err": self.rel_err,
            "quad_abs_err": self.quad_abs_err,
            "tolerance": self.tolerance,
            "evaluations": self.evaluations,
            "tol_class": self.tol_class,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class FailureRow:
    seed_id: str
    status: str
    admissible: Optional[bool]
    failing_endpoint: Optional[str]
    expected_endpoint: str
    zero_exponent: Optional[float]
    inf_exponent: Optional[float]
    provenance: str
    seconds: float = field(compare=False, default=0.0)

    def as_dict(self) -> dict:
        return {
            "seed_id": self.seed_id,
            "status": self.status,
            "admissible": self.admissible,
            "failing_endpoint": self.failing_endpoint,
            "expected_endpoint": self.expected_endpoint,
            "zero_exponent": self.zero_exponent,
            "inf_exponent": self.inf_exponent,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class Report:
    rows: tuple
    failure_rows: tuple
    tolerance_override: Optional[float]
    wall_seconds: float

    @property
    def counts(self) -> dict:
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for r in self.rows:
            out[r.status] += 1
        for r in self.failure_rows:
            out[r.status] += 1
        return out

    @property
    def all_passed(self) -> bool:
        c = self.counts
        return c[FAIL] == 0 and c[INCONCLUSIVE] == 0

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "kind": "verification_report",
            "tolerance_override": self.tolerance_override,
            "wall_seconds": round(self.wall_seconds, 3),
            "summary": self.counts,
            "rows": [r.as_dict() for r in self.rows],
            "failure_rows": [r.as_dict() for r in self.failure_rows],
        }
        return json.dumps(doc, indent=2, allow_nan=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([
            "row_kind", "id", "grid_index", "params", "status", "lhs", "rhs",
            "rel_err", "quad_abs_err", "tolerance", "evaluations",
            "tol_class", "expected_endpoint", "failing_endpoint", "provenance",
        ])
        for r in self.rows:
            params = ";".join(f"{k}={v:g}" for k, v in sorted(r.params.items()))
            writer.writerow([
                "entry", r.entry_id, r.grid_index, params, r.status,
                repr(r.lhs), repr(r.rhs), repr(r.rel_err), repr(r.quad_abs_err),
                repr(r.tolerance), r.evaluations, r.tol_class, "", "", r.provenance,
            ])
        for r in self.failure_rows:
            writer.writerow([
                "failure_seed", r.seed_id, "", "", r.status, "", "", "", "",
                "", "", "", r.expected_endpoint, r.failing_endpoint or "",
                r.provenance,
            ])
        return buf.getvalue()


def verify_entry(
    entry: catalog.IntegralEntry,
    tol: Optional[float] = None,
) -> list:
    """Verify one entry on its default grid; one row per grid point."""
    tolerance = entry.tolerance if tol is None else tol
    rows = []
    for gi, params in enumerate(entry.default_grid):
        t0 = time.perf_counter()
        res = entry.lhs(params, tol=tolerance)
        rhs = float(entry.rhs(params))
        rel = abs(res.value - rhs) / (1.0 + abs(rhs))
        if not res.converged:
            status = INCONCLUSIVE
        elif rel <= tolerance:
            status = PASS
        else:
            status = FAIL
        rows.append(VerificationRow(
            entry_id=entry.id,
            grid_index=gi,
            params=params.as_dict(),
            status=status,
            lhs=float(res.value),
            rhs=rhs,
            rel_err=float(rel),
            quad_abs_err=float(res.abs_err),
            tolerance=tolerance,
            evaluations=res.evaluations,
            tol_class=entry.tol_class,
            provenance=entry.provenance,
            seconds=time.perf_counter() - t0,
        ))
    return rows


def verify_failure(seed: catalog.FailureSeed) -> FailureRow:
    """Check that a documented failure seed is indeed inadmissible."""
    t0 = time.perf_counter()
    try:
        verdict = check_condition(seed.seed)
    except InconclusiveConditionError:
        return FailureRow(
            seed_id=seed.id,
            status=INCONCLUSIVE,
            admissible=None,
            failing_endpoint=None,
            expected_endpoint=seed.expected_endpoint,
            zero_exponent=None,
            inf_exponent=None,
            provenance=seed.provenance,
            seconds=time.perf_counter() - t0,
        )
    ok = (not verdict.admissible) and (
        verdict.failing_endpoint == seed.expected_endpoint
    )
    return FailureRow(
        seed_id=seed.id,
        status=PASS if ok else FAIL,
        admissible=verdict.admissible,
        failing_endpoint=verdict.failing_endpoint,
        expected_endpoint=seed.expected_endpoint,
        zero_exponent=verdict.zero_exponent,
        inf_exponent=verdict.inf_exponent,
        provenance=seed.provenance,
        seconds=time.perf_counter() - t0,
    )


def run_all(
    entries: Optional[Sequence] = None,
    failures: Optional[Sequence] = None,
    jobs: int = 1,
    tol: Optional[float] = None,
) -> Report:
    """Run entries (and failure seeds) and return a canonical report.

    Rows are ordered by catalog document order then grid index
    regardless of the number of worker threads, so parallel and serial
    runs produce identical reports.
    """
    if entries is None and failures is None:
        entries = catalog.all_entries()
        failures = catalog.all_failures()
    entries = list(entries or [])
    failures = list(failures or [])
    order = {e.id: i for i, e in enumerate(catalog.all_entries())}
    entries.sort(key=lambda e: order.get(e.id, len(order)))

    t0 = time.perf_counter()
    if jobs <= 1:
        entry_rows = [verify_entry(e, tol) for e in entries]
        failure_rows = [verify_failure(s) for s in failures]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            entry_futs = [pool.submit(verify_entry, e, tol) for e in entries]
            failure_futs = [pool.submit(verify_failure, s) for s in failures]
            entry_rows = [f.result() for f in entry_futs]
            failure_rows = [f.result() for f in failure_futs]
    rows = tuple(r for group in entry_rows for r in group)
    return Report(
        rows=rows,
        failure_rows=tuple(failure_rows),
        tolerance_override=tol,
        wall_seconds=time.perf_counter() - t0,
    )
