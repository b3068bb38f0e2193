"""Verification harness: closed-form claims against the exhaustive oracle.

For every valid (p, q, r) in range the sweep compares the formula dimension
with the oracle dimension, checks the closed-form basis for resolution and
minimality, and diffs every table-claimed distance vector against BFS.
Discrepancies never abort a sweep; they become first-class report entries,
since auditing the formulas is the point of the harness.

Reports serialize to JSON (schema ``thetadim-sweep/1``) and CSV.  Per-record
wall-clock times are kept in memory for diagnostics but excluded from both
serialization and equality, so identical ranges produce byte-identical
reports.
"""

from __future__ import annotations

import csv
import io
import json
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from .closed_form import (
    TableLookupError,
    case_landmarks,
    closed_form_basis,
    dimension_formula,
    dispatch_case,
    formula_representation,
)
from .graphs import all_pairs
from .resolve import (
    DEFAULT_ORACLE_CAP,
    is_minimal_resolving,
    is_resolving,
    metric_dimension_oracle,
    representation,
)
from .theta import build_c, validate_params

SCHEMA = "thetadim-sweep/1"


@dataclass(frozen=True)
class TableMismatch:
    """One vertex whose table claim diverges from BFS ground truth.

    ``formula`` is None when the table gave no usable claim; ``note`` then
    says why ("uncovered" or "ambiguous").
    """

    vertex: int
    formula: tuple[int, ...] | None
    bfs: tuple[int, ...]
    note: str = ""


@dataclass(frozen=True)
class SweepRecord:
    """Outcome of all checks for one (p, q, r) triple."""

    params: tuple[int, int, int]
    n: int
    case: str
    swapped: bool
    formula_dim: int
    oracle_dim: int
    basis: tuple[int, ...]
    basis_ok: bool
    basis_minimal: bool
    table_mismatches: tuple[TableMismatch, ...]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def dims_agree(self) -> bool:
        return self.formula_dim == self.oracle_dim


@dataclass(frozen=True)
class SweepSummary:
    records: int
    agreements: int
    dimension_mismatches: int
    basis_failures: int
    table_mismatch_entries: int


@dataclass(frozen=True)
class SweepReport:
    max_n: int
    filters: str | None
    records: tuple[SweepRecord, ...]
    summary: SweepSummary


def recompute_summary(records: Iterable[SweepRecord]) -> SweepSummary:
    """Tally a summary directly from records (the self-consistency anchor)."""
    recs = list(records)
    return SweepSummary(
        records=len(recs),
        agreements=sum(1 for rec in recs if rec.dims_agree and rec.basis_ok),
        dimension_mismatches=sum(1 for rec in recs if not rec.dims_agree),
        basis_failures=sum(1 for rec in recs if not rec.basis_ok),
        table_mismatch_entries=sum(len(rec.table_mismatches) for rec in recs),
    )


def valid_triples(max_n: int) -> Iterator[tuple[int, int, int]]:
    """All valid (p, q, r) with p+q+r <= max_n, ordered by (n, p, q, r)."""
    for n in range(4, max_n + 1):
        for p in range(0, n + 1):
            for q in range(2, n + 1):
                r = n - p - q
                if r >= 0 and validate_params(p, q, r) is None:
                    yield (p, q, r)


def check_triple(p: int, q: int, r: int, oracle_cap: int = DEFAULT_ORACLE_CAP) -> SweepRecord:
    """Run every closed-form-vs-oracle check for one triple."""
    start = time.perf_counter()
    case = dispatch_case(p, q, r)
    g = build_c(p, q, r)
    D = all_pairs(g)
    result = closed_form_basis(p, q, r)
    formula_dim = dimension_formula(p, q, r)
    oracle = metric_dimension_oracle(g, cap=oracle_cap)
    basis_ok = len(result.basis) == formula_dim and is_resolving(g, result.basis)
    basis_minimal = bool(basis_ok and is_minimal_resolving(g, result.basis))

    landmarks = case_landmarks(p, q, r)
    mismatches: list[TableMismatch] = []
    for v in range(1, g.n + 1):
        ground = representation(D, v, landmarks)
        try:
            claimed = formula_representation(p, q, r, case, v)
        except TableLookupError as exc:
            mismatches.append(TableMismatch(vertex=v, formula=None, bfs=ground, note=exc.reason))
            continue
        if claimed != ground:
            mismatches.append(TableMismatch(vertex=v, formula=claimed, bfs=ground))

    return SweepRecord(
        params=(p, q, r),
        n=g.n,
        case=case.tag,
        swapped=case.swapped,
        formula_dim=formula_dim,
        oracle_dim=oracle.dimension,
        basis=result.basis,
        basis_ok=basis_ok,
        basis_minimal=basis_minimal,
        table_mismatches=tuple(mismatches),
        elapsed=time.perf_counter() - start,
    )


def sweep(
    max_n: int,
    *,
    cases: Iterable[str] | None = None,
    param_filter: Callable[[int, int, int], bool] | None = None,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> SweepReport:
    """Check every valid triple with p+q+r <= max_n, in deterministic order.

    ``cases`` restricts to the given case tags; ``param_filter`` is an
    arbitrary predicate on (p, q, r).  Raises ``ValueError`` when the range
    exceeds the oracle cap.
    """
    if max_n > oracle_cap:
        raise ValueError(f"max_n {max_n} exceeds the oracle cap {oracle_cap}")
    wanted = None if cases is None else frozenset(cases)
    records: list[SweepRecord] = []
    for p, q, r in valid_triples(max_n):
        if wanted is not None and dispatch_case(p, q, r).tag not in wanted:
            continue
        if param_filter is not None and not param_filter(p, q, r):
            continue
        records.append(check_triple(p, q, r, oracle_cap=oracle_cap))
    filters = _describe_filters(wanted, param_filter)
    return SweepReport(
        max_n=max_n,
        filters=filters,
        records=tuple(records),
        summary=recompute_summary(records),
    )


def _describe_filters(wanted: frozenset[str] | None, param_filter) -> str | None:
    parts = []
    if wanted is not None:
        parts.append("cases=" + ",".join(sorted(wanted)))
    if param_filter is not None:
        parts.append("param_filter=custom")
    return " ".join(parts) or None


def _mismatch_dict(m: TableMismatch) -> dict:
    return {
        "vertex": m.vertex,
        "formula": None if m.formula is None else list(m.formula),
        "bfs": list(m.bfs),
        "note": m.note,
    }


def _record_dict(rec: SweepRecord) -> dict:
    p, q, r = rec.params
    return {
        "p": p,
        "q": q,
        "r": r,
        "n": rec.n,
        "case": rec.case,
        "swapped": rec.swapped,
        "formula_dim": rec.formula_dim,
        "oracle_dim": rec.oracle_dim,
        "basis": list(rec.basis),
        "basis_ok": rec.basis_ok,
        "basis_minimal": rec.basis_minimal,
        "table_mismatches": [_mismatch_dict(m) for m in rec.table_mismatches],
    }


def emit_report(report: SweepReport, fmt: str = "json") -> str:
    """Serialize a report with stable field ordering (no timing data)."""
    if fmt == "json":
        payload = {
            "schema": SCHEMA,
            "max_n": report.max_n,
            "filters": report.filters,
            "summary": {
                "records": report.summary.records,
                "agreements": report.summary.agreements,
                "dimension_mismatches": report.summary.dimension_mismatches,
                "basis_failures": report.summary.basis_failures,
                "table_mismatch_entries": report.summary.table_mismatch_entries,
            },
            "records": [_record_dict(rec) for rec in report.records],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(
            [
                "p", "q", "r", "n", "case", "swapped", "formula_dim", "oracle_dim",
                "basis", "basis_ok", "basis_minimal", "table_mismatch_count",
                "table_mismatches",
            ]
        )
        for rec in report.records:
            p, q, r = rec.params
            details = "; ".join(
                f"v{m.vertex} formula={list(m.formula) if m.formula else m.note} bfs={list(m.bfs)}"
                for m in rec.table_mismatches
            )
            writer.writerow(
                [
                    p, q, r, rec.n, rec.case, rec.swapped, rec.formula_dim,
                    rec.oracle_dim, ",".join(map(str, rec.basis)), rec.basis_ok,
                    rec.basis_minimal, len(rec.table_mismatches), details,
                ]
            )
        return out.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")


def parse_report(text: str) -> SweepReport:
    """Rebuild a report from its JSON serialization (the round-trip inverse)."""
    payload = json.loads(text)
    if payload.get("schema") != SCHEMA:
        raise ValueError(f"unexpected report schema {payload.get('schema')!r}")
    records = []
    for rec in payload["records"]:
        mismatches = tuple(
            TableMismatch(
                vertex=m["vertex"],
                formula=None if m["formula"] is None else tuple(m["formula"]),
                bfs=tuple(m["bfs"]),
                note=m["note"],
            )
            for m in rec["table_mismatches"]
        )
        records.append(
            SweepRecord(
                params=(rec["p"], rec["q"], rec["r"]),
                n=rec["n"],
                case=rec["case"],
                swapped=rec["swapped"],
                formula_dim=rec["formula_dim"],
                oracle_dim=rec["oracle_dim"],
                basis=tuple(rec["basis"]),
                basis_ok=rec["basis_ok"],
                basis_minimal=rec["basis_minimal"],
                table_mismatches=mismatches,
            )
        )
    summary = payload["summary"]
    return SweepReport(
        max_n=payload["max_n"],
        filters=payload["filters"],
        records=tuple(records),
        summary=SweepSummary(
            records=summary["records"],
            agreements=summary["agreements"],
            dimension_mismatches=summary["dimension_mismatches"],
            basis_failures=summary["basis_failures"],
            table_mismatch_entries=summary["table_mismatch_entries"],
        ),
    )
