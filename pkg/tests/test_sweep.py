"""Sweep harness: enumeration, determinism, reports, and self-consistency."""

import csv
import io

import pytest

from thetadim import (
    build_c,
    check_triple,
    emit_report,
    metric_dimension_oracle,
    parse_report,
    recompute_summary,
    sweep,
    valid_triples,
)


def test_smallest_order_enumeration():
    assert list(valid_triples(4)) == [(0, 3, 1), (1, 2, 1), (1, 3, 0)]


def test_enumeration_is_ordered():
    triples = list(valid_triples(12))
    keyed = [(p + q + r, p, q, r) for p, q, r in triples]
    assert keyed == sorted(keyed)


def test_empty_range_gives_empty_report():
    report = sweep(3)
    assert report.records == ()
    assert report.summary.records == 0


def test_rejects_range_beyond_oracle_cap():
    with pytest.raises(ValueError):
        sweep(10, oracle_cap=8)


def test_sweep_is_deterministic():
    a = emit_report(sweep(9))
    b = emit_report(sweep(9))
    assert a == b


def test_records_are_reproducible():
    report = sweep(7)
    for rec in report.records:
        p, q, r = rec.params
        assert check_triple(p, q, r) == rec
        assert metric_dimension_oracle(build_c(p, q, r)).dimension == rec.oracle_dim


def test_summary_matches_recount():
    report = sweep(10)
    assert report.summary == recompute_summary(report.records)


def test_midrange_sweep_has_no_dimension_or_basis_failures():
    report = sweep(13)
    assert report.summary.records == 330
    assert report.summary.dimension_mismatches == 0
    assert report.summary.basis_failures == 0
    assert all(rec.basis_minimal for rec in report.records)
    by_params = {rec.params: rec for rec in report.records}
    equal_arms = by_params[(3, 7, 3)]
    assert equal_arms.oracle_dim == 3
    assert equal_arms.formula_dim == 3
    assert equal_arms.basis_ok
    assert equal_arms.case == "T4-P1"


def test_case_filter():
    report = sweep(10, cases={"T4-P1"})
    assert report.records
    assert all(rec.case == "T4-P1" for rec in report.records)
    assert report.filters == "cases=T4-P1"


def test_param_filter():
    report = sweep(10, param_filter=lambda p, q, r: r == 0)
    assert report.records
    assert all(rec.params[2] == 0 for rec in report.records)


def test_json_round_trip_on_empty_report():
    report = sweep(3)
    assert parse_report(emit_report(report)) == report


def test_json_round_trip_preserves_records():
    report = sweep(8)
    parsed = parse_report(emit_report(report))
    assert parsed == report
    assert parsed.records == report.records


def test_parse_rejects_unknown_schema():
    with pytest.raises(ValueError):
        parse_report('{"schema": "other/9", "records": []}')


def test_csv_shape():
    report = sweep(6)
    rows = list(csv.reader(io.StringIO(emit_report(report, fmt="csv"))))
    assert rows[0][:4] == ["p", "q", "r", "n"]
    assert len(rows) == 1 + len(report.records)
    first = report.records[0]
    assert rows[1][0] == str(first.params[0])
    assert rows[1][4] == first.case


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        emit_report(sweep(3), fmt="xml")


def test_elapsed_excluded_from_equality_and_serialization():
    report = sweep(5)
    assert all(rec.elapsed >= 0 for rec in report.records)
    assert '"elapsed"' not in emit_report(report)
