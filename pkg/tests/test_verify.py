import json

import pytest

from overfrob import verify as V
from overfrob.buffered import B1, B2


def test_rank_series_suites():
    for kind in ("dyson", "m2", "f1", "f2"):
        report = V.verify_rank_series(kind, 8)
        assert report.passed, V.to_table(report)


def test_bracket_lemma_suites():
    for which in ("initrun", "overrun", "frob2a", "frob2b"):
        for s, t in ((1, 1), (1, 2), (2, 2)):
            report = V.verify_bracket_lemma(which, s, t, 8)
            assert report.passed, V.to_table(report)


@pytest.mark.parametrize("kind", [B1, B2])
@pytest.mark.parametrize("k", [1, 2])
def test_buffered_suites(kind, k):
    report = V.verify_buffered(kind, k, 6)
    assert report.passed, V.to_table(report)


@pytest.mark.parametrize("kind", [B1, B2])
def test_structure_suite(kind):
    report = V.verify_structure(kind, 6, 3)
    assert report.passed, V.to_table(report)
    # the fiber comparison is reported without a verdict, and the claim
    # it probes has explicit counterexamples
    fiber = next(c for c in report.checks if "fiber" in c.id)
    assert fiber.passed is None
    assert fiber.counterexample is not None


def test_transform_suites():
    for which in ("firsthype", "secondhype"):
        for k in (1, 2):
            assert V.verify_transform(which, k, 10).passed
    assert V.verify_transform("andrews", 1, 2).passed


def test_counting_suite():
    for k in (1, 2, 3):
        report = V.verify_counting(k, 8)
        assert report.passed, V.to_table(report)
    # the k=3 slice comparison carries no verdict
    report = V.verify_counting(3, 8)
    assert all(c.passed is None for c in report.checks if "slice" in c.id)


def test_unknown_suite_arguments():
    with pytest.raises(ValueError):
        V.verify_rank_series("nope", 4)
    with pytest.raises(ValueError):
        V.verify_bracket_lemma("nope", 1, 1, 4)
    with pytest.raises(ValueError):
        V.verify_transform("nope", 1, 4)


def test_failure_is_reported_not_raised():
    report = V.SuiteReport("demo", {})
    report.add("ok", True)
    report.add("bad", False, "one mismatch", "x=1")
    assert not report.passed
    table = V.to_table(report)
    assert "FAIL" in table and "counterexample: x=1" in table


def test_json_shape_and_determinism():
    reports = [V.verify_rank_series("dyson", 5), V.verify_counting(1, 5)]
    text = V.to_json(reports)
    again = V.to_json([V.verify_rank_series("dyson", 5), V.verify_counting(1, 5)])
    assert text == again
    payload = json.loads(text)
    assert [p["suite"] for p in payload] == ["rank-series", "counting"]
    assert all(p["passed"] for p in payload)
    statuses = {c["status"] for p in payload for c in p["checks"]}
    assert statuses <= {"pass", "fail", "reported"}


def test_named_suite_registry():
    assert set(V.SUITES) >= {
        "dyson", "m2", "f1", "f2", "buffered-b1", "buffered-b2",
        "structure-b1", "structure-b2", "firsthype", "secondhype",
        "andrews", "counting",
    }
    assert V.SUITES["m2"](1, 5).passed
