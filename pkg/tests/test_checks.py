import json

import pytest

from lconvex.checks import REGISTRY, instance_id, report_to_jsonl, run_checks

from shapes import CROSS


ALWAYS_PASSING = sorted(
    name
    for name in REGISTRY
    if name not in {"type_closed_eq_oracle", "bound_sufficiency", "minimal_map_structure"}
)


def test_registry_names():
    for expected in (
        "reg_eq_rook",
        "type_closed_eq_oracle",
        "bound_sufficiency",
        "projection_roundtrip",
        "gorenstein_triple_agreement",
    ):
        assert expected in REGISTRY


def test_instance_id():
    assert instance_id(CROSS) == "H2,2,3,5,2;V1,2,5,5,1"


def test_unknown_check_rejected():
    with pytest.raises(KeyError):
        run_checks(["nope"], 2, 2)


def test_all_regular_checks_pass_3x3():
    lines = run_checks(ALWAYS_PASSING, max_m=3, max_n=3)
    failures = [line for line in lines if not line["pass"]]
    assert not failures, failures[:5]


def test_empty_check_list():
    assert run_checks([], 2, 2) == []


def test_report_deterministic():
    a = run_checks(["reg_eq_rook"], 3, 3)
    b = run_checks(["reg_eq_rook"], 3, 3)
    assert report_to_jsonl(a) == report_to_jsonl(b)
    parsed = [json.loads(line) for line in report_to_jsonl(a).splitlines()]
    assert parsed == a


def test_known_failing_checks_report_content():
    # the closed formulas count rank-bounded maps only; these two checks
    # surface the instances where the true generator count exceeds that
    lines = run_checks(["bound_sufficiency", "type_closed_eq_oracle"], 4, 4)
    failing = {line["instance"] for line in lines if not line["pass"]}
    assert "H4,4,3;V3,3,3,2" in failing or "H3,3,3,2;V4,4,3" in failing


def test_bounded_count_check_passes():
    lines = run_checks(["type_closed_eq_bounded_count"], 4, 4)
    assert all(line["pass"] for line in lines)
