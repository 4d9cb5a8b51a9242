import json

import pytest

from paritysep.verify import (
    MAX_COUNTEREXAMPLES,
    ND_INEQUALITIES,
    THRESHOLD_SPECS,
    InequalitySpec,
    VerificationReport,
    check_c5_aggregate,
    check_chain,
    check_conjecture,
    check_excess,
    check_image,
    check_inequality,
    check_monotone,
    check_nd_identities,
    check_nd_inequalities,
    check_oracle,
    check_roundtrip,
    run_suite,
    suite_json,
)


def test_spec_names():
    assert THRESHOLD_SPECS[0].name == "od_ed < ed_od"
    odd = InequalitySpec("ou_eu", "ou_eu", parity_filter="odd", rhs_shift=1)
    assert odd.name == "ou_eu(2k-1) < ou_eu(2k)"
    even = InequalitySpec("ou_eu", "ou_eu", "equal", parity_filter="even", rhs_shift=1)
    assert even.name == "ou_eu(2k) = ou_eu(2k+1)"
    assert InequalitySpec("ou_eu", "ou_eu", rhs_shift=2).name == "ou_eu(n) < ou_eu(n+2)"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"lhs": "xx", "rhs": "ou_eu"},
        {"lhs": "ou_eu", "rhs": "eu_ou", "relation": "greater"},
        {"lhs": "ou_eu", "rhs": "eu_ou", "parity_filter": "prime"},
        {"lhs": "ou_eu", "rhs": "ou_eu"},
    ],
)
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        InequalitySpec(**kwargs)


@pytest.mark.parametrize("spec", THRESHOLD_SPECS, ids=lambda s: s.name)
def test_claimed_thresholds_are_exact(spec):
    report = check_inequality(spec, 50)
    assert report.passed
    assert report.empirical_threshold == spec.claimed_threshold
    assert report.info["threshold_confirmed"]


def test_small_weight_equalities_and_reversal_are_reported():
    below = {s.name: {d["n"]: d["detail"] for d in check_inequality(s, 50).info["below_threshold"]}
             for s in THRESHOLD_SPECS}
    assert below["eu_od < ou_ed"][4] == "eu_od=3 ou_ed=3"
    assert below["ed_od < od_eu"][7] == "ed_od=4 od_eu=3"
    assert below["od_ed < ed_od"][10] == "od_ed=6 ed_od=6"


def test_wrong_claim_fails_with_minimal_counterexample():
    spec = InequalitySpec("ed_od", "od_eu", claimed_threshold=2)
    report = check_inequality(spec, 20)
    assert not report.passed
    assert report.counterexamples[0] == {"n": 2, "detail": "ed_od=1 od_eu=1"}
    assert [c["n"] for c in report.counterexamples] == [2, 3, 5, 7]
    assert report.info["threshold_confirmed"] is False


def test_n_max_below_claim_is_rejected():
    with pytest.raises(ValueError):
        check_inequality(THRESHOLD_SPECS[0], 5)


def test_chain():
    report = check_chain(50)
    assert report.passed
    assert report.info["link_thresholds"] == {
        "od_ed < ed_od": 11,
        "ed_od < eu_od": 4,
        "eu_od < od_eu": 50,
        "od_eu < ou_ed": 5,
        "ou_ed < ou_eu": 6,
        "ou_eu < ed_ou": 5,
        "ed_ou < eu_ou": 4,
    }
    # eu_od < od_eu only settles at 50; odd weights below it reverse
    assert report.empirical_threshold == 50
    assert report.info["below_threshold"][-1]["n"] == 49
    assert not check_chain(49).passed


def test_excess():
    assert check_excess(30).passed


def test_conjecture():
    report = check_conjecture(20)
    assert report.passed
    assert report.empirical_threshold == 3
    assert report.info["outside_range"] == [
        {"n": 1, "detail": "2 vs 1"},
        {"n": 2, "detail": "2 vs 2"},
    ]


def test_nd_checks():
    assert check_nd_identities(30).passed
    report = check_nd_inequalities(50)
    assert report.passed
    assert report.info["thresholds"] == {
        "ou_end < ond_eu": 5,
        "ond_eu < eu_ond": 4,
        "end_od < od_end": 36,
        "od_end < ond_ed": 5,
    }
    assert len(ND_INEQUALITIES) == 4


def test_monotone():
    report = check_monotone(30)
    assert report.passed
    assert report.info["ou_eu(2k) = ou_eu(2k+1)"] == 0


def test_oracle():
    assert check_oracle(14).passed


def test_counterexamples_are_capped_and_counted():
    report = check_image("phi5", 30)
    assert len(report.counterexamples) == MAX_COUNTEREXAMPLES
    assert report.info["failures"] > MAX_COUNTEREXAMPLES
    ns = [c["n"] for c in report.counterexamples]
    assert ns == sorted(ns)


def test_c5_aggregate_mismatch_is_reported():
    report = check_c5_aggregate(20)
    assert not report.passed
    assert report.counterexamples[0]["detail"].endswith("only C5(v)")


def test_reports_are_deterministic_and_serialisable():
    a = [r.to_dict() for r in run_suite("nd", 20)]
    b = [r.to_dict() for r in run_suite("nd", 20)]
    assert a == b
    doc = json.loads(suite_json(run_suite("roundtrips", 24)))
    assert doc["status"] == "fail"
    names = {r["check"]: r for r in doc["reports"]}
    assert names["roundtrip phi4"]["status"] == "fail"
    assert names["roundtrip phi2"]["status"] == "pass"
    assert set(names["roundtrip phi4"]) >= {
        "check", "range", "status", "empirical_threshold", "counterexamples",
    }


def test_report_round_trips_through_json():
    report = check_roundtrip("phi3", 10)
    data = json.loads(report.to_json())
    assert data["check"] == "roundtrip phi3"
    assert data["range"] == [0, 10]
    assert VerificationReport("x", (0, 1)).to_dict()["status"] == "pass"


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("everything")
