import json

import pytest

import oracles
from circpart import harness as h
from circpart.errors import BadParams, UnknownSuite

SMALL = {
    "axis_uniqueness": {"max_n": 200},
    "embedding_naturals": {"max_n": 80},
    "embedding_arith": {"max_n": 200, "union_pairs": 50},
    "rotation_invariance": {"max_n": 60},
    "rotation_empty": {"max_n": 60},
    "flip_sound": {"max_n": 200},
    "filtration_absent_arith": {"max_n": 60},
    "fundamental_extension": {"max_n": 200},
    "almost_goldbach": {"limit": 2000},
    "offspring_split": {"max_n": 150},
    "child_bounds": {"max_n": 150},
    "regularity": {"max_n": 150},
    "family_symmetry": {"max_n": 150, "childless_max_n": 100, "prime_max_n": 60},
    "density_sandwich": {"max_n": 300, "explicit_size": 50},
    "complement_identity": {"max_n": 500},
    "squarefree_pairs": {"max_n": 500, "density_n": 10000},
    "two_summand": {"max_n": 2000, "prime_max_n": 500},
    "xcop_structure": {"max_n": 300, "progression_max_n": 100},
    "xcop_family": {"max_n": 200},
    "goldbach": {"limit": 2000},
    "compat_examples": {},
    "conjecture_8_4_scan": {"bound": 60},
    "conjecture_11_3_scan": {"bound": 30},
}


def test_registry_is_complete():
    assert set(h.suite_ids()) == set(SMALL)


@pytest.mark.parametrize("suite_id", sorted(SMALL))
def test_small_runs_are_deterministic(suite_id):
    a = h.run_suite(suite_id, SMALL[suite_id])
    b = h.run_suite(suite_id, SMALL[suite_id])
    assert h.serialize_report(a, "json") == h.serialize_report(b, "json")
    assert h.serialize_report(a, "csv") == h.serialize_report(b, "csv")
    assert len(a.violations) <= h.VIOLATION_CAP
    assert (a.verdict == "Fail") == (a.violation_count > 0 and suite_id not in ("conjecture_8_4_scan", "conjecture_11_3_scan"))
    if suite_id.startswith("conjecture"):
        assert a.verdict == "Observational"
    elif suite_id != "rotation_empty":
        assert a.verdict == "Pass", a.violations[:3]


def test_report_layout():
    rep = h.run_suite("compat_examples")
    doc = json.loads(h.serialize_report(rep))
    assert list(doc) == ["suite_id", "params", "checked", "verdict", "violation_count", "violations", "observations"]
    assert doc["checked"] == 3 and doc["verdict"] == "Pass"
    assert "elapsed" not in doc
    with pytest.raises(ValueError):
        h.serialize_report(rep, "xml")


def test_xcop_family_checks_993_generators():
    rep = h.run_suite("xcop_family", {"max_n": 2000})
    assert rep.verdict == "Pass" and rep.checked == 993


def test_violation_cap_and_order():
    rep = h.run_suite("rotation_empty", {"max_n": 200})
    assert rep.verdict == "Fail"
    assert rep.violation_count > h.VIOLATION_CAP == len(rep.violations)
    ns = [v["n"] for v in rep.violations if "n" in v]
    assert ns and ns[0] == min(ns)


def test_param_errors():
    with pytest.raises(UnknownSuite):
        h.run_suite("nope")
    with pytest.raises(BadParams):
        h.run_suite("goldbach", {"limit": "many"})
    with pytest.raises(BadParams):
        h.run_suite("goldbach", {"depth": 3})
    with pytest.raises(BadParams):
        h.run_suite("goldbach", {"limit": -1})
    with pytest.raises(BadParams):
        h.run_suite("xcop_family", {"workers": 0})
    assert h.run_suite("goldbach", {"limit": "100"}).params["limit"] == 100


def test_sharded_run_matches_serial():
    one = h.run_suite("xcop_family", {"max_n": 400, "workers": 1})
    two = h.run_suite("xcop_family", {"max_n": 400, "workers": 2})
    assert (one.checked, one.violation_count) == (two.checked, two.violation_count)


def test_goldbach_scan_against_oracle():
    profile, violations = h.goldbach_scan(100)
    assert violations == []
    assert profile == [(6, 9, 1, 6), (10, 99, 1, 12), (100, 100, 6, 100)]
    for lo, hi, least, argmin in profile:
        counts = {n: len(oracles.goldbach_pairs(n)) for n in range(lo + lo % 2, hi + 1, 2)}
        assert least == min(counts.values()) and counts[argmin] == least
    assert h.goldbach_scan(5) == ([], [])


def test_goldbach_suite_observations():
    rep = h.run_suite("goldbach", {"limit": 1000})
    assert rep.verdict == "Pass"
    assert rep.observations["nu_6_with_center"] == 1


def test_hypothesis_scans():
    rep = h.hypothesis_scan("conjecture_11_3", 60)
    assert rep.verdict == "Observational"
    obs = rep.observations
    assert (obs["both_compatible"], obs["parents_only"], obs["children_only"], obs["neither"]) == (2, 15, 226, 108)
    assert obs["record_16_18"] == {"n": 16, "m": 18, "children": [12, 8]}
    assert obs["example_16_18"] == {"parents_compatible": False, "children_24_12_compatible": True}
    empty = h.hypothesis_scan("conjecture_8_4", 0)
    assert empty.verdict == "Observational" and empty.checked == 0 and empty.violations == []
    with pytest.raises(UnknownSuite):
        h.hypothesis_scan("conjecture_1_1", 10)
