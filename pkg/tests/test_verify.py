import json
from fractions import Fraction

import pytest

import hodgetrees.verify as verify
from hodgetrees.verify import (
    CheckReport,
    check_bernoulli_identity,
    check_choice_independence,
    check_genus0,
    check_oracle_agreement,
    check_tree_identity,
)


class TestChecksPass:
    def test_tree_identity(self):
        report = check_tree_identity(3, 5)
        assert report.passed
        assert report.instances == 19  # 4*5 pairs minus the undefined (0, 1)

    def test_bernoulli(self):
        report = check_bernoulli_identity(3, 3)
        assert report.passed
        assert report.instances == 9

    def test_genus0(self):
        assert check_genus0(9).passed

    def test_oracle(self):
        report = check_oracle_agreement(6)
        assert report.passed
        assert report.instances == 27

    def test_independence(self):
        report = check_choice_independence(3)
        assert report.passed
        assert report.instances == 36

    def test_independence_needs_aux(self):
        with pytest.raises(ValueError):
            check_choice_independence(2, ())


class TestFailureReporting:
    def test_first_counterexample_is_reported(self, monkeypatch):
        genuine = verify.tree_sum

        def corrupted(genus, leaves):
            value = genuine(genus, leaves)
            if (genus, leaves) in {(1, 3), (2, 2)}:
                return value + 1
            return value

        monkeypatch.setattr(verify, "tree_sum", corrupted)
        report = check_tree_identity(3, 5)
        assert not report.passed
        # (1, 3) precedes (2, 2) in the scan order
        assert report.counterexample["params"] == "g=1,n=3"
        assert report.counterexample["lhs"] == "13/12"
        assert report.counterexample["rhs"] == "1/12"

    def test_genus0_counterexample(self, monkeypatch):
        monkeypatch.setattr(verify, "tree_sum", lambda g, n: Fraction(n))
        report = check_genus0(5)
        assert not report.passed
        assert report.counterexample == {"params": "n=2", "lhs": "2", "rhs": "1"}


class TestRendering:
    def test_pass_text_and_json(self):
        report = CheckReport("genus0", "n<=9", True, 9)
        assert report.render_text() == "PASS genus0 range n<=9 instances=9"
        assert report.to_json_obj() == {
            "check": "genus0",
            "range": "n<=9",
            "status": "pass",
        }

    def test_fail_text_and_json(self):
        report = CheckReport(
            "oracle",
            "g<=6",
            False,
            4,
            {"params": "g=2,i=1", "lhs": "1/480", "rhs": "1/481"},
        )
        text = report.render_text()
        assert text.startswith("FAIL oracle range g<=6")
        assert "g=2,i=1" in text and "1/480" in text and "1/481" in text
        obj = report.to_json_obj()
        assert obj["status"] == "fail"
        assert obj["counterexample"]["rhs"] == "1/481"
        json.dumps(obj)  # serializable
