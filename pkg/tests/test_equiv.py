"""Tests für Symmetrieklassen, Relationen und Vermutungsscans."""
import pytest

import equiv
from catalog import UnknownNameError


def test_symmetry_classes():
    assert equiv.symmetry_class((1, 1, 2)) == {(1, 1, 2), (2, 1, 1), (2, 2, 1), (1, 2, 2)}
    assert equiv.symmetry_class((2, 1, 2)) == {(2, 1, 2), (1, 2, 1)}
    assert equiv.symmetry_class((1, 1)) == {(1, 1)}


def test_symmetric_patterns_are_cayley_equivalent():
    for q in equiv.symmetry_class((1, 3, 2)):
        assert equiv.test_relation((1, 3, 2), q, "c", 6).verdict == equiv.EQUIVALENT


def test_relation_reports_first_witness():
    report = equiv.test_relation((1, 1), (1, 2), "c", 5)
    assert report.verdict == equiv.DISTINGUISHED
    assert report.witness == {"n": 3, "k": None, "content": None, "counts": [6, 4]}
    data = report.to_dict()
    assert data["witness"]["counts"] == ["6", "4"]
    assert data["bounds"]["k"] is None


def test_content_witness():
    report = equiv.test_relation((1, 1), (1, 2), "sc", 3, 2)
    assert report.verdict == equiv.DISTINGUISHED
    assert report.witness["content"] is not None
    assert isinstance(report.to_dict()["witness"]["content"], list)


def test_unknown_relation():
    with pytest.raises(UnknownNameError):
        equiv.test_relation((1, 2), (2, 1), "zz", 3, 2)


def test_classify_length_three():
    result = equiv.classify(equiv.patterns_of_length(3), "c", 6)
    assert result.as_sets() == [
        frozenset({(1, 1, 1)}),
        frozenset({(1, 1, 2), (1, 2, 1), (1, 2, 2), (2, 1, 1), (2, 1, 2), (2, 2, 1)}),
        frozenset({(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)}),
    ]
    assert result.representatives() == [(1, 1, 1), (1, 1, 2), (1, 2, 3)]


def test_classify_length_two_and_singletons():
    assert equiv.classify(equiv.patterns_of_length(2), "c", 5).as_sets() == [
        frozenset({(1, 1)}), frozenset({(1, 2), (2, 1)})]
    assert equiv.classify([(2, 1, 2)], "cm", 4, 3).classes == [[(2, 1, 2)]]
    assert equiv.classify([(1, 2)], "e", 4).to_dict()["classes"] == [["12"]]


def test_max_distinguisher():
    assert equiv.max_distinguisher((1, 1, 1), (1, 2, 3)) == {"n": 3, "k": 1, "content": None, "counts": [0, 1]}
    assert equiv.max_distinguisher((1, 2, 3), (3, 2, 1)) is None
    witness = equiv.max_distinguisher((1, 1, 2), (1, 2, 3))
    assert (witness["n"], witness["k"]) == (3, 2)
    assert witness["counts"] == [5, 6]


def test_word_and_max_relations_agree():
    profile = equiv.relation_profile((1, 1, 2), (2, 1, 2), 4, 4)
    assert profile["w"] == profile["cm"]
    assert profile["sw"] == profile["sc"]
    assert equiv.implication_violations(profile) == []


def test_implication_violations_detects_broken_chain():
    profile = {"c": False, "cm": True, "sc": True, "w": True, "sw": True, "e": True}
    assert "cm ⇒ c" in equiv.implication_violations(profile)


def test_conjecture_scan_small():
    report = equiv.conjecture_scan("cm_implies_sc", max_len=2, n_max=5, k_max=3)
    assert report.verdict == equiv.NO_COUNTEREXAMPLE
    assert report.pairs_tested == 1
    report = equiv.conjecture_scan("c_implies_equal_max", max_len=3, n_max=6, k_max=3)
    assert report.verdict == equiv.NO_COUNTEREXAMPLE
    assert report.pairs_tested == 31
    assert equiv.conjecture_scan("max_monotonicity", 3, 6, 3).verdict == equiv.NO_COUNTEREXAMPLE


def test_conjecture_scan_consistency():
    report = equiv.conjecture_scan("c_implies_cm", max_len=2, n_max=4, k_max=3, check_consistency=True)
    assert report.consistency_violations == []
    assert report.note is None


def test_unknown_conjecture():
    with pytest.raises(UnknownNameError):
        equiv.conjecture_scan("p_equals_np")


@pytest.mark.slow
def test_conjectures_at_default_bounds():
    for which in equiv.CONJECTURES:
        report = equiv.conjecture_scan(which, max_len=3, n_max=7, k_max=5)
        assert report.verdict == equiv.NO_COUNTEREXAMPLE, report.candidate


@pytest.mark.slow
def test_cayley_wilf_counterexample_of_length_four():
    assert equiv.test_relation((1, 3, 4, 2), (1, 4, 2, 3), "c", 6).verdict == equiv.EQUIVALENT
    report = equiv.test_relation((1, 3, 4, 2), (1, 4, 2, 3), "c", 7)
    assert report.verdict == equiv.DISTINGUISHED
    assert report.witness["n"] == 7
    assert report.witness["counts"] == [33712, 33710]


@pytest.mark.slow
def test_known_candidate_pair():
    report = equiv.test_relation(*equiv.KNOWN_CANDIDATE, "cm", 9, 5)
    assert report.verdict == equiv.DISTINGUISHED
    assert equiv.test_relation(*equiv.KNOWN_CANDIDATE, "c", 8).verdict == equiv.EQUIVALENT
    assert equiv.known_candidate_counts(9, 5) == {"13442": 742943, "14233": 742944}
