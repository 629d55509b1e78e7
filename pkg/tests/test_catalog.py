"""Tests für Formeln und Identitätschecks."""
import pytest

import catalog
import enumeration
from catalog import CONJECTURE, EXPECTED_FAIL, FAIL, PASS, UnknownNameError


def test_fubini_values():
    fub = catalog.fubini(7)
    assert fub[0] == 1
    assert fub[5] == 541
    assert fub[7] == 47293


def test_cay_1k():
    assert catalog.cay_1k(2, 5).to_list() == [1, 1, 2, 6, 24, 120]
    assert catalog.cay_1k(3, 4)[4] == 66
    assert catalog.cay_1k(3, 2)[2] == 3
    with pytest.raises(ValueError):
        catalog.cay_1k(1, 3)


def test_cay111_closed_form():
    assert catalog.cay111_closed_form(0) == 1
    assert catalog.cay111_closed_form(3) == 12
    assert catalog.cay111_closed_form(5) == 450
    assert [catalog.cay111_closed_form(n) for n in range(8)] == catalog.cay_1k(3, 7).to_list()


def test_small_closed_forms():
    assert catalog.cay112_count(0) == 1
    assert catalog.cay112_count(3) == 12
    assert catalog.cay112_count(4) == 60
    assert [catalog.cay21_count(n) for n in range(5)] == [1, 1, 2, 4, 8]


def test_cay231_recurrence():
    a = catalog.cay231_recurrence(6)
    assert a[2] == 3
    assert a[4] == 56
    assert a[6] == 1516


def test_s3_formulas():
    assert catalog.cay123_birmajer(0) == 1
    assert catalog.cay123_birmajer(1) == 1
    assert catalog.cay123_birmajer(4) == 56
    assert catalog.cay123_birmajer(6) == 1516
    assert catalog.cay_s3_kasraoui(2) == 3
    assert catalog.cay_s3_kasraoui(4) == 56
    assert catalog.cay_s3_kasraoui(5) == 284


def test_kary_burstein():
    assert [catalog.kary_burstein(2, n) for n in range(6)] == [2 ** n for n in range(6)]
    assert catalog.kary_burstein(3, 3) == 26
    assert catalog.kary_burstein(5, 0) == 1
    assert catalog.kary_burstein(0, 0) == 1
    assert catalog.kary_burstein(0, 3) == 0
    assert catalog.kary_burstein(1, 4) == 1


def test_ogf_closed_forms():
    assert catalog.s3_ogf(4).to_counts().to_list() == [1, 1, 3, 12, 56]
    assert [int(c) for c in catalog.prim231_ogf(6).coeffs] == [0, 1, 2, 7, 28, 121, 550]
    assert catalog.prim231_closed(6) == catalog.prim231_ogf(6)


def test_prim212_series_matches_enumeration():
    assert catalog.prim212_series(5).to_list() == [0, 1, 2, 7, 32, 181]
    assert catalog.prim212_series(5).to_list() == enumeration.primitive_avoider_counts((2, 1, 2), 5)


def test_formula_lookup():
    fn, label = catalog.formula_for((2, 1, 2))
    assert fn(4) == 60
    assert label == "(n+1)!/2"
    fn, _ = catalog.formula_for((1, 1, 1, 1))
    assert fn(4) == catalog.cay_1k(4, 4)[4]
    assert catalog.formula_for((1, 3, 2, 4)) is None


def test_table_rows_cover_all_short_patterns():
    covered = {p for row in catalog.PATTERN_TABLE for p in row.patterns}
    assert covered == set(catalog.small_patterns(3))


@pytest.mark.parametrize("name", [n for n in catalog.identity_names()
                                  if n not in ("prim_nonprimitive_112", "fixpoint_conj")])
def test_identities_pass_at_small_bounds(name):
    bound = catalog.REGISTRY[name].default_bound
    check = catalog.verify_identity(name, min(bound, 6))
    assert check.verdict == PASS, check.mismatch
    assert check.ok


def test_identity_examples():
    check = catalog.verify_identity("cay112_alt", 6)
    assert check.verdict == PASS
    assert check.compared > 0
    assert catalog.verify_identity("prim_sq", 7).verdict == PASS


def test_nonprimitive_pattern_fails_as_expected():
    check = catalog.verify_identity("prim_nonprimitive_112", 5)
    assert check.status == EXPECTED_FAIL
    assert check.verdict == FAIL
    assert check.mismatch["index"] == 3
    assert check.ok


def test_fixpoint_conjecture():
    check = catalog.verify_identity("fixpoint_conj", 5)
    assert check.status == CONJECTURE
    assert check.label == "verified up to 5"
    half_prim, letter_means, fixed_sums = catalog.fixpoint_sides(2)
    assert half_prim == [1, 4]
    assert letter_means == [1, 4]
    assert fixed_sums == [1, 4]


def test_check_to_dict_is_json_safe():
    check = catalog.verify_identity("prim_nonprimitive_112", 4)
    data = check.to_dict()
    assert data["status"] == EXPECTED_FAIL
    assert all(isinstance(v, str) for v in data["mismatch"].values())


def test_unknown_identity():
    with pytest.raises(UnknownNameError, match="Unbekannte Identität"):
        catalog.verify_identity("no_such_identity")


def test_bound_must_be_positive():
    with pytest.raises(ValueError):
        catalog.verify_identity("cay21", 0)


@pytest.mark.slow
def test_registry_passes_at_default_bounds():
    for check in catalog.verify_all():
        if check.status != EXPECTED_FAIL:
            assert check.verdict == PASS, (check.name, check.mismatch)


def test_word_checks_cover_every_n_and_k():
    sides = catalog.REGISTRY["eqwilf"].sides(4)
    assert {len(left) for _, left, _ in sides} == {5}
    assert len(sides) == 16 * 5 * 2
    sides = catalog.REGISTRY["burstein_words"].sides(4)
    assert {len(left) for _, left, _ in sides} == {5}
    assert len(sides) == 6 * 5


def test_capped_bound_is_reported(monkeypatch):
    monkeypatch.setattr(catalog, "REGISTRY", dict(catalog.REGISTRY))
    seen = []

    @catalog.identity("gedeckelt", "1 = 1", max_bound=3)
    def _capped(N):
        seen.append(N)
        return [catalog._cmp("eins", [1] * (N + 1), [1] * (N + 1))]

    check = catalog.verify_identity("gedeckelt", 9)
    assert seen == [3]
    assert check.bound == 3
    assert check.requested_bound == 9
    assert check.to_dict()["requested_bound"] == 9
    assert "requested_bound" not in catalog.verify_identity("gedeckelt", 2).to_dict()
    assert catalog.REGISTRY["eqwilf"].max_bound == catalog.WORD_BOUND == 7
