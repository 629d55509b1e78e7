"""Tests für die Bijektionen und ihre Suiten."""
import pytest
from hypothesis import given, strategies as st

import bijections
from bijections import BijectionError
from catalog import UnknownNameError
from core import Ballot, CayleyError, avoids, filling, order_pattern, wlmin

W = (7, 7, 9, 8, 5, 9, 9, 5, 6, 7, 4, 1, 2, 6, 3, 1, 3, 3)
U = (7, 7, 9, 9, 5, 9, 8, 5, 7, 6, 4, 1, 6, 3, 3, 1, 3, 2)
V = (7, 7, 8, 9, 5, 6, 6, 5, 7, 9, 4, 1, 2, 3, 3, 1, 3, 9)

cayley_words = st.lists(st.integers(min_value=1, max_value=6), max_size=9).map(order_pattern)


def test_cay_to_ballot_examples():
    assert str(bijections.cay_to_ballot((3, 1, 3, 4, 2, 2, 2, 4))) == "{2}|{5,6,7}|{1,3}|{4,8}"
    assert bijections.cay_to_ballot((1,)).as_lists() == [[1]]
    assert bijections.cay_to_ballot((1, 2)).as_lists() == [[1], [2]]
    assert bijections.cay_to_ballot((2, 1)).as_lists() == [[2], [1]]


def test_ballot_to_cay():
    assert bijections.ballot_to_cay(Ballot.parse("{2}|{5,6,7}|{1,3}|{4,8}")) == (3, 1, 3, 4, 2, 2, 2, 4)


def test_cay_to_ballot_rejects_non_cayley():
    with pytest.raises(CayleyError):
        bijections.cay_to_ballot((1, 3))


def test_representatives_worked_example():
    assert bijections.to_123_rep(W) == U
    assert bijections.to_132_rep(W) == V
    assert bijections.simion_schmidt(U) == V
    assert bijections.simion_schmidt_inverse(V) == U


def test_weakly_decreasing_words_are_fixed():
    for w in [(3, 2, 1), (2, 2, 1), (1, 1, 1)]:
        assert bijections.to_123_rep(w) == w
        assert bijections.to_132_rep(w) == w


def test_simion_schmidt_domain():
    with pytest.raises(BijectionError, match="123"):
        bijections.simion_schmidt((1, 2, 3))
    with pytest.raises(BijectionError, match="132"):
        bijections.simion_schmidt_inverse((1, 3, 2))


def test_prim_expand_and_contract():
    assert bijections.prim_expand({2, 3, 7}, (3, 2, 5, 1, 5, 4)) == (3, 3, 3, 2, 5, 1, 1, 5, 4)
    assert bijections.prim_expand(set(), (2, 1, 2)) == (2, 1, 2)
    assert bijections.prim_contract((1, 1, 1)) == (frozenset({2, 3}), (1,))
    assert bijections.prim_contract((3, 3, 3, 2, 5, 1, 1, 5, 4)) == (frozenset({2, 3, 7}), (3, 2, 5, 1, 5, 4))


@pytest.mark.parametrize("slots,v", [({1}, (1, 2)), ({5}, (1, 2)), (set(), (1, 1)), (set(), (1, 3))])
def test_prim_expand_rejects_bad_input(slots, v):
    with pytest.raises(BijectionError):
        bijections.prim_expand(slots, v)


def test_apply_bijection_text_forms():
    assert bijections.apply_bijection("cay2bal", "31342224") == "{2}|{5,6,7}|{1,3}|{4,8}"
    assert bijections.apply_bijection("bal2cay", "{2}|{5,6,7}|{1,3}|{4,8}") == "31342224"
    assert bijections.apply_bijection("prim_expand", "2,3,7;325154") == "333251154"
    assert bijections.apply_bijection("prim_contract", "111") == "{2,3};1"
    assert bijections.apply_bijection("to123", " ".join(map(str, W))) == "".join(map(str, U))
    assert bijections.apply_bijection("simion_schmidt", "".join(map(str, U))) == "".join(map(str, V))
    with pytest.raises(UnknownNameError):
        bijections.apply_bijection("rot13", "12")
    with pytest.raises(BijectionError):
        bijections.apply_bijection("prim_expand", "325154")


def test_suites_at_small_sizes():
    report = bijections.bijection_suite("cay_bal", 5)
    assert report.checked == 541
    assert report.round_trip_ok and report.ok
    report = bijections.bijection_suite("prim", 4)
    assert report.checked == 75
    assert report.ok
    assert bijections.bijection_suite("ss_classes", 5).ok


def test_simion_schmidt_suite():
    report = bijections.bijection_suite("simion_schmidt", 6)
    assert report.checked == 284
    assert report.image_count == report.expected_image_count == 284
    assert report.ok
    assert report.to_dict()["first_failure"] is None


def test_unknown_suite():
    with pytest.raises(UnknownNameError):
        bijections.bijection_suite("nope", 3)


@given(cayley_words)
def test_ballot_round_trip(w):
    assert bijections.ballot_to_cay(bijections.cay_to_ballot(w)) == w


@given(cayley_words)
def test_representatives_stay_in_class(w):
    u, v = bijections.to_123_rep(w), bijections.to_132_rep(w)
    assert avoids(u, (1, 2, 3)) and avoids(v, (1, 3, 2))
    assert wlmin(u) == wlmin(v) == wlmin(w)
    assert filling(u) == filling(v) == filling(w)


@given(cayley_words)
def test_prim_round_trip(w):
    if w:
        slots, v = bijections.prim_contract(w)
        assert bijections.prim_expand(slots, v) == w
