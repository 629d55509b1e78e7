"""Tests für Wörter, Mustererkennung und Ballots."""
import pytest
from hypothesis import given, strategies as st

from core import (Ballot, CayleyError, complement, contains, contains_naive, content, ends_with_occurrence,
                  filling, fixed_points, format_word, image_max, is_cayley, is_primitive, order_pattern,
                  parse_pattern, parse_word, pattern_name, reverse, standardize, wlmin)

WORKED = (7, 7, 9, 8, 5, 9, 9, 5, 6, 7, 4, 1, 2, 6, 3, 1, 3, 3)

words = st.lists(st.integers(min_value=1, max_value=5), max_size=8).map(tuple)
cayley_words = st.lists(st.integers(min_value=1, max_value=5), max_size=8).map(order_pattern)
patterns = st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=4).map(order_pattern)


def test_parse_word_formats():
    assert parse_word("3134") == (3, 1, 3, 4)
    assert parse_word("3 1 3 4") == (3, 1, 3, 4)
    assert parse_word("1,10,2") == (1, 10, 2)
    assert parse_word("  ") == ()


@pytest.mark.parametrize("text", ["0 1", "1 a 2", "-1"])
def test_parse_word_rejects_garbage(text):
    with pytest.raises(CayleyError):
        parse_word(text)


def test_parse_pattern_requires_cayley():
    assert parse_pattern("212") == (2, 1, 2)
    with pytest.raises(CayleyError, match="Cayley"):
        parse_pattern("13")
    with pytest.raises(CayleyError):
        parse_pattern("")


def test_format_and_pattern_name():
    assert format_word((1, 10, 2)) == "1 10 2"
    assert format_word((1, 2, 1), compact=True) == "121"
    assert format_word((1, 10, 2), compact=True) == "1 10 2"
    assert pattern_name((1, 10, 2)) == "1,10,2"
    assert pattern_name((2, 3, 1)) == "231"


def test_is_cayley():
    assert is_cayley((1, 2, 1))
    assert is_cayley(())
    assert not is_cayley((1, 3))


def test_contains_examples():
    assert contains((3, 1, 3, 4, 2, 2, 2, 4), (1, 1, 2))
    assert contains((2, 1, 2), (2, 1, 2))
    assert not contains((1, 2), (1, 1))


def test_reverse_and_complement():
    assert reverse((1, 2, 3)) == (3, 2, 1)
    assert complement((1, 2, 2)) == (2, 1, 1)
    assert reverse(complement((1, 2, 2))) == (1, 1, 2)
    assert complement((2, 1, 2)) == (1, 2, 1)


def test_standardize():
    assert standardize((3, 3, 7, 2, 1, 7, 8, 1, 3), {2, 5, 6, 7, 9}) == (6, 6, 7, 5, 2, 7, 9, 2, 6)
    assert standardize((2, 2, 5, 7, 7), {1, 2, 3}) == (1, 1, 2, 3, 3)
    w = (3, 1, 3, 4, 2, 2, 2, 4)
    assert standardize(w, set(w)) == w


def test_standardize_rejects_wrong_target_size():
    with pytest.raises(CayleyError):
        standardize((1, 2, 3), {1, 2})


def test_fixed_points():
    assert fixed_points((1, 2)) == {1, 2}
    assert fixed_points((2, 1)) == frozenset()
    assert fixed_points((1, 1)) == {1}


def test_is_primitive():
    assert is_primitive((1, 2, 1))
    assert not is_primitive((1, 1, 2))
    assert not is_primitive(())


def test_wlmin_and_filling_worked_example():
    assert wlmin(WORKED) == ((1, 7), (2, 7), (5, 5), (8, 5), (11, 4), (12, 1), (16, 1))
    assert filling(WORKED) == (2, 3, 3, 3, 6, 6, 7, 8, 9, 9, 9)
    assert wlmin((1, 2, 3)) == ((1, 1),)
    assert filling((1, 2, 3)) == (2, 3)


def test_content_and_image_max():
    assert content((3, 1, 3, 4, 2, 2, 2, 4)) == (1, 2, 2, 2, 3, 3, 4, 4)
    assert content(()) == ()
    assert image_max(()) == 0
    assert image_max((1, 1, 1)) == 1


def test_ballot_text_form():
    b = Ballot.parse("{2}|{5,6,7}|{1,3}|{4,8}")
    assert str(b) == "{2}|{5,6,7}|{1,3}|{4,8}"
    assert b.size == 8
    assert b.as_lists() == [[2], [5, 6, 7], [1, 3], [4, 8]]


@pytest.mark.parametrize("text", ["{1}|{1,2}", "{1}|{3}", "{1}|{}"])
def test_invalid_ballots(text):
    with pytest.raises(CayleyError):
        Ballot.parse(text)


@given(words, patterns)
def test_contains_matches_naive_search(w, p):
    assert contains(w, p) == contains_naive(w, p)


@given(words, patterns)
def test_contains_is_some_occurrence_ending(w, p):
    assert contains(w, p) == any(ends_with_occurrence(w, i, p) for i in range(len(w)))


@given(cayley_words)
def test_symmetries_are_involutions(w):
    assert reverse(reverse(w)) == w
    if w:
        assert complement(complement(w)) == w


@given(cayley_words, patterns)
def test_containment_respects_symmetries(w, p):
    assert contains(w, p) == contains(reverse(w), reverse(p))
    if w:
        assert contains(w, p) == contains(complement(w), complement(p))


@given(cayley_words)
def test_reverse_and_complement_commute(w):
    if w:
        assert complement(reverse(w)) == reverse(complement(w))


@given(words, patterns, st.lists(st.integers(min_value=1, max_value=40), min_size=5, max_size=5, unique=True))
def test_standardize_preserves_containment(w, p, pool):
    target = set(pool[:len(set(w))])
    assert contains(w, p) == contains(standardize(w, target), p)


@given(words)
def test_order_pattern_is_cayley_and_order_isomorphic(w):
    u = order_pattern(w)
    assert is_cayley(u)
    assert all((w[i] < w[j]) == (u[i] < u[j]) and (w[i] == w[j]) == (u[i] == u[j])
               for i in range(len(w)) for j in range(len(w)))
