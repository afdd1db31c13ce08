import json

import pytest
from hypothesis import given, strategies as st

from altcox.words import (Word, Presentation, parse_word, render_word,
                          free_reduce, word_invert, commutator,
                          WordSyntaxError)

P3 = Presentation(("a", "b", "c"), ())

letters = st.lists(st.integers(min_value=-3, max_value=3).filter(bool),
                   max_size=30)


def test_identity_cases():
    assert Word().letters == ()
    assert free_reduce(Word()) == Word()
    assert word_invert(Word()) == Word()


def test_cancellation():
    assert Word((1, -1)).letters == ()
    assert Word((1, 2, -2, 1)).letters == (1, 1)


def test_gen_and_powers():
    assert Word.gen(0).letters == (1,)
    assert Word.gen(1, -2).letters == (-2, -2)
    assert (Word.gen(0) ** 3).letters == (1, 1, 1)
    assert (Word((1, 2)) ** -1).letters == (-2, -1)


@given(letters)
def test_free_reduce_idempotent(ls):
    w = Word(tuple(ls))
    assert Word(w.letters) == w
    assert len(w) <= len(ls)


@given(letters)
def test_invert_involution(ls):
    w = Word(tuple(ls))
    assert w.inverse().inverse() == w
    assert (w * w.inverse()) == Word()


@given(letters)
def test_render_parse_roundtrip(ls):
    w = Word(tuple(ls))
    assert parse_word(render_word(w, P3), P3) == w


def test_parse_word_syntax():
    assert parse_word("a b^-1", P3).letters == (1, -2)
    assert parse_word("a^3", P3).letters == (1, 1, 1)
    assert parse_word("1", P3) == Word()
    with pytest.raises(WordSyntaxError):
        parse_word("bogus", P3)
    with pytest.raises(WordSyntaxError):
        parse_word("a^x", P3)


def test_commutator():
    w = commutator(Word.gen(0), Word.gen(1))
    assert w.letters == (1, 2, -1, -2)


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(("a", "a"), ()).validate()
    with pytest.raises(ValueError):
        Presentation(("a",), (Word((2,)),)).validate()


def test_presentation_build_central():
    p = Presentation.build(("x", "z"), [Word.gen(0) ** 3],
                           central=(("z", 2),))
    rel = {w.letters for w in p.relators}
    assert (2, 2) in rel                      # z^2
    assert (2, 1, -2, -1) in rel              # [z, x]
    p.validate()


def test_presentation_json_roundtrip():
    p = Presentation.build(("x", "z"), [Word.gen(0) ** 3, Word((1, 2, 1))],
                           central=(("z", 2),))
    q = Presentation.from_json(p.to_json())
    assert q == p
    data = json.loads(p.to_json())
    assert set(data) == {"generators", "relators", "central"}
    assert data["central"] == [{"name": "z", "order": 2}]
