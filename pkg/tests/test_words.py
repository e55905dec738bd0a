import pytest
from hypothesis import given, strategies as st

from mgk.errors import WordSyntaxError
from mgk.words import IDENTITY, Word, commutator

NAMES = ("m1", "m2", "m3", "z1", "lambda")


def words():
    letters = st.tuples(st.sampled_from(NAMES), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=12).map(Word)


def test_parse_basics():
    assert Word.parse("m2").letters == (("m2", 1),)
    assert Word.parse("m2'").letters == (("m2", -1),)
    assert Word.parse("m1 m2") == Word.gen("m1") * Word.gen("m2")
    assert Word.parse("") == IDENTITY
    assert Word.parse("1") == IDENTITY
    assert Word.parse("lambda'").letters == (("lambda", -1),)


def test_parse_sugar():
    assert Word.parse("[m2,m3]").letters == (
        ("m2", 1), ("m3", 1), ("m2", -1), ("m3", -1))
    assert Word.parse("[m2, m3' m2 m3]") == commutator(
        Word.gen("m2"), Word.parse("m3' m2 m3"))
    assert Word.parse("(m1 m2)'") == ~Word.parse("m1 m2")
    assert Word.parse("m1^3").letters == (("m1", 1),) * 3
    assert Word.parse("m1^-2").letters == (("m1", -1),) * 2
    assert Word.parse("m1^0") == IDENTITY
    assert Word.parse("[m1,m2]'^2") == (~Word.parse("[m1,m2]")) ** 2


def test_parse_errors_carry_positions():
    for text in ("[m1,m2", "m1)", "(m1", "m1^x", "m1 @", "[,m2]'^"):
        with pytest.raises(WordSyntaxError):
            Word.parse(text)


def test_juxtaposed_names_are_one_token():
    # names are greedy: "m2m3" is a single (unknown) generator
    assert Word.parse("m2m3").letters == (("m2m3", 1),)


@given(words())
def test_print_parse_round_trip(w):
    assert Word.parse(str(w)) == w


@given(words())
def test_inverse_reduces_to_identity(w):
    assert (w * ~w).free_reduce().is_empty
    assert w.freely_equal(w)


@given(words(), words())
def test_product_length(u, v):
    assert len(u * v) == len(u) + len(v)


def test_free_reduce_is_lazy():
    w = Word.parse("m1 m1'")
    assert not w.is_empty  # stored unreduced
    assert w.free_reduce().is_empty


def test_substitute_and_erase():
    w = Word.parse("[m2,m3]")
    assert w.substitute("m3", Word.parse("z1 z2")) == Word.parse("m2 z1 z2 m2' z2' z1'")
    assert w.erase("m3") == Word.parse("m2 m2'")
    assert w.exponent_sum("m2") == 0
    assert Word.parse("m2 m2 m2'").exponent_sum("m2") == 1


def test_conjugate():
    g, h = Word.gen("m1"), Word.gen("m2")
    assert g.conjugated_by(h) == Word.parse("m2' m1 m2")


def test_generators_order():
    assert Word.parse("m3 m1 m3").generators() == ("m3", "m1")
