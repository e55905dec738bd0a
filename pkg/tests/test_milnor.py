import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from mgk.errors import NotInKernelError, UnknownGeneratorError
from mgk.milnor import (basis_rank, conjugation_action, default_alphabet,
                        lcs_degree, magnus, normal_form, r_inverse, r_map,
                        words_equal)
from mgk.ring import Ring
from mgk.words import Word, commutator

from helpers import milnor_rewrites, naive_magnus, random_words

A3 = default_alphabet(3)
A4 = default_alphabet(4)


def words(alphabet=A3, max_len=10):
    letters = st.tuples(st.sampled_from(alphabet), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_len).map(Word)


# -- Magnus expansion ----------------------------------------------------------

def test_magnus_generators():
    e = magnus(Word.gen("m2"), A3)
    assert e.coefficient(()) == 1 and e.coefficient(("m2",)) == 1
    inv = magnus(~Word.gen("m2"), A3)
    assert e * inv == 1


def test_magnus_commutator_frozen_value():
    # independently expanded in the free ring (see helpers.naive_magnus)
    w = Word.parse("[m2,m3]")
    assert naive_magnus(w) == {(): 1, ("m2", "m3"): 1, ("m3", "m2"): -1}
    assert magnus(w, A3).terms == naive_magnus(w)


def test_magnus_unknown_generator():
    with pytest.raises(UnknownGeneratorError):
        magnus(Word.gen("q7"), A3)


@given(words(), words())
def test_magnus_is_homomorphism(u, v):
    assert magnus(u * v, A3) == magnus(u, A3) * magnus(v, A3)
    assert magnus(u, A3) * magnus(~u, A3) == 1
    assert magnus(u, A3).constant_term == 1


@given(words())
def test_magnus_matches_free_ring_oracle(w):
    assert magnus(w, A3).terms == naive_magnus(w)


# -- normal forms ---------------------------------------------------------------

def test_identity_normal_form():
    nf = normal_form(Word(), A3)
    assert nf.is_identity
    assert all(c.is_zero for c in nf.components) and nf.exponent == 0


def test_two_conjugates_of_same_meridian_commute():
    w = commutator(Word.parse("m1 m2 m1'"), Word.parse("m3 m2 m3'"))
    assert normal_form(w, A3).is_identity


def test_free_identities_share_normal_forms():
    a = Word.parse("[m1,[m2,m3]]")
    b = Word.parse("(m1 [m2,m3]) ([m2,m3] m1)'")  # same element, rebracketed
    assert normal_form(a, A3) == normal_form(b, A3)
    assert words_equal(a, b, A3)


def test_rewriting_closure_oracle():
    rng = random.Random(20250810)
    for base in random_words(rng, A3, 12, max_len=8):
        nf = normal_form(base, A3)
        for variant in milnor_rewrites(rng, base, A3):
            assert normal_form(variant, A3) == nf


def test_distinct_elements_distinct_forms():
    assert normal_form(Word.gen("m1"), A3) != normal_form(Word.gen("m2"), A3)
    assert not normal_form(Word.parse("[m2,m3]"), A3).is_identity
    assert not words_equal(Word.gen("m1"), Word.parse("m1 m1"), A3)


def test_nilpotency_small():
    # weight s+1 commutators die in M(F_s)
    rng = random.Random(7)
    for s in (1, 2, 3, 4):
        alphabet = default_alphabet(s)
        for _ in range(5):
            w = random_words(rng, alphabet, 1, max_len=3)[0]
            for _ in range(s):
                w = commutator(random_words(rng, alphabet, 1, max_len=3)[0], w)
            assert normal_form(w, alphabet).is_identity


# -- kernel maps ----------------------------------------------------------------

def test_r_map_base_cases():
    ring = Ring(A3[:-1])
    assert r_map(ring.zero, A3) == Word()
    assert r_map(ring.one, A3) == Word.gen("m3")
    assert r_map(ring.gen("m2"), A3) == Word.parse("[m2,m3]")


def test_r_map_rejects_distinguished_variable():
    with pytest.raises(UnknownGeneratorError):
        r_map(Ring(A3).gen("m3"), A3)


def test_r_inverse_examples():
    assert r_inverse(Word.gen("m3"), A3) == 1
    assert r_inverse(Word.parse("[m2,m3]"), A3) == Ring(A3[:-1]).gen("m2")
    conj = Word.parse("m1 m3 m1'")
    assert r_inverse(conj, A3) == 1 + Ring(A3[:-1]).gen("m1")


def test_r_inverse_not_in_kernel():
    with pytest.raises(NotInKernelError):
        r_inverse(Word.parse("m1 m3"), A3)


def test_single_generator_alphabet_kernel():
    elem = r_inverse(Word.parse("m1^5"), ("m1",))
    assert elem.coefficient(()) == 5 and elem.ring.variables == ()


@settings(max_examples=40)
@given(st.integers(0, 2 ** 30))
def test_split_round_trip(seed):
    rng = random.Random(seed)
    s = rng.randint(1, 3)
    alphabet = default_alphabet(s + 1)
    ring = Ring(alphabet[:-1])
    terms = {}
    for _ in range(rng.randint(0, 3)):
        mono = tuple(rng.sample(ring.variables, rng.randint(0, s)))
        terms[mono] = rng.randint(-3, 3)
    rho = ring.element(terms)
    rho2 = ring.element({(v,): 1 for v in ring.variables})
    assert r_inverse(r_map(rho, alphabet), alphabet) == rho
    assert normal_form(
        r_map(rho, alphabet) * r_map(rho2, alphabet)
        * ~r_map(rho + rho2, alphabet), alphabet).is_identity


def test_kernel_elements_commute():
    ring = Ring(A4[:-1])
    r1 = r_map(ring.gen("m1") + 2 * ring.gen("m2") * ring.gen("m3"), A4)
    r2 = r_map(ring.one - ring.gen("m3"), A4)
    assert normal_form(commutator(r1, r2), A4).is_identity


def test_conjugation_action_matches_group():
    ring = Ring(A4[:-1])
    rho = ring.gen("m2") * ring.gen("m3")
    g = Word.parse("m1 m2'")
    conj = g * r_map(rho, A4) * ~g
    assert r_inverse(conj, A4) == conjugation_action(g, rho, A4[:-1])


def test_conjugation_action_frozen_value():
    # (m2 m3, y4) -> (1+y2)(1+y3) * y4, expanded by the free-ring oracle
    ring = Ring(("m1", "m2", "m3", "m4"))
    got = conjugation_action(Word.parse("m2 m3"), ring.gen("m4"),
                             ("m1", "m2", "m3", "m4"))
    from helpers import free_mul, squarefree
    oracle = squarefree(free_mul([
        {(): 1, ("m2",): 1}, {(): 1, ("m3",): 1}, {("m4",): 1}]))
    assert got.terms == oracle
    assert got == (ring.gen("m4") + ring.gen("m2") * ring.gen("m4")
                   + ring.gen("m3") * ring.gen("m4")
                   + ring.gen("m2") * ring.gen("m3") * ring.gen("m4"))


def test_identity_acts_trivially():
    ring = Ring(A3[:-1])
    rho = ring.gen("m1") - 2
    assert conjugation_action(Word(), rho, A3[:-1]) == rho


# -- degrees --------------------------------------------------------------------

def test_lcs_degree():
    assert lcs_degree(Word.gen("m1")) == 1
    assert lcs_degree(Word.parse("[m2,m3]")) == 2
    assert lcs_degree(Word.parse("m1 m1'")) == math.inf
    assert lcs_degree(Word.parse("[m1,[m2,m3]]"), A3) == 3


def test_lcs_degree_commutator_lower_bound():
    rng = random.Random(99)
    alphabet = default_alphabet(5)
    for k in (2, 3):
        for _ in range(10):
            w = random_words(rng, alphabet, 1, max_len=4)[0]
            for _ in range(k - 1):
                w = commutator(random_words(rng, alphabet, 1, max_len=4)[0], w)
            assert lcs_degree(w, alphabet) >= k


def test_basis_rank_reexport():
    assert basis_rank(4) == 1 + 4 + 12 + 24 + 24
