"""Free Milnor groups: Magnus expansion, normal forms, and the kernel maps.

The free Milnor group M(F) on an ordered alphabet m1 < ... < ms is the
quotient of the free group by all relations [mi, mi^h].  Setting the last
generator to 1 gives a split short exact sequence

    1 --> (R on s-1 variables, +) --r--> M(F on s) --> M(F on s-1) --> 1

whose kernel map r sends a basis monomial to the left-iterated commutator
of the corresponding generators with the last one.  The quotient acts on
the kernel through the Magnus expansion (mi acts by left multiplication
with 1 + yi), which is why the expansion shows up as a homomorphism into
the units of the squarefree ring.

Iterating the splitting expresses every group element uniquely as a tower
of ring components plus one integer exponent; `normal_form` computes that
tower by a single left-to-right scan per level, which makes the word
problem for M(F) exact.  Nothing here assumes the Magnus expansion itself
is injective on M(F).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotInKernelError, UnknownGeneratorError
from .ring import Ring, RingElement, basis_rank, format_ring_element
from .words import Word, commutator

__all__ = [
    "magnus", "normal_form", "words_equal", "MilnorElement", "r_map",
    "r_inverse", "conjugation_action", "lcs_degree", "basis_rank",
    "default_alphabet",
]


def default_alphabet(s: int) -> tuple[str, ...]:
    return tuple("m%d" % (i + 1) for i in range(s))


def _check_letters(word: Word, alphabet) -> None:
    allowed = set(alphabet)
    for g, _ in word.letters:
        if g not in allowed:
            raise UnknownGeneratorError(
                "generator %r is not in the alphabet %r" % (g, tuple(alphabet)))


def magnus(word: Word, alphabet) -> RingElement:
    """Magnus expansion: mi -> 1 + yi, mi' -> 1 - yi, multiplicatively.

    Returns a unit of R on the alphabet's variables with constant term 1.
    Factors through M(F), so Milnor-equal words expand identically.
    """
    _check_letters(word, alphabet)
    ring = Ring(alphabet)
    acc = ring.one
    for g, e in word.letters:
        acc = acc * (ring.one + e * ring.gen(g))
    return acc


@dataclass(frozen=True)
class MilnorElement:
    """Canonical form of an element of M(F) on a fixed alphabet.

    components[j] is the kernel coordinate extracted when scrubbing
    generator alphabet[-1-j]; it lives in R on the earlier generators.
    exponent is the surviving power of the first generator.
    """

    alphabet: tuple[str, ...]
    components: tuple[RingElement, ...]
    exponent: int

    @property
    def is_identity(self) -> bool:
        return self.exponent == 0 and all(c.is_zero for c in self.components)

    def top_component(self) -> RingElement:
        """Kernel coordinate for the last generator (R on the rest)."""
        if not self.alphabet:
            raise ValueError("empty alphabet has no kernel component")
        if len(self.alphabet) == 1:
            return Ring(()).element({(): self.exponent})
        return self.components[0]

    def describe(self) -> list[str]:
        lines = []
        for j, comp in enumerate(self.components):
            lines.append("%s-part: %s" % (self.alphabet[-1 - j],
                                          format_ring_element(comp)))
        if self.alphabet:
            lines.append("%s-exponent: %d" % (self.alphabet[0], self.exponent))
        return lines


def normal_form(word: Word, alphabet) -> MilnorElement:
    """Normal form in M(F) on the alphabet, via the split-extension tower.

    One scan per level: letters of the top generator contribute +-(Magnus
    expansion of the preceding tail prefix) to the kernel coordinate, all
    other letters accumulate into the tail, which is normalized
    recursively.  Each step evaluates a homomorphism, so words equal in
    M(F) get identical forms; the splitting makes the form unique.
    """
    full = tuple(alphabet)
    _check_letters(word, full)
    letters = word.letters
    components = []
    level = full
    while len(level) > 1:
        top = level[-1]
        sub = level[:-1]
        ring = Ring(sub)
        running = ring.one
        rho = ring.zero
        tail = []
        for g, e in letters:
            if g == top:
                rho = rho + e * running
            else:
                tail.append((g, e))
                running = running * (ring.one + e * ring.gen(g))
        components.append(rho)
        letters = tail
        level = sub
    exponent = sum(e for _, e in letters)
    return MilnorElement(full, tuple(components), exponent)


def words_equal(u: Word, v: Word, alphabet) -> bool:
    """Equality in M(F): compare normal forms of u and v."""
    return normal_form(u * ~v, alphabet).is_identity


def r_map(rho: RingElement, alphabet) -> Word:
    """Kernel inclusion: basis monomials to left-iterated commutators.

    The monomial of variables j1..jk maps to the word
    [m_j1, [m_j2, ..., [m_jk, m_last]...]]; terms concatenate in
    degree-then-position order, a negative coefficient inverting the
    word.  r(0) is the empty word and r(1) the distinguished generator.
    Any concatenation order yields the same group element because the
    kernel is abelian.
    """
    alphabet = tuple(alphabet)
    if not alphabet:
        raise ValueError("alphabet must contain the distinguished generator")
    last = alphabet[-1]
    allowed = set(alphabet[:-1])
    if not set(rho.ring.variables) <= allowed:
        extra = sorted(set(rho.ring.variables) - allowed)
        raise UnknownGeneratorError(
            "ring variables %s exceed the non-distinguished alphabet" % extra)
    out = Word()
    for mono in rho.support():
        w = Word.gen(last)
        for v in reversed(mono):
            w = commutator(Word.gen(v), w)
        coeff = rho.terms[mono]
        out = out * (w ** coeff)
    return out


def r_inverse(word: Word, alphabet) -> RingElement:
    """Kernel coordinate of a word in the kernel of deleting the last
    generator; raises NotInKernelError otherwise.
    """
    alphabet = tuple(alphabet)
    nf = normal_form(word, alphabet)
    rest = MilnorElement(alphabet[:-1], nf.components[1:], nf.exponent) \
        if len(alphabet) > 1 else None
    if rest is not None and not rest.is_identity:
        raise NotInKernelError(
            "deleting %r does not trivialize the word" % alphabet[-1])
    return nf.top_component()


def conjugation_action(g: Word, rho: RingElement, alphabet) -> RingElement:
    """Action of the quotient group on the kernel: Magnus(g) * rho.

    Satisfies r_inverse(g * r_map(rho) * g') == conjugation_action(g, rho)
    over the alphabet extended by the distinguished generator.
    """
    ring = Ring(alphabet)
    return magnus(g, alphabet) * rho.embed(ring)


def lcs_degree(word: Word, alphabet=None):
    """Minimal degree of a nonconstant term of the Magnus expansion.

    Returns math.inf when the expansion is 1.  A product of weight-k
    iterated commutators always has degree >= k, so this bounds the
    lower-central-series filtration from below.
    """
    if alphabet is None:
        alphabet = tuple(sorted({g for g, _ in word.letters}))
    deg = magnus(word, alphabet).min_positive_degree()
    return math.inf if deg is None else deg
