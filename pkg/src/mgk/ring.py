"""The squarefree ring R on named variables.

R is the quotient of the free associative ring on a finite set of
variables by the ideal spanned by all monomials in which some variable
occurs at least twice.  Its additive group is free abelian on the
monomials with pairwise-distinct variables, so elements are stored as
sparse integer maps keyed by tuples of variable names.  Coefficients are
exact Python ints of unbounded magnitude.

>>> R = Ring(("m1", "m2"))
>>> y1, y2 = R.gen("m1"), R.gen("m2")
>>> str((1 + y2) * (1 - y2))
'1'
>>> str(y1 * y2 + y2 * y1)
'y1*y2 + y2*y1'
"""

from __future__ import annotations

import math
import re

from .errors import UniverseMismatchError

Monomial = tuple[str, ...]


def basis_rank(s: int) -> int:
    """Number of basis monomials of R on s variables: sum of s!/(s-k)!."""
    if s < 0:
        raise ValueError("variable count must be >= 0")
    return sum(math.perm(s, k) for k in range(s + 1))


_M_NAME = re.compile(r"m(\d+)\Z")


def variable_display(name: str) -> str:
    """Display name of a variable: the meridian mK expands to yK."""
    m = _M_NAME.match(name)
    return "y" + m.group(1) if m else name


class Ring:
    """R over an ordered tuple of named variables."""

    __slots__ = ("variables", "_pos")

    def __init__(self, variables):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate ring variables: %r" % (self.variables,))
        self._pos = {v: i for i, v in enumerate(self.variables)}

    def __repr__(self):
        return "Ring(%s)" % ", ".join(self.variables)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    @property
    def zero(self) -> RingElement:
        return RingElement(self, {})

    @property
    def one(self) -> RingElement:
        return RingElement(self, {(): 1})

    def gen(self, name: str) -> RingElement:
        if name not in self._pos:
            raise UniverseMismatchError("%r is not a variable of %r" % (name, self))
        return RingElement(self, {(name,): 1})

    def monomial(self, names) -> Monomial:
        mono = tuple(names)
        if len(set(mono)) != len(mono):
            raise ValueError("monomial repeats a variable: %r" % (mono,))
        for v in mono:
            if v not in self._pos:
                raise UniverseMismatchError("%r is not a variable of %r" % (v, self))
        return mono

    def element(self, terms) -> RingElement:
        """Build an element from a {monomial: coefficient} mapping."""
        clean = {}
        for mono, coeff in terms.items():
            mono = self.monomial(mono)
            if coeff:
                clean[mono] = clean.get(mono, 0) + coeff
        return RingElement(self, {m: c for m, c in clean.items() if c})

    def monomial_key(self, mono: Monomial):
        return (len(mono), tuple(self._pos[v] for v in mono))

    def basis(self):
        """All basis monomials in degree-then-position order."""
        out = [()]
        frontier = [()]
        while frontier:
            nxt = []
            for mono in frontier:
                used = set(mono)
                for v in self.variables:
                    if v not in used:
                        nxt.append(mono + (v,))
            nxt.sort(key=self.monomial_key)
            out.extend(nxt)
            frontier = nxt
        return out

    @property
    def rank(self) -> int:
        return basis_rank(len(self.variables))


class RingElement:
    """A sparse integer combination of squarefree monomials.

    Values are immutable by convention: arithmetic always allocates.
    Plain ints coerce to constants, so ``1 + y2`` works.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, {(): other} if other else {})
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise UniverseMismatchError(
                    "mixed universes: %r vs %r" % (self.ring, other.ring))
            return other
        return None

    def coefficient(self, mono) -> int:
        return self.terms.get(tuple(mono), 0)

    @property
    def constant_term(self) -> int:
        return self.terms.get((), 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        """Monomials with nonzero coefficient, in canonical order."""
        return sorted(self.terms, key=self.ring.monomial_key)

    def min_positive_degree(self):
        """Smallest degree of a nonzero nonconstant term, else None."""
        degs = [len(m) for m in self.terms if m]
        return min(degs) if degs else None

    def homogeneous_part(self, degree: int) -> RingElement:
        return RingElement(
            self.ring, {m: c for m, c in self.terms.items() if len(m) == degree})

    def embed(self, ring: Ring) -> RingElement:
        """The same element in a ring whose variables contain ours."""
        missing = set(self.ring.variables) - set(ring.variables)
        if missing:
            raise UniverseMismatchError(
                "cannot embed: variables %s missing from %r" % (sorted(missing), ring))
        return RingElement(ring, dict(self.terms))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __neg__(self):
        return RingElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, 0) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        return RingElement(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return self.ring.zero
            return RingElement(self.ring, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            used = set(m1)
            for m2, c2 in other.terms.items():
                if used & set(m2):
                    continue  # repeated variable: the monomial dies in R
                mono = m1 + m2
                c = out.get(mono, 0) + c1 * c2
                if c:
                    out[mono] = c
                else:
                    del out[mono]
        return RingElement(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined in R")
        acc = self.ring.one
        for _ in range(n):
            acc = acc * self
        return acc

    def __str__(self):
        return format_ring_element(self)

    def __repr__(self):
        return "<RingElement %s>" % format_ring_element(self)


def format_ring_element(elem: RingElement, display=variable_display) -> str:
    """Serialize as a signed monomial sum, e.g. ``1 + y2*y3 - y3*y2``."""
    if not elem.terms:
        return "0"
    parts = []
    for mono in elem.support():
        coeff = elem.terms[mono]
        body = "*".join(display(v) for v in mono) if mono else "1"
        mag = abs(coeff)
        if mag != 1 or not mono:
            body = str(mag) if not mono else "%d*%s" % (mag, body)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append((" + " if coeff > 0 else " - ") + body)
    return "".join(parts)
