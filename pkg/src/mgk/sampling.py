"""Seeded random generators for words, ring elements and grope trees.

All functions take an explicit random.Random so sweeps are reproducible.
"""

from __future__ import annotations

import random

from .gropes import LEAF, ClosedGropeTree, GropeTree, leaf_paths
from .ring import Ring, RingElement
from .words import Word

__all__ = [
    "random_word", "random_ring_element", "random_grope_tree",
    "random_closed_tree",
]


def random_word(rng: random.Random, alphabet, max_len=12) -> Word:
    n = rng.randint(0, max_len)
    return Word(tuple((rng.choice(alphabet), rng.choice((1, -1)))
                      for _ in range(n)))


def random_ring_element(rng: random.Random, ring: Ring, max_terms=4,
                        max_degree=None, max_coeff=3) -> RingElement:
    nvars = len(ring.variables)
    if max_degree is None:
        max_degree = nvars
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        deg = rng.randint(0, min(max_degree, nvars))
        mono = tuple(rng.sample(ring.variables, deg))
        coeff = rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c])
        terms[mono] = terms.get(mono, 0) + coeff
    return ring.element(terms)


def random_grope_tree(rng: random.Random, k: int, max_genus=2,
                      max_tips=8) -> GropeTree:
    """A tree of class exactly k with at most max_tips leaves."""
    for attempt in range(64):
        genus_cap = max_genus if attempt < 32 else 1
        tree = _grow(rng, k, genus_cap)
        if len(leaf_paths(tree)) <= max_tips:
            return tree
    return _grow(rng, k, 1)  # genus-1 tower: exactly k tips


def _grow(rng: random.Random, k: int, max_genus: int) -> GropeTree:
    if k <= 1:
        return LEAF
    pairs = []
    genus = rng.randint(1, max_genus)
    exact_at = rng.randrange(genus)
    for i in range(genus):
        total = k if i == exact_at else k + rng.randint(0, 1)
        p = rng.randint(1, total - 1)
        pairs.append((_grow(rng, p, max_genus), _grow(rng, total - p, max_genus)))
    return GropeTree(tuple(pairs))


def random_closed_tree(rng: random.Random, k: int, max_genus=2,
                       max_tips=8) -> ClosedGropeTree:
    k = max(k, 2)  # a closed grope has a bottom surface
    return ClosedGropeTree(random_grope_tree(rng, k, max_genus, max_tips))
