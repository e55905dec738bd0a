"""Independent oracles used by the test suite.

Everything here recomputes expectations by a different route than the
library: products are expanded in the free associative ring and projected
afterwards, Milnor-equal words are produced by explicit relator
insertion, and re-rooting works on a plain adjacency list.
"""

from mgk.gropes import ClosedGropeTree, GropeTree
from mgk.words import Word

# -- free associative ring, projected to squarefree monomials at the end ------


def free_mul(factors):
    """Multiply {monomial: coeff} dicts in the free associative ring."""
    acc = {(): 1}
    for factor in factors:
        out = {}
        for m1, c1 in acc.items():
            for m2, c2 in factor.items():
                key = m1 + m2
                out[key] = out.get(key, 0) + c1 * c2
        acc = {m: c for m, c in out.items() if c}
    return acc


def squarefree(terms):
    """Project to the squarefree quotient: drop repeating monomials.

    Valid to do once at the end: a monomial with a repeat never multiplies
    back into a squarefree one.
    """
    return {m: c for m, c in terms.items() if len(set(m)) == len(m)}


def naive_magnus(word, rename=None):
    """Magnus expansion via the free ring; letters may be renamed."""
    factors = []
    for g, e in word.letters:
        v = rename(g) if rename else g
        factors.append({(): 1, (v,): e})
    return squarefree(free_mul(factors))


# -- Milnor-equal rewritings ---------------------------------------------------


def milnor_rewrites(rng, word, alphabet, count=6, max_conj=3):
    """Words equal to `word` in the Milnor group, by inserting cancelling
    pairs and conjugated Milnor relators at random positions."""

    def random_subword():
        return Word(tuple((rng.choice(alphabet), rng.choice((1, -1)))
                          for _ in range(rng.randint(0, max_conj))))

    variants = []
    for _ in range(count):
        current = list(word.letters)
        for _ in range(rng.randint(1, 4)):
            kind = rng.random()
            if kind < 0.4:  # cancelling pair
                g = rng.choice(alphabet)
                e = rng.choice((1, -1))
                ins = [(g, e), (g, -e)]
            else:  # Milnor relator [u mi u', v mi v'], possibly inverted
                mi = Word.gen(rng.choice(alphabet))
                u, v = random_subword(), random_subword()
                a, b = u * mi * ~u, v * mi * ~v
                rel = a * b * ~a * ~b
                if rng.random() < 0.5:
                    rel = ~rel
                ins = list(rel.letters)
            pos = rng.randint(0, len(current))
            current[pos:pos] = ins
        variants.append(Word(tuple(current)))
    return variants


# -- adjacency re-rooting for genus-1 closed trees ------------------------------


def reroot_oracle(closed: ClosedGropeTree, tip):
    """Re-root the unordered tree at a free tip, via plain adjacency lists."""
    adj = {}
    tips = {}
    counter = [0]

    def fresh():
        v = counter[0]
        counter[0] += 1
        adj[v] = []
        return v

    def build(node, path):
        v = fresh()
        if node.is_leaf:
            tips[path] = v
        for i, (left, right) in enumerate(node.pairs):
            for side, child in enumerate((left, right)):
                c = build(child, path + ((i, side),))
                adj[v].append(c)
                adj[c].append(v)
        return v

    root = build(closed.body, ())
    extra = fresh()
    adj[extra].append(root)
    adj[root].append(extra)

    start = tips[tuple(tip)]

    def grow(v, parent):
        kids = [u for u in adj[v] if u != parent]
        if not kids:
            return GropeTree()
        assert len(kids) == 2, "oracle only handles genus-1 trees"
        return GropeTree(((grow(kids[0], v), grow(kids[1], v)),))

    (first,) = adj[start]
    return ClosedGropeTree(grow(first, start))


def random_words(rng, alphabet, count, max_len=12):
    return [Word(tuple((rng.choice(alphabet), rng.choice((1, -1)))
                       for _ in range(rng.randint(0, max_len))))
            for _ in range(count)]
