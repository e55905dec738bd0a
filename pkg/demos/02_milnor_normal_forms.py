"""The squarefree ring, the Magnus expansion, and exact normal forms.

The free Milnor group on m1..ms is the free group modulo [mi, mi^h] for
all i and h.  Setting the last generator to 1 splits off an abelian
kernel isomorphic to the squarefree ring R on the remaining variables;
iterating gives a normal form (a tower of ring components plus one
exponent) that solves the word problem exactly.
"""

from mgk import (Ring, Word, basis_rank, commutator, conjugation_action,
                 default_alphabet, lcs_degree, magnus, normal_form,
                 r_inverse, r_map, words_equal)

A3 = default_alphabet(3)  # (m1, m2, m3)

print("== the ring R " + "=" * 47)
R = Ring(("m1", "m2"))
y1, y2 = R.gen("m1"), R.gen("m2")
print("y1*y1          =", y1 * y1)
print("(1+y2)(1-y2)   =", (1 + y2) * (1 - y2))
print("y1*y2 + y2*y1  =", y1 * y2 + y2 * y1, " (distinct basis monomials)")
print("rank of R on s variables:",
      ", ".join("s=%d: %d" % (s, basis_rank(s)) for s in range(5)))

print()
print("== Magnus expansion " + "=" * 41)
for text in ("m2", "m2'", "[m2,m3]", "[m1,[m2,m3]]"):
    w = Word.parse(text)
    print("%-14s -> %s" % (text, magnus(w, A3)))
print("minimal degrees:",
      {t: lcs_degree(Word.parse(t), A3) for t in ("m1", "[m2,m3]", "m1 m1'")})

print()
print("== Milnor relations and nilpotency " + "=" * 26)
rel = commutator(Word.parse("m1 m2 m1'"), Word.parse("m3 m2 m3'"))
print("[m2^(m1'), m2^(m3')] is the identity:",
      normal_form(rel, A3).is_identity)
w = Word.parse("[m1,[m2,[m3,[m1,m2]]]]")  # weight 5 > 3 generators
print("a weight-5 commutator on 3 generators dies:",
      normal_form(w, A3).is_identity)

print()
print("== normal forms " + "=" * 45)
for text in ("m1 m2 m1' m2'", "[m1,[m2,m3]]", "m3 m1 m3' m2"):
    nf = normal_form(Word.parse(text), A3)
    print("%-16s ->" % text, "; ".join(nf.describe()))
print("rebracketed words agree:",
      words_equal(Word.parse("[m1,[m2,m3]]"),
                  Word.parse("(m1 [m2,m3]) ([m2,m3] m1)'"), A3))

print()
print("== the kernel of deleting m3 " + "=" * 32)
ring = Ring(("m1", "m2"))
rho = ring.gen("m1") * ring.gen("m2") - 2 * ring.gen("m2")
word = r_map(rho, A3)
print("r(%s) = %s" % (rho, word))
print("r_inverse round trip:", r_inverse(word, A3) == rho)
print("conjugation m1 . r(1) . m1' has coordinate:",
      r_inverse(Word.parse("m1 m3 m1'"), A3))
print("the same by ring multiplication:",
      conjugation_action(Word.gen("m1"), ring.one, ("m1", "m2")))
