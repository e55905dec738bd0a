"""Link composition at the word level, the sigma ring map, and the
essentiality certificate.

Composing a pattern Q into a link replaces the target component: every
occurrence of the target's meridian in the remaining longitudes becomes
the wedge word, and every core-symbol letter in Q's longitudes becomes
the target's own longitude.  The embedding is 0-framed, so no correction
letters are inserted.

Algebraically, with the first ambient component deleted throughout and
the first pattern component's meridian distinguished, substituting the
target meridian by the wedge word multiplies kernel coordinates on the
right by the wedge element r^{-1}(wedge).  When the wedge word is in the
kernel this holds exactly at the group level (the kernel is abelian and
normal, so the substitution descends to Milnor groups), which is what
`verify_sigma` sweeps and what makes the certificate's product formula
c = a*b exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CompositionError, NotInKernelError
from .links import LinkModel, SolidTorusLink, is_almost_trivial
from .milnor import r_inverse, r_map
from .ring import Ring, RingElement, format_ring_element
from .sampling import random_ring_element

__all__ = [
    "CompositionSpec", "compose", "wedge_ring_element", "verify_sigma",
    "essentiality_certificate", "Certificate",
]


@dataclass(frozen=True)
class CompositionSpec:
    """Ambient link with k+1 components, a pattern with m components, and
    the target component to replace (default: the last one)."""

    lhat: LinkModel
    q: SolidTorusLink
    target: int | None = None

    def __post_init__(self):
        if not isinstance(self.q, SolidTorusLink):
            raise CompositionError("the pattern must carry a wedge word")
        t = self.target_index
        if not 0 <= t < self.lhat.n:
            raise CompositionError("target component out of range")
        clash = set(self.lhat.meridians) & set(self.q.meridians)
        if clash:
            raise CompositionError(
                "meridian alphabets collide: %s" % sorted(clash))
        if set(self.lhat.components) & set(self.q.components):
            raise CompositionError("component names collide")
        if self.q.core_symbol in self.lhat.meridians:
            raise CompositionError("core symbol clashes with the ambient link")

    @property
    def target_index(self) -> int:
        return (self.lhat.n - 1) if self.target is None else self.target - 1


def compose(spec: CompositionSpec) -> LinkModel:
    """The composed link: ambient components keep their names, with the
    target meridian replaced by the wedge word; pattern components follow,
    with the core symbol replaced by the target's longitude."""
    lhat, q = spec.lhat, spec.q
    t = spec.target_index
    mer_t = lhat.meridians[t]
    around = lhat.longitudes[t].substitute(mer_t, q.wedge)
    keep = [i for i in range(lhat.n) if i != t]
    components = tuple(lhat.components[i] for i in keep) + q.components
    meridians = tuple(lhat.meridians[i] for i in keep) + q.meridians
    longitudes = tuple(lhat.longitudes[i].substitute(mer_t, q.wedge) for i in keep)
    longitudes += tuple(w.substitute(q.core_symbol, around) for w in q.longitudes)
    return LinkModel(components, meridians, longitudes)


def wedge_ring_element(q: SolidTorusLink, deleted=1) -> RingElement:
    """r^{-1} of the wedge word, the deleted component's meridian taken as
    the distinguished generator.  Raises NotInKernelError when deleting
    that meridian does not trivialize the wedge word (it always does when
    the pattern-with-wedge minus that component is homotopically trivial).
    """
    d = q.index_of(deleted)
    alphabet = tuple(m for i, m in enumerate(q.meridians) if i != d)
    alphabet += (q.meridians[d],)
    return r_inverse(q.wedge, alphabet)


def _sigma_alphabets(spec: CompositionSpec):
    """Alphabets with ambient component 1 deleted throughout: the y-side
    meridians, the kernel alphabet upstairs and downstairs, and the
    pattern's z-side split."""
    lhat, q = spec.lhat, spec.q
    t = spec.target_index
    if t == 0:
        raise CompositionError("component 1 is deleted throughout; "
                               "it cannot be the target")
    ys = tuple(lhat.meridians[i] for i in range(1, lhat.n) if i != t)
    bar_alphabet = ys + (lhat.meridians[t],)
    zs_rest = q.meridians[1:]
    big_alphabet = ys + zs_rest + (q.meridians[0],)
    return ys, bar_alphabet, zs_rest, big_alphabet


def verify_sigma(spec: CompositionSpec, trials=100, seed=0) -> dict:
    """Sweep the multiplication law: over the composed alphabets (ambient
    component 1 deleted, pattern component 1's meridian distinguished),
    r^{-1}(lc(r(rho))) must equal rho * r^{-1}(wedge) for every generator
    monomial and for random ring elements rho.  Returns a report dict.
    """
    lhat, q = spec.lhat, spec.q
    ys, bar_alphabet, zs_rest, big_alphabet = _sigma_alphabets(spec)
    mer_t = lhat.meridians[spec.target_index]
    y_ring = Ring(ys)
    big_ring = Ring(ys + zs_rest)
    wedge_elem = wedge_ring_element(q).embed(big_ring)

    rng = random.Random(seed)
    samples = [y_ring.gen(y) for y in ys]
    samples += [random_ring_element(rng, y_ring) for _ in range(trials)]

    cases = []
    failures = 0
    for i, rho in enumerate(samples):
        lifted = r_map(rho, bar_alphabet).substitute(mer_t, q.wedge)
        got = r_inverse(lifted, big_alphabet)
        want = rho.embed(big_ring) * wedge_elem
        ok = got == want
        failures += not ok
        if not ok or i < len(ys):
            cases.append({
                "input": format_ring_element(rho),
                "expected": format_ring_element(want),
                "actual": format_ring_element(got),
                "status": "pass" if ok else "fail",
            })
    return {
        "command": "verify sigma",
        "config": {"seed": seed, "trials": trials,
                   "wedge": str(q.wedge),
                   "wedge_element": format_ring_element(wedge_elem)},
        "cases": cases,
        "summary": {"total": len(samples), "failed": failures,
                    "status": "pass" if failures == 0 else "fail"},
    }


class Certificate(NamedTuple):
    a: int
    b: int
    c: int


def essentiality_certificate(spec: CompositionSpec) -> Certificate:
    """Bottom-degree certificate for essentiality of the composed link.

    a: coefficient of the ordered product of y-variables in the kernel
       coordinate of the first ambient component's longitude;
    b: the same for the z-variables in the wedge element;
    c: coefficient of the combined monomial in the composed link.
    The contract c = a*b holds exactly; both almost-triviality
    preconditions are checked and failure refuses the certificate.
    """
    lhat, q = spec.lhat, spec.q
    if lhat.n < 2:
        raise CompositionError(
            "certificate refused: the ambient link needs a deleted "
            "component besides the target")
    if not is_almost_trivial(lhat):
        raise CompositionError(
            "certificate refused: the ambient link is not almost "
            "homotopically trivial")
    if not is_almost_trivial(q.ambient_model()):
        raise CompositionError(
            "certificate refused: the pattern with its wedge is not almost "
            "homotopically trivial")
    ys, bar_alphabet, zs_rest, big_alphabet = _sigma_alphabets(spec)
    try:
        a_elem = r_inverse(lhat.longitudes[0], bar_alphabet)
        b_elem = wedge_ring_element(q)
        composed = compose(spec)
        c_elem = r_inverse(composed.longitude(lhat.components[0]), big_alphabet)
    except NotInKernelError as exc:
        raise CompositionError("certificate refused: %s" % exc) from exc
    return Certificate(a=a_elem.coefficient(ys),
                       b=b_elem.coefficient(zs_rest),
                       c=c_elem.coefficient(ys + zs_rest))
