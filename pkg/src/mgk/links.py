"""Links presented by longitude words; mu-bar invariants with distinct
indices; homotopy triviality tests; the built-in catalog.

A link model is nothing but its presentation: named components, one
meridian generator per component, and one longitude word per component
over the other components' meridians.  Invariants are computed verbatim
from the words; geometric realizability and the indeterminacy of the
invariants for general links are out of scope.  Deleting a component sets
its meridian to 1 by erasing its letters from the remaining longitudes.

The catalog entries come from the committed Wirtinger-oracle fixtures
(tests/oracles, tests/fixtures); the solid-torus patterns additionally
use the core symbol "lambda" to mark traversals of the S1 direction.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import LinkFormatError
from .milnor import magnus
from .words import Word

__all__ = [
    "LinkModel", "SolidTorusLink", "mu_bar", "is_homotopically_trivial",
    "is_almost_trivial", "delete_component", "catalog", "catalog_names",
    "link_to_dict", "link_from_dict", "load_link", "save_link",
]


@dataclass(frozen=True)
class LinkModel:
    """A link as named components with meridians and longitude words."""

    components: tuple[str, ...]
    meridians: tuple[str, ...]
    longitudes: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.components)
        if n < 1:
            raise LinkFormatError("a link needs at least one component")
        if len(self.meridians) != n or len(self.longitudes) != n:
            raise LinkFormatError("components, meridians and longitudes must align")
        if len(set(self.components)) != n:
            raise LinkFormatError("component names must be distinct")
        if len(set(self.meridians)) != n:
            raise LinkFormatError("meridian names must be distinct")
        known = set(self.meridians)
        for name, mer, word in zip(self.components, self.meridians, self.longitudes):
            for g, _ in word.letters:
                if g == mer:
                    raise LinkFormatError(
                        "longitude of %r contains its own meridian %r" % (name, mer))
                if g not in known:
                    raise LinkFormatError(
                        "longitude of %r uses unknown generator %r" % (name, g))

    @property
    def n(self) -> int:
        return len(self.components)

    def index_of(self, which) -> int:
        """Resolve a component given by 1-based position or by name."""
        if isinstance(which, int):
            if not 1 <= which <= self.n:
                raise LinkFormatError("component index %d out of range" % which)
            return which - 1
        if which in self.components:
            return self.components.index(which)
        raise LinkFormatError("unknown component %r" % (which,))

    def longitude(self, which) -> Word:
        return self.longitudes[self.index_of(which)]

    def meridian(self, which) -> str:
        return self.meridians[self.index_of(which)]


@dataclass(frozen=True)
class SolidTorusLink:
    """A link in the solid torus: meridians z_i, a wedge word (the word of
    the solid torus' own meridian circle in the pattern complement), and
    longitudes that may use the core symbol for S1-direction traversals.
    """

    components: tuple[str, ...]
    meridians: tuple[str, ...]
    longitudes: tuple[Word, ...]
    wedge: Word
    core_symbol: str = "lambda"

    def __post_init__(self):
        n = len(self.components)
        if n < 1:
            raise LinkFormatError("a pattern needs at least one component")
        if len({*self.components}) != n or len({*self.meridians}) != n:
            raise LinkFormatError("names must be distinct and aligned")
        if len(self.meridians) != n or len(self.longitudes) != n:
            raise LinkFormatError("components, meridians and longitudes must align")
        if self.core_symbol in self.meridians:
            raise LinkFormatError("core symbol clashes with a meridian")
        known = set(self.meridians) | {self.core_symbol}
        for name, mer, word in zip(self.components, self.meridians, self.longitudes):
            for g, _ in word.letters:
                if g == mer or g not in known:
                    raise LinkFormatError(
                        "bad letter %r in the longitude of %r" % (g, name))
        for g, _ in self.wedge.letters:
            if g == self.core_symbol:
                raise LinkFormatError("the wedge word cannot use the core symbol")
            if g not in self.meridians:
                raise LinkFormatError("bad letter %r in the wedge word" % (g,))

    @property
    def n(self) -> int:
        return len(self.components)

    def index_of(self, which) -> int:
        if isinstance(which, int):
            if not 1 <= which <= self.n:
                raise LinkFormatError("component index %d out of range" % which)
            return which - 1
        if which in self.components:
            return self.components.index(which)
        raise LinkFormatError("unknown component %r" % (which,))

    def ambient_model(self, wedge_component="wedge", wedge_meridian="w") -> LinkModel:
        """The pattern together with its wedge circle as a link model (the
        standard embedding of the solid torus): the boundary S1 direction
        is a meridian of the wedge circle, so the core symbol becomes the
        new component's meridian.
        """
        if wedge_meridian in self.meridians or wedge_component in self.components:
            raise LinkFormatError("wedge names clash with the pattern")
        longs = tuple(w.substitute(self.core_symbol, Word.gen(wedge_meridian))
                      for w in self.longitudes)
        return LinkModel(self.components + (wedge_component,),
                         self.meridians + (wedge_meridian,),
                         longs + (self.wedge,))


# -- invariants ---------------------------------------------------------------

def mu_bar(link: LinkModel, indices) -> int:
    """mu-bar with distinct indices (i1, ..., ik, j): the coefficient of
    y_i1 ... y_ik in the Magnus expansion of component j's longitude,
    variables indexed by the other components' meridians.
    """
    idx = [link.index_of(i) for i in indices]
    if len(idx) < 2:
        raise LinkFormatError("need at least two indices (i1, ..., ik, j)")
    if len(set(idx)) != len(idx):
        raise LinkFormatError("mu-bar indices must be pairwise distinct")
    j = idx[-1]
    others = tuple(m for k, m in enumerate(link.meridians) if k != j)
    expansion = magnus(link.longitudes[j], others)
    return expansion.coefficient(tuple(link.meridians[i] for i in idx[:-1]))


def delete_component(link: LinkModel, which) -> LinkModel:
    """Remove a component and erase its meridian from the other longitudes
    (the quotient setting that meridian to 1)."""
    i = link.index_of(which)
    if link.n == 1:
        raise LinkFormatError("cannot delete the last component")
    mer = link.meridians[i]
    keep = [k for k in range(link.n) if k != i]
    return LinkModel(
        tuple(link.components[k] for k in keep),
        tuple(link.meridians[k] for k in keep),
        tuple(link.longitudes[k].erase(mer) for k in keep))


def is_homotopically_trivial(link: LinkModel) -> bool:
    """True iff every longitude has Magnus expansion 1 and, recursively,
    every proper sublink is trivial.  One-component models are always
    trivial (knots are homotopically trivial)."""
    if link.n == 1:
        return True
    for k in range(link.n):
        others = tuple(m for i, m in enumerate(link.meridians) if i != k)
        if magnus(link.longitudes[k], others) != 1:
            return False
    return all(is_homotopically_trivial(delete_component(link, k + 1))
               for k in range(link.n))


def is_almost_trivial(link: LinkModel) -> bool:
    """True iff every proper sublink with one component removed is
    homotopically trivial; requires at least two components.  For n = 2
    the sublinks are knots, so the answer is always True."""
    if link.n < 2:
        raise LinkFormatError("almost-triviality needs at least 2 components")
    return all(is_homotopically_trivial(delete_component(link, k + 1))
               for k in range(link.n))


# -- catalog ------------------------------------------------------------------

_UNLINK = re.compile(r"unlink\((\d+)\)\Z")


def _link(names, meridians, longitudes):
    return LinkModel(tuple(names), tuple(meridians),
                     tuple(Word.parse(w) for w in longitudes))


def catalog_names():
    return ("unlink(n)", "hopf", "borromean", "whitehead_pattern",
            "core", "bing_double")


def catalog(name: str):
    """Built-in models; longitudes match the committed oracle fixtures."""
    m = _UNLINK.match(name.strip())
    if m:
        n = int(m.group(1))
        if n < 1:
            raise LinkFormatError("unlink needs at least one component")
        return _link(("l%d" % (i + 1) for i in range(n)),
                     ("m%d" % (i + 1) for i in range(n)),
                     ("1",) * n)
    if name == "hopf":
        return _link(("l1", "l2"), ("m1", "m2"), ("m2", "m1"))
    if name == "borromean":
        return _link(("l1", "l2", "l3"), ("m1", "m2", "m3"),
                     ("[m2,m3]", "[m3,m1]", "[m1,m2]"))
    if name == "whitehead_pattern":
        # clasp through two channels: the longitude is a Milnor relation
        return _link(("l1", "l2", "l3"), ("m1", "m2", "m3"),
                     ("[m2, m3' m2 m3]", "1", "1"))
    if name == "core":
        return SolidTorusLink(("q1",), ("z1",), (Word.gen("lambda"),),
                              wedge=Word.gen("z1"))
    if name == "bing_double":
        return SolidTorusLink(
            ("q1", "q2"), ("z1", "z2"),
            (Word.parse("[z2,lambda]"), Word.parse("[lambda,z1]")),
            wedge=Word.parse("[z1,z2]"))
    raise LinkFormatError("unknown catalog name %r (try one of %s)"
                          % (name, ", ".join(catalog_names())))


# -- JSON interchange ----------------------------------------------------------

def link_to_dict(link) -> dict:
    out = {
        "components": list(link.components),
        "meridians": list(link.meridians),
        "longitudes": {c: str(w) for c, w in zip(link.components, link.longitudes)},
    }
    if isinstance(link, SolidTorusLink):
        out["wedge"] = str(link.wedge)
        out["core_symbol"] = link.core_symbol
    return out


def link_from_dict(data: dict):
    try:
        components = tuple(data["components"])
        raw = data["longitudes"]
    except (KeyError, TypeError) as exc:
        raise LinkFormatError("link JSON needs 'components' and 'longitudes'") from exc
    prefix = "z" if "wedge" in data else "m"
    meridians = tuple(data.get("meridians") or
                      ("%s%d" % (prefix, i + 1) for i in range(len(components))))
    try:
        longitudes = tuple(Word.parse(raw[c]) for c in components)
    except KeyError as exc:
        raise LinkFormatError("missing longitude for component %s" % exc) from exc
    if "wedge" in data:
        return SolidTorusLink(components, meridians, longitudes,
                              wedge=Word.parse(data["wedge"]),
                              core_symbol=data.get("core_symbol", "lambda"))
    return LinkModel(components, meridians, longitudes)


def load_link(path: str):
    with open(path) as fh:
        return link_from_dict(json.load(fh))


def save_link(link, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(link_to_dict(link), fh, indent=2, sort_keys=True)
        fh.write("\n")
