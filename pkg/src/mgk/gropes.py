"""Grope trees: rooted paired trees, classes, boundary words, duals.

A grope is built from surface stages; its branching is captured by a
rooted tree whose vertices above the root come in pairs, one pair per
symplectic basis pair of a stage.  Here a tree is either a Leaf (a bare
circle, class 1) or a Surface with an ordered list of pairs of subtrees
(one pair per genus).  The class of a Surface is the minimum over its
pairs of the sum of the two members' classes.

Text grammar (whitespace-insensitive):

    GROPE := "*" | "(" PAIR+ ")"
    PAIR  := "{" GROPE GROPE "}"

A closed (sphere-like) grope is encoded by the same tree plus one extra
edge at the root standing for the deleted 2-cell; `ClosedGropeTree` wraps
a Surface body and supplies that convention.  The leaves of the body are
the free tips; their count is the rank of the first homology of the
closed grope.

The dual-tree algorithm: fix a free tip and walk from it down to the
root.  At each surface vertex on the way, erase every branch except the
edge just traversed and the partner of the traversed child inside its
pair, then re-root at the chosen tip.  The result is a chain of genus-1
surfaces (the path) carrying the retained partner subtrees, ending at the
leaf that used to be the extra root edge.  Its class is 1 plus the sum of
the partner classes, hence at least the class of the original tree.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from .errors import TreeSyntaxError
from .words import Word, commutator

__all__ = [
    "GropeTree", "ClosedGropeTree", "LEAF", "parse_tree", "parse_closed_tree",
    "tree_text", "grope_class", "leaf_paths", "free_tips", "resolve_tip",
    "boundary_word", "boundary_expression", "dual_tree", "dual_class",
    "canonical", "is_isomorphic", "rerooted", "format_tip_path",
    "parse_tip_path", "export_dot",
]

LEFT, RIGHT = 0, 1


@dataclass(frozen=True)
class GropeTree:
    """Leaf when `pairs` is empty, Surface of genus len(pairs) otherwise."""

    pairs: tuple[tuple["GropeTree", "GropeTree"], ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.pairs

    @property
    def genus(self) -> int:
        return len(self.pairs)

    def __str__(self):
        return tree_text(self)


LEAF = GropeTree()


@dataclass(frozen=True)
class ClosedGropeTree:
    """A grope tree with the extra root edge of a sphere-like grope.

    The body must be a Surface: a closed grope has a bottom stage.
    """

    body: GropeTree

    def __post_init__(self):
        if self.body.is_leaf:
            raise ValueError("a closed grope tree needs a Surface body")

    def __str__(self):
        return tree_text(self.body)


# -- text form --------------------------------------------------------------

def parse_tree(text: str) -> GropeTree:
    tree, pos = _parse_grope(text, _skip_ws(text, 0))
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise TreeSyntaxError("trailing input", pos)
    return tree


def parse_closed_tree(text: str) -> ClosedGropeTree:
    tree = parse_tree(text)
    if tree.is_leaf:
        raise TreeSyntaxError("a closed grope tree needs a Surface body")
    return ClosedGropeTree(tree)


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_grope(text, pos):
    if pos >= len(text):
        raise TreeSyntaxError("unexpected end of input", pos)
    ch = text[pos]
    if ch == "*":
        return LEAF, pos + 1
    if ch != "(":
        raise TreeSyntaxError("expected '*' or '('", pos)
    pos = _skip_ws(text, pos + 1)
    pairs = []
    while pos < len(text) and text[pos] == "{":
        pos = _skip_ws(text, pos + 1)
        left, pos = _parse_grope(text, pos)
        pos = _skip_ws(text, pos)
        right, pos = _parse_grope(text, pos)
        pos = _skip_ws(text, pos)
        if pos >= len(text) or text[pos] != "}":
            raise TreeSyntaxError("expected '}'", pos)
        pairs.append((left, right))
        pos = _skip_ws(text, pos + 1)
    if not pairs:
        raise TreeSyntaxError("a Surface needs at least one pair", pos)
    if pos >= len(text) or text[pos] != ")":
        raise TreeSyntaxError("expected ')'", pos)
    return GropeTree(tuple(pairs)), pos + 1


def tree_text(tree: GropeTree) -> str:
    """Canonical text; round-trips through parse_tree character-for-character."""
    if tree.is_leaf:
        return "*"
    return "(%s)" % " ".join(
        "{%s %s}" % (tree_text(l), tree_text(r)) for l, r in tree.pairs)


# -- class and tips ----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def grope_class(tree: GropeTree) -> int:
    """Leaf -> 1; Surface -> min over pairs of class(left) + class(right)."""
    if tree.is_leaf:
        return 1
    return min(grope_class(l) + grope_class(r) for l, r in tree.pairs)


def leaf_paths(tree: GropeTree):
    """Every Leaf position in depth-first order, as (pair, side) steps."""
    if tree.is_leaf:
        return ((),)
    out = []
    for i, (left, right) in enumerate(tree.pairs):
        for side, child in ((LEFT, left), (RIGHT, right)):
            out.extend(((i, side),) + p for p in leaf_paths(child))
    return tuple(out)


def free_tips(closed: ClosedGropeTree):
    """Free tips of a closed grope tree; the count is the rank of H1."""
    return leaf_paths(closed.body)


def resolve_tip(tree: GropeTree, tip) -> GropeTree:
    node = tree
    for i, side in tip:
        if node.is_leaf or i >= node.genus or side not in (LEFT, RIGHT):
            raise ValueError("tip path %s leaves the tree" % format_tip_path(tip))
        node = node.pairs[i][side]
    if not node.is_leaf:
        raise ValueError("tip path %s does not reach a Leaf" % format_tip_path(tip))
    return node


def format_tip_path(tip) -> str:
    return "/".join("%d%s" % (i, "L" if side == LEFT else "R") for i, side in tip)


_STEP = re.compile(r"(\d+)([LR])\Z")


def parse_tip_path(text: str):
    text = text.strip()
    if not text:
        return ()
    steps = []
    for part in text.split("/"):
        m = _STEP.match(part.strip())
        if not m:
            raise TreeSyntaxError("bad tip step %r; want e.g. 0L/1R" % part)
        steps.append((int(m.group(1)), LEFT if m.group(2) == "L" else RIGHT))
    return tuple(steps)


# -- boundary words ----------------------------------------------------------

def _assign_names(tree: GropeTree, names):
    tips = leaf_paths(tree)
    names = tuple(names)
    if len(names) != len(tips):
        raise ValueError("need %d tip names, got %d" % (len(tips), len(names)))
    if len(set(names)) != len(names):
        raise ValueError("tip names must be distinct")
    return names


def boundary_word(tree: GropeTree, names) -> Word:
    """Boundary of the bottom stage: the product of pair commutators,
    recursively, with Leaves mapped to their assigned generators.
    """
    names = _assign_names(tree, names)
    it = iter(names)

    def walk(node):
        if node.is_leaf:
            return Word.gen(next(it))
        out = Word()
        for left, right in node.pairs:
            out = out * commutator(walk(left), walk(right))
        return out

    return walk(tree)


def boundary_expression(tree: GropeTree, names) -> str:
    """The boundary word in commutator-sugar text, e.g. "[[a,b],c]"."""
    names = _assign_names(tree, names)
    it = iter(names)

    def walk(node):
        if node.is_leaf:
            return next(it)
        return "".join("[%s,%s]" % (walk(l), walk(r)) for l, r in node.pairs)

    return walk(tree)


# -- duality -----------------------------------------------------------------

def _path_partners(closed: ClosedGropeTree, tip):
    """Partner subtrees met walking from the body root to the tip."""
    partners = []
    node = closed.body
    for i, side in tip:
        if node.is_leaf or i >= node.genus:
            raise ValueError("tip path %s leaves the tree" % format_tip_path(tip))
        partners.append(node.pairs[i][1 - side])
        node = node.pairs[i][side]
    if not node.is_leaf:
        raise ValueError("tip path %s does not reach a Leaf" % format_tip_path(tip))
    return partners


def dual_tree(closed: ClosedGropeTree, tip) -> ClosedGropeTree:
    """Alexander-dual tree at a free tip.

    Walking from the tip down to the root, each path vertex keeps only the
    traversed edge and the partner of the traversed child; the result is
    re-rooted at the tip.  Encoded bottom-up: a chain of genus-1 surfaces
    whose first pair member continues the path (ending in the leaf that
    was the old root edge) and whose second member is the retained
    partner, deepest partner carried by the new bottom stage.
    """
    partners = _path_partners(closed, tip)
    chain = LEAF  # the old root edge, now an ordinary leaf
    for partner in partners:
        chain = GropeTree(((chain, partner),))
    return ClosedGropeTree(chain)


def dual_class(closed: ClosedGropeTree, tip) -> int:
    """1 plus the sum of the partner classes along the tip's path.

    Always agrees with grope_class(dual_tree(...).body) and is at least
    the class of the closed tree itself.
    """
    return 1 + sum(grope_class(p) for p in _path_partners(closed, tip))


# -- isomorphism and re-rooting ----------------------------------------------

def _sort_key(tree: GropeTree):
    return (grope_class(tree), tree_text(tree))


@functools.lru_cache(maxsize=None)
def canonical(tree: GropeTree) -> GropeTree:
    """Representative modulo pair swaps and pair permutations."""
    if tree.is_leaf:
        return tree
    pairs = []
    for left, right in tree.pairs:
        cl, cr = canonical(left), canonical(right)
        if _sort_key(cr) < _sort_key(cl):
            cl, cr = cr, cl
        pairs.append((cl, cr))
    pairs.sort(key=lambda p: (_sort_key(p[0]), _sort_key(p[1])))
    return GropeTree(tuple(pairs))


def is_isomorphic(a, b) -> bool:
    if isinstance(a, ClosedGropeTree):
        a = a.body
    if isinstance(b, ClosedGropeTree):
        b = b.body
    return canonical(a) == canonical(b)


def rerooted(closed: ClosedGropeTree, tip) -> ClosedGropeTree:
    """Re-root the underlying unordered tree at a free tip.

    Only defined when every Surface has genus 1: then every vertex of the
    unordered tree has degree at most 3 and the pairing of children after
    re-rooting is forced.  For such trees the dual tree is exactly the
    re-rooted tree.
    """
    nodes = []  # adjacency lists over integer vertex ids
    adj = {}

    def add_vertex():
        vid = len(nodes)
        nodes.append(vid)
        adj[vid] = []
        return vid

    def connect(a, b):
        adj[a].append(b)
        adj[b].append(a)

    tip_of = {}

    def build(node, path):
        vid = add_vertex()
        if node.is_leaf:
            tip_of[path] = vid
        for i, (left, right) in enumerate(node.pairs):
            lv = build(left, path + ((i, LEFT),))
            rv = build(right, path + ((i, RIGHT),))
            connect(vid, lv)
            connect(vid, rv)
        return vid

    body_root = build(closed.body, ())
    extra = add_vertex()
    connect(extra, body_root)

    start = tip_of.get(tuple(tip))
    if start is None:
        raise ValueError("tip path %s does not reach a Leaf" % format_tip_path(tip))

    def rebuild(vid, parent):
        children = [u for u in adj[vid] if u != parent]
        if not children:
            return LEAF
        if len(children) != 2:
            raise ValueError("re-rooting needs an all-genus-1 tree")
        a, b = (rebuild(u, vid) for u in children)
        return GropeTree(((a, b),))

    (below,) = [u for u in adj[start]]
    return ClosedGropeTree(rebuild(below, start))


# -- DOT export ---------------------------------------------------------------

_PALETTE = ("#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02")


def export_dot(tree) -> str:
    """DOT digraph; the two edges of a pair share a color and pair index."""
    closed = isinstance(tree, ClosedGropeTree)
    body = tree.body if closed else tree
    lines = ["digraph grope {", '  node [shape=point, width=0.12];']
    counter = [0]

    def new_node():
        nid = "n%d" % counter[0]
        counter[0] += 1
        lines.append("  %s;" % nid)
        return nid

    def walk(node):
        nid = new_node()
        for i, (left, right) in enumerate(node.pairs):
            color = _PALETTE[i % len(_PALETTE)]
            for side, child in (("L", left), ("R", right)):
                cid = walk(child)
                lines.append('  %s -> %s [color="%s", pair=%d, side=%s];'
                             % (nid, cid, color, i, side))
        return nid

    if closed:
        root = new_node()
        body_id = walk(body)
        lines.append('  %s -> %s [style=dashed, label="root edge"];'
                     % (root, body_id))
    else:
        walk(body)
    lines.append("}")
    return "\n".join(lines) + "\n"
