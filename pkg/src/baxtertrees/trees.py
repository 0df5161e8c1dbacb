"""Decorated planar rooted trees: the basis data model.

A decorated tree is either the leaf ``.`` or an internal node carrying a
natural-number label, an ordered sequence of at least two children, and a
positive-integer label in each angle between consecutive children.  The
admissible trees obey three structural rules:

* every internal node has at least two children;
* among the children of any internal node, only the leftmost and the
  rightmost may be leaves;
* only the root may carry label 0.

Four families are distinguished by a pair of flags (the pair (i, j) with
entries in {2, inf}): ``i = 2`` forces every angle label to 1 (idempotent
generator), ``j = 2`` forces the root label into {0, 1} and every other
internal label to 1 (quasi-idempotent operator).  With both at infinity
all labels are free.

The bidegree of a tree is (angle degree, node degree) = (sum of angle
labels, sum of internal-node labels).

This module also houses the unlabeled planar rooted trees (every internal
node has at least two children, interior leaves allowed) used by the
dendriform structures and the path bijections.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import DomainError, ParseError

__all__ = [
    "Leaf", "LEAF", "Node", "Tree", "Family",
    "FAMILIES", "parse_family", "bidegree", "validate", "is_valid",
    "parse_tree", "render_tree", "tree_sort_key",
    "enumerate_trees", "enumerate_zero_root", "enumerate_positive_root",
    "count_trees",
    "PTree", "PlanarTree", "parse_planar", "render_planar",
    "planar_trees", "binary_trees", "planar_sort_key", "is_binary",
]

INF = float("inf")


# ---------------------------------------------------------------------------
# Tree values
# ---------------------------------------------------------------------------

class Leaf:
    """The single-node tree, written ``.``.

    Only one instance exists (`LEAF`).  It is the adjoined unit of the
    augmented basis, not an algebra basis element by itself.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    is_leaf = True

    def sort_key(self):
        # Degree-zero sentinel; any internal node's key starts with its
        # negated total degree, so nodes order before leaves.
        return (2,)

    def __str__(self):
        return "."

    def __repr__(self):
        return "LEAF"


LEAF = Leaf()


class Node:
    """An internal node: label, children, and angle labels.

    ``angles[k]`` decorates the angle between ``children[k]`` and
    ``children[k+1]``, so ``len(angles) == len(children) - 1``.  Instances
    are immutable; hash is precomputed so trees can key memo tables and
    linear combinations cheaply.
    """

    __slots__ = ("label", "children", "angles", "_hash", "_key")

    is_leaf = False

    def __init__(self, label: int, children: Sequence["Tree"], angles: Sequence[int]):
        children = tuple(children)
        angles = tuple(angles)
        if len(children) < 2:
            raise DomainError(f"a node needs at least 2 children, got {len(children)}")
        if len(angles) != len(children) - 1:
            raise DomainError(
                f"angle count {len(angles)} does not match child count {len(children)}"
            )
        self.label = label
        self.children = children
        self.angles = angles
        self._hash = hash((label, children, angles))
        self._key = None

    def sort_key(self):
        """Canonical total-order key, arranged so sorted terms display
        highest total degree first: negated total and node degrees, then
        label, child count, and the interleaved (child key, angle)
        sequence, lexicographically."""
        if self._key is None:
            n, m = bidegree(self)
            parts = [-(n + m), -m, self.label, len(self.children)]
            for k, child in enumerate(self.children):
                parts.append(child.sort_key())
                if k < len(self.angles):
                    parts.append(self.angles[k])
            self._key = tuple(parts)
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.label == other.label
            and self.angles == other.angles
            and self.children == other.children
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return render_tree(self)

    def __repr__(self):
        return f"Node({render_tree(self)!r})"


Tree = Union[Leaf, Node]


def with_root_label(t: Node, label: int) -> Node:
    """The same tree with its root label replaced."""
    if t.label == label:
        return t
    return Node(label, t.children, t.angles)


def tree_sort_key(t: Tree):
    return t.sort_key()


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

class Family:
    """The pair of structure flags (i, j), each 2 or infinity.

    ``i`` governs the angle labels (2 means all angle labels are 1);
    ``j`` governs the node labels (2 means root in {0, 1}, every other
    internal label 1).  Families are runtime values because the quotient
    morphisms convert between them.
    """

    __slots__ = ("i", "j")

    def __init__(self, i, j):
        if i not in (2, INF) or j not in (2, INF):
            raise DomainError(f"family entries must be 2 or inf, got ({i}, {j})")
        self.i = i
        self.j = j

    @property
    def text(self) -> str:
        a = "2" if self.i == 2 else "inf"
        b = "2" if self.j == 2 else "inf"
        return f"{a},{b}"

    def __eq__(self, other):
        return isinstance(other, Family) and (self.i, self.j) == (other.i, other.j)

    def __hash__(self):
        return hash((self.i, self.j))

    def __repr__(self):
        return f"Family({self.text})"

    def __le__(self, other):
        """Coordinatewise order with 2 < inf (quotient direction)."""
        return self.i <= other.i and self.j <= other.j


def parse_family(text: str) -> Family:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise ParseError(f"family must look like '2,2' or 'inf,2', got {text!r}")
    vals = []
    for p in parts:
        if p == "2":
            vals.append(2)
        elif p in ("inf", "oo", "infinity"):
            vals.append(INF)
        else:
            raise ParseError(f"family entry must be 2 or inf, got {p!r}")
    return Family(*vals)


FAMILIES = (Family(2, 2), Family(2, INF), Family(INF, 2), Family(INF, INF))


# ---------------------------------------------------------------------------
# Bidegree and validation
# ---------------------------------------------------------------------------

def bidegree(t: Tree) -> tuple[int, int]:
    """(angle degree, node degree): sums of angle and node labels."""
    if t.is_leaf:
        return (0, 0)
    n = sum(t.angles)
    m = t.label
    for child in t.children:
        cn, cm = bidegree(child)
        n += cn
        m += cm
    return (n, m)


def validate(family: Family, t: Tree, _root: bool = True) -> list[str]:
    """All rule violations of ``t`` in ``family`` (empty list = valid).

    The bare leaf is reported as a violation: it belongs only to the
    augmented basis, never to the algebra basis itself.
    """
    problems: list[str] = []
    if t.is_leaf:
        if _root:
            problems.append("leaf: the bare leaf is not an algebra basis element")
        return problems
    if len(t.children) < 2:
        problems.append("R1: internal node with fewer than two children")
    for k, child in enumerate(t.children):
        if child.is_leaf and 0 < k < len(t.children) - 1:
            problems.append(f"R2: interior child {k} is a leaf")
    if _root:
        if t.label < 0:
            problems.append(f"label-range: root label {t.label} is negative")
        if family.j == 2 and t.label not in (0, 1):
            problems.append(f"label-range: root label {t.label} not in {{0, 1}}")
    else:
        if t.label < 1:
            problems.append(f"R3: non-root internal node labeled {t.label}")
        elif family.j == 2 and t.label != 1:
            problems.append(f"label-range: non-root label {t.label} must be 1")
    for a in t.angles:
        if a < 1:
            problems.append(f"label-range: angle label {a} is not positive")
        elif family.i == 2 and a != 1:
            problems.append(f"label-range: angle label {a} must be 1")
    for child in t.children:
        problems.extend(validate(family, child, _root=False))
    return problems


def is_valid(family: Family, t: Tree) -> bool:
    return not validate(family, t)


# ---------------------------------------------------------------------------
# Parsing / rendering
# ---------------------------------------------------------------------------

def render_tree(t: Tree) -> str:
    """Canonical text: ``.`` or ``label(child angle child ... child)``."""
    if t.is_leaf:
        return "."
    inner = [render_tree(t.children[0])]
    for angle, child in zip(t.angles, t.children[1:]):
        inner.append(str(angle))
        inner.append(render_tree(child))
    return f"{t.label}({' '.join(inner)})"


def parse_tree(text: str) -> Tree:
    """Parse the tree grammar ``tree := '.' | nat '(' tree (posint tree)+ ')'``."""
    s = text
    n = len(s)

    def skip_ws(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    def read_nat(j):
        k = j
        while k < n and s[k].isdigit():
            k += 1
        if k == j:
            raise ParseError("expected a number", s, j)
        return int(s[j:k]), k

    def read_tree(j):
        j = skip_ws(j)
        if j >= n:
            raise ParseError("unexpected end of input", s, j)
        if s[j] == ".":
            return LEAF, j + 1
        if not s[j].isdigit():
            raise ParseError("expected '.' or a node label", s, j)
        label, j = read_nat(j)
        j = skip_ws(j)
        if j >= n or s[j] != "(":
            raise ParseError("expected '(' after node label", s, j)
        j += 1
        child, j = read_tree(j)
        children = [child]
        angles = []
        while True:
            j = skip_ws(j)
            if j >= n:
                raise ParseError("unterminated node (missing ')')", s, j)
            if s[j] == ")":
                j += 1
                break
            angle, j = read_nat(j)
            angles.append(angle)
            child, j = read_tree(j)
            children.append(child)
        if len(children) < 2:
            raise ParseError("a node needs at least two children", s, j - 1)
        return Node(label, children, angles), j

    t, j = read_tree(0)
    j = skip_ws(j)
    if j != n:
        raise ParseError("trailing input after tree", s, j)
    return t


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
#
# A positive-root tree of bidegree (n, m) is a root-0 tree of bidegree
# (n, m - b) with its root relabeled to b >= 1, so both kinds reduce to
# enumerating root-0 trees: a first child (leaf or positive-root tree)
# followed by a nonempty alternating tail of angles and children, where
# only the final child may be a leaf.

def _angle_choices(family: Family, budget: int) -> range:
    if family.i == 2:
        return range(1, 2) if budget >= 1 else range(0)
    return range(1, budget + 1)


@lru_cache(maxsize=None)
def _tails(family: Family, n: int, m: int) -> tuple:
    """Alternating sequences (a1, c2, a2, ..., ak, c_{k+1}) consuming
    angle degree n and node degree m; interior children are positive-root
    trees, the final child may also be a leaf.  Returned as pairs
    (children tuple, angles tuple)."""
    out = []
    for a in _angle_choices(family, n):
        # final pair: angle a then the last child
        if m == 0 and n == a:
            out.append(((LEAF,), (a,)))
        for t in enumerate_positive_root(family, n - a, m):
            out.append(((t,), (a,)))
        # interior pair: angle a, a positive-root child, then more tail
        for cn in range(1, n - a):
            for cm in range(0, m + 1):
                children = enumerate_positive_root(family, cn, cm)
                if not children:
                    continue
                for rest_children, rest_angles in _tails(family, n - a - cn, m - cm):
                    for c in children:
                        out.append(((c,) + rest_children, (a,) + rest_angles))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_zero_root(family: Family, n: int, m: int) -> tuple:
    """All root-label-0 trees of bidegree (n, m), canonically ordered."""
    if n < 1 or m < 0:
        return ()
    out = []
    # first child is a leaf
    for children, angles in _tails(family, n, m):
        out.append(Node(0, (LEAF,) + children, angles))
    # first child is a positive-root tree
    for cn in range(1, n):
        for cm in range(0, m + 1):
            firsts = enumerate_positive_root(family, cn, cm)
            if not firsts:
                continue
            for rest_children, rest_angles in _tails(family, n - cn, m - cm):
                for c in firsts:
                    out.append(Node(0, (c,) + rest_children, rest_angles))
    out.sort(key=tree_sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_positive_root(family: Family, n: int, m: int) -> tuple:
    """All positive-root trees of bidegree (n, m), canonically ordered."""
    if n < 1 or m < 1:
        return ()
    labels = (1,) if family.j == 2 else range(1, m + 1)
    out = []
    for b in labels:
        for t in enumerate_zero_root(family, n, m - b):
            out.append(with_root_label(t, b))
    out.sort(key=tree_sort_key)
    return tuple(out)


def enumerate_trees(family: Family, n: int, m: int) -> tuple:
    """The full basis component of bidegree (n, m), canonically ordered."""
    out = list(enumerate_zero_root(family, n, m))
    out.extend(enumerate_positive_root(family, n, m))
    out.sort(key=tree_sort_key)
    return tuple(out)


# Counting twin of the enumerator: the same recursion, materializing
# nothing.  Used for large marginals; cross-checked against the
# enumerator in the tests.

@lru_cache(maxsize=None)
def _count_tails(family: Family, n: int, m: int) -> int:
    total = 0
    for a in _angle_choices(family, n):
        if m == 0 and n == a:
            total += 1
        total += _count_positive(family, n - a, m)
        for cn in range(1, n - a):
            for cm in range(0, m + 1):
                c = _count_positive(family, cn, cm)
                if c:
                    total += c * _count_tails(family, n - a - cn, m - cm)
    return total


@lru_cache(maxsize=None)
def _count_zero(family: Family, n: int, m: int) -> int:
    if n < 1 or m < 0:
        return 0
    total = _count_tails(family, n, m)
    for cn in range(1, n):
        for cm in range(0, m + 1):
            c = _count_positive(family, cn, cm)
            if c:
                total += c * _count_tails(family, n - cn, m - cm)
    return total


@lru_cache(maxsize=None)
def _count_positive(family: Family, n: int, m: int) -> int:
    if n < 1 or m < 1:
        return 0
    if family.j == 2:
        return _count_zero(family, n, m - 1)
    return sum(_count_zero(family, n, m - b) for b in range(1, m + 1))


def count_trees(family: Family, n: int, m: int) -> int:
    """|basis component of bidegree (n, m)|, by structural recursion."""
    return _count_zero(family, n, m) + _count_positive(family, n, m)


# ---------------------------------------------------------------------------
# Unlabeled planar rooted trees
# ---------------------------------------------------------------------------

def _planar_counts(t: "PlanarTree") -> tuple[int, int]:
    """(leaf count, internal-node count) of an unlabeled planar tree."""
    if t.is_leaf:
        return 1, 0
    leaves = nodes = 0
    for child in t.children:
        l2, n2 = _planar_counts(child)
        leaves += l2
        nodes += n2
    return leaves, nodes + 1

class PTree:
    """An unlabeled planar rooted tree node (>= 2 children, any of which
    may be leaves).  The leaf is the shared `LEAF` singleton."""

    __slots__ = ("children", "_hash", "_key")

    is_leaf = False

    def __init__(self, children: Sequence["PlanarTree"]):
        children = tuple(children)
        if len(children) < 2:
            raise DomainError(f"a planar node needs at least 2 children, got {len(children)}")
        self.children = children
        self._hash = hash(("PT", children))
        self._key = None

    def sort_key(self):
        if self._key is None:
            leaves, nodes = _planar_counts(self)
            parts = [-(leaves - 1 + nodes), -nodes, len(self.children)]
            for child in self.children:
                parts.append(child.sort_key())
            self._key = tuple(parts)
        return self._key

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, PTree):
            return NotImplemented
        return self._hash == other._hash and self.children == other.children

    def __hash__(self):
        return self._hash

    def __str__(self):
        return render_planar(self)

    def __repr__(self):
        return f"PTree({render_planar(self)!r})"


PlanarTree = Union[Leaf, PTree]


def planar_sort_key(t: PlanarTree):
    return t.sort_key()


def render_planar(t: PlanarTree) -> str:
    """Compact form: ``.`` for a leaf, ``(c1 c2 ...)`` for a node."""
    if t.is_leaf:
        return "."
    return "(" + " ".join(render_planar(c) for c in t.children) + ")"


def parse_planar(text: str) -> PlanarTree:
    s = text
    n = len(s)

    def skip_ws(j):
        while j < n and s[j].isspace():
            j += 1
        return j

    def read(j):
        j = skip_ws(j)
        if j >= n:
            raise ParseError("unexpected end of input", s, j)
        if s[j] == ".":
            return LEAF, j + 1
        if s[j] != "(":
            raise ParseError("expected '.' or '('", s, j)
        j += 1
        children = []
        while True:
            j = skip_ws(j)
            if j >= n:
                raise ParseError("unterminated planar node", s, j)
            if s[j] == ")":
                j += 1
                break
            child, j = read(j)
            children.append(child)
        if len(children) < 2:
            raise ParseError("a planar node needs at least two children", s, j - 1)
        return PTree(children), j

    t, j = read(0)
    j = skip_ws(j)
    if j != n:
        raise ParseError("trailing input after tree", s, j)
    return t


@lru_cache(maxsize=None)
def _planar_forests(leaves: int, nodes: int, k: int) -> tuple:
    """Ordered forests of exactly k planar trees with the given totals."""
    if k == 0:
        return ((),) if leaves == 0 and nodes == 0 else ()
    out = []
    for ln in range(1, leaves + 1):
        for nn in range(0, nodes + 1):
            for t in _planar_by_size(ln, nn):
                for rest in _planar_forests(leaves - ln, nodes - nn, k - 1):
                    out.append((t,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def _planar_by_size(leaves: int, nodes: int) -> tuple:
    """Planar trees with the given leaf and internal-node counts."""
    if leaves == 1 and nodes == 0:
        return (LEAF,)
    if nodes < 1 or leaves < 2:
        return ()
    out = []
    for k in range(2, leaves + 1):
        for forest in _planar_forests(leaves, nodes - 1, k):
            out.append(PTree(forest))
    out.sort(key=planar_sort_key)
    return tuple(out)


def planar_trees(n: int, m: int) -> tuple:
    """Planar rooted trees with n + 1 leaves and m internal nodes."""
    return _planar_by_size(n + 1, m)


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple:
    """Planar binary trees with n internal nodes (n + 1 leaves)."""
    if n == 0:
        return (LEAF,)
    out = []
    for left_n in range(0, n):
        for left in binary_trees(left_n):
            for right in binary_trees(n - 1 - left_n):
                out.append(PTree((left, right)))
    out.sort(key=planar_sort_key)
    return tuple(out)


def is_binary(t: PlanarTree) -> bool:
    if t.is_leaf:
        return True
    return len(t.children) == 2 and all(is_binary(c) for c in t.children)
