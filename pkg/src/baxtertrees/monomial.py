"""Words in two letters and the projections from the tree algebras.

The free associative algebra on letters ``x0``, ``x1`` carries the
algebra endomorphism sending both letters to ``x1``; it is idempotent,
and the pair is the free object on one generator among algebras with an
idempotent morphism.  Imposing ``x0^2 = x0`` and ``x1^2 = x1`` yields
the quotient variant whose normal forms are the alternating words.

``pi_map`` projects the forced-node-label tree algebras onto these word
algebras: the generator goes to ``x0``, the intrinsic operator to the
all-ones endomorphism, and the projection is a map of Rota-Baxter
algebras of weight -1.  Its value on a basis tree has the closed form

    root 0:        x1^d(t_1) x0^(a_1) x1^d(t_2) ... x0^(a_p-1) x1^d(t_p)
    positive root: x1^d(t)

where d is the angle degree of a subtree and the a_k are the root
angles.  The same value falls out of the universal-property recursion,
and both routes are implemented so tests can compare them.

Two basis trees are declared related when root labels agree and, for
root 0, the child count, the per-child angle degrees, and the angle
labels between children all agree (for a positive root, when the total
angle degrees agree).  This relation is exactly the kernel description
of the projection: ``tilde_equiv`` computes both characterizations and
insists they coincide.
"""

from __future__ import annotations

from itertools import product as _iter_product
from typing import Iterable, Sequence, Union

from .baxter_core import LinComb
from .errors import DomainError, ParseError
from .trees import INF, Family, Node, Tree, bidegree, validate

__all__ = [
    "Word", "parse_word", "render_word", "word_variant",
    "concat_words", "beta_word", "word_bidegree", "normalize_word",
    "word_quotient", "enumerate_words",
    "pi_word", "pi_word_recursive", "pi_map", "tilde_equiv",
]

_VARIANTS = ("infinity", "two")


def word_variant(text: str) -> str:
    """Canonical variant name from user text."""
    t = text.strip().lower()
    if t in ("infinity", "inf", "oo"):
        return "infinity"
    if t in ("two", "2"):
        return "two"
    raise DomainError(f"unknown word variant {text!r}")


def _collapsed(letters: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for b in letters:
        if not out or out[-1] != b:
            out.append(b)
    return tuple(out)


class Word:
    """A word in the letters x0, x1, tagged with its algebra variant.

    Letters are stored as 0/1 integers.  The empty word is the algebra
    unit; it appears only inside projection computations and is never a
    basis element of a combination.
    """

    __slots__ = ("letters", "variant", "_hash")

    def __init__(self, letters: Iterable[int], variant: str):
        self.letters = tuple(letters)
        if any(b not in (0, 1) for b in self.letters):
            raise DomainError("letters must be 0 (for x0) or 1 (for x1)")
        if variant not in _VARIANTS:
            raise DomainError(f"unknown word variant {variant!r}")
        self.variant = variant
        self._hash = hash((self.letters, self.variant))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def is_normal(self) -> bool:
        """Normal form: no two equal adjacent letters (always true for
        the free variant)."""
        if self.variant == "infinity":
            return True
        return all(a != b for a, b in zip(self.letters, self.letters[1:]))

    def sort_key(self):
        # Highest degree first in displayed combinations, matching the
        # tree-basis display order.
        return (-len(self.letters), -word_bidegree(self)[1], self.letters)

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.letters == other.letters
            and self.variant == other.variant
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        return render_word(self)

    def __repr__(self):
        return f"Word({render_word(self)!r}, {self.variant!r})"


def render_word(w: Word) -> str:
    """Run-length text like ``x1^2 x0^3``; the empty word prints as 1."""
    if not w.letters:
        return "1"
    parts = []
    k = 0
    while k < len(w.letters):
        j = k
        while j < len(w.letters) and w.letters[j] == w.letters[k]:
            j += 1
        run = j - k
        base = f"x{w.letters[k]}"
        parts.append(base if run == 1 else f"{base}^{run}")
        k = j
    return " ".join(parts)


def parse_word(text: str, variant: str = "infinity") -> Word:
    """Parse ``x1^2 x0^3``-style text.  Variant-two words must already
    be in normal form (use the quotient map to collapse free words)."""
    variant = word_variant(variant)
    letters: list[int] = []
    toks = text.split()
    if not toks:
        raise ParseError("empty word text", text, 0)
    for tok in toks:
        base, _, exp = tok.partition("^")
        if base not in ("x0", "x1"):
            raise ParseError(f"unknown letter {base!r}", text, text.find(tok))
        k = 1
        if exp:
            if not exp.isdigit() or int(exp) < 1:
                raise ParseError(f"bad exponent {exp!r}", text, text.find(tok))
            k = int(exp)
        letters.extend([int(base[1])] * k)
    w = Word(letters, variant)
    if not w.is_normal:
        raise ParseError("variant-two word is not in normal form "
                         "(adjacent equal letters)", text, 0)
    return w


# ---------------------------------------------------------------------------
# Algebra operations
# ---------------------------------------------------------------------------

def normalize_word(w: Word) -> Word:
    """Collapse equal adjacent letters (the identity in the free
    variant, where no relation holds)."""
    if w.variant == "infinity":
        return w
    return Word(_collapsed(w.letters), w.variant)


def word_quotient(w: Word) -> Word:
    """The quotient map from the free variant onto the idempotent one."""
    return Word(_collapsed(w.letters), "two")


def concat_words(w: Word, v: Word) -> Word:
    """Product of the word algebra (normalized in the quotient)."""
    if w.variant != v.variant:
        raise DomainError("cannot concatenate words of different variants")
    out = Word(w.letters + v.letters, w.variant)
    return normalize_word(out) if w.variant == "two" else out


def beta_word(w: Word) -> Word:
    """The idempotent morphism: every letter becomes x1."""
    out = Word((1,) * len(w.letters), w.variant)
    return normalize_word(out) if w.variant == "two" else out


def word_bidegree(w: Word) -> tuple[int, int]:
    """(letter count, number of x1-blocks)."""
    blocks = 0
    prev = 0
    for b in w.letters:
        if b == 1 and prev != 1:
            blocks += 1
        prev = b
    return (len(w.letters), blocks)


def enumerate_words(variant: str, n: int, m: int | None = None) -> tuple[Word, ...]:
    """All (nonempty normal-form) words of length n, optionally filtered
    to m x1-blocks, in canonical order."""
    variant = word_variant(variant)
    if n < 0:
        return ()
    if n == 0:
        words = [Word((), variant)]
    elif variant == "infinity":
        words = [Word(bits, variant) for bits in _iter_product((0, 1), repeat=n)]
    else:
        words = [
            Word(tuple((start + k) % 2 for k in range(n)), variant)
            for start in (0, 1)
        ]
    if m is not None:
        words = [w for w in words if word_bidegree(w)[1] == m]
    return tuple(sorted(words, key=Word.sort_key))


# ---------------------------------------------------------------------------
# Projections from the tree algebras
# ---------------------------------------------------------------------------

def _family_for(variant: str) -> Family:
    return Family(INF, 2) if variant == "infinity" else Family(2, 2)


def _angle_degree(t: Tree) -> int:
    return 0 if t.is_leaf else bidegree(t)[0]


def _checked(variant: str, t: Tree) -> Tree:
    problems = validate(_family_for(variant), t)
    if problems:
        raise DomainError("tree not valid for this variant: " + "; ".join(problems))
    return t


def pi_word(variant: str, t: Tree) -> Word:
    """Closed-form projection of one basis tree (empty for the unit)."""
    variant = word_variant(variant)
    if t.is_leaf:
        return Word((), variant)
    _checked(variant, t)
    return _pi_formula(variant, t)


def _pi_formula(variant: str, t: Tree) -> Word:
    if t.label > 0:
        letters: Sequence[int] = (1,) * _angle_degree(t)
    else:
        out: list[int] = []
        for k, child in enumerate(t.children):
            out.extend([1] * _angle_degree(child))
            if k < len(t.angles):
                out.extend([0] * t.angles[k])
        letters = out
    w = Word(letters, variant)
    return normalize_word(w) if variant == "two" else w


def pi_word_recursive(variant: str, t: Tree) -> Word:
    """The same projection by the universal-property recursion: project
    the children, interleave x0 powers from the root angles, then apply
    the idempotent morphism once per unit of root label."""
    variant = word_variant(variant)
    if t.is_leaf:
        return Word((), variant)
    _checked(variant, t)
    return _pi_recursive(variant, t)


def _pi_recursive(variant: str, t: Tree) -> Word:
    if t.is_leaf:
        return Word((), variant)
    acc = Word((), variant)
    x0 = Word((0,), variant)
    for k, child in enumerate(t.children):
        acc = concat_words(acc, _pi_recursive(variant, child))
        if k < len(t.angles):
            for _ in range(t.angles[k]):
                acc = concat_words(acc, x0)
    for _ in range(t.label):
        acc = beta_word(acc)
    return acc


def pi_map(variant: str, v: Union[Tree, LinComb]) -> LinComb:
    """Linear extension of the projection to combinations of basis
    trees.  The unit tree is rejected: its image is the empty word,
    which is not a basis element of the non-unital word algebra."""
    variant = word_variant(variant)
    if not isinstance(v, LinComb):
        v = LinComb(v)

    def one(t: Tree) -> LinComb:
        if t.is_leaf:
            raise DomainError("the unit tree has no word image "
                              "(non-unital algebras)")
        return LinComb(pi_word(variant, t))

    return v.apply(one)


# ---------------------------------------------------------------------------
# The kernel-describing relation
# ---------------------------------------------------------------------------

def _tilde_signature(t: Tree):
    if t.label > 0:
        return (t.label, _angle_degree(t))
    return (0, tuple(_angle_degree(c) for c in t.children), t.angles)


def tilde_equiv(t: Tree, s: Tree) -> bool:
    """Whether two basis trees have the same projection, decided by the
    structural conditions and confirmed against word equality."""
    fam = Family(INF, 2)
    for u in (t, s):
        problems = validate(fam, u)
        if problems:
            raise DomainError("tree not valid: " + "; ".join(problems))
    if t.is_leaf or s.is_leaf:
        structural = t.is_leaf and s.is_leaf
    else:
        structural = _tilde_signature(t) == _tilde_signature(s)
    words = pi_word("infinity", t) == pi_word("infinity", s)
    if structural != words:
        raise DomainError(
            "internal error: structural relation and word equality disagree"
        )
    return structural
