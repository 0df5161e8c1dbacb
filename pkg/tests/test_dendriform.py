"""Split products on planar trees and the embeddings into tree algebras."""

import itertools

from baxtertrees.baxter_core import LinComb
from baxtertrees.counting import catalan, dim_formula
from baxtertrees.dendriform import (
    dend_op,
    dt_dim,
    embed_dialgebra,
    embed_trialgebra,
    rb_dendriform,
)
from baxtertrees.errors import DomainError
from baxtertrees.scalars import LAMBDA
from baxtertrees.trees import (
    Family,
    INF,
    LEAF,
    binary_trees,
    enumerate_trees,
    parse_planar,
    parse_tree,
    planar_trees,
)

import pytest

FI2 = Family(INF, 2)
F22 = Family(2, 2)

p = parse_planar
t = parse_tree


def planar_pool(max_leaves):
    out = []
    for n in range(1, max_leaves):
        for m in range(1, n + 1):
            out.extend(planar_trees(n, m))
    return out


# -- free operations --------------------------------------------------------

def test_worked_operations():
    a = p("((. .) .)")
    b = p("(. .)")
    assert dend_op("trialgebra", "left", a, b) == LinComb(p("((. .) (. .))"))
    assert dend_op("trialgebra", "right", a, b) == LinComb(p("(((. .) .) .)"))
    assert dend_op("trialgebra", "dot", a, b) == LinComb(p("((. .) . .)"))


def test_star_sums_the_parts_with_weight():
    a, b = p("(. .)"), p("(. . .)")
    parts = (
        dend_op("trialgebra", "left", a, b)
        + dend_op("trialgebra", "right", a, b)
        + dend_op("trialgebra", "dot", a, b).scale(LAMBDA)
    )
    assert dend_op("trialgebra", "star", a, b) == parts


def test_leaf_is_only_a_star_unit():
    a = p("(. .)")
    assert dend_op("trialgebra", "star", LEAF, a) == LinComb(a)
    with pytest.raises(DomainError):
        dend_op("trialgebra", "left", LEAF, a)


def test_dialgebra_has_no_middle():
    a = p("(. .)")
    with pytest.raises(DomainError):
        dend_op("dialgebra", "dot", a, a)
    with pytest.raises(DomainError):
        dend_op("dialgebra", "left", p("(. . .)"), a)


def test_trialgebra_axioms_small():
    pool = planar_pool(4)  # up to 3 leaves
    lt = lambda x, y: dend_op("trialgebra", "left", x, y)
    rt = lambda x, y: dend_op("trialgebra", "right", x, y)
    dt = lambda x, y: dend_op("trialgebra", "dot", x, y)
    st = lambda x, y: dend_op("trialgebra", "star", x, y)
    for a, b, c in itertools.product(pool, repeat=3):
        assert lt(lt(a, b), c) == lt(a, st(b, c))
        assert lt(rt(a, b), c) == rt(a, lt(b, c))
        assert rt(st(a, b), c) == rt(a, rt(b, c))
        assert lt(dt(a, b), c) == dt(a, lt(b, c))
        assert dt(lt(a, b), c) == dt(a, rt(b, c))
        assert dt(rt(a, b), c) == rt(a, dt(b, c))
        assert dt(dt(a, b), c) == dt(a, dt(b, c))


def test_star_is_associative():
    pool = planar_pool(4)
    for a, b, c in itertools.product(pool, repeat=3):
        lhs = dend_op("trialgebra", "star", dend_op("trialgebra", "star", a, b), c)
        rhs = dend_op("trialgebra", "star", a, dend_op("trialgebra", "star", b, c))
        assert lhs == rhs


def test_dialgebra_axioms_small():
    pool = [u for u in binary_trees(1) + binary_trees(2)]
    lt = lambda x, y: dend_op("dialgebra", "left", x, y)
    rt = lambda x, y: dend_op("dialgebra", "right", x, y)
    for a, b, c in itertools.product(pool, repeat=3):
        assert lt(lt(a, b), c) == lt(a, lt(b, c)) + lt(a, rt(b, c))
        assert rt(a, rt(b, c)) == rt(rt(a, b), c) + rt(lt(a, b), c)
        assert lt(rt(a, b), c) == rt(a, lt(b, c))


# -- operator-induced operations -------------------------------------------

def test_rb_split_reconstitutes_star_product():
    pool = [tree for n in (1, 2) for m in (1, 2) for tree in enumerate_trees(FI2, n, m)]
    for a, b in itertools.product(pool, repeat=2):
        total = (
            rb_dendriform(FI2, "left", a, b)
            + rb_dendriform(FI2, "right", a, b)
            + rb_dendriform(FI2, "dot", a, b).scale(LAMBDA)
        )
        assert total == rb_dendriform(FI2, "star", a, b)


def test_rb_operations_satisfy_trialgebra_axioms():
    pool = [tree for tree in enumerate_trees(F22, 1, 1) + enumerate_trees(F22, 2, 1)]
    lt = lambda x, y: rb_dendriform(F22, "left", x, y)
    rt = lambda x, y: rb_dendriform(F22, "right", x, y)
    dt_ = lambda x, y: rb_dendriform(F22, "dot", x, y)
    st_ = lambda x, y: rb_dendriform(F22, "star", x, y)
    for a, b, c in itertools.product(pool, repeat=3):
        assert lt(lt(a, b), c) == lt(a, st_(b, c))
        assert rt(a, rt(b, c)) == rt(st_(a, b), c)
        assert dt_(dt_(a, b), c) == dt_(a, dt_(b, c))


def test_rb_rejects_unit_tree():
    with pytest.raises(DomainError):
        rb_dendriform(FI2, "left", LEAF, t("1(. 1 .)"))


# -- embeddings -------------------------------------------------------------

def test_embedding_known_images():
    assert embed_trialgebra(p("(. . .)")) == LinComb(t("0(. 2 .)"))
    assert embed_trialgebra(p("((. .) .)")) == LinComb(t("0(1(. 1 .) 1 .)"))
    assert embed_dialgebra(p("((. .) .)")) == LinComb(t("0(1(. 1 .) 1 .)"))


def test_trialgebra_embedding_is_injective_morphism():
    pool = planar_pool(5)
    images = {str(embed_trialgebra(u)) for u in pool}
    assert len(images) == len(pool)
    for a, b in itertools.product(planar_pool(4), repeat=2):
        for op in ("left", "right", "dot"):
            lhs = embed_trialgebra(dend_op("trialgebra", op, a, b))
            rhs = rb_dendriform(FI2, op, embed_trialgebra(a), embed_trialgebra(b))
            assert lhs == rhs


def test_dialgebra_embedding_is_injective_morphism_at_weight_zero():
    pool = [u for k in (1, 2, 3) for u in binary_trees(k)]
    images = {str(embed_dialgebra(u)) for u in pool}
    assert len(images) == len(pool)
    small = [u for k in (1, 2) for u in binary_trees(k)]
    for a, b in itertools.product(small, repeat=2):
        for op in ("left", "right"):
            lhs = embed_dialgebra(dend_op("dialgebra", op, a, b))
            rhs = rb_dendriform(F22, op, embed_dialgebra(a), embed_dialgebra(b))
            assert lhs == rhs.eval_weight(0)


def test_embedding_rejects_bad_input():
    with pytest.raises(DomainError):
        embed_trialgebra(LEAF)
    with pytest.raises(DomainError):
        embed_dialgebra(p("(. . .)"))


# -- dimensions -------------------------------------------------------------

def test_dt_dim_counts_planar_trees():
    for n in range(1, 7):
        for m in range(1, n + 1):
            assert dt_dim(n, m) == len(planar_trees(n, m))


def test_free_tree_dimension_is_a_planar_pair_sum():
    # Each bigraded component of the free-angle tree algebra splits as
    # planar counts with m and with m + 1 internal nodes.
    for n in range(1, 7):
        for m in range(n + 1):
            assert dim_formula(FI2, n, m) == dt_dim(n, m) + dt_dim(n, m + 1)


def test_binary_trees_realize_catalan_bound():
    for n in range(1, 8):
        assert len(binary_trees(n)) == catalan(n)
        assert catalan(n) <= n * catalan(n - 1)
