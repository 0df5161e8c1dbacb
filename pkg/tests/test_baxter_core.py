"""Linear combinations, the distinguished operator, products, morphisms."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from baxtertrees.baxter_core import (
    LinComb,
    beta,
    beta_lc,
    circle,
    circle_lc,
    circle_power,
    decompose,
    degraft,
    generator,
    graft,
    lower_root,
    morphism,
    morphism_lc,
    parse_lincomb,
    raise_root,
    recompose,
    star,
    star_lc,
    tree_lincomb_parser,
)
from baxtertrees.errors import DomainError, ParseError
from baxtertrees.scalars import LAMBDA, ONE, LambdaPoly
from baxtertrees.trees import (
    FAMILIES,
    LEAF,
    Family,
    INF,
    bidegree,
    enumerate_trees,
    is_valid,
    parse_tree,
)

import pytest

F22 = Family(2, 2)
F2I = Family(2, INF)
FI2 = Family(INF, 2)
FII = Family(INF, INF)

t = parse_tree


def small_trees(family, top):
    out = []
    for n in range(1, top + 1):
        for m in range(top + 1):
            out.extend(enumerate_trees(family, n, m))
    return out


small_combs = st.builds(
    lambda coeffs: LinComb(dict(zip(small_trees(FI2, 2), map(LambdaPoly.const, coeffs)))),
    st.lists(st.integers(-4, 4), min_size=9, max_size=9),
)


# -- linear combinations ----------------------------------------------------

def test_lincomb_zero_terms_drop():
    a = LinComb.of(t("1(. 1 .)"), 2) + LinComb.of(t("1(. 1 .)"), -2)
    assert a == LinComb()
    assert not a.terms


def test_lincomb_display_order():
    a = LinComb.of(t("1(. 1 .)")) + LinComb.of(t("1(. 1 1(. 1 .))"), LAMBDA)
    assert str(a) == "l*1(. 1 1(. 1 .)) + 1(. 1 .)"
    assert str(LinComb()) == "0"


def test_parse_lincomb_round_trip():
    text = "2*1(. 2 .) - l*1(. 1 .) + (l^2 + 1)*0(. 1 .)"
    a = parse_lincomb(text, parse_tree)
    assert tree_lincomb_parser(str(a)) == a
    with pytest.raises(ParseError):
        parse_lincomb("1(. 1 .) +", parse_tree)


@given(small_combs, small_combs)
def test_lincomb_addition_commutes(a, b):
    assert a + b == b + a


@given(small_combs)
def test_eval_weight_kills_lambda(a):
    b = a.scale(LAMBDA).eval_weight(3)
    c = a.eval_weight(3).scale(3)
    assert b == c


# -- graft / degraft --------------------------------------------------------

def test_graft_degraft_round_trip():
    for family in FAMILIES:
        for tree in small_trees(family, 3):
            pieces, angles = degraft(tree)
            assert graft(family, pieces, angles) == tree


def test_degraft_splits_only_root_zero():
    pieces, angles = degraft(t("0(. 2 1(. 1 .) 3 .)"))
    assert pieces == (LEAF, t("1(. 1 .)"), LEAF)
    assert angles == (2, 3)
    # A positive root is a single block.
    assert degraft(t("1(. 2 .)")) == ((t("1(. 2 .)"),), ())


def test_graft_merges_interior_leaves():
    got = graft(FII, (t("1(. 1 .)"), LEAF, t("1(. 1 .)")), (2, 3))
    assert got == t("0(1(. 1 .) 5 1(. 1 .))")
    got = graft(F22, (t("1(. 1 .)"), LEAF, t("1(. 1 .)")), (1, 1))
    assert got == t("0(1(. 1 .) 1 1(. 1 .))")


def test_root_label_shift():
    x = t("1(. 1 .)")
    assert raise_root(x) == t("2(. 1 .)")
    assert lower_root(raise_root(x)) == x
    with pytest.raises(DomainError):
        lower_root(t("0(. 1 .)"))


# -- operator ---------------------------------------------------------------

def test_operator_raises_free_labels():
    assert beta(FII, t("1(. 1 .)")) == LinComb.of(t("2(. 1 .)"))
    assert beta(FII, t("0(. 2 .)")) == LinComb.of(t("1(. 2 .)"))


def test_operator_quasi_idempotent_when_labels_forced():
    x = t("1(. 1 .)")
    bx = beta(FI2, x)
    assert bx == LinComb.of(x, -LAMBDA)
    assert beta_lc(FI2, bx) == bx.scale(-LAMBDA)


def test_operator_law_examples():
    # b(a) * b(b) = b(b(a) . b + a . b(b) + l a . b) in every family.
    for family in FAMILIES:
        for a, b in itertools.product(small_trees(family, 2), repeat=2):
            lhs = circle_lc(family, beta(family, a), beta(family, b))
            rhs = beta_lc(family, star(family, a, b))
            assert lhs == rhs, (family, a, b)


def test_generator_idempotent_only_with_forced_angles():
    g = generator(F22)
    assert circle(F22, g, g) == LinComb.of(g)
    assert circle_power(F22, g, 5) == LinComb.of(g)
    h = generator(FII)
    assert circle(FII, h, h) == LinComb.of(t("0(. 2 .)"))


def test_product_grading():
    # Node degree plus l-degree of the coefficient is additive under the
    # multiplication and one higher under the double product; the angle
    # degree is additive whenever angle labels are free.
    for family in FAMILIES:
        for a, b in itertools.product(small_trees(family, 2), repeat=2):
            na, ma = bidegree(a)
            nb, mb = bidegree(b)
            for tree, coeff in circle(family, a, b).terms.items():
                n, m = bidegree(tree)
                assert m + coeff.degree == ma + mb
                if family.i != 2:
                    assert n == na + nb
            for tree, coeff in star(family, a, b).terms.items():
                n, m = bidegree(tree)
                assert m + coeff.degree == ma + mb + 1
                if family.i != 2:
                    assert n == na + nb


def test_star_unit_is_leaf():
    x = t("1(. 2 .)")
    assert star(FI2, LEAF, x) == LinComb.of(x)
    assert star(FI2, x, LEAF) == LinComb.of(x)


def test_worked_product():
    got = circle(FI2, t("1(. 2 .)"), t("1(. 3 .)"))
    assert str(got) == "1(1(. 2 .) 3 .) + 1(. 2 1(. 3 .)) + l*1(. 5 .)"


def test_products_stay_in_basis():
    for family in FAMILIES:
        for a, b in itertools.product(small_trees(family, 2), repeat=2):
            for tree in circle(family, a, b).support():
                assert is_valid(family, tree)
            for tree in star(family, a, b).support():
                assert is_valid(family, tree)


@settings(max_examples=25)
@given(small_combs, small_combs, small_combs)
def test_product_is_bilinear(a, b, c):
    lhs = circle_lc(FI2, a + b, c)
    assert lhs == circle_lc(FI2, a, c) + circle_lc(FI2, b, c)
    rhs = circle_lc(FI2, c, a + b)
    assert rhs == circle_lc(FI2, c, a) + circle_lc(FI2, c, b)


# -- morphisms --------------------------------------------------------------

def test_morphism_needs_quotient_direction():
    with pytest.raises(DomainError):
        morphism(F22, FII, t("1(. 1 .)"))


def test_morphism_worked_example():
    src = t("0(. 4 1(. 2 .) 1 1(. 5 .))")
    got = morphism(FII, F22, src)
    assert got == LinComb.of(t("0(. 1 1(. 1 .) 1 1(. 1 .))"))


def test_morphism_collapses_node_labels_to_weights():
    got = morphism(FII, F2I, t("1(. 3 .)"))
    assert got == LinComb.of(t("1(. 1 .)"))
    got = morphism(FII, FI2, t("2(. 1 .)"))
    assert got == LinComb.of(t("1(. 1 .)"), -LAMBDA)


def test_morphism_respects_operator_and_product():
    for a in small_trees(FII, 2):
        assert morphism_lc(FII, F22, beta(FII, a)) == beta_lc(F22, morphism(FII, F22, a))
    for a, b in itertools.product(small_trees(FII, 2), repeat=2):
        lhs = morphism_lc(FII, F22, circle(FII, a, b))
        rhs = circle_lc(F22, morphism(FII, F22, a), morphism(FII, F22, b))
        assert lhs == rhs


def test_morphism_diamond_commutes():
    for a in small_trees(FII, 2):
        via_i = morphism_lc(F2I, F22, morphism(FII, F2I, a))
        via_j = morphism_lc(FI2, F22, morphism(FII, FI2, a))
        assert via_i == via_j


# -- decomposition ----------------------------------------------------------

def test_decompose_recompose_identity():
    for family in FAMILIES:
        for tree in small_trees(family, 3):
            power, pieces, angles = decompose(tree)
            assert recompose(family, power, pieces, angles) == LinComb.of(tree)


def test_decompose_reads_off_the_root():
    power, pieces, angles = decompose(t("2(1(. 1 .) 3 .)"))
    assert power == 2
    assert pieces == (t("1(. 1 .)"), LEAF)
    assert angles == (3,)
    with pytest.raises(DomainError):
        decompose(LEAF)
