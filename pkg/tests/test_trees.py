"""Decorated-tree grammar, validation, enumeration, and planar bases."""

import itertools

from hypothesis import given
from hypothesis import strategies as st

from baxtertrees.errors import DomainError, ParseError
from baxtertrees.trees import (
    FAMILIES,
    LEAF,
    Family,
    INF,
    Node,
    bidegree,
    binary_trees,
    count_trees,
    enumerate_positive_root,
    enumerate_trees,
    enumerate_zero_root,
    is_binary,
    is_valid,
    parse_family,
    parse_planar,
    parse_tree,
    planar_trees,
    render_planar,
    render_tree,
    validate,
)

import pytest

F22 = Family(2, 2)
F2I = Family(2, INF)
FI2 = Family(INF, 2)
FII = Family(INF, INF)


def all_trees(family, top):
    for n in range(top + 1):
        for m in range(top + 1):
            yield from enumerate_trees(family, n, m)


# -- families ---------------------------------------------------------------

def test_parse_family_aliases():
    assert parse_family("2,2") == F22
    assert parse_family("inf, 2") == FI2
    assert parse_family("oo,infinity") == FII
    with pytest.raises(ParseError):
        parse_family("3,2")
    with pytest.raises(ParseError):
        parse_family("2")


def test_family_quotient_order():
    assert F22 <= FI2 and F22 <= F2I and F22 <= FII
    assert not (FI2 <= F2I) and not (F2I <= FI2)
    assert len(FAMILIES) == 4


# -- grammar ----------------------------------------------------------------

def test_parse_tree_shapes():
    t = parse_tree("1(. 2 .)")
    assert t.label == 1
    assert t.angles == (2,)
    assert t.children == (LEAF, LEAF)
    assert bidegree(t) == (2, 1)

    nested = parse_tree("0(. 1 1(. 1 .) 1 .)")
    assert nested.label == 0
    assert len(nested.children) == 3
    assert bidegree(nested) == (3, 1)


def test_parse_tree_rejects_malformed():
    for bad in ("1(.)", "1(. .)", "(. 1 .)", "1(. 1 . 2)", "1(. -1 .)", ""):
        with pytest.raises(ParseError):
            parse_tree(bad)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_render_parse_round_trip(n, m, fidx):
    family = FAMILIES[fidx]
    for t in enumerate_trees(family, n, m):
        assert parse_tree(render_tree(t)) == t


def test_str_matches_render():
    t = parse_tree("1(1(. 2 .) 3 .)")
    assert str(t) == "1(1(. 2 .) 3 .)" == render_tree(t)


# -- validation -------------------------------------------------------------

def test_bare_leaf_is_not_a_basis_element():
    # The leaf only enters through the augmented basis.
    for f in FAMILIES:
        assert not is_valid(f, LEAF)
    assert validate(FII, LEAF)[0].startswith("leaf:")


def test_single_child_rejected_at_construction():
    with pytest.raises(DomainError):
        Node(1, (LEAF,), ())


def test_inner_leaf_rejected():
    # An inner child slot holding a bare leaf is only legal outermost.
    t = parse_tree("1(. 1 1(. 1 .) 1 .)")
    u = parse_tree("1(1(. 1 .) 1 . 1 1(. 1 .))")
    assert is_valid(FII, t)
    assert not is_valid(FII, u)


def test_family_label_rules():
    deep_zero = parse_tree("1(. 1 0(. 1 .) 1 .)")
    assert not is_valid(FI2, deep_zero)
    big_label = parse_tree("1(. 1 3(. 1 .) 1 .)")
    assert is_valid(FII, big_label)
    assert not is_valid(FI2, big_label)
    wide_angle = parse_tree("1(. 2 .)")
    assert is_valid(FI2, wide_angle)
    assert not is_valid(F22, wide_angle)


def test_validate_reports_every_problem():
    t = parse_tree("2(. 3 0(. 1 .) 1 .)")
    problems = validate(F22, t)
    assert len(problems) >= 3  # root label, angle label, nested zero


def test_enumerations_are_valid_and_disjoint():
    for family in FAMILIES:
        seen = set()
        for t in all_trees(family, 3):
            assert is_valid(family, t)
            assert t not in seen
            seen.add(t)


# -- enumeration and counting ----------------------------------------------

def test_count_matches_enumeration():
    for family in FAMILIES:
        for n in range(5):
            for m in range(5):
                assert count_trees(family, n, m) == len(enumerate_trees(family, n, m))


def test_bidegree_of_enumerated_trees():
    for family in FAMILIES:
        for n in range(4):
            for m in range(4):
                for t in enumerate_trees(family, n, m):
                    assert bidegree(t) == (n, m)


def test_root_label_split():
    for n in range(4):
        for m in range(4):
            zero = enumerate_zero_root(FI2, n, m)
            plus = enumerate_positive_root(FI2, n, m)
            assert set(zero) | set(plus) == set(enumerate_trees(FI2, n, m))
            assert all(t.label == 0 for t in zero)
            assert all(t.label >= 1 for t in plus)


def test_known_small_counts():
    # Forced family, angle rows n = 1..4 over all m.
    rows = [sum(count_trees(F22, n, m) for m in range(10)) for n in range(1, 5)]
    assert rows == [2, 4, 12, 40]
    # Free-angle family row n = 3: 0, 1, 6, 5 over m = 0..3.
    assert [count_trees(F22, 3, m) for m in range(4)] == [0, 1, 6, 5]


# -- planar and binary trees ------------------------------------------------

def test_planar_catalan_totals():
    # Planar trees with n+1 leaves, any node count: super-Catalan/Schroeder.
    for n, want in enumerate((1, 1, 3, 11, 45), start=0):
        got = sum(len(planar_trees(n, m)) for m in range(n + 1))
        assert got == want


def test_binary_trees_are_catalan():
    assert [len(binary_trees(n)) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    for t in binary_trees(4):
        assert is_binary(t)


def test_binary_inside_planar():
    fours = {t for t in binary_trees(3)}
    assert fours <= set(planar_trees(3, 3))


@given(st.integers(0, 4))
def test_planar_render_round_trip(n):
    for m in range(n + 1):
        for t in planar_trees(n, m):
            assert parse_planar(render_planar(t)) == t


def test_parse_planar_rejects_malformed():
    for bad in ("(", "(.)", "(. . ", "x", ""):
        with pytest.raises(ParseError):
            parse_planar(bad)
