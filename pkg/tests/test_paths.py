"""Diagonal and mountain paths, their classes, and the tree encodings."""

from hypothesis import given
from hypothesis import strategies as st

from baxtertrees.counting import catalan, motzkin, schroder_large
from baxtertrees.errors import DomainError, ParseError
from baxtertrees.paths import (
    classify_path,
    colored_motzkin_paths,
    decode_positive,
    decode_zero,
    encode_positive,
    encode_zero,
    from_colored_motzkin,
    has_diagonal_double,
    is_restricted_schroder,
    level_colored_motzkin_paths,
    motzkin_paths,
    parse_path,
    path_to_tree,
    plus_paths,
    render_path,
    restore_angles,
    restricted_paths,
    rotate_from_motzkin,
    rotate_to_motzkin,
    schroder_params,
    schroder_paths,
    strip_angles,
    to_colored_motzkin,
    to_plus_class,
    to_zero_class,
    tree_to_path,
    zero_paths,
)
from baxtertrees.trees import (
    Family,
    INF,
    enumerate_positive_root,
    enumerate_trees,
    enumerate_zero_root,
    parse_tree,
)

import pytest

FI2 = Family(INF, 2)
F22 = Family(2, 2)

t = parse_tree


# -- step text --------------------------------------------------------------

def test_parse_path_compact_and_spaced():
    assert parse_path("HDHVV") == ("H", "D", "H", "V", "V")
    assert parse_path("Ub Hr D") == ("Ub", "Hr", "D")
    assert parse_path("") == ()
    assert render_path(("H", "V")) == "HV"
    assert render_path(("Ub", "D")) == "Ub D"


def test_parse_path_rejects_unknown_steps():
    for bad in ("HX", "h", "Urr", "U b"):
        with pytest.raises(ParseError):
            parse_path(bad)


@given(st.lists(st.sampled_from("HVD"), max_size=8))
def test_path_text_round_trip(steps):
    p = tuple(steps)
    assert parse_path(render_path(p)) == p


# -- diagonal-path classes --------------------------------------------------

def test_classify_known_rows():
    r = classify_path(parse_path("HDHVV"), "schroder")
    assert r["valid"] and (r["n"], r["m"]) == (3, 2)
    assert r["plus_class"] and not r["zero_class"]

    r = classify_path(parse_path("DHVD"), "schroder")
    assert r["valid"] and r["zero_class"] and not r["plus_class"]

    r = classify_path(parse_path("UUD"), "motzkin")
    assert not r["valid"]


def test_classify_flags_diagonal_violations():
    r = classify_path(parse_path("VH"), "schroder")
    assert not r["valid"] and r["index"] == 0
    r = classify_path(parse_path("HHV"), "schroder")
    assert not r["valid"] and r["reason"] == "does not end on the diagonal"


def test_schroder_path_counts():
    # Paths with parameters (n, m): the full diagonal class.
    assert len(schroder_paths(1, 0)) == 1  # just D
    assert len(schroder_paths(2, 1)) == 3  # HVD HDV DHV
    for n in range(1, 6):
        total = sum(len(schroder_paths(n, m)) for m in range(n + 1))
        split = sum(len(plus_paths(n, m)) + len(zero_paths(n, m)) for m in range(n + 1))
        assert total == split


def test_plus_and_zero_classes_partition():
    for n in range(5):
        for m in range(n + 1):
            ps = set(plus_paths(n, m))
            zs = set(zero_paths(n, m))
            assert not ps & zs
            assert ps | zs == set(schroder_paths(n, m))
            assert all(not has_diagonal_double(p) for p in ps)


def test_path_class_totals():
    for n in range(1, 7):
        full = sum(len(schroder_paths(n, m)) for m in range(n + 1))
        assert full == schroder_large(n)
        # The restricted class matches the forced-family row: twice the
        # fully colored mountain count one size down.
        restricted = sum(len(restricted_paths(n, m)) for m in range(n + 1))
        assert restricted == 2 * len(colored_motzkin_paths(n - 1))


def test_params_read_off_steps():
    assert schroder_params(parse_path("HDHVV")) == (3, 2)
    assert schroder_params(parse_path("D")) == (1, 0)
    with pytest.raises(DomainError):
        schroder_params(parse_path("HV") + ("V",))


# -- mountain paths ---------------------------------------------------------

def test_motzkin_path_counts():
    assert [len(motzkin_paths(k)) for k in range(6)] == [1, 1, 2, 4, 9, 21]
    for k in range(6):
        assert len(motzkin_paths(k)) == motzkin(k)


def test_colored_motzkin_counts():
    # Fully colored: no simple closed form; level-only: a Catalan shift.
    assert [len(colored_motzkin_paths(k)) for k in range(6)] == [1, 2, 6, 20, 72, 272]
    for k in range(6):
        assert len(level_colored_motzkin_paths(k)) == catalan(k + 1)


def test_rotation_is_a_bijection():
    for n in range(1, 6):
        for m in range(n + 1):
            for p in schroder_paths(n, m):
                q = rotate_to_motzkin(p)
                assert len(q) == n + m
                assert rotate_from_motzkin(q) == p
    with pytest.raises(DomainError):
        rotate_from_motzkin(("U", "U", "D"))


# -- tree encodings ---------------------------------------------------------

def test_strip_restore_round_trip():
    # Stripping wants a positive root; root-0 trees go through the
    # zero-class encoding instead.
    for n in range(1, 5):
        for m in range(1, n + 1):
            for tree in enumerate_positive_root(FI2, n, m):
                assert restore_angles(strip_angles(tree)) == tree
    with pytest.raises(DomainError):
        strip_angles(t("0(. 1 .)"))


def test_worked_shape_reading():
    tree = t("1(. 1 1(. 1 .) 1 1(. 1 .))")
    assert render_path(encode_positive(tree)) == "HDHVVHV"
    assert decode_positive(parse_path("HDHVVHV")) == tree


def test_positive_encoding_is_bijective():
    for n in range(1, 6):
        for m in range(1, n + 1):
            trees = enumerate_positive_root(FI2, n, m)
            images = {encode_positive(tr) for tr in trees}
            assert images == set(plus_paths(n, m))
            for tr in trees:
                assert decode_positive(encode_positive(tr)) == tr


def test_zero_encoding_is_bijective():
    for n in range(1, 5):
        for m in range(n + 1):
            trees = enumerate_zero_root(FI2, n, m)
            images = {encode_zero(tr) for tr in trees}
            assert images == set(zero_paths(n, m))
            for tr in trees:
                assert decode_zero(encode_zero(tr)) == tr
    with pytest.raises(DomainError):
        encode_zero(t("1(. 1 .)"))


def test_class_trade_known_pair():
    assert render_path(to_zero_class(parse_path("HDHVV"))) == "DHVD"
    assert render_path(to_plus_class(parse_path("DHVD"))) == "HDHVV"


def test_class_trades_invert_each_other():
    for n in range(1, 6):
        for m in range(n + 1):
            for p in plus_paths(n, m):
                q = to_zero_class(p)
                assert has_diagonal_double(q)
                assert to_plus_class(q) == p
            for q in zero_paths(n, m):
                assert to_zero_class(to_plus_class(q)) == q


def test_class_trade_preserves_restriction():
    for n in range(1, 6):
        for m in range(n + 1):
            for p in plus_paths(n, m):
                assert is_restricted_schroder(p) == is_restricted_schroder(to_zero_class(p))


def test_colored_reading_round_trip():
    for n in range(1, 5):
        for m in range(1, n + 1):
            for tree in enumerate_positive_root(F22, n, m):
                path = to_colored_motzkin(tree)
                assert from_colored_motzkin(path) == tree


def test_shape_reading_matches_leaf_count():
    for n in range(4):
        for m in range(n + 1):
            for tree in enumerate_positive_root(FI2, n + 1, m + 1):
                path = tree_to_path(strip_angles(tree))
                assert path_to_tree(path) == strip_angles(tree)
