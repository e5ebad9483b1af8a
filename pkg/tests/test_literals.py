# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import pytest

from src.errors import DomainError, LiteralParseError
from src.literals import (
    parse_increasing_tree,
    parse_literal,
    parse_permutation,
    parse_planar_tree,
    parse_set_composition,
)
from src.models.permutation import Permutation
from src.models.set_composition import EMPTY_COMPOSITION, SetComposition
from src.models.tree import LEAF, TRIVIAL_INCREASING_TREE, IncreasingTree, PlanarTree


def test_parse_set_composition():
    assert parse_set_composition("2,6|3,4|1|5") == SetComposition.of(
        [[2, 6], [3, 4], [1], [5]]
    )
    assert parse_set_composition(" 1 | 2 ") == SetComposition.of([[1], [2]])
    assert parse_set_composition("0") == EMPTY_COMPOSITION


@pytest.mark.parametrize("text", ["1,,2", "1|", "|1", "a", ""])
def test_malformed_set_compositions(text):
    with pytest.raises(LiteralParseError):
        parse_set_composition(text)


@pytest.mark.parametrize("text", ["1,1", "1|1", "0,1"])
def test_invalid_set_compositions(text):
    with pytest.raises(DomainError):
        parse_set_composition(text)


def test_parse_permutation():
    assert parse_permutation("p:3,5,2,4,1") == Permutation.of([3, 5, 2, 4, 1])
    assert parse_permutation("p:") == Permutation.identity(0)
    with pytest.raises(LiteralParseError):
        parse_permutation("3,1,2")
    with pytest.raises(LiteralParseError):
        parse_permutation("p:1,")
    with pytest.raises(DomainError):
        parse_permutation("p:1,3")


def test_parse_planar_tree():
    assert parse_planar_tree("*") == LEAF
    tree = parse_planar_tree("((**) *)")
    assert tree.to_literal() == "((**)*)"


@pytest.mark.parametrize("text", ["()", "(**", "(**))", "**", "(*x)"])
def test_malformed_trees(text):
    with pytest.raises(LiteralParseError):
        parse_planar_tree(text)


def test_single_child_is_not_a_tree():
    with pytest.raises(DomainError):
        parse_planar_tree("(*)")


def test_parse_increasing_tree():
    assert parse_increasing_tree("*") == TRIVIAL_INCREASING_TREE
    T = parse_increasing_tree("(*(**))@2,1")
    assert T.levels == (2, 1)
    with pytest.raises(LiteralParseError):
        parse_increasing_tree("(**)")
    with pytest.raises(LiteralParseError):
        parse_increasing_tree("(**)@")
    with pytest.raises(DomainError):
        parse_increasing_tree("((**)*)@1,2")


@pytest.mark.parametrize(
    "text, kind",
    [
        ("1,2|3", SetComposition),
        ("0", SetComposition),
        ("p:2,1", Permutation),
        ("(**)", PlanarTree),
        ("*", PlanarTree),
        ("(**)@1", IncreasingTree),
    ],
)
def test_parse_literal_dispatch(text, kind):
    assert isinstance(parse_literal(text), kind)


def test_literals_print_back():
    for text in ["2,6|3,4|1|5", "p:3,1,2", "((**)(**))@3,1,2", "(*(**)*)"]:
        assert parse_literal(text).to_literal() == text
