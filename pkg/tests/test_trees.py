# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import itertools
from pathlib import Path

import pytest

from src.combinatorics import enumerate_set_compositions, restrict_std
from src.errors import DomainError
from src.hopf import restricted_product
from src.literals import parse_increasing_tree, parse_planar_tree
from src.models.set_composition import EMPTY_COMPOSITION, SetComposition
from src.models.tree import LEAF, TRIVIAL_INCREASING_TREE, IncreasingTree, corolla
from src.trees import (
    add_rightmost_branching,
    binary_tree_to_perm,
    branching_levels,
    contract,
    enumerate_binary_trees,
    enumerate_increasing_trees,
    enumerate_left_increasing_trees,
    enumerate_trees,
    factor_balanced,
    fgt,
    graft_increasing,
    graft_left,
    inc,
    increasing_trees_via_bijection,
    is_balanced,
    is_binary,
    is_left_increasing,
    labels_share_path,
    natural_labels,
    render_ascii,
    root_branching_labels,
    sigma,
    tau,
    unwedge,
    wedge,
)


def comp(*blocks) -> SetComposition:
    return SetComposition.of(blocks)


def max_decomposition_literal(word: list[int]) -> tuple[str, list[int]]:
    """Split the level word at its maxima; each maximum is a branching of the root."""
    if not word:
        return "*", []
    top = max(word)
    segments: list[list[int]] = [[]]
    for level in word:
        if level == top:
            segments.append([])
        else:
            segments[-1].append(level)
    shape, levels = "(", [top]
    for segment in segments:
        child_shape, child_levels = max_decomposition_literal(segment)
        shape += child_shape
        levels += child_levels
    return shape + ")", levels


def level_word(P: SetComposition) -> list[int]:
    block_of = {e: i for i, block in enumerate(P.blocks, 1) for e in block}
    return [block_of[e] for e in sorted(block_of)]


FIG_8 = comp([2, 6], [3, 4], [1], [5])


def test_tau_of_worked_example():
    T = tau(FIG_8)
    assert T.to_literal() == "((*((**)**))(**))@4,3,2,1,1"
    assert branching_levels(T) == [3, 1, 2, 2, 4, 1]
    assert sigma(T) == FIG_8


@pytest.mark.parametrize(
    "P, literal",
    [
        (comp([1], [3, 4], [2, 5]), "((**)(***)*)@3,1,2"),
        (comp([1, 3, 4], [2, 5]), "((**)(***)*)@2,1,1"),
        (comp([3, 4], [1], [2, 5]), "((**)(***)*)@3,2,1"),
    ],
)
def test_compositions_of_one_shape(P, literal):
    assert tau(P).to_literal() == literal
    assert sigma(parse_increasing_tree(literal)) == P


def test_tau_of_empty_composition():
    assert tau(EMPTY_COMPOSITION) == TRIVIAL_INCREASING_TREE
    assert sigma(TRIVIAL_INCREASING_TREE) == EMPTY_COMPOSITION


@pytest.mark.parametrize("n", range(6))
def test_tau_matches_max_decomposition(n):
    for P in enumerate_set_compositions(n):
        shape, levels = max_decomposition_literal(level_word(P))
        expected = "*" if not levels else shape + "@" + ",".join(map(str, levels))
        assert tau(P).to_literal() == expected


@pytest.mark.parametrize("n", range(6))
def test_bijection_roundtrip(n):
    for P in enumerate_set_compositions(n):
        assert sigma(tau(P)) == P
    for T in enumerate_increasing_trees(n):
        assert tau(sigma(T)) == T


def test_bijection_is_onto_increasing_trees():
    for n in range(5):
        assert set(increasing_trees_via_bijection(n)) == set(enumerate_increasing_trees(n))


def test_sigma_needs_standard_levels():
    with pytest.raises(DomainError):
        sigma(parse_increasing_tree("(**)@2"))


def test_invalid_level_function():
    with pytest.raises(DomainError):
        IncreasingTree.of(parse_planar_tree("((**)*)"), [1, 2])
    with pytest.raises(DomainError):
        IncreasingTree.of(parse_planar_tree("((**)*)"), [1])


def test_equality_compares_standardization():
    assert parse_increasing_tree("((**)*)@7,3") == parse_increasing_tree("((**)*)@2,1")


@pytest.mark.parametrize(
    "start, level, result",
    [
        ("(**)@1", 2, "((**)*)@2,1"),
        ("(**)@1", 1, "(***)@1"),
        ("((**)*)@2,1", 1, "((**)(**))@2,1,1"),
        ("(*(**))@3,1", 2, "(*((**)*))@3,2,1"),
    ],
)
def test_add_rightmost_branching(start, level, result):
    grown = add_rightmost_branching(parse_increasing_tree(start), level)
    assert grown.to_literal() == result


def test_add_rightmost_to_trivial_tree():
    assert add_rightmost_branching(TRIVIAL_INCREASING_TREE, 1).to_literal() == "(**)@1"


def test_wedge_and_unwedge():
    T = wedge([corolla(2), LEAF])
    assert T.to_literal() == "((**)*)"
    assert unwedge(T) == [corolla(2), LEAF]
    with pytest.raises(DomainError):
        wedge([LEAF])
    with pytest.raises(DomainError):
        unwedge(LEAF)


def test_natural_labels_and_root_labels():
    T = parse_planar_tree("((**)*(***))")
    labels = natural_labels(T)
    assert [b.natural_label for b in labels] == [1, 2, 3, 4, 5]
    assert [b.vertex for b in labels] == [(0,), (), (), (2,), (2,)]
    assert root_branching_labels(T) == [2, 3]


@pytest.mark.parametrize("n", range(6))
def test_root_branching_labels_match_natural_order(n):
    for T in enumerate_trees(n):
        at_root = [b.natural_label for b in natural_labels(T) if b.vertex == ()]
        sizes = [child.branching_count for child in T.children]
        formula = [i + sum(sizes[:i]) for i in range(1, len(sizes))]
        assert root_branching_labels(T) == at_root == formula


@pytest.mark.parametrize(
    "n, count", [(0, 1), (1, 1), (2, 3), (3, 11), (4, 45)]
)
def test_planar_tree_counts(n, count):
    assert len(enumerate_trees(n)) == count


def test_binary_tree_counts():
    assert [len(enumerate_binary_trees(n)) for n in range(5)] == [1, 1, 2, 5, 14]


def test_increasing_tree_counts():
    assert [len(enumerate_increasing_trees(n)) for n in range(6)] == [
        1,
        1,
        3,
        13,
        75,
        541,
    ]


def test_contract():
    T = tau(FIG_8)
    A = {1, 2, 4, 6}
    assert contract(T, A) == tau(restrict_std(FIG_8, A))
    assert contract(T, set()) == TRIVIAL_INCREASING_TREE
    assert contract(T, set(range(1, 7))) == T
    with pytest.raises(DomainError):
        contract(T, {7})


@pytest.mark.parametrize(
    "shape, literal",
    [
        ("*", "*"),
        ("(***)", "(***)@1"),
        ("((**)*)", "((**)*)@2,1"),
        ("(*(**))", "(*(**))@2,1"),
        ("((**)(**))", "((**)(**))@3,1,2"),
    ],
)
def test_inc(shape, literal):
    T = parse_planar_tree(shape)
    assert inc(T).to_literal() == literal
    assert fgt(inc(T)) == T


def test_left_increasing_examples():
    assert is_left_increasing(parse_increasing_tree("((**)(**))@3,1,2"))
    assert not is_left_increasing(parse_increasing_tree("((**)(**))@3,2,1"))
    assert not is_left_increasing(parse_increasing_tree("((**)(**))@2,1,1"))


def test_left_increasing_trees_are_one_per_shape():
    for n in range(5):
        standard = [T for T in enumerate_increasing_trees(n) if is_left_increasing(T)]
        assert set(standard) == set(enumerate_left_increasing_trees(n))
        assert len(standard) == len(enumerate_trees(n))


def on_common_path(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return a[: len(b)] == b or b[: len(a)] == a


@pytest.mark.parametrize("n", range(6))
def test_labels_share_path_matches_vertex_paths(n):
    for T in enumerate_increasing_trees(n):
        branchings = natural_labels(T.shape)
        for left, right in itertools.combinations(branchings, 2):
            assert labels_share_path(
                T, left.natural_label, right.natural_label
            ) == on_common_path(left.vertex, right.vertex)


def test_graft_left():
    assert graft_left(corolla(2), corolla(3)).to_literal() == "((**)**)"
    assert graft_left(corolla(2), LEAF) == corolla(2)


def test_graft_increasing_is_restricted_product():
    for p, q in [(0, 2), (1, 1), (2, 1), (1, 2), (2, 2)]:
        for P in enumerate_set_compositions(p):
            for Q in enumerate_set_compositions(q):
                grafted = graft_increasing(tau(P), tau(Q))
                assert sigma(grafted) == restricted_product(P, Q)


def test_balanced_trees():
    assert is_balanced(tau(comp([1, 2])))
    assert not is_balanced(tau(comp([1], [2])))
    assert factor_balanced(tau(comp([1], [2]))) == [tau(comp([1])), tau(comp([1]))]


def test_binary_tree_to_perm():
    assert binary_tree_to_perm(parse_planar_tree("((**)*)")).to_literal() == "p:1,2"
    assert binary_tree_to_perm(parse_planar_tree("(*(**))")).to_literal() == "p:2,1"
    with pytest.raises(DomainError):
        binary_tree_to_perm(corolla(3))
    for n in range(6):
        trees = enumerate_binary_trees(n)
        assert len({binary_tree_to_perm(T) for T in trees}) == len(trees)


def test_render_corolla():
    assert render_ascii(parse_increasing_tree("(**)@1")) == "* *\n\\1/"
    assert render_ascii(LEAF) == "*"


GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def test_render_worked_example():
    expected = (GOLDEN_DIR / "tau_26_34_1_5.txt").read_text(encoding="utf-8")
    assert render_ascii(tau(FIG_8)) == expected.rstrip("\n")


def test_render_wide_tree():
    # twelve branchings, one per level, need two characters per cell
    P = comp(*([e] for e in range(12, 0, -1)))
    rows = render_ascii(tau(P)).split("\n")
    assert len(rows) == 13
    assert rows[0] == "   ".join(["*"] * 13)
    assert rows[1] == "|   " * 11 + "\\_12/"
    assert rows[12] == "\\_1___/"
    for label in range(1, 13):
        column = 2 * (2 * label - 1)
        assert rows[13 - label][column : column + len(str(label))] == str(label)
    assert not any("/_" in row for row in rows)


def one_branching_per_level(T: IncreasingTree) -> bool:
    return sorted(branching_levels(T)) == list(range(1, T.branching_count + 1))


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 6), (4, 24)])
def test_one_branching_per_level_counts_permutations(n, expected):
    trees = [T for T in enumerate_increasing_trees(n) if one_branching_per_level(T)]
    assert len(trees) == expected
    assert all(len(block) == 1 for T in trees for block in sigma(T).blocks)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)])
def test_left_increasing_with_one_branching_per_level_are_binary(n, expected):
    trees = [T for T in enumerate_left_increasing_trees(n) if one_branching_per_level(T)]
    assert len(trees) == expected
    assert all(is_binary(T) for T in trees)
