# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import itertools
import logging
from functools import lru_cache
from typing import AbstractSet, Optional, Sequence, Union

from src.combinatorics import (
    enumerate_set_compositions,
    factor_reduced,
    is_reduced,
    restrict,
    setcomp_to_perm,
)
from src.errors import DomainError
from src.models.permutation import Permutation
from src.models.set_composition import SetComposition
from src.models.tree import (
    LEAF,
    Branching,
    IncreasingTree,
    PlanarTree,
)

logger = logging.getLogger(__name__)

# Working form of an increasing tree: None is a leaf, a vertex is
# (level, children). Levels may be non-standard.
_Node = Optional[tuple[int, tuple]]


def _thaw(T: IncreasingTree) -> _Node:
    levels = iter(T.levels)

    def build(shape: PlanarTree) -> _Node:
        if shape.is_leaf:
            return None
        level = next(levels)
        return (level, tuple(build(child) for child in shape.children))

    return build(T.shape)


def _freeze(node: _Node) -> IncreasingTree:
    levels: list[int] = []

    def build(current: _Node) -> PlanarTree:
        if current is None:
            return LEAF
        level, children = current
        levels.append(level)
        return PlanarTree.model_construct(
            children=tuple(build(child) for child in children)
        )

    shape = build(node)
    return IncreasingTree.from_canonical(shape, tuple(levels))


def wedge(children: Sequence[PlanarTree]) -> PlanarTree:
    return PlanarTree.wedge_of(children)


def unwedge(T: PlanarTree) -> list[PlanarTree]:
    if T.is_leaf:
        raise DomainError("The trivial tree is not a wedge.")
    return list(T.children)


def natural_labels(T: PlanarTree) -> list[Branching]:
    """
    The branchings of T in left-to-right order. For a wedge of T_0, ..., T_m the
    branchings of T_i sit between the root branchings i and i+1.
    """
    branchings: list[Branching] = []

    def walk(node: PlanarTree, path: tuple[int, ...]) -> None:
        for i, child in enumerate(node.children):
            if i:
                branchings.append(
                    Branching(vertex=path, slot=i, natural_label=len(branchings) + 1)
                )
            walk(child, path + (i,))

    walk(T, ())
    return branchings


def root_branching_labels(T: PlanarTree) -> list[int]:
    """x_i = i + b(T_0) + ... + b(T_{i-1}) for the root branchings i = 1..m."""
    labels = []
    below = 0
    for i, child in enumerate(T.children):
        if i:
            labels.append(i + below)
        below += child.branching_count
    return labels


def branching_levels(T: IncreasingTree) -> list[int]:
    """The level of the branching with natural label i, for i = 1..b(T)."""
    levels = iter(T.levels)
    word: list[int] = []

    def walk(node: PlanarTree) -> None:
        if node.is_leaf:
            return
        level = next(levels)
        for i, child in enumerate(node.children):
            if i:
                word.append(level)
            walk(child)

    # levels are consumed in pre-order while labels are emitted in order
    walk(T.shape)
    return word


def sigma(T: IncreasingTree) -> SetComposition:
    """The set composition whose i-th block holds the labels of branchings at level i."""
    if not T.is_standard:
        raise DomainError(f"sigma needs a standard level function, got {T}.")
    word = branching_levels(T)
    k = max(word, default=0)
    blocks: list[list[int]] = [[] for _ in range(k)]
    for label, level in enumerate(word, 1):
        blocks[level - 1].append(label)
    return SetComposition.from_canonical(tuple(tuple(block) for block in blocks))


def _add_rightmost(node: _Node, level: int) -> _Node:
    if node is None:
        return (level, (None, None))
    own_level, children = node
    if level > own_level:
        return (level, (node, None))
    if level == own_level:
        return (own_level, children + (None,))
    return (own_level, children[:-1] + (_add_rightmost(children[-1], level),))


def add_rightmost_branching(T: IncreasingTree, level: int) -> IncreasingTree:
    """
    Add a branching at the given level that becomes the rightmost one. Walking
    down the rightmost path from the root, the new branching either joins a
    vertex of that level, splits the rightmost edge below a higher vertex, or
    becomes the new root.
    """
    if level < 1:
        raise DomainError(f"Levels are positive integers, got {level}.")
    grown = _freeze(_add_rightmost(_thaw(T), level))
    assert grown.branching_count == T.branching_count + 1
    return grown


def _level_function(P: SetComposition) -> list[int]:
    block_of = {e: i for i, block in enumerate(P.blocks, 1) for e in block}
    return [block_of[e] for e in sorted(block_of)]


def tau(P: SetComposition) -> IncreasingTree:
    """
    The increasing tree of P, built by adding branchings on the right at levels
    phi(1), phi(2), ... where phi sends each element of the support (in
    increasing order) to the index of its block.
    """
    node: _Node = None
    for level in _level_function(P):
        node = _add_rightmost(node, level)
    return _freeze(node)


def contract(T: IncreasingTree, A: AbstractSet[int]) -> IncreasingTree:
    """
    The A-contraction of T: keep the branchings labelled by A with their relative
    levels, relabel them 1..|A| in order, and standardize.
    """
    n = T.branching_count
    if not all(1 <= label <= n for label in A):
        raise DomainError(f"Label set {sorted(A)} is not a subset of [{n}].")
    return tau(restrict(sigma(T.standardized()), A))


def fgt(T: IncreasingTree) -> PlanarTree:
    return T.shape


def _inc(shape: PlanarTree) -> tuple[_Node, int]:
    if shape.is_leaf:
        return None, 0
    children = []
    offset = 0
    for child in shape.children:
        node, depth = _inc(child)
        children.append(_shift(node, offset))
        offset += depth
    return (offset + 1, tuple(children)), offset + 1


def _shift(node: _Node, offset: int) -> _Node:
    if node is None:
        return None
    level, children = node
    return (level + offset, tuple(_shift(child, offset) for child in children))


def inc(T: PlanarTree) -> IncreasingTree:
    """
    The left increasing tree over T: the subtrees of the root get disjoint level
    ranges in ascending order from left to right, the root sits above them all.
    """
    node, _ = _inc(T)
    return _freeze(node)


def _on_common_path(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    shorter, longer = (a, b) if len(a) <= len(b) else (b, a)
    return longer[: len(shorter)] == shorter


def is_left_increasing(T: IncreasingTree) -> bool:
    """
    True iff level(b) < level(b') whenever b is left of b' and their vertices
    do not lie on a common leaf-to-root path.
    """
    level_at = T.level_map()
    branchings = natural_labels(T.shape)
    for left, right in itertools.combinations(branchings, 2):
        if _on_common_path(left.vertex, right.vertex):
            continue
        if level_at[left.vertex] >= level_at[right.vertex]:
            return False
    return True


def labels_share_path(T: IncreasingTree, i: int, j: int) -> bool:
    """
    Decide from labels and levels alone whether branchings i and j sit on a
    common leaf-to-root path: every branching strictly between them has a level
    not above the larger of their two levels.
    """
    word = branching_levels(T)
    low, high = min(i, j), max(i, j)
    bound = max(word[low - 1], word[high - 1])
    return all(word[d - 1] <= bound for d in range(low + 1, high))


def graft_left(T1: PlanarTree, T2: PlanarTree) -> PlanarTree:
    """Replace the leftmost leaf of T2 by T1."""
    if T2.is_leaf:
        return T1
    first, *rest = T2.children
    return PlanarTree.model_construct(children=(graft_left(T1, first), *rest))


def _graft_node(lower: _Node, upper: _Node) -> _Node:
    if upper is None:
        return lower
    level, children = upper
    return (level, (_graft_node(lower, children[0]),) + children[1:])


def graft_increasing(T1: IncreasingTree, T2: IncreasingTree) -> IncreasingTree:
    """
    Graft T1 on the leftmost leaf of T2, keeping the levels of T1 and raising
    every level of T2 by the root level of T1.
    """
    T1 = T1.standardized()
    upper = _shift(_thaw(T2.standardized()), T1.root_level)
    return _freeze(_graft_node(_thaw(T1), upper))


def is_binary(T: Union[PlanarTree, IncreasingTree]) -> bool:
    shape = T.shape if isinstance(T, IncreasingTree) else T
    return all(len(node.children) == 2 for _, node in shape.vertices())


def is_balanced(T: IncreasingTree) -> bool:
    return is_reduced(sigma(T.standardized()))


def factor_balanced(T: IncreasingTree) -> list[IncreasingTree]:
    return [tau(factor) for factor in factor_reduced(sigma(T.standardized()))]


def binary_tree_to_perm(T: PlanarTree) -> Permutation:
    if not is_binary(T):
        raise DomainError(f"{T} is not a binary tree.")
    return setcomp_to_perm(sigma(inc(T)))


def _weak_compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cuts + (total + parts - 1,)
        yield tuple(b - a - 1 for a, b in zip(bounds, bounds[1:]))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[PlanarTree, ...]:
    if n == 0:
        return (LEAF,)
    trees = []
    for arity in range(2, n + 2):
        for sizes in _weak_compositions(n - (arity - 1), arity):
            for children in itertools.product(*(_trees(size) for size in sizes)):
                trees.append(PlanarTree.model_construct(children=children))
    trees.sort(key=PlanarTree.sort_key)
    return tuple(trees)


def enumerate_trees(n: int) -> list[PlanarTree]:
    """All planar rooted trees with n branchings."""
    if n < 0:
        raise DomainError(f"Branching count must be non-negative, got {n}.")
    return list(_trees(n))


def enumerate_binary_trees(n: int) -> list[PlanarTree]:
    return [T for T in enumerate_trees(n) if is_binary(T)]


def enumerate_left_increasing_trees(n: int) -> list[IncreasingTree]:
    return [inc(T) for T in enumerate_trees(n)]


def standard_level_functions(shape: PlanarTree) -> list[tuple[int, ...]]:
    """
    All standard level functions on `shape`, in pre-order. Level 1 takes a
    non-empty set of vertices whose vertex children are already levelled, and
    so on upwards.
    """
    vertices = [path for path, _ in shape.vertices()]
    vertex_children = {
        path: [path + (i,) for i, c in enumerate(node.children) if not c.is_leaf]
        for path, node in shape.vertices()
    }
    results: list[tuple[int, ...]] = []

    def assign(levels: dict, level: int) -> None:
        if len(levels) == len(vertices):
            results.append(tuple(levels[path] for path in vertices))
            return
        available = [
            path
            for path in vertices
            if path not in levels
            and all(
                child in levels and levels[child] < level
                for child in vertex_children[path]
            )
        ]
        for size in range(1, len(available) + 1):
            for chosen in itertools.combinations(available, size):
                extended = dict(levels)
                extended.update({path: level for path in chosen})
                assign(extended, level + 1)

    assign({}, 1)
    results.sort()
    return results


def enumerate_increasing_trees(n: int) -> list[IncreasingTree]:
    """All standard increasing trees with n branchings, shape by shape."""
    return [
        IncreasingTree.from_canonical(shape, levels)
        for shape in enumerate_trees(n)
        for levels in standard_level_functions(shape)
    ]


def increasing_trees_via_bijection(n: int) -> list[IncreasingTree]:
    return [tau(P) for P in enumerate_set_compositions(n)]


def _height_levels(shape: PlanarTree) -> IncreasingTree:
    def build(node: PlanarTree) -> tuple[_Node, int]:
        if node.is_leaf:
            return None, 0
        built = [build(child) for child in node.children]
        height = 1 + max(h for _, h in built)
        return (height, tuple(child for child, _ in built)), height

    node, _ = build(shape)
    return _freeze(node)


def render_ascii(T: Union[PlanarTree, IncreasingTree]) -> str:
    """
    Draw the tree with leaves on the top row and one row per level below,
    root at the bottom. Branching i is drawn in column 2i-1 between leaves i-1
    and i. Planar trees are drawn at the height of their vertices.
    """
    tree = _height_levels(T) if isinstance(T, PlanarTree) else T.standardized()
    if tree.shape.is_leaf:
        return "*"
    n = tree.branching_count
    width = len(str(n))
    k = max(tree.levels)
    grid: list[list[str]] = [[" " * width] * (2 * n + 1) for _ in range(k + 1)]
    counters = {"leaf": 0, "label": 0}

    def put(row: int, column: int, text: str, fill: str = " ") -> None:
        # glyphs sit in the first character of their cell
        grid[row][column] = text.ljust(width, fill)

    def walk(node: _Node) -> tuple[int, int]:
        """Draw `node`, return (anchor column, first row below the node)."""
        if node is None:
            column = 2 * counters["leaf"]
            counters["leaf"] += 1
            put(0, column, "*")
            return column, 1
        level, children = node
        anchors: list[int] = []
        labels: list[int] = []
        for i, child in enumerate(children):
            if i:
                counters["label"] += 1
                labels.append(counters["label"])
            anchor, start = walk(child)
            anchors.append(anchor)
            for row in range(start, level):
                put(row, anchor, "|")
        left, right = anchors[0], anchors[-1]
        for column in range(left, right + 1):
            put(level, column, "", "_")
        for anchor in anchors[1:-1]:
            put(level, anchor, "|", "_")
        put(level, left, "\\", "_")
        put(level, right, "/")
        for label in labels:
            put(level, 2 * label - 1, str(label), "_")
        return 2 * labels[(len(labels) - 1) // 2] - 1, level + 1

    walk(_thaw(tree))
    return "\n".join("".join(row).rstrip() for row in grid)

