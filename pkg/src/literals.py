# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import logging
import re
from typing import Union

from src.errors import LiteralParseError
from src.models.permutation import Permutation
from src.models.set_composition import EMPTY_COMPOSITION, SetComposition
from src.models.tree import LEAF, TRIVIAL_INCREASING_TREE, IncreasingTree, PlanarTree

logger = logging.getLogger(__name__)

PERMUTATION_PREFIX = "p:"
LEVELS_SEPARATOR = "@"

_NUMBER_LIST = re.compile(r"^\d+(,\d+)*$")
_COMPOSITION = re.compile(r"^\d+(,\d+)*(\|\d+(,\d+)*)*$")
_TREE = re.compile(r"^[()*]+$")

Literal = Union[SetComposition, Permutation, PlanarTree, IncreasingTree]


def _numbers(text: str) -> list[int]:
    return [int(token) for token in text.split(",")]


def parse_set_composition(text: str) -> SetComposition:
    """`2,6|3,4|1|5` for (26,34,1,5); `0` is the empty composition."""
    text = re.sub(r"\s+", "", text)
    if text == "0":
        return EMPTY_COMPOSITION
    if not _COMPOSITION.match(text):
        raise LiteralParseError(f"'{text}' is not a set composition literal.")
    return SetComposition.of(_numbers(block) for block in text.split("|"))


def parse_permutation(text: str) -> Permutation:
    """`p:3,5,2,4,1`; `p:` alone is the empty permutation."""
    text = re.sub(r"\s+", "", text)
    if not text.startswith(PERMUTATION_PREFIX):
        raise LiteralParseError(f"'{text}' does not start with '{PERMUTATION_PREFIX}'.")
    body = text[len(PERMUTATION_PREFIX) :]
    if not body:
        return Permutation.identity(0)
    if not _NUMBER_LIST.match(body):
        raise LiteralParseError(f"'{text}' is not a permutation literal.")
    return Permutation.of(_numbers(body))


def parse_planar_tree(text: str) -> PlanarTree:
    """`*` is the trivial tree, `(t1 t2 ...)` the wedge of its children."""
    text = re.sub(r"\s+", "", text)
    if not _TREE.match(text):
        raise LiteralParseError(f"'{text}' is not a tree literal.")
    position = 0

    def parse_node() -> PlanarTree:
        nonlocal position
        if position >= len(text):
            raise LiteralParseError(f"Unexpected end of tree literal '{text}'.")
        token = text[position]
        position += 1
        if token == "*":
            return LEAF
        if token != "(":
            raise LiteralParseError(
                f"Unexpected '{token}' at position {position - 1} of '{text}'."
            )
        children = []
        while position < len(text) and text[position] != ")":
            children.append(parse_node())
        if position >= len(text):
            raise LiteralParseError(f"Unbalanced parentheses in '{text}'.")
        position += 1
        if not children:
            raise LiteralParseError(f"Empty vertex in tree literal '{text}'.")
        return PlanarTree.wedge_of(children)

    tree = parse_node()
    if position != len(text):
        raise LiteralParseError(f"Trailing characters in tree literal '{text}'.")
    return tree


def parse_increasing_tree(text: str) -> IncreasingTree:
    """`(*(**))@2,1`: shape plus levels in vertex pre-order; `*` is the trivial tree."""
    text = re.sub(r"\s+", "", text)
    shape_text, separator, levels_text = text.partition(LEVELS_SEPARATOR)
    shape = parse_planar_tree(shape_text)
    if not separator:
        if shape.is_leaf:
            return TRIVIAL_INCREASING_TREE
        raise LiteralParseError(f"'{text}' has no '{LEVELS_SEPARATOR}' level list.")
    if not _NUMBER_LIST.match(levels_text):
        raise LiteralParseError(f"'{levels_text}' is not a level list.")
    return IncreasingTree.of(shape, _numbers(levels_text))


def parse_literal(text: str) -> Literal:
    """Dispatch on the shape of the literal."""
    stripped = text.strip()
    if stripped.startswith(PERMUTATION_PREFIX):
        return parse_permutation(stripped)
    if LEVELS_SEPARATOR in stripped:
        return parse_increasing_tree(stripped)
    if stripped.startswith("(") or stripped == "*":
        return parse_planar_tree(stripped)
    return parse_set_composition(stripped)
