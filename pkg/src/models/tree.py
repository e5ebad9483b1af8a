# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

from typing import ClassVar, Iterator, Sequence

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from src.errors import DomainError
from src.models.general import BasisKind


class PlanarTree(BaseModel):
    """
    A planar rooted tree: either the trivial tree (a single leaf, no vertex) or
    the wedge of at least two planar rooted trees.
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassVar[BasisKind] = BasisKind.PLANAR_TREE

    children: tuple["PlanarTree", ...] = Field(
        default=(), description="The subtrees joined at the root, left to right"
    )

    @field_validator("children")
    @classmethod
    def vertex_must_have_two_children(cls, value):
        if len(value) == 1:
            raise ValueError("Every vertex of a planar tree needs at least two children.")
        return value

    @classmethod
    def wedge_of(cls, children: Sequence["PlanarTree"]) -> "PlanarTree":
        if len(children) < 2:
            raise DomainError(f"A wedge needs at least 2 children, got {len(children)}.")
        return cls.model_construct(children=tuple(children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def branching_count(self) -> int:
        if self.is_leaf:
            return 0
        return len(self.children) - 1 + sum(c.branching_count for c in self.children)

    @property
    def degree(self) -> int:
        return self.branching_count

    @property
    def vertex_count(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + sum(c.vertex_count for c in self.children)

    def vertices(self) -> Iterator[tuple[tuple[int, ...], "PlanarTree"]]:
        """Yield (path, subtree) for every vertex in pre-order."""
        stack: list[tuple[tuple[int, ...], PlanarTree]] = [((), self)]
        while stack:
            path, node = stack.pop()
            if node.is_leaf:
                continue
            yield path, node
            for i in reversed(range(len(node.children))):
                stack.append((path + (i,), node.children[i]))

    def sort_key(self) -> tuple:
        return (
            self.branching_count,
            len(self.children),
            tuple(c.sort_key() for c in self.children),
        )

    def to_literal(self) -> str:
        if self.is_leaf:
            return "*"
        return "(" + "".join(c.to_literal() for c in self.children) + ")"

    def __str__(self) -> str:
        return self.to_literal()


PlanarTree.model_rebuild()

LEAF = PlanarTree()


def corolla(m: int) -> PlanarTree:
    """The tree with one vertex and m leaves."""
    return PlanarTree.wedge_of([LEAF] * m)


class Branching(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertex: tuple[int, ...] = Field(
        ..., description="Child-index path from the root to the vertex"
    )
    slot: int = Field(
        ..., description="Index i of the pair of adjacent incoming edges (i, i+1)"
    )
    natural_label: int = Field(..., description="Position in the left-to-right order")


class IncreasingTree(BaseModel):
    """
    A planar tree with a level function on its vertices that is strictly
    increasing towards the root. Levels are listed in vertex pre-order.
    Level functions need not be standard; equality compares standardizations.
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassVar[BasisKind] = BasisKind.INCREASING_TREE

    shape: PlanarTree = Field(default=LEAF, description="The underlying planar tree")
    levels: tuple[int, ...] = Field(
        default=(), description="The level of every vertex, in pre-order"
    )

    @model_validator(mode="after")
    def levels_must_increase_towards_root(self):
        if len(self.levels) != self.shape.vertex_count:
            raise ValueError(
                f"Expected {self.shape.vertex_count} levels, got {len(self.levels)}."
            )
        levels = iter(self.levels)

        def check(node: PlanarTree) -> int:
            level = next(levels)
            for child in node.children:
                if not child.is_leaf and check(child) >= level:
                    raise ValueError(
                        "Levels must be strictly increasing towards the root."
                    )
            return level

        if not self.shape.is_leaf:
            check(self.shape)
        return self

    @classmethod
    def of(cls, shape: PlanarTree, levels: Sequence[int]) -> "IncreasingTree":
        try:
            return cls(shape=shape, levels=tuple(levels))
        except ValidationError as e:
            raise DomainError(f"Invalid increasing tree: {e}") from e

    @classmethod
    def from_canonical(
        cls, shape: PlanarTree, levels: tuple[int, ...]
    ) -> "IncreasingTree":
        return cls.model_construct(shape=shape, levels=levels)

    @property
    def branching_count(self) -> int:
        return self.shape.branching_count

    @property
    def degree(self) -> int:
        return self.shape.branching_count

    @property
    def is_standard(self) -> bool:
        return set(self.levels) == set(range(1, len(set(self.levels)) + 1))

    @property
    def root_level(self) -> int:
        return self.levels[0] if self.levels else 0

    def standardized(self) -> "IncreasingTree":
        ranks = {level: i for i, level in enumerate(sorted(set(self.levels)), 1)}
        return IncreasingTree.from_canonical(
            self.shape, tuple(ranks[level] for level in self.levels)
        )

    def shifted(self, offset: int) -> "IncreasingTree":
        return IncreasingTree.from_canonical(
            self.shape, tuple(level + offset for level in self.levels)
        )

    def level_map(self) -> dict[tuple[int, ...], int]:
        return {
            path: level for (path, _), level in zip(self.shape.vertices(), self.levels)
        }

    def sort_key(self) -> tuple:
        return (self.shape.sort_key(), self.standardized().levels)

    def to_literal(self) -> str:
        if self.shape.is_leaf:
            return "*"
        return self.shape.to_literal() + "@" + ",".join(str(lv) for lv in self.levels)

    def __str__(self) -> str:
        return self.to_literal()

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncreasingTree):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.standardized().levels == other.standardized().levels
        )

    def __hash__(self) -> int:
        return hash((self.shape, self.standardized().levels))


TRIVIAL_INCREASING_TREE = IncreasingTree.from_canonical(LEAF, ())
