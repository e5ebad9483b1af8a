# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

from typing import ClassVar, Iterable

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.errors import DomainError
from src.models.general import BasisKind

# Letter used for the block separator in the word encoding of a set composition.
# It sorts before every element because elements are positive integers.
COMMA_TOKEN = 0


class SetComposition(BaseModel):
    """
    An ordered tuple of disjoint non-empty finite sets of positive integers.
    Each block is stored as a strictly increasing tuple, so equality and hashing
    are structural.
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassVar[BasisKind] = BasisKind.SET_COMPOSITION

    blocks: tuple[tuple[int, ...], ...] = Field(
        default=(), description="The blocks of the composition, each sorted"
    )

    @field_validator("blocks", mode="before")
    @classmethod
    def canonicalize_blocks(cls, value):
        return tuple(tuple(sorted(block)) for block in value)

    @field_validator("blocks")
    @classmethod
    def blocks_must_be_disjoint_and_non_empty(cls, value):
        seen: set[int] = set()
        for block in value:
            if not block:
                raise ValueError("Blocks of a set composition must be non-empty.")
            for element in block:
                if element < 1:
                    raise ValueError(
                        f"Elements must be positive integers, got {element}."
                    )
                if element in seen:
                    raise ValueError(f"Element {element} occurs in more than one block.")
                seen.add(element)
        return value

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "SetComposition":
        try:
            return cls(blocks=blocks)
        except ValidationError as e:
            raise DomainError(f"Invalid set composition {blocks!r}: {e}") from e

    @classmethod
    def from_canonical(cls, blocks: tuple[tuple[int, ...], ...]) -> "SetComposition":
        # Trusted internal path: blocks are already sorted, disjoint and non-empty.
        return cls.model_construct(blocks=blocks)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(element for block in self.blocks for element in block)

    @property
    def degree(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    def has_initial_support(self) -> bool:
        n = self.degree
        return all(1 <= element <= n for block in self.blocks for element in block)

    def word(self) -> tuple[int, ...]:
        """The word of the composition over the integers, with COMMA_TOKEN between blocks."""
        letters: list[int] = []
        for i, block in enumerate(self.blocks):
            if i:
                letters.append(COMMA_TOKEN)
            letters.extend(block)
        return tuple(letters)

    def sort_key(self) -> tuple:
        return (self.degree, self.word())

    def to_literal(self) -> str:
        if not self.blocks:
            return "0"
        return "|".join(",".join(str(e) for e in block) for block in self.blocks)

    def __str__(self) -> str:
        return self.to_literal()


EMPTY_COMPOSITION = SetComposition.from_canonical(())


class OrderIso(BaseModel):
    """The unique order-preserving bijection between two finite sets of equal size."""

    model_config = ConfigDict(frozen=True)

    source: tuple[int, ...] = Field(..., description="The sorted source set")
    target: tuple[int, ...] = Field(..., description="The sorted target set")

    @field_validator("source", "target", mode="before")
    @classmethod
    def sort_set(cls, value):
        elements = tuple(sorted(value))
        if len(set(elements)) != len(elements):
            raise ValueError("Source and target must be sets.")
        return elements

    @field_validator("target")
    @classmethod
    def cardinalities_must_match(cls, value, info):
        source = info.data.get("source")
        if source is not None and len(source) != len(value):
            raise ValueError(
                f"Source has {len(source)} elements but target has {len(value)}."
            )
        return value

    @classmethod
    def between(cls, source: Iterable[int], target: Iterable[int]) -> "OrderIso":
        try:
            return cls(source=source, target=target)
        except ValidationError as e:
            raise DomainError(f"Invalid order isomorphism: {e}") from e

    @classmethod
    def standardizing(cls, source: Iterable[int]) -> "OrderIso":
        """The isomorphism from `source` onto the initial segment [|source|]."""
        elements = tuple(sorted(source))
        return cls.model_construct(
            source=elements, target=tuple(range(1, len(elements) + 1))
        )

    def mapping(self) -> dict[int, int]:
        return dict(zip(self.source, self.target))

    def __call__(self, element: int) -> int:
        return self.mapping()[element]
