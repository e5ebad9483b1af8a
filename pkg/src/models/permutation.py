# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

from typing import ClassVar, Iterable

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.errors import DomainError
from src.models.general import BasisKind


class Permutation(BaseModel):
    """
    A permutation of [n] in one-line notation (sigma(1), ..., sigma(n)).
    """

    model_config = ConfigDict(frozen=True)

    kind: ClassVar[BasisKind] = BasisKind.PERMUTATION

    word: tuple[int, ...] = Field(default=(), description="The one-line word")

    @field_validator("word")
    @classmethod
    def word_must_be_rearrangement(cls, value):
        if sorted(value) != list(range(1, len(value) + 1)):
            raise ValueError(f"{value} is not a rearrangement of 1..{len(value)}.")
        return value

    @classmethod
    def of(cls, word: Iterable[int]) -> "Permutation":
        try:
            return cls(word=tuple(word))
        except ValidationError as e:
            raise DomainError(f"Invalid permutation: {e}") from e

    @classmethod
    def from_canonical(cls, word: tuple[int, ...]) -> "Permutation":
        return cls.model_construct(word=word)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls.model_construct(word=tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(i) = self(other(i))."""
        if self.degree != other.degree:
            raise DomainError(
                f"Cannot compose permutations of degrees {self.degree} and {other.degree}."
            )
        return Permutation.from_canonical(tuple(self.word[j - 1] for j in other.word))

    def sort_key(self) -> tuple:
        return (self.degree, self.word)

    def to_literal(self) -> str:
        return "p:" + ",".join(str(i) for i in self.word)

    def __str__(self) -> str:
        return self.to_literal()
