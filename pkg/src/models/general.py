# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

from enum import Enum
from typing import Any, Callable

from pydantic import BaseModel, ConfigDict, Field


class BasisKind(str, Enum):
    SET_COMPOSITION = "set_composition"
    PLANAR_TREE = "planar_tree"
    INCREASING_TREE = "increasing_tree"
    PERMUTATION = "permutation"


class ScalarMode(str, Enum):
    INTEGER = "integer"
    RATIONAL = "rational"


class Ordering(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class HopfStructureName(str, Enum):
    RESTRICTED_COSYM = "restricted-cosym"
    SYMMETRIZED_RESTRICTED = "symmetrized-restricted"
    CONCAT_COSYM = "concat-cosym"
    MALVENUTO_REUTENAUER = "malvenuto-reutenauer"
    PLANAR_TREES = "planar-trees"
    BINARY_TREES = "binary-trees"


class HopfStructure(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: HopfStructureName = Field(..., description="The name of the structure.")
    basis_kind: BasisKind = Field(..., description="The kind of the basis keys.")
    unit: Any = Field(..., description="The basis element of degree 0.")
    product: Callable[[Any, Any], Any] = Field(
        ...,
        description="The product of two basis elements, a basis element or a linear combination.",
    )
    coproduct: Callable[[Any], Any] = Field(
        ..., description="The coproduct of a basis element, a tensor combination."
    )
    basis: Callable[[int], list] = Field(
        ..., description="The basis elements of a given degree, in basis order."
    )
    cocommutative: bool = Field(
        ...,
        description="Boolean True, if the coproduct is expected to be cocommutative, otherwise False.",
    )
