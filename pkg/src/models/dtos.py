# SPDX-FileCopyrightText: 2025 2025 wahl.chat
#
# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import enum
from pydantic import BaseModel, Field
from typing import List, Optional

from src.models.general import BasisKind


class TermDto(BaseModel):
    coeff: str = Field(..., description="The exact coefficient, written as p or p/q")
    key: str = Field(..., description="The text literal of the basis element")


class TensorTermDto(BaseModel):
    coeff: str = Field(..., description="The exact coefficient, written as p or p/q")
    key: List[str] = Field(
        ..., description="The text literals of the tensor factors, left to right"
    )


class LinearCombinationDto(BaseModel):
    basis_kind: Optional[BasisKind] = Field(
        ..., description="The basis kind of all keys, None for an untyped zero"
    )
    terms: List[TermDto] = Field(..., description="The terms in basis order")


class TensorCombinationDto(BaseModel):
    basis_kind: Optional[List[BasisKind]] = Field(
        ..., description="The basis kind of every tensor factor"
    )
    terms: List[TensorTermDto] = Field(..., description="The terms in basis order")


class StatusIndicator(str, enum.Enum):
    ERROR = "error"
    SUCCESS = "success"


class Status(BaseModel):
    indicator: StatusIndicator = Field(..., description="The status of the event")
    message: str = Field(..., description="The message")


class AxiomResultDto(BaseModel):
    axiom: str = Field(..., description="The name of the checked property")
    structure: Optional[str] = Field(
        description="The structure the property was checked on, if any", default=None
    )
    n_max: int = Field(..., description="The degree bound of the exhaustive check")
    passed: bool = Field(..., description="Whether the property held everywhere")
    checked: int = Field(..., description="The number of checked instances")
    counterexample: Optional[str] = Field(
        description="The first failing instance in literal form", default=None
    )
    note: Optional[str] = Field(
        description="Additional information, e.g. a witness", default=None
    )

    def to_line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        scope = f"{self.structure} " if self.structure else ""
        line = f"{verdict} {scope}{self.axiom} (n<={self.n_max}, {self.checked} checked)"
        if self.counterexample is not None:
            line += f" counterexample: {self.counterexample}"
        if self.note is not None:
            line += f" [{self.note}]"
        return line


class VerificationReportDto(BaseModel):
    suite: str = Field(..., description="The name of the verification suite")
    n_max: int = Field(..., description="The degree bound the suite was run with")
    results: List[AxiomResultDto] = Field(..., description="The results in task order")
    status: Status = Field(..., description="The overall status of the suite")
    digest: str = Field(..., description="xxh64 digest of the text report")

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)


class BijectionDto(BaseModel):
    composition: str = Field(..., description="The set composition literal")
    tree: str = Field(..., description="The increasing tree literal")
    drawing: str = Field(..., description="ASCII drawing of the tree")


class GeneratorsDto(BaseModel):
    n: int = Field(..., description="The degree of the generators")
    reduced: List[str] = Field(
        ..., description="The reduced set compositions, in basis order"
    )
    generators: List[LinearCombinationDto] = Field(
        ..., description="The image of every reduced composition under e¹"
    )
    all_primitive: bool = Field(
        ..., description="Whether every generator passed the primitivity check"
    )


class EnumerationDto(BaseModel):
    family: str = Field(..., description="The enumerated family")
    counts: List[int] = Field(..., description="The count for every degree 0..n")
    items: Optional[List[str]] = Field(
        description="The literals of degree n, if a listing was requested", default=None
    )
