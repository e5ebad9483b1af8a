# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import os
from fractions import Fraction
from pathlib import Path
from typing import Union
import logging

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator
import xxhash

from src.errors import DomainError
from src.linear_algebra import LinearCombination, TensorCombination, literal_of
from src.models.dtos import (
    LinearCombinationDto,
    TensorCombinationDto,
    TensorTermDto,
    TermDto,
)
from src.models.general import ScalarMode

BASE_DIR = Path(__file__).resolve().parent.parent
ENV_PREFIX = "TWDESC_"

# Hard caps for exhaustive checks; beyond these Fubini growth takes over.
PAIRWISE_BOUND_CAP = 5
ELEMENT_BOUND_CAP = 7

logger = logging.getLogger(__name__)


class Settings(BaseModel):
    workers: int = Field(
        description="The number of worker threads for verification suites.", default=4
    )
    pairwise_bound: int = Field(
        description="The default degree bound for pairwise-exhaustive checks.",
        default=4,
    )
    element_bound: int = Field(
        description="The default degree bound for per-element checks.", default=6
    )
    scalar_mode: ScalarMode = Field(
        description="Whether rational coefficients are allowed.",
        default=ScalarMode.RATIONAL,
    )
    log_level: str = Field(description="The logging level name.", default="INFO")

    @field_validator("workers")
    @classmethod
    def workers_must_be_positive(cls, value):
        if value < 1:
            raise ValueError(f"{ENV_PREFIX}WORKERS must be at least 1, got {value}.")
        return value

    @field_validator("pairwise_bound")
    @classmethod
    def pairwise_bound_within_cap(cls, value):
        if not 0 <= value <= PAIRWISE_BOUND_CAP:
            raise ValueError(
                f"{ENV_PREFIX}PAIRWISE_BOUND must be in 0..{PAIRWISE_BOUND_CAP}, got {value}."
            )
        return value

    @field_validator("element_bound")
    @classmethod
    def element_bound_within_cap(cls, value):
        if not 0 <= value <= ELEMENT_BOUND_CAP:
            raise ValueError(
                f"{ENV_PREFIX}ELEMENT_BOUND must be in 0..{ELEMENT_BOUND_CAP}, got {value}."
            )
        return value

    @field_validator("log_level")
    @classmethod
    def log_level_must_exist(cls, value):
        if not isinstance(logging.getLevelName(value.upper()), int):
            raise ValueError(f"{ENV_PREFIX}LOG_LEVEL '{value}' is not a logging level.")
        return value.upper()


def load_env():
    """Load environment variables from the .env file at the repository root, if there is one."""
    env_path = BASE_DIR / ".env"
    if env_path.exists():
        logger.debug(f"Loading environment variables from {env_path}...")
        load_dotenv(env_path, override=False)


def load_settings() -> Settings:
    load_env()
    raw = {
        field: os.getenv(f"{ENV_PREFIX}{field.upper()}")
        for field in Settings.model_fields
    }
    try:
        return Settings(**{k: v for k, v in raw.items() if v is not None})
    except ValidationError as e:
        raise ValueError(
            f"Invalid {ENV_PREFIX}* environment configuration: {e}. "
            "Please check your environment configuration or .env file."
        ) from e


def check_bound(n: int, cap: int, what: str) -> int:
    if n < 0 or n > cap:
        raise DomainError(f"{what} bound must be in 0..{cap}, got {n}.")
    return n


def format_scalar(value: Union[int, Fraction]) -> str:
    return str(Fraction(value))


def combination_to_dto(x: LinearCombination) -> LinearCombinationDto:
    return LinearCombinationDto(
        basis_kind=x.kind if not isinstance(x.kind, tuple) else None,
        terms=[
            TermDto(coeff=format_scalar(coeff), key=str(literal_of(key)))
            for key, coeff in x.items()
        ],
    )


def tensor_to_dto(t: TensorCombination) -> TensorCombinationDto:
    return TensorCombinationDto(
        basis_kind=list(t.kind) if isinstance(t.kind, tuple) else None,
        terms=[
            TensorTermDto(coeff=format_scalar(coeff), key=list(literal_of(key)))
            for key, coeff in t.items()
        ],
    )


def get_output_digest(body: str) -> str:
    return xxhash.xxh64(body).hexdigest()
