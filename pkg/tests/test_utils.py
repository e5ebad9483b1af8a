# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

from fractions import Fraction

import pytest

from src.errors import DomainError
from src.linear_algebra import LinearCombination, TensorCombination
from src.models.general import BasisKind, ScalarMode
from src.models.set_composition import SetComposition
from src.utils import (
    Settings,
    check_bound,
    combination_to_dto,
    format_scalar,
    get_output_digest,
    load_settings,
    tensor_to_dto,
)


@pytest.fixture
def clean_env(monkeypatch):
    for name in ["WORKERS", "PAIRWISE_BOUND", "ELEMENT_BOUND", "SCALAR_MODE", "LOG_LEVEL"]:
        monkeypatch.delenv(f"TWDESC_{name}", raising=False)
    return monkeypatch


def test_default_settings(clean_env):
    settings = load_settings()
    assert settings == Settings()
    assert settings.scalar_mode == ScalarMode.RATIONAL


def test_settings_from_environment(clean_env):
    clean_env.setenv("TWDESC_WORKERS", "8")
    clean_env.setenv("TWDESC_SCALAR_MODE", "integer")
    clean_env.setenv("TWDESC_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.workers == 8
    assert settings.scalar_mode == ScalarMode.INTEGER
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize(
    "name, value",
    [
        ("WORKERS", "0"),
        ("PAIRWISE_BOUND", "6"),
        ("ELEMENT_BOUND", "8"),
        ("SCALAR_MODE", "real"),
        ("LOG_LEVEL", "LOUD"),
    ],
)
def test_invalid_settings(clean_env, name, value):
    clean_env.setenv(f"TWDESC_{name}", value)
    with pytest.raises(ValueError):
        load_settings()


def test_check_bound():
    assert check_bound(3, 5, "Test") == 3
    with pytest.raises(DomainError):
        check_bound(6, 5, "Test")
    with pytest.raises(DomainError):
        check_bound(-1, 5, "Test")


def test_format_scalar():
    assert format_scalar(-1) == "-1"
    assert format_scalar(Fraction(-1, 2)) == "-1/2"


def test_combination_to_dto():
    x = LinearCombination(
        [(SetComposition.of([[1, 2]]), 1), (SetComposition.of([[1], [2]]), -1)]
    )
    dto = combination_to_dto(x)
    assert dto.basis_kind == BasisKind.SET_COMPOSITION
    assert [(t.coeff, t.key) for t in dto.terms] == [("-1", "1|2"), ("1", "1,2")]


def test_tensor_to_dto():
    one = SetComposition.of([[1]])
    dto = tensor_to_dto(TensorCombination([((one, one), 2)]))
    assert dto.basis_kind == [BasisKind.SET_COMPOSITION, BasisKind.SET_COMPOSITION]
    assert dto.terms[0].key == ["1", "1"]
    assert dto.terms[0].coeff == "2"


def test_digest_is_stable():
    assert get_output_digest("abc") == get_output_digest("abc")
    assert get_output_digest("abc") != get_output_digest("abd")
    assert len(get_output_digest("")) == 16
