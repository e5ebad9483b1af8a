# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import json

import pytest

from src.cli import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    execute,
    main,
)


def run_json(*argv: str) -> dict:
    code, output = execute(["--json", *argv])
    assert code == EXIT_OK
    return json.loads(output)


def test_symmetrized_product():
    body = run_json("product", "--op", "symmetrized", "1", "1")
    assert [term["key"] for term in body["terms"]] == ["1|2", "2|1"]
    assert body["basis_kind"] == "set_composition"


def test_internal_product():
    body = run_json("product", "--op", "internal", "1,3|2", "1,2|3")
    assert body["terms"] == [{"coeff": "1", "key": "1|3|2"}]


def test_single_term_prints_bare_literal():
    assert execute(["product", "--op", "internal", "1,3|2", "1,2|3"]) == (EXIT_OK, "1|3|2")
    assert execute(["product", "--op", "restricted", "1", "0"]) == (EXIT_OK, "1")
    code, output = execute(["coproduct", "--op", "delta-hat", "0"])
    assert (code, output) == (EXIT_OK, "0 ⊗ 0")
    code, output = execute(["product", "--op", "symmetrized", "1", "1"])
    assert output == "1*[1|2] + 1*[2|1]"


def test_twisted_coproduct():
    body = run_json("coproduct", "--op", "delta", "1,4|7")
    assert len(body["terms"]) == 8
    assert {"coeff": "1", "key": ["1|7", "4"]} in body["terms"]


def test_mr_product_and_coproduct():
    assert len(run_json("product", "--op", "mr", "p:2,1", "p:1")["terms"]) == 3
    assert len(run_json("coproduct", "--op", "mr", "p:2,1")["terms"]) == 3


@pytest.mark.parametrize(
    "literal, composition", [("(***)@1", "1,2"), ("(**)@1", "1"), ("((**)*)@5,2", "1|2")]
)
def test_bijection_to_composition(literal, composition):
    assert execute(["bijection", "--to-comp", literal]) == (EXIT_OK, composition)


def test_bijection_to_tree():
    body = run_json("bijection", "--to-tree", "2,6|3,4|1|5")
    assert body["tree"] == "((*((**)**))(**))@4,3,2,1,1"
    assert body["composition"] == "2,6|3,4|1|5"
    code, output = execute(["bijection", "--to-tree", "0"])
    assert code == EXIT_OK
    assert output.split("\n")[0] == "*"


def test_antipode():
    code, output = execute(["antipode", "1|2"])
    assert (code, output) == (EXIT_OK, "1|2")
    code, _ = execute(["antipode", "--structure", "malvenuto-reutenauer", "1|2"])
    assert code == EXIT_DOMAIN_ERROR
    code, output = execute(["antipode", "--structure", "planar-trees", "((**)*)"])
    assert (code, output) == (EXIT_OK, "((**)*)")


def test_inv():
    body = run_json("inv", "p:2,3,1")
    assert body["terms"] == [{"coeff": "1", "key": "p:3,1,2"}]


def test_generators():
    body = run_json("generators", "2")
    assert body["reduced"] == ["1,2", "2|1"]
    assert body["generators"][0]["terms"] == [
        {"coeff": "-1", "key": "1|2"},
        {"coeff": "1", "key": "1,2"},
    ]
    assert body["all_primitive"]


def test_generators_need_rational_scalars(monkeypatch):
    monkeypatch.setenv("TWDESC_SCALAR_MODE", "integer")
    code, output = execute(["generators", "2"])
    assert (code, output) == (EXIT_DOMAIN_ERROR, "")


def test_enumerate():
    assert execute(["enumerate", "compositions", "--n", "4"]) == (EXIT_OK, "1 1 3 13 75")
    body = run_json("enumerate", "binary-trees", "--n", "3", "--list")
    assert body["counts"] == [1, 1, 2, 5]
    assert len(body["items"]) == 5
    code, _ = execute(["enumerate", "compositions", "--n", "8"])
    assert code == EXIT_DOMAIN_ERROR


def test_render():
    assert execute(["render", "(**)@1"]) == (EXIT_OK, "* *\n\\1/")


@pytest.mark.parametrize("literal", ["1,,2", "1|", "p:1,"])
def test_parse_errors(literal):
    assert execute(["product", "--op", "internal", literal, "1"]) == (EXIT_PARSE_ERROR, "")


@pytest.mark.parametrize(
    "argv",
    [
        ["product", "--op", "internal", "1,1", "1"],
        ["product", "--op", "internal", "1", "1|2"],
        ["product", "--op", "conv", "1", "1"],
        ["render", "p:2,1"],
    ],
)
def test_domain_errors(argv):
    assert execute(argv) == (EXIT_DOMAIN_ERROR, "")


def test_verify():
    code, output = execute(["verify", "bijection", "--n", "3"])
    assert code == EXIT_OK
    assert output.startswith("suite bijection n<=3")
    assert output.endswith("SUCCESS: 3 checks passed")


def test_verify_bound_above_cap():
    code, _ = execute(["verify", "hopf", "--n", "6"])
    assert code == EXIT_DOMAIN_ERROR


def test_determinism():
    body = run_json("verify", "determinism")
    assert body["status"]["indicator"] == "success"
    assert len(body["results"]) == 10


def test_main_prints_output(capsys):
    assert main(["enumerate", "reduced", "--n", "3"]) == EXIT_OK
    assert capsys.readouterr().out == "0 1 2 8\n"


def test_main_rejects_bad_configuration(monkeypatch):
    monkeypatch.setenv("TWDESC_WORKERS", "0")
    assert main(["enumerate", "reduced", "--n", "3"]) == EXIT_DOMAIN_ERROR
