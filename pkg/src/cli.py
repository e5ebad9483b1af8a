# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import argparse
import asyncio
import logging
import sys
from typing import Callable, Optional

from src.combinatorics import (
    concat_disjoint,
    enumerate_permutations,
    enumerate_reduced,
    enumerate_set_compositions,
    internal_product,
)
from src.errors import DomainError, LiteralParseError
from src.hopf import (
    RESTRICTED_COSYM,
    antipode,
    coproduct_delta,
    cosym_coproduct,
    cosym_coproduct_tree,
    get_structure,
    is_primitive,
    primitive_generators,
    restricted_coproduct,
    restricted_coproduct_tree,
    restricted_product,
    symmetrized_product,
)
from src.linear_algebra import (
    LinearCombination,
    TensorCombination,
    as_combination,
    literal_of,
)
from src.literals import (
    parse_increasing_tree,
    parse_literal,
    parse_permutation,
    parse_set_composition,
)
from src.models.dtos import BijectionDto, EnumerationDto, GeneratorsDto
from src.models.general import HopfStructureName
from src.models.set_composition import SetComposition
from src.models.tree import IncreasingTree, PlanarTree
from src.symgroups import (
    concat_perm,
    cosym_coproduct_perm,
    inv,
    mr_coproduct,
    mr_product,
)
from src.trees import (
    enumerate_binary_trees,
    enumerate_increasing_trees,
    enumerate_left_increasing_trees,
    enumerate_trees,
    render_ascii,
    sigma,
    tau,
)
from src.utils import (
    ELEMENT_BOUND_CAP,
    check_bound,
    combination_to_dto,
    load_settings,
    tensor_to_dto,
)
from src.verification import SUITES, run_determinism, run_suite

LOGGING_FORMAT = (
    "%(asctime)s - %(name)s - %(filename)s - %(lineno)d - %(levelname)s - %(message)s"
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3

PRODUCTS: dict[str, tuple[Callable[[str], object], Callable]] = {
    "internal": (parse_set_composition, internal_product),
    "conv": (parse_set_composition, concat_disjoint),
    "restricted": (parse_set_composition, restricted_product),
    "symmetrized": (parse_set_composition, symmetrized_product),
    "concat": (parse_permutation, concat_perm),
    "mr": (parse_permutation, mr_product),
}

COPRODUCTS: dict[str, tuple[Callable[[str], object], Callable]] = {
    "delta": (parse_set_composition, coproduct_delta),
    "delta-bar": (parse_set_composition, restricted_coproduct),
    "delta-hat": (parse_set_composition, cosym_coproduct),
    "delta-bar-tree": (parse_increasing_tree, restricted_coproduct_tree),
    "delta-hat-tree": (parse_increasing_tree, cosym_coproduct_tree),
    "mr": (parse_permutation, mr_coproduct),
    "delta-hat-perm": (parse_permutation, cosym_coproduct_perm),
}

ENUMERATIONS: dict[str, Callable[[int], list]] = {
    "compositions": enumerate_set_compositions,
    "reduced": enumerate_reduced,
    "permutations": enumerate_permutations,
    "trees": enumerate_trees,
    "binary-trees": enumerate_binary_trees,
    "increasing-trees": enumerate_increasing_trees,
    "left-increasing-trees": enumerate_left_increasing_trees,
}

# Commands re-run by the determinism suite.
DETERMINISM_MATRIX = [
    ["--json", "bijection", "--to-tree", "2,6|3,4|1|5"],
    ["bijection", "--to-comp", "(***)@1"],
    ["--json", "product", "--op", "symmetrized", "1", "1"],
    ["--json", "product", "--op", "internal", "1,3|2", "1,2|3"],
    ["--json", "coproduct", "--op", "delta", "1,4|7"],
    ["--json", "coproduct", "--op", "delta-hat", "1,2"],
    ["--json", "generators", "2"],
    ["--json", "enumerate", "compositions", "--n", "3", "--list"],
    ["render", "2,6|3,4|1|5"],
    ["--json", "verify", "bijection", "--n", "3"],
]


def _dump(model) -> str:
    return model.model_dump_json(indent=2)


def cmd_bijection(args) -> tuple[int, str]:
    if args.to_tree is not None:
        P = parse_set_composition(args.to_tree)
        T = tau(P)
    else:
        T = parse_increasing_tree(args.to_comp)
        P = sigma(T.standardized())
    drawing = render_ascii(T)
    if args.json:
        return EXIT_OK, _dump(
            BijectionDto(composition=P.to_literal(), tree=T.to_literal(), drawing=drawing)
        )
    if args.to_tree is not None:
        return EXIT_OK, f"{T.to_literal()}\n{drawing}"
    return EXIT_OK, P.to_literal()


def _to_text(x: LinearCombination) -> str:
    # a single basis element prints as its bare literal
    if len(x) == 1:
        ((key, coeff),) = x.items()
        if coeff == 1:
            literal = literal_of(key)
            return " ⊗ ".join(literal) if isinstance(literal, list) else literal
    return x.to_text()


def _render_combination(x, as_json: bool) -> str:
    if isinstance(x, TensorCombination):
        return _dump(tensor_to_dto(x)) if as_json else _to_text(x)
    x = as_combination(x)
    return _dump(combination_to_dto(x)) if as_json else _to_text(x)


def cmd_product(args) -> tuple[int, str]:
    parse, product = PRODUCTS[args.op]
    return EXIT_OK, _render_combination(
        product(parse(args.left), parse(args.right)), args.json
    )


def cmd_coproduct(args) -> tuple[int, str]:
    parse, coproduct = COPRODUCTS[args.op]
    return EXIT_OK, _render_combination(coproduct(parse(args.operand)), args.json)


def cmd_antipode(args) -> tuple[int, str]:
    H = get_structure(args.structure)
    operand = parse_literal(args.operand)
    if operand.kind != H.basis_kind:
        raise DomainError(f"{args.structure} acts on {H.basis_kind.value} literals.")
    return EXIT_OK, _render_combination(antipode(operand, H), args.json)


def cmd_inv(args) -> tuple[int, str]:
    return EXIT_OK, _render_combination(
        inv(LinearCombination.basis(parse_permutation(args.operand))), args.json
    )


def cmd_generators(args) -> tuple[int, str]:
    settings = load_settings()
    n = check_bound(args.n, settings.element_bound, "Generator degree")
    reduced = enumerate_reduced(n)
    generators = primitive_generators(n, settings.scalar_mode)
    all_primitive = all(is_primitive(RESTRICTED_COSYM, x) for x in generators)
    if not all_primitive:
        logger.warning(f"A generator of degree {n} is not primitive")
    code = EXIT_OK if all_primitive else EXIT_PROPERTY_FAILURE
    if args.json:
        return code, _dump(
            GeneratorsDto(
                n=n,
                reduced=[R.to_literal() for R in reduced],
                generators=[combination_to_dto(x) for x in generators],
                all_primitive=all_primitive,
            )
        )
    lines = [f"e1({R.to_literal()}) = {x.to_text()}" for R, x in zip(reduced, generators)]
    return code, "\n".join(lines)


def cmd_enumerate(args) -> tuple[int, str]:
    n = check_bound(args.n, ELEMENT_BOUND_CAP, "Enumeration degree")
    enumerate_family = ENUMERATIONS[args.family]
    counts = [len(enumerate_family(k)) for k in range(n + 1)]
    items = [x.to_literal() for x in enumerate_family(n)] if args.list else None
    if args.json:
        return EXIT_OK, _dump(EnumerationDto(family=args.family, counts=counts, items=items))
    text = " ".join(str(c) for c in counts)
    if items is not None:
        text += "\n" + "\n".join(items)
    return EXIT_OK, text


def cmd_render(args) -> tuple[int, str]:
    operand = parse_literal(args.operand)
    if isinstance(operand, SetComposition):
        tree = tau(operand)
    elif isinstance(operand, (PlanarTree, IncreasingTree)):
        tree = operand
    else:
        raise DomainError(f"Cannot render {operand.to_literal()}.")
    return EXIT_OK, render_ascii(tree)


async def _run_command_async(argv: list[str]) -> str:
    _, output = await asyncio.to_thread(execute, argv)
    return output


def cmd_verify(args) -> tuple[int, str]:
    settings = load_settings()
    if args.suite == "determinism":
        report = asyncio.run(
            run_determinism(DETERMINISM_MATRIX, _run_command_async, settings)
        )
    else:
        report = asyncio.run(run_suite(args.suite, args.n, settings))
    code = EXIT_OK if report.passed else EXIT_PROPERTY_FAILURE
    if args.json:
        return code, _dump(report)
    lines = [f"suite {report.suite} n<={report.n_max}"]
    lines += [result.to_line() for result in report.results]
    lines.append(f"{report.status.indicator.value.upper()}: {report.status.message}")
    return code, "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twisted-descent",
        description="Set compositions, increasing trees and their Hopf algebras.",
    )
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--debug", action="store_true", default=False)
    subparsers = parser.add_subparsers(dest="command", required=True)

    bijection = subparsers.add_parser("bijection")
    direction = bijection.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-tree", type=str, default=None)
    direction.add_argument("--to-comp", type=str, default=None)
    bijection.set_defaults(handler=cmd_bijection)

    product = subparsers.add_parser("product")
    product.add_argument("--op", choices=sorted(PRODUCTS), required=True)
    product.add_argument("left", type=str)
    product.add_argument("right", type=str)
    product.set_defaults(handler=cmd_product)

    coproduct = subparsers.add_parser("coproduct")
    coproduct.add_argument("--op", choices=sorted(COPRODUCTS), required=True)
    coproduct.add_argument("operand", type=str)
    coproduct.set_defaults(handler=cmd_coproduct)

    antipode_parser = subparsers.add_parser("antipode")
    antipode_parser.add_argument(
        "--structure",
        choices=[name.value for name in HopfStructureName],
        default=HopfStructureName.RESTRICTED_COSYM.value,
    )
    antipode_parser.add_argument("operand", type=str)
    antipode_parser.set_defaults(handler=cmd_antipode)

    inv_parser = subparsers.add_parser("inv")
    inv_parser.add_argument("operand", type=str)
    inv_parser.set_defaults(handler=cmd_inv)

    verify = subparsers.add_parser("verify")
    verify.add_argument("suite", choices=sorted(SUITES) + ["determinism"])
    verify.add_argument("--n", type=int, default=None)
    verify.set_defaults(handler=cmd_verify)

    generators = subparsers.add_parser("generators")
    generators.add_argument("n", type=int)
    generators.set_defaults(handler=cmd_generators)

    enumerate_parser = subparsers.add_parser("enumerate")
    enumerate_parser.add_argument("family", choices=sorted(ENUMERATIONS))
    enumerate_parser.add_argument("--n", type=int, required=True)
    enumerate_parser.add_argument("--list", action="store_true", default=False)
    enumerate_parser.set_defaults(handler=cmd_enumerate)

    render = subparsers.add_parser("render")
    render.add_argument("operand", type=str)
    render.set_defaults(handler=cmd_render)
    return parser


def execute(argv: list[str]) -> tuple[int, str]:
    """Run one command and return its exit code and stdout text."""
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except LiteralParseError as e:
        logger.error(f"Parse error: {e}")
        return EXIT_PARSE_ERROR, ""
    except (DomainError, ValueError) as e:
        logger.error(f"Domain error: {e}")
        return EXIT_DOMAIN_ERROR, ""


def configure_logging(level: str, debug: bool) -> None:
    logging.basicConfig(
        level=logging.getLevelName(level), format=LOGGING_FORMAT, stream=sys.stderr
    )
    if debug:
        loggers = [logging.getLogger(name) for name in logging.root.manager.loggerDict]
        # Set all loggers in the src package to debug
        for package_logger in loggers:
            if package_logger.name.startswith("src"):
                package_logger.setLevel(logging.DEBUG)


def main(argv: Optional[list[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
    except ValueError as e:
        configure_logging("INFO", args.debug)
        logger.error(f"Configuration error: {e}")
        return EXIT_DOMAIN_ERROR
    configure_logging(settings.log_level, args.debug)
    code, output = execute(argv)
    if output:
        print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
