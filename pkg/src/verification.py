# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import asyncio
import itertools
import logging
from typing import Awaitable, Callable, Optional

from src.combinatorics import (
    concat_disjoint,
    enumerate_reduced,
    enumerate_set_compositions,
    internal_product,
    order_ll,
)
from src.errors import DomainError
from src.hopf import (
    BINARY_TREES,
    PLANAR_TREES,
    RESTRICTED_COSYM,
    SYMMETRIZED_RESTRICTED,
    bialgebra_checks,
    check_cocommutativity,
    check_exp_log,
    check_factorization,
    check_generating_series,
    check_generators_primitive,
    check_triangularity_all,
    check_unitriangular_basis,
    run_check,
    tree_checks,
    twisted_checks,
)
from src.models.dtos import AxiomResultDto, Status, StatusIndicator, VerificationReportDto
from src.models.general import Ordering
from src.models.set_composition import SetComposition
from src.symgroups import CONCAT_COSYM, MALVENUTO_REUTENAUER, embedding_checks
from src.trees import (
    branching_levels,
    enumerate_binary_trees,
    enumerate_increasing_trees,
    enumerate_left_increasing_trees,
    enumerate_trees,
    is_left_increasing,
    labels_share_path,
    natural_labels,
    sigma,
    tau,
)
from src.utils import ELEMENT_BOUND_CAP, PAIRWISE_BOUND_CAP, Settings, get_output_digest

logger = logging.getLogger(__name__)

Check = tuple[str, Callable[[], AxiomResultDto]]

# Known sequences the enumerations are compared against.
FUBINI_NUMBERS = [1, 1, 3, 13, 75, 541, 4683, 47293]
PLANAR_TREE_COUNTS = [1, 1, 3, 11, 45, 197, 903, 4279]
CATALAN_NUMBERS = [1, 1, 2, 5, 14, 42, 132, 429]
FACTORIALS = [1, 1, 2, 6, 24, 120, 720, 5040]
REDUCED_COUNTS = [0, 1, 2, 8, 48, 368, 3376, 35824]

FREENESS_BOUND_CAP = 6


def bijection_checks(n_max: int) -> list[Check]:
    def compositions():
        return ((P,) for n in range(n_max + 1) for P in enumerate_set_compositions(n))

    def increasing_trees():
        return ((T,) for n in range(n_max + 1) for T in enumerate_increasing_trees(n))

    def shared_paths_agree(T) -> bool:
        branchings = natural_labels(T.shape)
        for left, right in itertools.combinations(branchings, 2):
            structural = (
                left.vertex[: len(right.vertex)] == right.vertex
                or right.vertex[: len(left.vertex)] == left.vertex
            )
            if structural != labels_share_path(T, left.natural_label, right.natural_label):
                return False
        return True

    return [
        (
            "sigma after tau is identity",
            lambda: run_check(
                "sigma after tau is identity",
                compositions(),
                lambda P: sigma(tau(P)) == P,
                n_max,
            ),
        ),
        (
            "tau after sigma is identity",
            lambda: run_check(
                "tau after sigma is identity",
                increasing_trees(),
                lambda T: tau(sigma(T)) == T,
                n_max,
            ),
        ),
        (
            "common path from labels",
            lambda: run_check(
                "common path from labels", increasing_trees(), shared_paths_agree, n_max
            ),
        ),
    ]


def _count_check(axiom: str, counts: Callable[[int], int], expected: list[int], n_max: int) -> Check:
    def check() -> AxiomResultDto:
        actual = [counts(n) for n in range(n_max + 1)]
        passed = actual == expected[: n_max + 1]
        if not passed:
            logger.warning(f"{axiom}: got {actual}, expected {expected[: n_max + 1]}")
        return AxiomResultDto(
            axiom=axiom,
            n_max=n_max,
            passed=passed,
            checked=n_max + 1,
            counterexample=None if passed else ",".join(str(c) for c in actual),
            note=",".join(str(c) for c in actual),
        )

    return axiom, check


def _one_branching_per_level(T) -> bool:
    return sorted(branching_levels(T)) == list(range(1, T.branching_count + 1))


def count_checks(n_max: int) -> list[Check]:
    # planar trees are enumerated shape by shape, which is the slow part above 5
    tree_bound = min(n_max, 5)
    return [
        _count_check(
            "set compositions",
            lambda n: len(enumerate_set_compositions(n)),
            FUBINI_NUMBERS,
            n_max,
        ),
        _count_check(
            "increasing trees",
            lambda n: len(enumerate_increasing_trees(n)),
            FUBINI_NUMBERS,
            n_max,
        ),
        _count_check(
            "increasing trees with one branching per level",
            lambda n: sum(
                1 for T in enumerate_increasing_trees(n) if _one_branching_per_level(T)
            ),
            FACTORIALS,
            tree_bound,
        ),
        _count_check(
            "left increasing trees with one branching per level",
            lambda n: sum(
                1
                for T in enumerate_left_increasing_trees(n)
                if _one_branching_per_level(T)
            ),
            CATALAN_NUMBERS,
            tree_bound,
        ),
        _count_check(
            "planar trees", lambda n: len(enumerate_trees(n)), PLANAR_TREE_COUNTS, tree_bound
        ),
        _count_check(
            "binary trees",
            lambda n: len(enumerate_binary_trees(n)),
            CATALAN_NUMBERS,
            tree_bound,
        ),
        _count_check(
            "left increasing trees",
            lambda n: sum(
                1 for T in enumerate_left_increasing_trees(n) if is_left_increasing(T)
            ),
            PLANAR_TREE_COUNTS,
            tree_bound,
        ),
        _count_check(
            "left increasing trees among increasing trees",
            lambda n: sum(
                1 for P in enumerate_set_compositions(n) if is_left_increasing(tau(P))
            ),
            PLANAR_TREE_COUNTS,
            tree_bound,
        ),
        _count_check(
            "reduced compositions",
            lambda n: len(enumerate_reduced(n)),
            REDUCED_COUNTS,
            min(n_max, FREENESS_BOUND_CAP),
        ),
    ]


def hopf_checks(n_max: int) -> list[Check]:
    checks = bialgebra_checks(RESTRICTED_COSYM, n_max) + bialgebra_checks(
        SYMMETRIZED_RESTRICTED, n_max
    )
    cocommutativity_bound = min(n_max + 1, PAIRWISE_BOUND_CAP)
    checks.append(
        (
            "cocommutativity beyond the pairwise bound",
            lambda: check_cocommutativity(RESTRICTED_COSYM, cocommutativity_bound),
        )
    )
    return checks


def internal_product_checks(n_max: int) -> list[Check]:
    def compositions():
        return ((P,) for n in range(n_max + 1) for P in enumerate_set_compositions(n))

    def triples():
        for n in range(n_max + 1):
            level = enumerate_set_compositions(n)
            yield from itertools.product(level, repeat=3)

    def pairs():
        for n in range(n_max + 1):
            yield from itertools.product(enumerate_set_compositions(n), repeat=2)

    def is_associative(P, Q, R) -> bool:
        return internal_product(internal_product(P, Q), R) == internal_product(
            P, internal_product(Q, R)
        )

    def has_unit(P) -> bool:
        if not P.blocks:
            return internal_product(P, P) == P
        one = SetComposition.from_canonical((tuple(sorted(P.support)),))
        return internal_product(one, P) == P == internal_product(P, one)

    def is_left_regular(P, Q) -> bool:
        PQ = internal_product(P, Q)
        return internal_product(PQ, P) == PQ

    def cuts_reassemble(P) -> bool:
        k = P.length
        for i in range(k + 1):
            for j in range(i, k + 1):
                A, B, C = (
                    SetComposition.from_canonical(P.blocks[start:end])
                    for start, end in ((0, i), (i, j), (j, k))
                )
                left = concat_disjoint(concat_disjoint(A, B), C)
                if left != P or concat_disjoint(A, concat_disjoint(B, C)) != left:
                    return False
        return True

    def order_is_total(P, Q) -> bool:
        forward, backward = order_ll(P, Q), order_ll(Q, P)
        if P == Q:
            return forward == backward == Ordering.EQUAL
        return {forward, backward} == {Ordering.LESS, Ordering.GREATER}

    def all_pairs():
        level = [P for n in range(n_max + 1) for P in enumerate_set_compositions(n)]
        return itertools.product(level, repeat=2)

    return [
        (
            "internal product is associative",
            lambda: run_check("internal product is associative", triples(), is_associative, n_max),
        ),
        (
            "one block is the internal unit",
            lambda: run_check("one block is the internal unit", compositions(), has_unit, n_max),
        ),
        (
            "internal product is idempotent",
            lambda: run_check(
                "internal product is idempotent",
                compositions(),
                lambda P: internal_product(P, P) == P,
                n_max,
            ),
        ),
        (
            "internal product is left regular",
            lambda: run_check("internal product is left regular", pairs(), is_left_regular, n_max),
        ),
        (
            "convolution product is associative",
            lambda: run_check(
                "convolution product is associative", compositions(), cuts_reassemble, n_max
            ),
        ),
        (
            "basis order is total",
            lambda: run_check("basis order is total", all_pairs(), order_is_total, n_max),
        ),
    ]


def freeness_checks(n_max: int) -> list[Check]:
    return [
        ("reduced factorization", lambda: check_factorization(n_max)),
        ("generating series", lambda: check_generating_series(n_max)),
        ("unitriangular basis change", lambda: check_unitriangular_basis(min(n_max, 4))),
        (
            "triangularity",
            lambda: check_triangularity_all(min(n_max, PAIRWISE_BOUND_CAP)),
        ),
    ]


def generator_checks(n_max: int) -> list[Check]:
    return [
        ("primitive generators", lambda: check_generators_primitive(n_max)),
        ("exp of log is identity", lambda: check_exp_log(n_max)),
    ]


def embedding_suite_checks(n_max: int) -> list[Check]:
    return (
        embedding_checks(n_max)
        + tree_checks(n_max)
        + bialgebra_checks(CONCAT_COSYM, min(n_max, 4))
        + bialgebra_checks(MALVENUTO_REUTENAUER, min(n_max, 4))
        + bialgebra_checks(PLANAR_TREES, min(n_max, 4))
        + bialgebra_checks(BINARY_TREES, min(n_max, 4))
    )


# suite name -> (check builder, hard cap on n)
SUITES: dict[str, tuple[Callable[[int], list[Check]], int]] = {
    "bijection": (bijection_checks, ELEMENT_BOUND_CAP),
    "counts": (count_checks, ELEMENT_BOUND_CAP),
    "hopf": (hopf_checks, PAIRWISE_BOUND_CAP),
    "twisted": (twisted_checks, PAIRWISE_BOUND_CAP),
    "internal": (internal_product_checks, 4),
    "freeness": (freeness_checks, FREENESS_BOUND_CAP),
    "generators": (generator_checks, 5),
    "embeddings": (embedding_suite_checks, PAIRWISE_BOUND_CAP),
}


async def _run_in_worker(semaphore: asyncio.Semaphore, name: str, check) -> AxiomResultDto:
    async with semaphore:
        logger.debug(f"Running check {name}")
        return await asyncio.to_thread(check)


def build_report(suite: str, n_max: int, results: list[AxiomResultDto]) -> VerificationReportDto:
    body = "\n".join(result.to_line() for result in results)
    passed = all(result.passed for result in results)
    failed = sum(1 for result in results if not result.passed)
    return VerificationReportDto(
        suite=suite,
        n_max=n_max,
        results=results,
        status=Status(
            indicator=StatusIndicator.SUCCESS if passed else StatusIndicator.ERROR,
            message=f"{len(results)} checks passed"
            if passed
            else f"{failed} of {len(results)} checks failed",
        ),
        digest=get_output_digest(body),
    )


async def run_checks(
    suite: str, n_max: int, checks: list[Check], settings: Settings
) -> VerificationReportDto:
    semaphore = asyncio.Semaphore(settings.workers)
    # gather keeps task order, so the report does not depend on scheduling
    results = await asyncio.gather(
        *(_run_in_worker(semaphore, name, check) for name, check in checks)
    )
    report = build_report(suite, n_max, list(results))
    logger.info(f"Suite {suite} (n<={n_max}): {report.status.message}")
    return report


async def run_suite(
    suite: str, n_max: Optional[int], settings: Settings
) -> VerificationReportDto:
    if suite not in SUITES:
        raise DomainError(
            f"Unknown suite '{suite}', expected one of {', '.join(SUITES)} or determinism."
        )
    builder, cap = SUITES[suite]
    if n_max is None:
        n_max = min(
            settings.pairwise_bound if cap <= PAIRWISE_BOUND_CAP else settings.element_bound,
            cap,
        )
    if n_max < 0 or n_max > cap:
        raise DomainError(f"Suite {suite} supports n in 0..{cap}, got {n_max}.")
    return await run_checks(suite, n_max, builder(n_max), settings)


async def run_determinism(
    commands: list[list[str]],
    runner: Callable[[list[str]], Awaitable[str]],
    settings: Settings,
) -> VerificationReportDto:
    """Run every command twice and compare the digests of the two outputs."""

    def compare(argv: list[str], first: str, second: str) -> AxiomResultDto:
        same = get_output_digest(first) == get_output_digest(second)
        return AxiomResultDto(
            axiom="reproducible output",
            structure=" ".join(argv),
            n_max=0,
            passed=same,
            checked=2,
            counterexample=None if same else get_output_digest(second),
            note=get_output_digest(first),
        )

    results = []
    for argv in commands:
        first = await runner(argv)
        second = await runner(argv)
        results.append(compare(argv, first, second))
    report = build_report("determinism", 0, results)
    logger.info(f"Suite determinism: {report.status.message}")
    return report
