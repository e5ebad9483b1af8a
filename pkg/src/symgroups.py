# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import itertools
import logging
from typing import Callable

from src.combinatorics import (
    enumerate_permutations,
    perm_inverse,
    perm_restrict,
    perm_restrict_std,
    perm_to_setcomp,
    setcomp_to_perm,
    subsets,
)
from src.hopf import (
    cosym_coproduct,
    register_structure,
    restricted_coproduct,
    restricted_product,
    run_check,
    symmetrized_product,
)
from src.linear_algebra import LinearCombination, TensorCombination, lc_apply
from src.models.dtos import AxiomResultDto
from src.models.general import BasisKind, HopfStructure, HopfStructureName
from src.models.permutation import Permutation
from src.models.tree import PlanarTree
from src.trees import (
    binary_tree_to_perm,
    branching_levels,
    enumerate_binary_trees,
    enumerate_trees,
    fgt,
    graft_increasing,
    graft_left,
    inc,
    is_binary,
    is_left_increasing,
    tau,
)

logger = logging.getLogger(__name__)

EMPTY_PERMUTATION = Permutation.identity(0)


def concat_perm(alpha: Permutation, beta: Permutation) -> Permutation:
    """alpha × beta: the word of alpha followed by the word of beta shifted by |alpha|."""
    n = alpha.degree
    return Permutation.from_canonical(alpha.word + tuple(n + b for b in beta.word))


def shuffle_permutations(n: int, m: int) -> list[Permutation]:
    """Permutations of [n+m] increasing on 1..n and on n+1..n+m."""
    ground = range(1, n + m + 1)
    shuffles = []
    for chosen in itertools.combinations(ground, n):
        rest = tuple(v for v in ground if v not in chosen)
        shuffles.append(Permutation.from_canonical(tuple(chosen) + rest))
    return shuffles


def q_shuffle_sum(n: int, m: int) -> LinearCombination:
    return LinearCombination(
        ((pi, 1) for pi in shuffle_permutations(n, m)), kind=BasisKind.PERMUTATION
    )


def mr_product(alpha: Permutation, beta: Permutation) -> LinearCombination:
    """Sum of pi ∘ (alpha × beta) over the shuffles pi of type (|alpha|, |beta|)."""
    block = concat_perm(alpha, beta)
    return LinearCombination(
        ((pi.compose(block), 1) for pi in shuffle_permutations(alpha.degree, beta.degree)),
        kind=BasisKind.PERMUTATION,
    )


def mr_coproduct(alpha: Permutation) -> TensorCombination:
    """
    Split by values: the subsequence of values <= i, already a word on [i], and
    the standardized subsequence of the larger values.
    """
    n = alpha.degree
    result = TensorCombination()
    for i in range(n + 1):
        low = Permutation.from_canonical(perm_restrict(alpha, frozenset(range(1, i + 1))))
        high = perm_restrict_std(alpha, frozenset(range(i + 1, n + 1)))
        result.add_terms([((low, high), 1)])
    return result


def cosym_coproduct_perm(alpha: Permutation) -> TensorCombination:
    values = frozenset(range(1, alpha.degree + 1))
    result = TensorCombination()
    for S in subsets(values):
        result.add_terms(
            [((perm_restrict_std(alpha, S), perm_restrict_std(alpha, values - S)), 1)]
        )
    return result


def inv(x: LinearCombination) -> LinearCombination:
    """The inversion involution, extended linearly."""
    return lc_apply(lambda alpha: LinearCombination.basis(perm_inverse(alpha)), x)


CONCAT_COSYM = register_structure(
    HopfStructure(
        name=HopfStructureName.CONCAT_COSYM,
        basis_kind=BasisKind.PERMUTATION,
        unit=EMPTY_PERMUTATION,
        product=concat_perm,
        coproduct=cosym_coproduct_perm,
        basis=enumerate_permutations,
        cocommutative=True,
    )
)

MALVENUTO_REUTENAUER = register_structure(
    HopfStructure(
        name=HopfStructureName.MALVENUTO_REUTENAUER,
        basis_kind=BasisKind.PERMUTATION,
        unit=EMPTY_PERMUTATION,
        product=mr_product,
        coproduct=mr_coproduct,
        basis=enumerate_permutations,
        cocommutative=False,
    )
)


def embed(x: LinearCombination) -> LinearCombination:
    return lc_apply(lambda alpha: LinearCombination.basis(perm_to_setcomp(alpha)), x)


def embed_tensor(t: TensorCombination) -> TensorCombination:
    return TensorCombination(
        ((perm_to_setcomp(a), perm_to_setcomp(b)), c) for (a, b), c in t.terms.items()
    )


def _perms_upto(n_max: int):
    return ((alpha,) for n in range(n_max + 1) for alpha in enumerate_permutations(n))


def _perm_pairs_upto(n_max: int):
    return (
        (alpha, beta)
        for p, q in itertools.product(range(n_max + 1), repeat=2)
        if p + q <= n_max
        for alpha in enumerate_permutations(p)
        for beta in enumerate_permutations(q)
    )


def _trees_upto(n_max: int):
    return ((T,) for n in range(n_max + 1) for T in enumerate_trees(n))


def _tree_pairs_upto(n_max: int):
    return (
        (T1, T2)
        for p, q in itertools.product(range(n_max + 1), repeat=2)
        if p + q <= n_max
        for T1 in enumerate_trees(p)
        for T2 in enumerate_trees(q)
    )


def embedding_checks(n_max: int) -> list[tuple[str, Callable[[], AxiomResultDto]]]:
    """
    The permutation structures embed into the composition structures, and the
    left increasing trees form the image of inc.
    """

    def concat_intertwines(alpha, beta) -> bool:
        return perm_to_setcomp(concat_perm(alpha, beta)) == restricted_product(
            perm_to_setcomp(alpha), perm_to_setcomp(beta)
        )

    def mr_product_intertwines(alpha, beta) -> bool:
        return embed(mr_product(alpha, beta)) == symmetrized_product(
            perm_to_setcomp(alpha), perm_to_setcomp(beta)
        )

    def mr_coproduct_intertwines(alpha) -> bool:
        return embed_tensor(mr_coproduct(alpha)) == restricted_coproduct(
            perm_to_setcomp(alpha)
        )

    def cosym_intertwines(alpha) -> bool:
        return embed_tensor(cosym_coproduct_perm(alpha)) == cosym_coproduct(
            perm_to_setcomp(alpha)
        )

    def roundtrip(alpha) -> bool:
        P = perm_to_setcomp(alpha)
        levels = branching_levels(tau(P))
        # one branching per level
        return setcomp_to_perm(P) == alpha and sorted(levels) == list(
            range(1, alpha.degree + 1)
        )

    def involution(alpha) -> bool:
        x = LinearCombination.basis(alpha)
        return inv(inv(x)) == x

    def fgt_inc(T) -> bool:
        return fgt(inc(T)) == T and is_left_increasing(inc(T))

    def inc_multiplicative(T1, T2) -> bool:
        return inc(graft_left(T1, T2)) == graft_increasing(inc(T1), inc(T2))

    def binary_correspondence(T: PlanarTree) -> bool:
        alpha = binary_tree_to_perm(T)
        image = tau(perm_to_setcomp(alpha))
        return image == inc(T) and is_binary(image)

    def binary_injective() -> AxiomResultDto:
        checked = 0
        for n in range(n_max + 1):
            trees = enumerate_binary_trees(n)
            checked += len(trees)
            images = {binary_tree_to_perm(T) for T in trees}
            if len(images) != len(trees):
                return AxiomResultDto(
                    axiom="binary trees to permutations injective",
                    n_max=n_max,
                    passed=False,
                    checked=checked,
                    counterexample=f"degree {n}",
                )
        return AxiomResultDto(
            axiom="binary trees to permutations injective",
            n_max=n_max,
            passed=True,
            checked=checked,
        )

    def binary_pairs():
        return ((T,) for n in range(n_max + 1) for T in enumerate_binary_trees(n))

    return [
        (
            "concatenation embeds",
            lambda: run_check(
                "concatenation embeds", _perm_pairs_upto(n_max), concat_intertwines, n_max
            ),
        ),
        (
            "shuffle product embeds",
            lambda: run_check(
                "shuffle product embeds",
                _perm_pairs_upto(n_max),
                mr_product_intertwines,
                n_max,
            ),
        ),
        (
            "value-split coproduct embeds",
            lambda: run_check(
                "value-split coproduct embeds",
                _perms_upto(n_max),
                mr_coproduct_intertwines,
                n_max,
            ),
        ),
        (
            "cosymmetrized coproduct embeds",
            lambda: run_check(
                "cosymmetrized coproduct embeds",
                _perms_upto(n_max),
                cosym_intertwines,
                n_max,
            ),
        ),
        (
            "permutations are one branching per level",
            lambda: run_check(
                "permutations are one branching per level",
                _perms_upto(n_max),
                roundtrip,
                n_max,
            ),
        ),
        (
            "inv is an involution",
            lambda: run_check(
                "inv is an involution", _perms_upto(n_max), involution, n_max
            ),
        ),
        (
            "fgt after inc is identity",
            lambda: run_check("fgt after inc is identity", _trees_upto(n_max), fgt_inc, n_max),
        ),
        (
            "inc is multiplicative",
            lambda: run_check(
                "inc is multiplicative", _tree_pairs_upto(n_max), inc_multiplicative, n_max
            ),
        ),
        (
            "binary trees match permutations",
            lambda: run_check(
                "binary trees match permutations",
                binary_pairs(),
                binary_correspondence,
                n_max,
            ),
        ),
        ("binary trees to permutations injective", binary_injective),
    ]
