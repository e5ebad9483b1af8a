# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import itertools
import logging
from functools import lru_cache
from typing import AbstractSet, Iterable

from src.errors import DomainError
from src.models.general import Ordering
from src.models.permutation import Permutation
from src.models.set_composition import EMPTY_COMPOSITION, OrderIso, SetComposition

logger = logging.getLogger(__name__)


def _blocks_from_surjection(values: tuple[int, ...], k: int) -> tuple:
    blocks: list[list[int]] = [[] for _ in range(k)]
    for element, block_index in enumerate(values, 1):
        blocks[block_index].append(element)
    return tuple(tuple(block) for block in blocks)


@lru_cache(maxsize=None)
def _set_compositions(n: int) -> tuple[SetComposition, ...]:
    if n == 0:
        return (EMPTY_COMPOSITION,)
    compositions = []
    for k in range(1, n + 1):
        for values in itertools.product(range(k), repeat=n):
            # keep surjections only, each composition is hit exactly once
            if len(set(values)) != k:
                continue
            compositions.append(
                SetComposition.from_canonical(_blocks_from_surjection(values, k))
            )
    compositions.sort(key=SetComposition.sort_key)
    logger.debug(f"Enumerated {len(compositions)} set compositions of [{n}]")
    return tuple(compositions)


def enumerate_set_compositions(n: int) -> list[SetComposition]:
    """All set compositions of [n], sorted by the order <<."""
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}.")
    return list(_set_compositions(n))


@lru_cache(maxsize=None)
def _permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(
        Permutation.from_canonical(word)
        for word in itertools.permutations(range(1, n + 1))
    )


def enumerate_permutations(n: int) -> list[Permutation]:
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}.")
    return list(_permutations(n))


def restrict(P: SetComposition, A: AbstractSet[int]) -> SetComposition:
    """(P_1 ∩ A, ..., P_k ∩ A) with empty blocks deleted; no relabelling."""
    if not set(A) <= P.support:
        raise DomainError(
            f"Cannot restrict {P} to {sorted(A)}: not a subset of the support."
        )
    blocks = tuple(
        restricted
        for restricted in (tuple(e for e in block if e in A) for block in P.blocks)
        if restricted
    )
    return SetComposition.from_canonical(blocks)


def relabel(P: SetComposition, iso: OrderIso) -> SetComposition:
    if P.support != frozenset(iso.source):
        raise DomainError(
            f"Support of {P} does not match the source {list(iso.source)} of the isomorphism."
        )
    mapping = iso.mapping()
    # order-preserving maps keep blocks sorted
    return SetComposition.from_canonical(
        tuple(tuple(mapping[e] for e in block) for block in P.blocks)
    )


def standardize(P: SetComposition) -> SetComposition:
    return relabel(P, OrderIso.standardizing(P.support))


def restrict_std(P: SetComposition, A: AbstractSet[int]) -> SetComposition:
    """P|_A: restriction to A followed by standardization."""
    return standardize(restrict(P, A))


def order_ll(P: SetComposition, Q: SetComposition) -> Ordering:
    key_p, key_q = P.sort_key(), Q.sort_key()
    if key_p < key_q:
        return Ordering.LESS
    if key_p > key_q:
        return Ordering.GREATER
    return Ordering.EQUAL


def require_initial_support(P: SetComposition, operation: str) -> None:
    if not P.has_initial_support():
        raise DomainError(
            f"{operation} needs a composition of an initial segment [n], got {P}."
        )


def _prefix_cuts(P: SetComposition) -> list[int]:
    """Positions a < k such that the first a blocks cover exactly [m]."""
    cuts = []
    size, largest = 0, 0
    for a, block in enumerate(P.blocks[:-1], 1):
        size += len(block)
        largest = max(largest, block[-1])
        if largest == size:
            cuts.append(a)
    return cuts


def is_reduced(P: SetComposition) -> bool:
    """
    True iff no proper prefix of blocks covers an initial segment [m].
    The empty composition is the unit of the restricted product, not a
    generator, and is reported as not reduced.
    """
    require_initial_support(P, "is_reduced")
    if not P.blocks:
        return False
    return not _prefix_cuts(P)


def factor_reduced(P: SetComposition) -> list[SetComposition]:
    """The finest factorization of P into reduced compositions under the restricted product."""
    require_initial_support(P, "factor_reduced")
    if not P.blocks:
        return []
    bounds = [0] + _prefix_cuts(P) + [P.length]
    return [
        standardize(SetComposition.from_canonical(P.blocks[start:end]))
        for start, end in zip(bounds, bounds[1:])
    ]


def enumerate_reduced(n: int) -> list[SetComposition]:
    return [P for P in enumerate_set_compositions(n) if is_reduced(P)]


def internal_product(P: SetComposition, Q: SetComposition) -> SetComposition:
    """The Tits product: blocks P_i ∩ Q_j in lexicographic (i, j) order, empties deleted."""
    if P.support != Q.support:
        raise DomainError(f"Internal product needs equal supports, got {P} and {Q}.")
    blocks = []
    for p_block in P.blocks:
        p_set = set(p_block)
        for q_block in Q.blocks:
            meet = tuple(e for e in q_block if e in p_set)
            if meet:
                blocks.append(meet)
    return SetComposition.from_canonical(tuple(blocks))


def concat_disjoint(P: SetComposition, Q: SetComposition) -> SetComposition:
    if P.support & Q.support:
        raise DomainError(
            f"Convolution product needs disjoint supports, {P} and {Q} overlap."
        )
    return SetComposition.from_canonical(P.blocks + Q.blocks)


def perm_to_setcomp(sigma: Permutation) -> SetComposition:
    return SetComposition.from_canonical(tuple((value,) for value in sigma.word))


def setcomp_to_perm(P: SetComposition) -> Permutation:
    if any(len(block) != 1 for block in P.blocks):
        raise DomainError(f"{P} has a block that is not a singleton.")
    require_initial_support(P, "setcomp_to_perm")
    return Permutation.from_canonical(tuple(block[0] for block in P.blocks))


def perm_restrict(sigma: Permutation, S: AbstractSet[int]) -> tuple[int, ...]:
    """The subsequence of sigma formed by the values in S."""
    if not all(1 <= value <= sigma.degree for value in S):
        raise DomainError(f"{sorted(S)} is not a subset of [{sigma.degree}].")
    return tuple(value for value in sigma.word if value in S)


def perm_restrict_std(sigma: Permutation, S: AbstractSet[int]) -> Permutation:
    mapping = OrderIso.standardizing(S).mapping()
    return Permutation.from_canonical(
        tuple(mapping[value] for value in perm_restrict(sigma, S))
    )


def perm_inverse(sigma: Permutation) -> Permutation:
    inverse = [0] * sigma.degree
    for position, value in enumerate(sigma.word, 1):
        inverse[value - 1] = position
    return Permutation.from_canonical(tuple(inverse))


def subsets(elements: Iterable[int]) -> list[frozenset[int]]:
    """All subsets of `elements`, smallest first, each size in lexicographic order."""
    pool = sorted(elements)
    return [
        frozenset(chosen)
        for size in range(len(pool) + 1)
        for chosen in itertools.combinations(pool, size)
    ]
