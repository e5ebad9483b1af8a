# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import itertools
import logging
from functools import lru_cache
from typing import AbstractSet, Callable, Iterator, Optional, Union

from src.combinatorics import (
    concat_disjoint,
    enumerate_reduced,
    enumerate_set_compositions,
    factor_reduced,
    is_reduced,
    relabel,
    require_initial_support,
    restrict,
    restrict_std,
    subsets,
)
from src.errors import DomainError
from src.linear_algebra import (
    GradedMap,
    LinearCombination,
    TensorCombination,
    apply_to_tensor_factor,
    as_combination,
    bilinear,
    flip,
    graded_exp,
    graded_log_identity,
    identity_map,
    literal_of,
    sort_key_of,
    tensor,
    tensor_product_of_tensors,
)
from src.models.dtos import AxiomResultDto
from src.models.general import BasisKind, HopfStructure, HopfStructureName, ScalarMode
from src.models.set_composition import EMPTY_COMPOSITION, OrderIso, SetComposition
from src.models.tree import LEAF, IncreasingTree, PlanarTree
from src.trees import (
    contract,
    enumerate_binary_trees,
    enumerate_trees,
    fgt,
    graft_increasing,
    graft_left,
    inc,
    is_binary,
    is_left_increasing,
    sigma,
    tau,
)

logger = logging.getLogger(__name__)

# Degrees up to which e¹ maps are prepared; larger requests are domain errors.
LOG_IDENTITY_DEGREE_CAP = 7


def coproduct_delta(P: SetComposition) -> TensorCombination:
    """
    The twisted coproduct: every way of splitting each block into a left and a
    right part. Factors keep their labels.
    """
    result = TensorCombination()
    support = P.support
    for A in subsets(support):
        result.add_terms([((restrict(P, A), restrict(P, support - A)), 1)])
    return result


def delta_component(
    P: SetComposition, A: AbstractSet[int], B: AbstractSet[int]
) -> TensorCombination:
    A, B = frozenset(A), frozenset(B)
    if A & B or A | B != P.support:
        raise DomainError(
            f"{sorted(A)} and {sorted(B)} are not a disjoint cover of the support of {P}."
        )
    return TensorCombination([((restrict(P, A), restrict(P, B)), 1)])


def restricted_coproduct(P: SetComposition) -> TensorCombination:
    """Sum over p + q = n of P|[p] ⊗ P|p+[q]."""
    require_initial_support(P, "restricted_coproduct")
    n = P.degree
    result = TensorCombination()
    for p in range(n + 1):
        left, right = frozenset(range(1, p + 1)), frozenset(range(p + 1, n + 1))
        result.add_terms([((restrict_std(P, left), restrict_std(P, right)), 1)])
    return result


def cosym_coproduct(P: SetComposition) -> TensorCombination:
    """Sum over all A ∐ B = [n] of P|A ⊗ P|B."""
    require_initial_support(P, "cosym_coproduct")
    support = P.support
    result = TensorCombination()
    for A in subsets(support):
        result.add_terms([((restrict_std(P, A), restrict_std(P, support - A)), 1)])
    return result


def _shifted(Q: SetComposition, offset: int) -> SetComposition:
    return SetComposition.from_canonical(
        tuple(tuple(e + offset for e in block) for block in Q.blocks)
    )


def _from_initial_segment(target: AbstractSet[int]) -> OrderIso:
    return OrderIso.model_construct(
        source=tuple(range(1, len(target) + 1)), target=tuple(sorted(target))
    )


def restricted_product(P: SetComposition, Q: SetComposition) -> SetComposition:
    """Shift the support of Q past that of P and concatenate the blocks."""
    require_initial_support(P, "restricted_product")
    require_initial_support(Q, "restricted_product")
    return concat_disjoint(P, _shifted(Q, P.degree))


def symmetrized_product(P: SetComposition, Q: SetComposition) -> LinearCombination:
    """Sum over A ∐ B = [p+q], |A| = p, of the concatenation of P on A and Q on B."""
    require_initial_support(P, "symmetrized_product")
    require_initial_support(Q, "symmetrized_product")
    p, q = P.degree, Q.degree
    ground = range(1, p + q + 1)
    result = LinearCombination(kind=BasisKind.SET_COMPOSITION)
    for chosen in itertools.combinations(ground, p):
        A = frozenset(chosen)
        B = frozenset(ground) - A
        left = relabel(P, _from_initial_segment(A))
        right = relabel(Q, _from_initial_segment(B))
        result.add_terms([(concat_disjoint(left, right), 1)])
    return result


RESTRICTED_COSYM = HopfStructure(
    name=HopfStructureName.RESTRICTED_COSYM,
    basis_kind=BasisKind.SET_COMPOSITION,
    unit=EMPTY_COMPOSITION,
    product=restricted_product,
    coproduct=cosym_coproduct,
    basis=enumerate_set_compositions,
    cocommutative=True,
)

SYMMETRIZED_RESTRICTED = HopfStructure(
    name=HopfStructureName.SYMMETRIZED_RESTRICTED,
    basis_kind=BasisKind.SET_COMPOSITION,
    unit=EMPTY_COMPOSITION,
    product=symmetrized_product,
    coproduct=restricted_coproduct,
    basis=enumerate_set_compositions,
    cocommutative=False,
)


def multiply(H: HopfStructure, x, y) -> LinearCombination:
    return bilinear(H.product, as_combination(x), as_combination(y))


def comultiply(H: HopfStructure, x) -> TensorCombination:
    result = TensorCombination()
    for key, coeff in as_combination(x).terms.items():
        result.add_terms(
            (pair, coeff * c) for pair, c in H.coproduct(key).terms.items()
        )
    return result


def counit(x) -> LinearCombination:
    """The degree-0 part; the counit is its coefficient on the unit."""
    return as_combination(x).homogeneous_component(0)


def is_primitive(H: HopfStructure, x: LinearCombination) -> bool:
    unit = LinearCombination.basis(H.unit)
    return comultiply(H, x) == tensor(x, unit) + tensor(unit, x)


@lru_cache(maxsize=None)
def antipode_map(name: HopfStructureName) -> GradedMap:
    H = get_structure(name)

    def rule(key) -> LinearCombination:
        if key.degree == 0:
            return LinearCombination.basis(key)
        result = -LinearCombination.basis(key)
        for (left, right), coeff in H.coproduct(key).terms.items():
            if left.degree == 0 or right.degree == 0:
                continue
            result = result - bilinear(
                H.product, antipode_map(name).on_basis(left), LinearCombination.basis(right)
            ).scale(coeff)
        return result

    return GradedMap(f"S[{name.value}]", rule)


def antipode(x, H: HopfStructure) -> LinearCombination:
    """S(unit) = unit and S(x) = -x - Σ S(x')x'' over the reduced coproduct."""
    return antipode_map(H.name)(x)


_STRUCTURES: dict[HopfStructureName, HopfStructure] = {}


def register_structure(H: HopfStructure) -> HopfStructure:
    _STRUCTURES[H.name] = H
    return H


def get_structure(name: Union[HopfStructureName, str]) -> HopfStructure:
    try:
        return _STRUCTURES[HopfStructureName(name)]
    except (ValueError, KeyError) as e:
        raise DomainError(f"Unknown Hopf structure {name}.") from e


register_structure(RESTRICTED_COSYM)
register_structure(SYMMETRIZED_RESTRICTED)


@lru_cache(maxsize=None)
def log_identity_map(name: HopfStructureName, mode: ScalarMode) -> GradedMap:
    H = get_structure(name)
    return graded_log_identity(
        H.product, H.coproduct, H.unit, LOG_IDENTITY_DEGREE_CAP, mode
    )


def e1(x, mode: ScalarMode = ScalarMode.RATIONAL) -> LinearCombination:
    """The logarithm of the identity for the restricted product and cosymmetrized coproduct."""
    return log_identity_map(HopfStructureName.RESTRICTED_COSYM, mode)(x)


def primitive_generators(
    n: int, mode: ScalarMode = ScalarMode.RATIONAL
) -> list[LinearCombination]:
    if n > LOG_IDENTITY_DEGREE_CAP:
        raise DomainError(
            f"Degree {n} exceeds the generator cap {LOG_IDENTITY_DEGREE_CAP}."
        )
    return [e1(R, mode) for R in enumerate_reduced(n)]


# Exhaustive axiom checks


def _literal(*keys) -> str:
    parts = []
    for key in keys:
        literal = literal_of(key)
        parts.append(" ⊗ ".join(literal) if isinstance(literal, list) else literal)
    return " ; ".join(parts)


def _basis_upto(H: HopfStructure, n_max: int) -> list:
    return [x for n in range(n_max + 1) for x in H.basis(n)]


def _tuples_upto(H: HopfStructure, n_max: int, arity: int) -> Iterator[tuple]:
    """All tuples of basis elements of total degree <= n_max."""
    for degrees in itertools.product(range(n_max + 1), repeat=arity):
        if sum(degrees) > n_max:
            continue
        yield from itertools.product(*(H.basis(d) for d in degrees))


def run_check(
    axiom: str,
    instances,
    holds: Callable[..., bool],
    n_max: int,
    structure: Optional[str] = None,
) -> AxiomResultDto:
    checked = 0
    for instance in instances:
        checked += 1
        if not holds(*instance):
            logger.warning(f"{structure or ''} {axiom} fails at {_literal(*instance)}")
            return AxiomResultDto(
                axiom=axiom,
                structure=structure,
                n_max=n_max,
                passed=False,
                checked=checked,
                counterexample=_literal(*instance),
            )
    logger.debug(f"{structure or ''} {axiom}: {checked} instances hold")
    return AxiomResultDto(
        axiom=axiom, structure=structure, n_max=n_max, passed=True, checked=checked
    )


def _coproduct_on_first(H: HopfStructure, t: TensorCombination) -> TensorCombination:
    return apply_to_tensor_factor(H.coproduct, t, 0)


def _coproduct_on_second(H: HopfStructure, t: TensorCombination) -> TensorCombination:
    return apply_to_tensor_factor(H.coproduct, t, 1)


def _counit_left(t: TensorCombination) -> LinearCombination:
    return LinearCombination(
        (right, c) for (left, right), c in t.terms.items() if left.degree == 0
    )


def _counit_right(t: TensorCombination) -> LinearCombination:
    return LinearCombination(
        (left, c) for (left, right), c in t.terms.items() if right.degree == 0
    )


def bialgebra_checks(
    H: HopfStructure, n_max: int
) -> list[tuple[str, Callable[[], AxiomResultDto]]]:
    """
    The individual axiom checks of a bialgebra, each exhaustive over basis
    elements of total degree <= n_max. Returned as named thunks so callers can
    run them concurrently.
    """
    name = H.name.value

    def unit_holds(x) -> bool:
        return multiply(H, H.unit, x) == as_combination(x) == multiply(H, x, H.unit)

    def associativity_holds(x, y, z) -> bool:
        return bilinear(H.product, multiply(H, x, y), as_combination(z)) == bilinear(
            H.product, as_combination(x), multiply(H, y, z)
        )

    def coassociativity_holds(x) -> bool:
        d = H.coproduct(x)
        return _coproduct_on_first(H, d) == _coproduct_on_second(H, d)

    def counit_holds(x) -> bool:
        d = H.coproduct(x)
        return _counit_left(d) == as_combination(x) == _counit_right(d)

    def compatibility_holds(x, y) -> bool:
        return comultiply(H, multiply(H, x, y)) == tensor_product_of_tensors(
            H.product, H.coproduct(x), H.coproduct(y)
        )

    def antipode_holds(x) -> bool:
        eta_eps = counit(x)
        left = LinearCombination(kind=H.basis_kind)
        right = LinearCombination(kind=H.basis_kind)
        for (a, b), c in H.coproduct(x).terms.items():
            left = left + bilinear(
                H.product, antipode_map(H.name).on_basis(a), LinearCombination.basis(b)
            ).scale(c)
            right = right + bilinear(
                H.product, LinearCombination.basis(a), antipode_map(H.name).on_basis(b)
            ).scale(c)
        return left == eta_eps == right

    def singles():
        return ((x,) for x in _basis_upto(H, n_max))

    checks = [
        ("unit", lambda: run_check("unit", singles(), unit_holds, n_max, name)),
        (
            "associativity",
            lambda: run_check(
                "associativity", _tuples_upto(H, n_max, 3), associativity_holds, n_max, name
            ),
        ),
        (
            "coassociativity",
            lambda: run_check(
                "coassociativity", singles(), coassociativity_holds, n_max, name
            ),
        ),
        ("counit", lambda: run_check("counit", singles(), counit_holds, n_max, name)),
        (
            "compatibility",
            lambda: run_check(
                "compatibility", _tuples_upto(H, n_max, 2), compatibility_holds, n_max, name
            ),
        ),
        ("antipode", lambda: run_check("antipode", singles(), antipode_holds, n_max, name)),
        ("cocommutativity", lambda: check_cocommutativity(H, n_max)),
    ]
    return checks


def check_cocommutativity(H: HopfStructure, n_max: int) -> AxiomResultDto:
    """
    For a cocommutative structure every coproduct must be flip-invariant. For
    the others the check passes when a witness of non-cocommutativity is found.
    """
    name = H.name.value
    if H.cocommutative:
        return run_check(
            "cocommutativity",
            ((x,) for x in _basis_upto(H, n_max)),
            lambda x: flip(H.coproduct(x)) == H.coproduct(x),
            n_max,
            name,
        )
    checked = 0
    for x in _basis_upto(H, n_max):
        checked += 1
        d = H.coproduct(x)
        if flip(d) != d:
            witness = next(
                pair for pair, _ in d.items() if (pair[1], pair[0]) not in d
            )
            return AxiomResultDto(
                axiom="non-cocommutativity",
                structure=name,
                n_max=n_max,
                passed=True,
                checked=checked,
                note=f"witness {_literal(x)}: contains {_literal(witness)} "
                f"but not its flip",
            )
    return AxiomResultDto(
        axiom="non-cocommutativity",
        structure=name,
        n_max=n_max,
        passed=n_max < 3,
        checked=checked,
        note="no witness in range",
    )


def check_bialgebra(H: HopfStructure, n_max: int) -> list[AxiomResultDto]:
    return [check() for _, check in bialgebra_checks(H, n_max)]


# Triangularity and freeness


def check_triangularity(P: SetComposition, Q: SetComposition) -> bool:
    """
    P ∗̂ Q is P ∗̄ Q plus strictly <<-larger terms, all with coefficient 1.
    """
    sym = symmetrized_product(P, Q)
    leading = restricted_product(P, Q)
    if any(coeff != 1 for _, coeff in sym.items()):
        return False
    smallest = sym.keys()[0] if sym else None
    return smallest == leading


def check_triangularity_all(n_max: int) -> AxiomResultDto:
    pairs = (
        (P, Q)
        for p, q in itertools.product(range(n_max + 1), repeat=2)
        if p + q <= n_max
        for P in enumerate_set_compositions(p)
        for Q in enumerate_set_compositions(q)
    )
    return run_check("triangularity", pairs, check_triangularity, n_max)


def reduced_factor_sequences(n: int) -> Iterator[tuple[SetComposition, ...]]:
    """All sequences of reduced compositions of total degree n."""
    if n == 0:
        yield ()
        return
    for d in range(1, n + 1):
        for R in enumerate_reduced(d):
            for rest in reduced_factor_sequences(n - d):
                yield (R,) + rest


def _restricted_fold(factors: tuple[SetComposition, ...]) -> SetComposition:
    result = EMPTY_COMPOSITION
    for factor in factors:
        result = restricted_product(result, factor)
    return result


def _symmetrized_fold(factors: tuple[SetComposition, ...]) -> LinearCombination:
    result = LinearCombination.basis(EMPTY_COMPOSITION)
    for factor in factors:
        result = bilinear(symmetrized_product, result, LinearCombination.basis(factor))
    return result


def check_factorization(n_max: int) -> AxiomResultDto:
    """Every composition is the restricted product of its reduced factors, and
    distinct reduced factor sequences give distinct products."""
    checked = 0
    for n in range(n_max + 1):
        compositions = enumerate_set_compositions(n)
        for P in compositions:
            checked += 1
            factors = factor_reduced(P)
            if not all(is_reduced(R) for R in factors) or _restricted_fold(
                tuple(factors)
            ) != P:
                return AxiomResultDto(
                    axiom="reduced factorization",
                    n_max=n_max,
                    passed=False,
                    checked=checked,
                    counterexample=_literal(P),
                )
        products = [_restricted_fold(seq) for seq in reduced_factor_sequences(n)]
        if sorted(products, key=sort_key_of) != compositions:
            return AxiomResultDto(
                axiom="reduced factorization",
                n_max=n_max,
                passed=False,
                checked=checked,
                counterexample=f"degree {n}: {len(products)} products "
                f"for {len(compositions)} compositions",
            )
    return AxiomResultDto(
        axiom="reduced factorization", n_max=n_max, passed=True, checked=checked
    )


def check_generating_series(n_max: int) -> AxiomResultDto:
    """Fubini(t) = 1 / (1 - R(t)) coefficientwise, R counting reduced compositions."""
    fubini = [len(enumerate_set_compositions(n)) for n in range(n_max + 1)]
    reduced = [0] + [len(enumerate_reduced(n)) for n in range(1, n_max + 1)]
    for n in range(1, n_max + 1):
        expected = sum(reduced[d] * fubini[n - d] for d in range(1, n + 1))
        if fubini[n] != expected:
            return AxiomResultDto(
                axiom="generating series",
                n_max=n_max,
                passed=False,
                checked=n,
                counterexample=f"degree {n}: {fubini[n]} != {expected}",
            )
    return AxiomResultDto(
        axiom="generating series",
        n_max=n_max,
        passed=True,
        checked=n_max,
        note="reduced counts " + ",".join(str(r) for r in reduced[1:]),
    )


def check_unitriangular_basis(n_max: int) -> AxiomResultDto:
    """
    Rows are the symmetrized products of reduced factor sequences, indexed by
    the restricted product of the same sequence. Each row must have a 1 on its
    own column and nothing on smaller columns.
    """
    checked = 0
    for n in range(n_max + 1):
        for seq in reduced_factor_sequences(n):
            checked += 1
            row = _symmetrized_fold(seq)
            pivot = _restricted_fold(seq)
            if row.coefficient(pivot) != 1 or any(
                sort_key_of(key) < pivot.sort_key() for key in row.terms
            ):
                return AxiomResultDto(
                    axiom="unitriangular basis change",
                    n_max=n_max,
                    passed=False,
                    checked=checked,
                    counterexample=_literal(*seq),
                )
    return AxiomResultDto(
        axiom="unitriangular basis change", n_max=n_max, passed=True, checked=checked
    )


def check_freeness(n_max: int) -> list[AxiomResultDto]:
    if n_max > 6:
        raise DomainError(f"Freeness checks are capped at degree 6, got {n_max}.")
    return [
        check_factorization(n_max),
        check_generating_series(n_max),
        check_unitriangular_basis(n_max),
    ]


def check_generators_primitive(
    n_max: int, mode: ScalarMode = ScalarMode.RATIONAL
) -> AxiomResultDto:
    checked = 0
    for n in range(1, n_max + 1):
        for R, x in zip(enumerate_reduced(n), primitive_generators(n, mode)):
            checked += 1
            if not is_primitive(RESTRICTED_COSYM, x):
                return AxiomResultDto(
                    axiom="primitive generators",
                    n_max=n_max,
                    passed=False,
                    checked=checked,
                    counterexample=_literal(R),
                )
    return AxiomResultDto(
        axiom="primitive generators", n_max=n_max, passed=True, checked=checked
    )


def check_exp_log(n_max: int) -> AxiomResultDto:
    """exp⋆(e¹) is the identity in every degree <= n_max."""
    H = RESTRICTED_COSYM
    log_map = log_identity_map(H.name, ScalarMode.RATIONAL)
    exp_map = graded_exp(log_map, H.product, H.coproduct, H.unit)
    identity = identity_map()
    return run_check(
        "exp of log is identity",
        ((x,) for x in _basis_upto(H, n_max)),
        lambda x: exp_map.on_basis(x) == identity.on_basis(x),
        n_max,
        H.name.value,
    )


# Twisted structure on compositions of arbitrary finite sets


def _compositions_of(support: AbstractSet[int]) -> list[SetComposition]:
    iso = _from_initial_segment(support)
    return [relabel(P, iso) for P in enumerate_set_compositions(len(support))]


def _disjoint_pairs(n_max: int) -> Iterator[tuple[SetComposition, SetComposition]]:
    for S in subsets(range(1, n_max + 1)):
        for A in subsets(S):
            for P in _compositions_of(A):
                for Q in _compositions_of(S - A):
                    yield P, Q


def _twisted_singles(n_max: int) -> Iterator[tuple[SetComposition]]:
    for S in subsets(range(1, n_max + 1)):
        for P in _compositions_of(S):
            yield (P,)


def twisted_checks(n_max: int) -> list[tuple[str, Callable[[], AxiomResultDto]]]:
    """Axioms of the twisted bialgebra (concatenation, δ) on supports within [n_max]."""

    def multiplicative(P, Q) -> bool:
        return coproduct_delta(concat_disjoint(P, Q)) == tensor_product_of_tensors(
            concat_disjoint, coproduct_delta(P), coproduct_delta(Q)
        )

    def coassociative(P) -> bool:
        d = coproduct_delta(P)
        return apply_to_tensor_factor(coproduct_delta, d, 0) == apply_to_tensor_factor(
            coproduct_delta, d, 1
        )

    def cocommutative(P) -> bool:
        d = coproduct_delta(P)
        return flip(d) == d

    return [
        (
            "twisted multiplicativity",
            lambda: run_check(
                "twisted multiplicativity", _disjoint_pairs(n_max), multiplicative, n_max
            ),
        ),
        (
            "twisted coassociativity",
            lambda: run_check(
                "twisted coassociativity", _twisted_singles(n_max), coassociative, n_max
            ),
        ),
        (
            "twisted cocommutativity",
            lambda: run_check(
                "twisted cocommutativity", _twisted_singles(n_max), cocommutative, n_max
            ),
        ),
    ]


# Tree forms of the structures


def restricted_coproduct_tree(T: IncreasingTree) -> TensorCombination:
    """Sum over p + q = n of the contractions of T to [p] and to p+[q]."""
    n = T.branching_count
    result = TensorCombination()
    for p in range(n + 1):
        left = contract(T, frozenset(range(1, p + 1)))
        right = contract(T, frozenset(range(p + 1, n + 1)))
        result.add_terms([((left, right), 1)])
    return result


def cosym_coproduct_tree(T: IncreasingTree) -> TensorCombination:
    """Sum over all label splittings A ∐ B of the contractions of T to A and B."""
    labels = frozenset(range(1, T.branching_count + 1))
    result = TensorCombination()
    for A in subsets(labels):
        result.add_terms([((contract(T, A), contract(T, labels - A)), 1)])
    return result


def _tau_tensor(t: TensorCombination) -> TensorCombination:
    return TensorCombination(
        ((tau(a), tau(b)), c) for (a, b), c in t.terms.items()
    )


def planar_tree_coproduct(T: PlanarTree) -> TensorCombination:
    """
    Cosymmetrized coproduct carried over to planar trees by inc: the sum over
    label splittings A ∐ B of the shapes of the contractions of inc(T).
    """
    lifted = inc(T)
    labels = frozenset(range(1, T.branching_count + 1))
    result = TensorCombination()
    for A in subsets(labels):
        result.add_terms(
            [((fgt(contract(lifted, A)), fgt(contract(lifted, labels - A))), 1)]
        )
    return result


PLANAR_TREES = register_structure(
    HopfStructure(
        name=HopfStructureName.PLANAR_TREES,
        basis_kind=BasisKind.PLANAR_TREE,
        unit=LEAF,
        product=graft_left,
        coproduct=planar_tree_coproduct,
        basis=enumerate_trees,
        cocommutative=True,
    )
)

# graft_left keeps trees binary and so do the contractions of inc of a binary tree
BINARY_TREES = register_structure(
    HopfStructure(
        name=HopfStructureName.BINARY_TREES,
        basis_kind=BasisKind.PLANAR_TREE,
        unit=LEAF,
        product=graft_left,
        coproduct=planar_tree_coproduct,
        basis=enumerate_binary_trees,
        cocommutative=True,
    )
)


def tree_checks(n_max: int) -> list[tuple[str, Callable[[], AxiomResultDto]]]:
    def trees_upto():
        return (
            (tau(P),) for n in range(n_max + 1) for P in enumerate_set_compositions(n)
        )

    def tree_pairs():
        return (
            (tau(P), tau(Q))
            for p, q in itertools.product(range(n_max + 1), repeat=2)
            if p + q <= n_max
            for P in enumerate_set_compositions(p)
            for Q in enumerate_set_compositions(q)
        )

    def grafting_intertwines(T1, T2) -> bool:
        return sigma(graft_increasing(T1, T2)) == restricted_product(sigma(T1), sigma(T2))

    def cosym_intertwines(T) -> bool:
        return cosym_coproduct_tree(T) == _tau_tensor(cosym_coproduct(sigma(T)))

    def restricted_intertwines(T) -> bool:
        return restricted_coproduct_tree(T) == _tau_tensor(restricted_coproduct(sigma(T)))

    def left_increasing_closed(T) -> bool:
        if not is_left_increasing(T):
            return True
        return all(
            is_left_increasing(a) and is_left_increasing(b)
            for (a, b), _ in restricted_coproduct_tree(T).terms.items()
        )

    def contraction_closed(T) -> bool:
        if not is_left_increasing(T):
            return True
        labels = range(1, T.branching_count + 1)
        return all(is_left_increasing(contract(T, A)) for A in subsets(labels))

    def planar_pairs():
        return (
            (T1, T2)
            for p, q in itertools.product(range(n_max + 1), repeat=2)
            if p + q <= n_max
            for T1 in enumerate_trees(p)
            for T2 in enumerate_trees(q)
        )

    def inc_is_multiplicative(T1, T2) -> bool:
        return inc(graft_left(T1, T2)) == graft_increasing(inc(T1), inc(T2))

    def binary_closed(T) -> bool:
        return all(
            is_binary(a) and is_binary(b)
            for (a, b), _ in planar_tree_coproduct(T).terms.items()
        )

    return [
        (
            "inc turns grafting into increasing grafting",
            lambda: run_check(
                "inc turns grafting into increasing grafting",
                planar_pairs(),
                inc_is_multiplicative,
                n_max,
            ),
        ),
        (
            "binary trees closed under coproduct",
            lambda: run_check(
                "binary trees closed under coproduct",
                ((T,) for n in range(n_max + 1) for T in enumerate_binary_trees(n)),
                binary_closed,
                n_max,
            ),
        ),
        (
            "grafting intertwines restricted product",
            lambda: run_check(
                "grafting intertwines restricted product",
                tree_pairs(),
                grafting_intertwines,
                n_max,
            ),
        ),
        (
            "contractions intertwine cosymmetrized coproduct",
            lambda: run_check(
                "contractions intertwine cosymmetrized coproduct",
                trees_upto(),
                cosym_intertwines,
                n_max,
            ),
        ),
        (
            "contractions intertwine restricted coproduct",
            lambda: run_check(
                "contractions intertwine restricted coproduct",
                trees_upto(),
                restricted_intertwines,
                n_max,
            ),
        ),
        (
            "left increasing closed under restricted coproduct",
            lambda: run_check(
                "left increasing closed under restricted coproduct",
                trees_upto(),
                left_increasing_closed,
                n_max,
            ),
        ),
        (
            "left increasing closed under contraction",
            lambda: run_check(
                "left increasing closed under contraction",
                trees_upto(),
                contraction_closed,
                n_max,
            ),
        ),
    ]

