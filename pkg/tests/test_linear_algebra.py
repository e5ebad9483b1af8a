# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from src.combinatorics import enumerate_set_compositions
from src.errors import BasisKindMismatchError, DomainError
from src.hopf import RESTRICTED_COSYM, e1
from src.linear_algebra import (
    ConvolutionPowers,
    GradedMap,
    LinearCombination,
    TensorCombination,
    convolve,
    difference_map,
    graded_exp,
    graded_log_identity,
    identity_map,
    lc_add,
    lc_apply,
    lc_scale,
    normalize_scalar,
    tensor,
    unit_counit_map,
)
from src.models.general import ScalarMode
from src.models.permutation import Permutation
from src.models.set_composition import EMPTY_COMPOSITION, SetComposition

H = RESTRICTED_COSYM


def comp(*blocks) -> SetComposition:
    return SetComposition.of(blocks)


def lc(*terms) -> LinearCombination:
    return LinearCombination(terms)


def test_zero_is_neutral():
    x = lc((comp([1, 2]), 1), (comp([1], [2]), 3))
    assert lc_add(x, LinearCombination.zero()) == x
    assert lc_add(LinearCombination.zero(), x) == x


def test_cancellation_leaves_no_terms():
    x = lc((comp([1, 2]), 2))
    difference = x - lc_scale(LinearCombination.basis(comp([1, 2])), 2)
    assert difference.is_zero()
    assert len(difference) == 0


def test_scaling_by_zero():
    assert lc_scale(lc((comp([1]), 5)), 0).is_zero()


def test_coefficients_stay_canonical():
    x = lc((comp([1]), Fraction(1, 2)), (comp([1]), Fraction(1, 2)))
    assert x.coefficient(comp([1])) == 1
    assert isinstance(x.coefficient(comp([1])), int)
    assert normalize_scalar(Fraction(4, 6)) == Fraction(2, 3)


def test_floats_are_rejected():
    with pytest.raises(DomainError):
        lc((comp([1]), 0.5))


def test_mixed_kinds_are_rejected():
    with pytest.raises(BasisKindMismatchError):
        LinearCombination.basis(comp([1])) + LinearCombination.basis(Permutation.of([1]))
    with pytest.raises(BasisKindMismatchError):
        lc((comp([1]), 1), (Permutation.of([1]), 1))


def test_linear_and_tensor_do_not_mix():
    with pytest.raises(BasisKindMismatchError):
        LinearCombination.basis(comp([1])) + TensorCombination(
            [((comp([1]), comp([1])), 1)]
        )


def test_items_follow_basis_order():
    x = lc((comp([2], [1]), 1), (comp([1, 2]), 1), (comp([1], [2]), 1))
    assert x.keys() == [comp([1], [2]), comp([1, 2]), comp([2], [1])]


def test_lc_apply_identity():
    x = lc((Permutation.of([1, 2]), 1), (Permutation.of([2, 1]), 1))
    assert lc_apply(LinearCombination.basis, x) == x


def test_tensor():
    one = LinearCombination.basis(comp([1]))
    assert tensor(one, one) == TensorCombination([((comp([1]), comp([1])), 1)])
    assert tensor(LinearCombination.zero(), one).is_zero()
    x = lc((comp([1, 2]), 1), (comp([1], [2]), 1))
    seven = LinearCombination.basis(comp([7]))
    assert tensor(x, seven) == TensorCombination(
        [((comp([1, 2]), comp([7])), 1), ((comp([1], [2]), comp([7])), 1)]
    )


def test_tensor_flattens():
    one = LinearCombination.basis(comp([1]))
    assert tensor(tensor(one, one), one).arity == 3


def test_convolution_unit():
    eta_eps = unit_counit_map(H.unit)
    identity = identity_map()
    left = convolve(eta_eps, identity, H.product, H.coproduct)
    right = convolve(identity, eta_eps, H.product, H.coproduct)
    for n in range(4):
        for P in enumerate_set_compositions(n):
            assert left.on_basis(P) == identity.on_basis(P)
            assert right.on_basis(P) == identity.on_basis(P)


def test_convolution_of_identities():
    identity = identity_map()
    square = convolve(identity, identity, H.product, H.coproduct)
    assert square(comp([1])) == lc((comp([1]), 2))
    assert square(EMPTY_COMPOSITION) == LinearCombination.basis(EMPTY_COMPOSITION)


def test_convolution_is_associative():
    identity = identity_map()
    J = difference_map(identity, unit_counit_map(H.unit))
    maps = [identity, J]
    for f in maps:
        for g in maps:
            for h in maps:
                left = convolve(convolve(f, g, H.product, H.coproduct), h, H.product, H.coproduct)
                right = convolve(f, convolve(g, h, H.product, H.coproduct), H.product, H.coproduct)
                for n in range(4):
                    for P in enumerate_set_compositions(n):
                        assert left.on_basis(P) == right.on_basis(P)


def test_log_needs_rational_scalars():
    with pytest.raises(DomainError):
        graded_log_identity(H.product, H.coproduct, H.unit, 3, ScalarMode.INTEGER)


def test_log_respects_degree_bound():
    log_map = graded_log_identity(H.product, H.coproduct, H.unit, 2)
    with pytest.raises(DomainError):
        log_map(comp([1, 2, 3]))


@pytest.mark.parametrize(
    "P, expected",
    [
        (comp([1]), [(comp([1]), 1)]),
        (comp([1, 2]), [(comp([1, 2]), 1), (comp([1], [2]), -1)]),
        (comp([2], [1]), [(comp([2], [1]), 1), (comp([1], [2]), -1)]),
        (comp([1], [2]), []),
        (EMPTY_COMPOSITION, []),
    ],
)
def test_log_of_identity(P, expected):
    assert e1(P) == LinearCombination(expected)


def test_exp_of_log_is_identity():
    log_map = graded_log_identity(H.product, H.coproduct, H.unit, 4)
    exp_map = graded_exp(log_map, H.product, H.coproduct, H.unit)
    for n in range(5):
        for P in enumerate_set_compositions(n):
            assert exp_map.on_basis(P) == LinearCombination.basis(P)


def test_recomputation_is_bit_identical():
    first = e1(comp([2, 3], [1])).items()
    second = graded_log_identity(H.product, H.coproduct, H.unit, 3)(comp([2, 3], [1])).items()
    assert first == second
    assert [str(c) for _, c in first] == [str(c) for _, c in second]


def test_convolution_powers_are_shared_between_threads():
    J = difference_map(identity_map(), unit_counit_map(H.unit))
    shared = ConvolutionPowers(J, H.product, H.coproduct, H.unit)
    reference = ConvolutionPowers(J, H.product, H.coproduct, H.unit)
    barrier = threading.Barrier(8)

    def request(offset: int) -> None:
        barrier.wait()
        for k in range(2, 6):
            shared[(k + offset) % 4 + 2]

    with ThreadPoolExecutor(max_workers=8) as pool:
        list(pool.map(request, range(8)))

    assert len(shared.powers) == 6
    for k in range(6):
        for n in range(4):
            for P in enumerate_set_compositions(n):
                assert shared[k].on_basis(P) == reference[k].on_basis(P)


def test_graded_map_keeps_one_image_per_key():
    calls = []

    def rule(key):
        calls.append(key)
        return LinearCombination.basis(key)

    f = GradedMap("id", rule)
    barrier = threading.Barrier(8)

    def evaluate(_):
        barrier.wait()
        return f.on_basis(comp([1, 2]))

    with ThreadPoolExecutor(max_workers=8) as pool:
        images = list(pool.map(evaluate, range(8)))

    assert all(image is images[0] for image in images)
    assert f.on_basis(comp([1, 2])) is images[0]
