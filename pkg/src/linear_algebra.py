# SPDX-License-Identifier: PolyForm-Noncommercial-1.0.0

import logging
import threading
from fractions import Fraction
from math import factorial
from typing import Callable, Hashable, Iterable, Iterator, Optional, Union

from src.errors import BasisKindMismatchError, DomainError
from src.models.general import BasisKind, ScalarMode

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
BasisKey = Hashable
KindTag = Union[BasisKind, tuple[BasisKind, ...]]


def normalize_scalar(value: Scalar) -> Scalar:
    """Exact canonical form: integers stay int, rationals with denominator 1 become int."""
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"Only exact scalars are supported, got {value!r}.")
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def kind_of(key) -> KindTag:
    if isinstance(key, tuple):
        return tuple(component.kind for component in key)
    return key.kind


def sort_key_of(key) -> tuple:
    if isinstance(key, tuple):
        return tuple(component.sort_key() for component in key)
    return key.sort_key()


def literal_of(key) -> Union[str, list[str]]:
    if isinstance(key, tuple):
        return [component.to_literal() for component in key]
    return key.to_literal()


class LinearCombination:
    """
    A finitely supported map from basis keys to exact scalars. Zero coefficients
    are never stored. All keys share one basis kind; the zero combination may
    have no kind yet and adopts the kind of whatever it is combined with.
    """

    __slots__ = ("terms", "kind")

    def __init__(
        self,
        terms: Optional[Iterable[tuple[BasisKey, Scalar]]] = None,
        kind: Optional[KindTag] = None,
    ):
        self.terms: dict = {}
        self.kind: Optional[KindTag] = kind
        if terms is not None:
            self.add_terms(terms)

    @classmethod
    def basis(cls, key: BasisKey, coeff: Scalar = 1):
        return cls([(key, coeff)])

    @classmethod
    def zero(cls, kind: Optional[KindTag] = None):
        return cls(kind=kind)

    def _check_kind(self, kind: Optional[KindTag]) -> None:
        if kind is None:
            return
        if self.kind is None:
            self.kind = kind
        elif self.kind != kind:
            raise BasisKindMismatchError(
                f"Cannot combine basis kind {kind} with {self.kind}."
            )

    def add_terms(self, terms: Iterable[tuple[BasisKey, Scalar]]) -> None:
        """In-place accumulation; only used while a combination is being built."""
        for key, coeff in terms:
            if coeff == 0:
                continue
            self._check_kind(kind_of(key))
            total = normalize_scalar(self.terms.get(key, 0) + coeff)
            if total == 0:
                del self.terms[key]
            else:
                self.terms[key] = total

    def _same_type(self, other) -> None:
        if type(other) is not type(self):
            raise BasisKindMismatchError(
                f"Cannot combine {type(self).__name__} with {type(other).__name__}."
            )

    def __add__(self, other):
        self._same_type(other)
        result = type(self)(self.terms.items(), kind=self.kind)
        result._check_kind(other.kind)
        result.add_terms(other.terms.items())
        return result

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor: Scalar):
        factor = normalize_scalar(factor)
        if factor == 0:
            return type(self)(kind=self.kind)
        return type(self)(
            ((key, coeff * factor) for key, coeff in self.terms.items()), kind=self.kind
        )

    def __mul__(self, factor: Scalar):
        return self.scale(factor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __contains__(self, key) -> bool:
        return key in self.terms

    def coefficient(self, key) -> Scalar:
        return self.terms.get(key, 0)

    def items(self) -> list[tuple[BasisKey, Scalar]]:
        """Terms in deterministic basis order."""
        return sorted(self.terms.items(), key=lambda term: sort_key_of(term[0]))

    def __iter__(self) -> Iterator[tuple[BasisKey, Scalar]]:
        return iter(self.items())

    def keys(self) -> list[BasisKey]:
        return [key for key, _ in self.items()]

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_component(self, degree: int):
        return type(self)(
            ((key, c) for key, c in self.terms.items() if _degree(key) == degree),
            kind=self.kind,
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.items():
            literal = literal_of(key)
            text = " ⊗ ".join(literal) if isinstance(literal, list) else literal
            parts.append(f"{coeff}*[{text}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()})"


class TensorCombination(LinearCombination):
    """A linear combination whose keys are tuples of basis keys."""

    __slots__ = ()

    @property
    def arity(self) -> Optional[int]:
        if isinstance(self.kind, tuple):
            return len(self.kind)
        return None


def _degree(key) -> int:
    if isinstance(key, tuple):
        return sum(component.degree for component in key)
    return key.degree


def lc_add(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    return x + y


def lc_scale(x: LinearCombination, factor: Scalar) -> LinearCombination:
    return x.scale(factor)


def lc_apply(
    rule: Callable[[BasisKey], LinearCombination], x: LinearCombination
) -> LinearCombination:
    """Extend a basis rule linearly to x."""
    result: Optional[LinearCombination] = None
    for key, coeff in x.terms.items():
        image = rule(key).scale(coeff)
        result = image if result is None else result + image
    return result if result is not None else LinearCombination.zero()


def tensor(x: LinearCombination, y: LinearCombination) -> TensorCombination:
    """Bilinear tensor product; tuple keys are flattened so tensors stay flat."""

    def flat(key) -> tuple:
        return key if isinstance(key, tuple) else (key,)

    return TensorCombination(
        (flat(a) + flat(b), ca * cb)
        for a, ca in x.terms.items()
        for b, cb in y.terms.items()
    )


def as_combination(value) -> LinearCombination:
    if isinstance(value, LinearCombination):
        return value
    return LinearCombination.basis(value)


def flip(t: TensorCombination) -> TensorCombination:
    return TensorCombination(((b, a), c) for (a, b), c in t.terms.items())


def apply_to_tensor_factor(
    rule: Callable[[BasisKey], TensorCombination], t: TensorCombination, position: int
) -> TensorCombination:
    """Apply a coproduct-like rule to one factor of every term and flatten."""
    result = TensorCombination()
    for key, coeff in t.terms.items():
        for image, image_coeff in rule(key[position]).terms.items():
            result.add_terms(
                [(key[:position] + image + key[position + 1 :], coeff * image_coeff)]
            )
    return result


def multiply_tensor(
    product: Callable[[BasisKey, BasisKey], object], t: TensorCombination
) -> LinearCombination:
    """Apply a basis product to every 2-tensor term."""
    result = LinearCombination()
    for (a, b), coeff in t.terms.items():
        result.add_terms(
            (key, coeff * c) for key, c in as_combination(product(a, b)).terms.items()
        )
    return result


def tensor_product_of_tensors(
    product: Callable[[BasisKey, BasisKey], object],
    s: TensorCombination,
    t: TensorCombination,
) -> TensorCombination:
    """Componentwise product on A⊗A: (a⊗b)(c⊗d) = ac⊗bd, no signs."""
    result = TensorCombination()
    for (a, b), cs in s.terms.items():
        for (c, d), ct in t.terms.items():
            left = as_combination(product(a, c))
            right = as_combination(product(b, d))
            result.add_terms(
                ((k1, k2), cs * ct * c1 * c2)
                for k1, c1 in left.terms.items()
                for k2, c2 in right.terms.items()
            )
    return result


def bilinear(
    product: Callable[[BasisKey, BasisKey], object],
    x: LinearCombination,
    y: LinearCombination,
) -> LinearCombination:
    return multiply_tensor(product, tensor(x, y))


class GradedMap:
    """
    A linear endomorphism given by its values on basis keys. Basis images are
    memoized, so rules must be pure. Maps are shared between worker threads:
    the first image stored for a key wins.
    """

    def __init__(self, name: str, rule: Callable[[BasisKey], LinearCombination]):
        self.name = name
        self._rule = rule
        self._cache: dict = {}
        self._lock = threading.Lock()

    def on_basis(self, key) -> LinearCombination:
        image = self._cache.get(key)
        if image is None:
            # rules recurse into on_basis, so the lock is not held while computing
            computed = self._rule(key)
            with self._lock:
                image = self._cache.setdefault(key, computed)
        return image

    def __call__(self, x) -> LinearCombination:
        return lc_apply(self.on_basis, as_combination(x))

    def __repr__(self) -> str:
        return f"GradedMap({self.name})"


def identity_map() -> GradedMap:
    return GradedMap("id", LinearCombination.basis)


def unit_counit_map(unit) -> GradedMap:
    """ηε: keeps the degree-0 part, which is a multiple of the unit."""

    def rule(key) -> LinearCombination:
        if key.degree == 0:
            return LinearCombination.basis(unit)
        return LinearCombination.zero(kind=key.kind)

    return GradedMap("ηε", rule)


def difference_map(f: GradedMap, g: GradedMap) -> GradedMap:
    return GradedMap(f"({f.name} - {g.name})", lambda key: f.on_basis(key) - g.on_basis(key))


def convolve(
    f: GradedMap,
    g: GradedMap,
    product: Callable[[BasisKey, BasisKey], object],
    coproduct: Callable[[BasisKey], TensorCombination],
) -> GradedMap:
    """(f ⋆ g)(x) = product ∘ (f ⊗ g) ∘ coproduct(x)."""

    def rule(key) -> LinearCombination:
        result = LinearCombination(kind=key.kind)
        for (a, b), coeff in coproduct(key).terms.items():
            fa, gb = f.on_basis(a), g.on_basis(b)
            if fa.is_zero() or gb.is_zero():
                continue
            result = result + bilinear(product, fa, gb).scale(coeff)
        return result

    return GradedMap(f"({f.name} ⋆ {g.name})", rule)


class ConvolutionPowers:
    """f^{⋆0} = ηε, f^{⋆k} = f ⋆ f^{⋆(k-1)}, built lazily."""

    def __init__(self, f: GradedMap, product, coproduct, unit):
        self.f = f
        self.product = product
        self.coproduct = coproduct
        self.powers = [unit_counit_map(unit), f]
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> GradedMap:
        if k < len(self.powers):
            return self.powers[k]
        with self._lock:
            while len(self.powers) <= k:
                self.powers.append(
                    convolve(self.f, self.powers[-1], self.product, self.coproduct)
                )
            return self.powers[k]


def graded_log_identity(
    product,
    coproduct,
    unit,
    n_max: int,
    mode: ScalarMode = ScalarMode.RATIONAL,
) -> GradedMap:
    """
    e¹ = Σ_{k≥1} (-1)^{k-1}/k · J^{⋆k} with J = id - ηε. On degree n the series
    stops at k = n because J vanishes in degree 0.
    """
    if mode != ScalarMode.RATIONAL:
        raise DomainError("The logarithm of the identity needs rational scalars.")
    J = difference_map(identity_map(), unit_counit_map(unit))
    powers = ConvolutionPowers(J, product, coproduct, unit)

    def rule(key) -> LinearCombination:
        n = key.degree
        if n > n_max:
            raise DomainError(f"Degree {n} exceeds the configured bound {n_max}.")
        result = LinearCombination(kind=key.kind)
        for k in range(1, n + 1):
            result = result + powers[k].on_basis(key).scale(
                Fraction((-1) ** (k - 1), k)
            )
        logger.debug(f"e1({key}) has {len(result)} terms")
        return result

    return GradedMap("e¹", rule)


def graded_exp(f: GradedMap, product, coproduct, unit) -> GradedMap:
    """exp⋆(f) = Σ_{k≥0} f^{⋆k}/k!, truncated at k = degree; f must vanish in degree 0."""
    powers = ConvolutionPowers(f, product, coproduct, unit)

    def rule(key) -> LinearCombination:
        result = LinearCombination(kind=key.kind)
        for k in range(0, key.degree + 1):
            result = result + powers[k].on_basis(key).scale(Fraction(1, factorial(k)))
        return result

    return GradedMap(f"exp⋆({f.name})", rule)
