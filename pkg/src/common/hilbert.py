"""
Multigraded Hilbert functions and polynomials of monomial quotients

Counts of standard monomials are computed by inclusion-exclusion over the lcm lattice
of the generators and interpolated into exact rational polynomials. A fitted polynomial
is only accepted once it agrees with the counts on a validation window beyond the
interpolation grid; otherwise the base is doubled until the `max_base` guard trips.
"""

import dataclasses
import functools
import itertools
import logging
import math
import operator
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

from .kernel import (
    BlockRingSpec,
    Monomial,
    MonomialIdeal,
    MultiDegree,
    contains,
    count_free_monomials,
    irrelevant_products,
    monomials_of_multidegree,
    multidegree_of,
    radical,
    saturate_by_ideal,
)
from .mixedmult_helper import (
    DegenerateError,
    GuardError,
    InternalConsistencyError,
    ResourceError,
    Settings,
    ValidationError,
    compositions,
    factorial_product,
    format_tuple,
    multinomial,
    resolve_settings,
)

log = logging.getLogger(__name__)


######## TYPES ########


@dataclasses.dataclass(frozen=True)
class GradedQuotient:
    """The quotient R / ideal of the block-graded ring"""

    spec: BlockRingSpec
    ideal: MonomialIdeal

    def __post_init__(self) -> None:
        unknown = [var for var in self.ideal.variables if not self.spec.has_variable(var)]
        if unknown:
            raise ValidationError(f"Ideal uses variables outside the ring: {', '.join(sorted(unknown))}")

    def with_ideal(self, ideal: MonomialIdeal) -> "GradedQuotient":
        return GradedQuotient(self.spec, ideal)


@dataclasses.dataclass(frozen=True)
class FittedPolynomial:
    """An exact polynomial fitted to a counting function, with the base it was validated from"""

    poly: sympy.Poly
    base: Tuple[int, ...]
    validated_window: int
    escalations: int = 0

    @property
    def total_degree(self) -> int:
        return -1 if self.poly.is_zero else self.poly.total_degree()

    def coefficient(self, exponents: Sequence[int]) -> sympy.Rational:
        return self.poly.nth(*exponents)

    def __call__(self, point: Sequence[int]) -> sympy.Rational:
        return self.poly(*point)

    def __str__(self) -> str:
        return str(self.poly.as_expr())


@dataclasses.dataclass(frozen=True)
class DiagonalProfile:
    """The diagonal Hilbert polynomial and its degree plus one"""

    ell: int
    diag_poly: FittedPolynomial


@dataclasses.dataclass(frozen=True)
class MultiPolynomial:
    """The multigraded Hilbert polynomial of a non-vanishing quotient"""

    ell: int
    fitted: FittedPolynomial

    @property
    def poly(self) -> sympy.Poly:
        return self.fitted.poly

    @property
    def base(self) -> MultiDegree:
        return self.fitted.base


@dataclasses.dataclass(frozen=True)
class MixedMultiplicityTable:
    ell: int
    entries: Dict[Tuple[int, ...], int]

    def __getitem__(self, type_vector: Sequence[int]) -> int:
        return self.entries[tuple(type_vector)]

    def total(self) -> int:
        return sum(self.entries.values())

    def positive_types(self) -> List[Tuple[int, ...]]:
        return [k for k, e in self.entries.items() if e > 0]

    def as_strings(self) -> Dict[str, int]:
        return {format_tuple(k): e for k, e in self.entries.items()}


######## INTERPOLATION ########


def _newton_basis(symbol: sympy.Symbol, start: int, k: int, symbols: Sequence[sympy.Symbol]) -> sympy.Poly:
    expr = sympy.Mul(*[symbol - start - j for j in range(k)]) / sympy.factorial(k)
    return sympy.Poly(expr, *symbols, domain="QQ")


def _newton_fit(
    values: Dict[Tuple[int, ...], int], base: Sequence[int], degree: int, symbols: Sequence[sympy.Symbol]
) -> sympy.Poly:
    """Tensor forward differences on base + [0..degree]^d, expanded in the monomial basis"""
    table = dict(values)
    for axis in range(len(base)):
        for step in range(1, degree + 1):
            for offset in sorted(table, key=operator.itemgetter(axis), reverse=True):
                if offset[axis] >= step:
                    previous = offset[:axis] + (offset[axis] - 1,) + offset[axis + 1 :]
                    table[offset] = table[offset] - table[previous]
    bases = [
        [_newton_basis(symbols[axis], base[axis], k, symbols) for k in range(degree + 1)] for axis in range(len(base))
    ]
    poly = sympy.Poly(0, *symbols, domain="QQ")
    for offset, difference in sorted(table.items()):
        if difference == 0:
            continue
        term = sympy.Poly(difference, *symbols, domain="QQ")
        for axis, k in enumerate(offset):
            term = term * bases[axis][k]
        poly = poly + term
    return poly


def fit_polynomial(
    evaluate: Callable[[Tuple[int, ...]], int],
    start: Sequence[int],
    degree: int,
    settings: Settings,
    label: str,
    symbol_prefix: str = "n",
) -> FittedPolynomial:
    """
    Interpolate `evaluate` by a polynomial of degree at most `degree` per axis

    The grid is base + [0..degree]^d and validation runs on base + [0..degree+window]^d.
    On disagreement every base entry is doubled; a GuardError is raised when some entry
    would exceed `settings.max_base`.
    """
    counters = len(start)
    symbols = sympy.symbols(f"{symbol_prefix}1:{counters + 1}")
    base = tuple(start)
    escalations = 0
    cache: Dict[Tuple[int, ...], int] = {}

    def value(point: Tuple[int, ...]) -> int:
        if point not in cache:
            cache[point] = evaluate(point)
        return cache[point]

    while True:
        if any(entry > settings.max_base for entry in base):
            raise GuardError(f"{label}: no stable polynomial found up to base {settings.max_base} (last base {base})")
        log.debug("%s: fitting degree %d at base %s", label, degree, base)
        grid = {
            offset: value(tuple(b + o for b, o in zip(base, offset)))
            for offset in itertools.product(range(degree + 1), repeat=counters)
        }
        poly = _newton_fit(grid, base, degree, symbols)
        mismatch = None
        for offset in itertools.product(range(degree + 1 + settings.window), repeat=counters):
            point = tuple(b + o for b, o in zip(base, offset))
            if poly(*point) != value(point):
                mismatch = point
                break
        if mismatch is None:
            return FittedPolynomial(poly, base, settings.window, escalations)
        log.debug("%s: fit at base %s disagrees at %s, doubling", label, base, mismatch)
        base = tuple(max(1, 2 * entry) for entry in base)
        escalations += 1


######## COUNTING ########


@functools.lru_cache(maxsize=1024)
def inclusion_exclusion_terms(quotient: GradedQuotient) -> Tuple[Tuple[MultiDegree, int], ...]:
    """Multidegrees of lcms of generator subsets with their signed multiplicities"""
    terms: Dict[Monomial, int] = {Monomial(): 1}
    for generator in quotient.ideal.sorted_generators():
        for lcm, coefficient in list(terms.items()):
            key = lcm.lcm(generator)
            terms[key] = terms.get(key, 0) - coefficient
    collapsed: Dict[MultiDegree, int] = {}
    for monomial, coefficient in terms.items():
        degree = multidegree_of(monomial, quotient.spec)
        collapsed[degree] = collapsed.get(degree, 0) + coefficient
    return tuple(sorted((degree, c) for degree, c in collapsed.items() if c != 0))


def _check_multidegree(quotient: GradedQuotient, n: Sequence[int]) -> None:
    if len(n) != quotient.spec.d:
        raise ValidationError(f"Multidegree {tuple(n)} has {len(n)} entries, the ring has {quotient.spec.d} blocks")


def brute_force_count(quotient: GradedQuotient, n: MultiDegree, settings: Optional[Settings] = None) -> int:
    """Number of monomials of multidegree n outside the ideal, by enumeration"""
    settings = resolve_settings(settings)
    _check_multidegree(quotient, n)
    size = count_free_monomials(quotient.spec, n)
    if size > settings.enumeration_limit:
        raise ResourceError(f"Enumerating {size} monomials of multidegree {tuple(n)} exceeds the limit")
    if size == 0:
        return 0
    return sum(1 for m in monomials_of_multidegree(quotient.spec, n) if not contains(quotient.ideal, m))


def graded_count(quotient: GradedQuotient, n: MultiDegree, settings: Optional[Settings] = None) -> int:
    """Length of the degree-n component of the quotient; zero at negative multidegrees"""
    settings = resolve_settings(settings)
    _check_multidegree(quotient, n)
    if any(entry < 0 for entry in n) or quotient.ideal.is_unit:
        return 0
    if len(quotient.ideal.generators) > settings.ie_generator_limit:
        return brute_force_count(quotient, n, settings)
    spec = quotient.spec
    return sum(
        c * count_free_monomials(spec, tuple(a - b for a, b in zip(n, degree)))
        for degree, c in inclusion_exclusion_terms(quotient)
    )


def total_degree_count(quotient: GradedQuotient, total: int, settings: Optional[Settings] = None) -> int:
    """Number of standard monomials of total degree `total`, ignoring the blocks"""
    settings = resolve_settings(settings)
    if total < 0 or quotient.ideal.is_unit:
        return 0
    if len(quotient.ideal.generators) <= settings.ie_generator_limit:
        width = len(quotient.spec.variables)
        return sum(
            c * (math.comb(total - sum(degree) + width - 1, width - 1) if total >= sum(degree) else 0)
            for degree, c in inclusion_exclusion_terms(quotient)
        )
    return sum(graded_count(quotient, n, settings) for n in compositions(total, quotient.spec.d))


def polynomial_threshold(quotient: GradedQuotient) -> MultiDegree:
    """Smallest multidegree from which the Hilbert function agrees with its polynomial"""
    sizes = quotient.spec.sizes
    threshold = [0] * quotient.spec.d
    for degree, _ in inclusion_exclusion_terms(quotient):
        for axis, (a, b) in enumerate(zip(degree, sizes)):
            threshold[axis] = max(threshold[axis], a - b + 1)
    return tuple(threshold)


def _generator_lcm(quotient: GradedQuotient) -> Monomial:
    return functools.reduce(Monomial.lcm, quotient.ideal.generators, Monomial())


def fitting_threshold(quotient: GradedQuotient, settings: Settings) -> MultiDegree:
    """
    Multidegree from which the counting function agrees with its polynomial

    Within the inclusion-exclusion limit this is `polynomial_threshold`. Past it every lcm
    of a generator subset divides the lcm of all generators, whose multidegree bounds them.
    """
    if len(quotient.ideal.generators) <= settings.ie_generator_limit:
        return polynomial_threshold(quotient)
    degree = multidegree_of(_generator_lcm(quotient), quotient.spec)
    return tuple(max(0, a - b + 1) for a, b in zip(degree, quotient.spec.sizes))


def total_fitting_threshold(quotient: GradedQuotient, settings: Settings) -> int:
    """Total degree from which the total-degree counting function is a polynomial"""
    width = len(quotient.spec.variables)
    if len(quotient.ideal.generators) <= settings.ie_generator_limit:
        largest = max((sum(degree) for degree, _ in inclusion_exclusion_terms(quotient)), default=0)
    else:
        largest = _generator_lcm(quotient).total_degree
    return max(0, largest - width + 1)


######## VANISHING ########


def vanishing_test(quotient: GradedQuotient) -> bool:
    """True when the quotient is zero in all large multidegrees"""
    root = radical(quotient.ideal)
    return all(contains(root, q) for q in irrelevant_products(quotient.spec).generators)


@functools.lru_cache(maxsize=1024)
def irrelevant_saturation(quotient: GradedQuotient) -> MonomialIdeal:
    return saturate_by_ideal(quotient.ideal, irrelevant_products(quotient.spec))


######## POLYNOMIALS ########


def _start_base(quotient: GradedQuotient, settings: Settings) -> MultiDegree:
    # a grid below the threshold can agree with a wrong polynomial on the whole window
    if settings.base is not None:
        requested: MultiDegree = (settings.base,) * quotient.spec.d
    else:
        requested = tuple(entry + 1 for entry in quotient.ideal.max_multidegree(quotient.spec))
    threshold = fitting_threshold(quotient, settings)
    if any(t > r for r, t in zip(requested, threshold)):
        log.debug("Raising start base %s to the polynomial threshold %s", requested, threshold)
    return tuple(max(r, t) for r, t in zip(requested, threshold))


@functools.lru_cache(maxsize=512)
def _diagonal_profile(quotient: GradedQuotient, settings: Settings) -> DiagonalProfile:
    if vanishing_test(quotient):
        raise DegenerateError(f"The quotient by {quotient.ideal} vanishes in all large multidegrees")
    d = quotient.spec.d
    start = (max(_start_base(quotient, settings)),)
    bound = len(quotient.spec.variables) - d
    fitted = fit_polynomial(lambda p: graded_count(quotient, (p[0],) * d, settings), start, bound, settings, "diagonal")
    if fitted.poly.is_zero or fitted.poly.LC() <= 0:
        raise InternalConsistencyError(f"Diagonal polynomial {fitted} of a non-vanishing quotient is not positive")
    return DiagonalProfile(fitted.total_degree + 1, fitted)


def diagonal_profile(quotient: GradedQuotient, settings: Optional[Settings] = None) -> DiagonalProfile:
    return _diagonal_profile(quotient, resolve_settings(settings))


@functools.lru_cache(maxsize=512)
def _hilbert_polynomial(quotient: GradedQuotient, settings: Settings) -> MultiPolynomial:
    profile = _diagonal_profile(quotient, settings)
    fitted = fit_polynomial(
        lambda n: graded_count(quotient, n, settings),
        _start_base(quotient, settings),
        profile.ell - 1,
        settings,
        "hilbert",
    )
    if fitted.total_degree != profile.ell - 1:
        raise InternalConsistencyError(
            f"Hilbert polynomial has total degree {fitted.total_degree}, the diagonal says {profile.ell - 1}"
        )
    return MultiPolynomial(profile.ell, fitted)


def hilbert_polynomial(quotient: GradedQuotient, settings: Optional[Settings] = None) -> MultiPolynomial:
    return _hilbert_polynomial(quotient, resolve_settings(settings))


def mixed_multiplicity_table(
    quotient: GradedQuotient, settings: Optional[Settings] = None
) -> MixedMultiplicityTable:
    """e(k) = k! * coefficient of n^k over all types k with |k| = ell - 1"""
    polynomial = hilbert_polynomial(quotient, settings)
    entries: Dict[Tuple[int, ...], int] = {}
    for k in compositions(polynomial.ell - 1, quotient.spec.d):
        value = polynomial.fitted.coefficient(k) * factorial_product(k)
        if not value.is_integer or value < 0:
            raise InternalConsistencyError(f"Mixed multiplicity of type {k} is {value}, not a non-negative integer")
        entries[k] = int(value)
    if not any(entries.values()):
        raise InternalConsistencyError("All mixed multiplicities vanish for a non-vanishing quotient")
    return MixedMultiplicityTable(polynomial.ell, entries)


def diagonal_identity(quotient: GradedQuotient, settings: Optional[Settings] = None) -> Tuple[int, int]:
    """(ell-1)! times the diagonal leading coefficient, and the multinomially weighted table sum"""
    profile = diagonal_profile(quotient, settings)
    table = mixed_multiplicity_table(quotient, settings)
    diagonal_side = profile.diag_poly.poly.LC() * math.factorial(profile.ell - 1)
    table_side = sum(multinomial(k) * e for k, e in table.entries.items())
    if not diagonal_side.is_integer:
        raise InternalConsistencyError(f"Normalized diagonal leading coefficient {diagonal_side} is not an integer")
    return int(diagonal_side), table_side


def total_multiplicity(quotient: GradedQuotient, settings: Optional[Settings] = None) -> Tuple[int, int]:
    """Krull dimension and multiplicity of the quotient for the total-degree grading"""
    settings = resolve_settings(settings)
    if quotient.ideal.is_unit:
        raise DegenerateError("The quotient by the unit ideal is zero")
    requested = settings.base if settings.base is not None else quotient.ideal.max_total_degree() + 1
    start = (max(requested, total_fitting_threshold(quotient, settings)),)
    bound = len(quotient.spec.variables) - 1
    fitted = fit_polynomial(
        lambda p: total_degree_count(quotient, p[0], settings), start, bound, settings, "total"
    )
    if fitted.poly.is_zero:
        return 0, sum(total_degree_count(quotient, t, settings) for t in range(start[0]))
    value = fitted.poly.LC() * math.factorial(fitted.total_degree)
    if not value.is_integer or value <= 0:
        raise InternalConsistencyError(f"Total multiplicity {value} is not a positive integer")
    return fitted.total_degree + 1, int(value)
