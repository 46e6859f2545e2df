"""
Mixed multiplicities of an m-primary ideal J and ideals I_1..I_s in a polynomial ring

The counting function is l(J^n0 I^v / J^(n0+1) I^v), a polynomial of total degree q - 1
for large arguments whose normalized top coefficients form the table of mixed
multiplicities. Superficial elements are checked on finite windows of exponents only.
"""

import dataclasses
import itertools
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

from .hilbert import FittedPolynomial, fit_polynomial
from .kernel import (
    Monomial,
    MonomialIdeal,
    colon_by_monomial,
    contains,
    ideal_sum,
    intersect,
    minimalize,
    monomials_of_degree,
    power,
    product,
    restrict_ideal,
    saturate_by_ideal,
)
from .mixedmult_helper import (
    DegenerateError,
    InternalConsistencyError,
    PreconditionError,
    ResourceError,
    Settings,
    ValidationError,
    compositions,
    factorial_product,
    format_tuple,
    resolve_settings,
    shifted,
    unit_vector,
)

log = logging.getLogger(__name__)


######## TYPES ########


@dataclasses.dataclass(frozen=True)
class IdealSystem:
    """
    An m-primary ideal J with ideals I_1..I_s of k[variables]

    Index 0 of every exponent tuple refers to J, index i >= 1 to I_i.
    """

    variables: Tuple[str, ...]
    j_ideal: MonomialIdeal
    ideals: Tuple[MonomialIdeal, ...]
    primary_exponent: int

    @property
    def q(self) -> int:
        return len(self.variables)

    @property
    def s(self) -> int:
        return len(self.ideals)

    def family(self, index: int) -> MonomialIdeal:
        if not 0 <= index <= self.s:
            raise ValidationError(f"Ideal index {index} is outside 0..{self.s}")
        return self.j_ideal if index == 0 else self.ideals[index - 1]

    def product(self, exponents: Sequence[int]) -> MonomialIdeal:
        """J^n0 * I_1^n1 * ... * I_s^ns"""
        if len(exponents) != self.s + 1:
            raise ValidationError(f"Exponent tuple {tuple(exponents)} needs {self.s + 1} entries")
        result = MonomialIdeal.unit()
        for index, exponent in enumerate(exponents):
            result = product(result, power(self.family(index), exponent))
        return result

    def __str__(self) -> str:
        return f"({self.j_ideal}; {', '.join(str(ideal) for ideal in self.ideals)})"


@dataclasses.dataclass(frozen=True)
class BhattacharyaTable:
    q: int
    polynomial: FittedPolynomial
    entries: Dict[Tuple[int, ...], int]

    def __getitem__(self, type_vector: Sequence[int]) -> int:
        return self.entries[tuple(type_vector)]

    def as_strings(self) -> Dict[str, int]:
        return {format_tuple(k): e for k, e in self.entries.items()}


@dataclasses.dataclass(frozen=True)
class SuperficialVerdict:
    """Outcome of a superficiality check; `failed_at` is None when every tuple passed"""

    verified: bool
    window: Tuple[int, int]
    failed_at: Optional[Tuple[int, ...]] = None
    failed_condition: Optional[str] = None


@dataclasses.dataclass(frozen=True)
class Theorem45Report:
    type_vector: Tuple[int, ...]
    sequence: Tuple[Tuple[str, int], ...]
    steps: Tuple[SuperficialVerdict, ...]
    table_entry: int
    saturated_ideal: MonomialIdeal
    dimension: int
    expected_dimension: int
    samuel_multiplicity: Optional[int]

    @property
    def dimension_ok(self) -> bool:
        return self.dimension == self.expected_dimension

    @property
    def holds(self) -> bool:
        return self.dimension_ok and self.samuel_multiplicity == self.table_entry


######## VALIDATION ########


def _pure_powers(ideal: MonomialIdeal) -> Dict[str, int]:
    exponents: Dict[str, int] = {}
    for g in ideal.generators:
        if len(g.exponents) == 1:
            var, exp = g.exponents[0]
            exponents[var] = min(exp, exponents.get(var, exp))
    return exponents


def is_m_primary(ideal: MonomialIdeal, variables: Sequence[str]) -> bool:
    if ideal.is_unit:
        return True
    pure = _pure_powers(ideal)
    return all(var in pure for var in variables)


def primary_exponent(ideal: MonomialIdeal, variables: Sequence[str]) -> int:
    """Least c with m^c contained in the ideal"""
    if not is_m_primary(ideal, variables):
        raise PreconditionError(f"{ideal} is not primary to the maximal ideal")
    if ideal.is_unit:
        return 0
    bound = sum(exp - 1 for exp in _pure_powers(ideal).values()) + 1
    for c in range(1, bound + 1):
        if all(contains(ideal, m) for m in monomials_of_degree(variables, c)):
            return c
    return bound


def validate_system(variables: Sequence[str], j_ideal: MonomialIdeal, ideals: Sequence[MonomialIdeal]) -> IdealSystem:
    variables = tuple(variables)
    if not variables or len(set(variables)) != len(variables):
        raise ValidationError("An ideal system needs distinct variables")
    for index, ideal in enumerate((j_ideal, *ideals)):
        unknown = ideal.variables - set(variables)
        if unknown:
            raise ValidationError(f"Ideal {index} uses unknown variables {', '.join(sorted(unknown))}")
        if index > 0 and ideal.is_zero:
            raise ValidationError(f"Ideal I_{index} is zero")
    if not ideals:
        raise ValidationError("An ideal system needs at least one ideal besides J")
    if not is_m_primary(j_ideal, variables):
        raise ValidationError(f"J = {j_ideal} is not primary to the maximal ideal")
    return IdealSystem(variables, j_ideal, tuple(ideals), primary_exponent(j_ideal, variables))


def restrict_system(system: IdealSystem, var: str) -> IdealSystem:
    """The system in the polynomial ring with `var` set to zero"""
    if var not in system.variables:
        raise ValidationError(f"Unknown variable '{var}'")
    remaining = tuple(v for v in system.variables if v != var)
    ideals = tuple(restrict_ideal(ideal, var) for ideal in system.ideals)
    for index, ideal in enumerate(ideals, start=1):
        if ideal.is_zero:
            raise PreconditionError(f"I_{index} becomes zero once {var} is set to zero")
    return validate_system(remaining, restrict_ideal(system.j_ideal, var), ideals)


######## LENGTHS ########


def _check_exponents(system: IdealSystem, exponents: Sequence[int]) -> Tuple[int, ...]:
    exponents = tuple(exponents)
    if len(exponents) != system.s + 1 or any(e < 0 for e in exponents):
        raise ValidationError(f"Exponents {exponents} must be {system.s + 1} non-negative integers")
    return exponents


def t_length(system: IdealSystem, exponents: Sequence[int], settings: Optional[Settings] = None) -> int:
    """l(J^n0 I^v / J^(n0+1) I^v) by counting monomials g*w of A outside J*A"""
    settings = resolve_settings(settings)
    exponents = _check_exponents(system, exponents)
    upper = system.product(exponents)
    lower = product(system.j_ideal, upper)
    if upper.max_total_degree() + system.primary_exponent > settings.degree_cap:
        raise ResourceError(f"Enumeration degree at {exponents} exceeds the cap {settings.degree_cap}")
    fillers = [w for degree in range(system.primary_exponent) for w in monomials_of_degree(system.variables, degree)]
    candidates = {g * w for g in upper.generators for w in fillers}
    return sum(1 for m in candidates if not contains(lower, m))


def _colength(ideal: MonomialIdeal, variables: Sequence[str], bound: int, settings: Settings) -> int:
    """Monomials outside the ideal, all of which have degree below `bound`"""
    if bound > settings.degree_cap:
        raise ResourceError(f"Enumeration degree {bound} exceeds the cap {settings.degree_cap}")
    return sum(
        1 for degree in range(bound) for m in monomials_of_degree(variables, degree) if not contains(ideal, m)
    )


def direct_colength(system: IdealSystem, exponents: Sequence[int], settings: Optional[Settings] = None) -> int:
    """l(R / J^n0 I^v), defined when every I_i with a positive exponent is m-primary"""
    settings = resolve_settings(settings)
    exponents = _check_exponents(system, exponents)
    bound = exponents[0] * system.primary_exponent
    for index, exponent in enumerate(exponents[1:], start=1):
        if exponent == 0:
            continue
        ideal = system.family(index)
        if not is_m_primary(ideal, system.variables):
            raise PreconditionError(f"I_{index} = {ideal} is not primary to the maximal ideal")
        bound += exponent * primary_exponent(ideal, system.variables)
    return _colength(system.product(exponents), system.variables, bound, settings)


######## TABLES ########


def samuel_function(
    j_ideal: MonomialIdeal, base_ideal: MonomialIdeal, variables: Sequence[str], settings: Optional[Settings] = None
) -> Tuple[int, int]:
    """Dimension t and multiplicity e of J on R/A, from l(R / (A + J^(n+1))) = e n^t / t! + ..."""
    settings = resolve_settings(settings)
    variables = tuple(variables)
    if base_ideal.is_unit:
        raise DegenerateError("R/A is the zero ring")
    combined = ideal_sum(j_ideal, base_ideal)
    if not is_m_primary(combined, variables):
        raise PreconditionError(f"J + A = {combined} is not primary to the maximal ideal")
    c = primary_exponent(combined, variables)
    start = (settings.base if settings.base is not None else 1,)
    fitted = fit_polynomial(
        lambda p: _colength(ideal_sum(base_ideal, power(j_ideal, p[0] + 1)), variables, c * (p[0] + 1), settings),
        start,
        len(variables),
        settings,
        "hilbert-samuel",
    )
    if fitted.poly.is_zero:
        raise InternalConsistencyError("Hilbert-Samuel polynomial vanishes on a non-zero ring")
    dimension = fitted.total_degree
    value = fitted.poly.LC() * math.factorial(dimension)
    if not value.is_integer or value <= 0:
        raise InternalConsistencyError(f"Hilbert-Samuel multiplicity {value} is not a positive integer")
    return dimension, int(value)


def hilbert_samuel(
    j_ideal: MonomialIdeal, base_ideal: MonomialIdeal, variables: Sequence[str], settings: Optional[Settings] = None
) -> int:
    return samuel_function(j_ideal, base_ideal, variables, settings)[1]


def bhattacharya_table(system: IdealSystem, settings: Optional[Settings] = None) -> BhattacharyaTable:
    """Fit the counting function in s + 1 counters and read off the normalized top coefficients"""
    settings = resolve_settings(settings)
    if settings.base is not None:
        start = (settings.base,) * (system.s + 1)
    else:
        start = tuple(system.family(i).max_total_degree() + 1 for i in range(system.s + 1))
    fitted = fit_polynomial(lambda v: t_length(system, v, settings), start, system.q - 1, settings, "bhattacharya")
    if fitted.total_degree != system.q - 1:
        raise InternalConsistencyError(f"Counting polynomial has degree {fitted.total_degree}, expected {system.q - 1}")
    entries: Dict[Tuple[int, ...], int] = {}
    for k in compositions(system.q - 1, system.s + 1):
        value = fitted.coefficient(k) * factorial_product(k)
        if not value.is_integer or value < 0:
            raise InternalConsistencyError(f"Mixed multiplicity of type {k} is {value}, not a non-negative integer")
        entries[k] = int(value)
    pure = entries[(system.q - 1,) + (0,) * system.s]
    samuel = hilbert_samuel(system.j_ideal, MonomialIdeal.zero(), system.variables, settings)
    if pure != samuel:
        raise InternalConsistencyError(f"Table entry of J alone is {pure}, its multiplicity is {samuel}")
    return BhattacharyaTable(system.q, fitted, entries)


######## SUPERFICIAL ELEMENTS ########


def _window_tuples(
    system: IdealSystem, window: Optional[Tuple[int, int]]
) -> Tuple[Tuple[int, int], List[Tuple[int, ...]]]:
    if window is None:
        start = max(system.family(i).max_total_degree() for i in range(system.s + 1))
        window = (start, start + 2)
    low, high = window
    if low < 0 or high < low:
        raise ValidationError(f"Malformed window {window}")
    return window, list(itertools.product(range(low, high + 1), repeat=system.s + 1))


def _require_member(system: IdealSystem, var: str, index: int) -> Monomial:
    x = Monomial.variable(var)
    if var not in system.variables or not contains(system.family(index), x):
        raise PreconditionError(f"{var} is not an element of ideal {index}")
    return x


def is_superficial(
    system: IdealSystem,
    var: str,
    index: int,
    window: Optional[Tuple[int, int]] = None,
) -> SuperficialVerdict:
    """
    Check that `var` in ideal `index` is superficial for the system on a window of exponents

    Both conditions are tested at every tuple v:
        (J P(v + e_i) : x) ∩ P(v) = J P(v)   and   (x) ∩ P(v + e_i) = x P(v),
    where P(v) = J^v0 I_1^v1 ... I_s^vs.
    """
    x = _require_member(system, var, index)
    window, tuples = _window_tuples(system, window)
    principal = minimalize([x])
    e = unit_vector(system.s + 1, index)
    for v in tuples:
        current = system.product(v)
        following = system.product(shifted(v, e))
        reduced = product(system.j_ideal, current)
        if intersect(colon_by_monomial(product(system.j_ideal, following), x), current) != reduced:
            return SuperficialVerdict(False, window, v, "colon")
        if intersect(principal, following) != product(principal, current):
            return SuperficialVerdict(False, window, v, "intersection")
    log.debug("%s is superficial for ideal %d on window %s", var, index, window)
    return SuperficialVerdict(True, window)


def is_classically_superficial(
    system: IdealSystem, var: str, index: int, c: int, window: Optional[Tuple[int, int]] = None
) -> SuperficialVerdict:
    """(F^(v + e_i) : x) ∩ F^(v with v_i = c) = F^v for every window tuple with v_i >= c"""
    x = _require_member(system, var, index)
    if c < 0:
        raise ValidationError(f"c must be non-negative, got {c}")
    window, tuples = _window_tuples(system, window)
    e = unit_vector(system.s + 1, index)
    for v in tuples:
        if v[index] < c:
            continue
        clipped = v[:index] + (c,) + v[index + 1 :]
        left = intersect(colon_by_monomial(system.product(shifted(v, e)), x), system.product(clipped))
        if left != system.product(v):
            return SuperficialVerdict(False, window, v, "classical")
    return SuperficialVerdict(True, window)


######## SATURATED SEQUENCES ########


def parse_sequence_member(text: str, system: IdealSystem) -> Tuple[str, int]:
    """`x` or `x:i`; without an index the first ideal I_i (i >= 1) containing x is used"""
    var, _, index = text.partition(":")
    var = var.strip()
    if index:
        try:
            return var, int(index)
        except ValueError:
            raise ValidationError(f"Malformed sequence member '{text}'") from None
    for candidate in range(1, system.s + 1):
        if var in system.variables and contains(system.family(candidate), Monomial.variable(var)):
            return var, candidate
    raise PreconditionError(f"{var} lies in none of the ideals I_1..I_{system.s}")


def theorem45_check(
    system: IdealSystem,
    type_vector: Sequence[int],
    sequence: Sequence[Tuple[str, int]],
    settings: Optional[Settings] = None,
) -> Theorem45Report:
    """
    Compare a table entry with the multiplicity of J on R / ((sequence) : I^infinity)

    The sequence holds k_i superficial variables from each I_i (i >= 1), each checked on
    the default window of the system left after setting the earlier ones to zero.
    """
    settings = resolve_settings(settings)
    type_vector = tuple(type_vector)
    if len(type_vector) != system.s + 1 or sum(type_vector) != system.q - 1 or any(k < 0 for k in type_vector):
        raise PreconditionError(f"Type {type_vector} needs {system.s + 1} non-negative entries of total {system.q - 1}")
    table = bhattacharya_table(system, settings)
    entry = table[type_vector]
    if entry == 0:
        raise PreconditionError(f"The table entry of type {type_vector} is zero")
    counts = [0] * (system.s + 1)
    for var, index in sequence:
        if not 1 <= index <= system.s:
            raise PreconditionError(f"Sequence member {var} must belong to one of I_1..I_{system.s}")
        counts[index] += 1
    if tuple(counts[1:]) != type_vector[1:]:
        raise PreconditionError(
            f"Sequence has {tuple(counts[1:])} members per ideal, the type asks for {type_vector[1:]}"
        )

    steps: List[SuperficialVerdict] = []
    current = system
    for position, (var, index) in enumerate(sequence, start=1):
        verdict = is_superficial(current, var, index)
        if not verdict.verified:
            raise PreconditionError(
                f"Step {position}: {var} is not superficial for I_{index}, "
                f"{verdict.failed_condition} condition fails at {verdict.failed_at}"
            )
        steps.append(verdict)
        if position < len(sequence):
            current = restrict_system(current, var)

    all_ideals = MonomialIdeal.unit()
    for ideal in system.ideals:
        all_ideals = product(all_ideals, ideal)
    generated = MonomialIdeal.of_variables(var for var, _ in sequence)
    saturated = saturate_by_ideal(generated, all_ideals)
    dimension, multiplicity = samuel_function(system.j_ideal, saturated, system.variables, settings)
    expected = system.q - len(sequence)
    if dimension != expected:
        log.error("Dimension of R/A is %d, expected %d", dimension, expected)
        return Theorem45Report(type_vector, tuple(sequence), tuple(steps), entry, saturated, dimension, expected, None)
    if multiplicity != entry:
        log.error("e%s = %d but the multiplicity of J on R/A is %d", type_vector, entry, multiplicity)
    return Theorem45Report(
        type_vector, tuple(sequence), tuple(steps), entry, saturated, dimension, expected, multiplicity
    )
