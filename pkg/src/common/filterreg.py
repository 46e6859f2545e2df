"""
Filter-regular variables, sequence search and positivity certificates

A variable x is filter-regular on R/I when (I : x) is contained in the saturation of I by
the products of one variable from each block. Certificates are sequences of such variables,
each one filter-regular modulo the previous ones, of a prescribed type.
"""

import dataclasses
import enum
import itertools
import logging
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from natsort import natsorted

from .hilbert import (
    GradedQuotient,
    diagonal_profile,
    graded_count,
    irrelevant_saturation,
    mixed_multiplicity_table,
    polynomial_threshold,
    vanishing_test,
)
from .kernel import Monomial, MonomialIdeal, colon_by_monomial, ideal_sum
from .mixedmult_helper import (
    DegenerateError,
    InternalConsistencyError,
    PreconditionError,
    Settings,
    ValidationError,
    componentwise_max,
    resolve_settings,
    shifted,
    unit_vector,
)

log = logging.getLogger(__name__)


######## TYPES ########


@dataclasses.dataclass(frozen=True)
class FilterRegularStep:
    variable: str
    block: int
    colon: MonomialIdeal
    saturation: MonomialIdeal


@dataclasses.dataclass(frozen=True)
class FilterRegularCertificate:
    """A filter-regular sequence of variables together with the quotient it cuts out"""

    steps: Tuple[FilterRegularStep, ...]
    type_vector: Tuple[int, ...]
    quotient: GradedQuotient

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(step.variable for step in self.steps)

    @property
    def sequence(self) -> Tuple[Tuple[str, int], ...]:
        return tuple((step.variable, step.block) for step in self.steps)


class Verdict(enum.Enum):
    POSITIVE = "positive"
    ZERO = "zero"
    ZERO_WITH_MAXIMAL_SEQUENCE_WITNESS = "zero-with-maximal-sequence-witness"
    POSITIVE_WITHOUT_VARIABLE_SEQUENCE = "positive-without-variable-sequence"


@dataclasses.dataclass(frozen=True)
class PositivityReport:
    type_vector: Tuple[int, ...]
    verdict: Verdict
    coefficient_e: int
    pipeline_e: Optional[int] = None
    certificate: Optional[FilterRegularCertificate] = None
    stabilization_index: Optional[int] = None
    witness: Optional[FilterRegularCertificate] = None


@dataclasses.dataclass
class SearchStats:
    """Mutable node counter of a backtracking search"""

    budget: int
    nodes: int = 0
    exhausted: bool = False

    def spend(self) -> bool:
        if self.nodes >= self.budget:
            self.exhausted = True
            return False
        self.nodes += 1
        return True


######## SINGLE STEPS ########


def _require_variable(quotient: GradedQuotient, var: str) -> int:
    if not quotient.spec.has_variable(var):
        raise ValidationError(f"Unknown variable '{var}'")
    return quotient.spec.block_of(var)


def _filter_regular_step(quotient: GradedQuotient, var: str) -> Optional[FilterRegularStep]:
    block = _require_variable(quotient, var)
    colon = colon_by_monomial(quotient.ideal, Monomial.variable(var))
    saturation = irrelevant_saturation(quotient)
    if not colon.is_subset(saturation):
        return None
    return FilterRegularStep(var, block, colon, saturation)


def is_filter_regular(quotient: GradedQuotient, var: str) -> bool:
    """True when `var` is filter-regular on a quotient that does not vanish eventually"""
    _require_variable(quotient, var)
    if vanishing_test(quotient):
        raise DegenerateError(f"The quotient by {quotient.ideal} vanishes in all large multidegrees")
    return _filter_regular_step(quotient, var) is not None


def cut(quotient: GradedQuotient, variables: Sequence[str]) -> GradedQuotient:
    for var in variables:
        _require_variable(quotient, var)
    return quotient.with_ideal(ideal_sum(quotient.ideal, MonomialIdeal.of_variables(variables)))


def verify_sequence(quotient: GradedQuotient, variables: Sequence[str]) -> FilterRegularCertificate:
    """Check a user supplied sequence step by step and return its certificate"""
    steps: List[FilterRegularStep] = []
    counts = [0] * quotient.spec.d
    current = quotient
    for position, var in enumerate(variables, start=1):
        _require_variable(quotient, var)
        if vanishing_test(current):
            raise PreconditionError(f"Step {position} ({var}): the quotient already vanishes in all large multidegrees")
        step = _filter_regular_step(current, var)
        if step is None:
            earlier = ", ".join(variables[: position - 1]) or "nothing"
            raise PreconditionError(f"Step {position}: {var} is not filter-regular modulo {earlier}")
        steps.append(step)
        counts[step.block] += 1
        current = cut(current, [var])
    return FilterRegularCertificate(tuple(steps), tuple(counts), current)


######## SEARCH ########


Accept = Callable[[GradedQuotient, Tuple[int, ...], int], bool]


def _search(
    quotient: GradedQuotient,
    quota: Tuple[int, ...],
    accept: Accept,
    stats: SearchStats,
) -> Optional[FilterRegularCertificate]:
    """Depth-first search over variables, block-major with natural variable order"""
    spec = quotient.spec
    failed: Set[Tuple[FrozenSet[str], Tuple[int, ...]]] = set()
    ordered_blocks = [natsorted(block) for block in spec.blocks]

    def extend(
        current: GradedQuotient, remaining: Tuple[int, ...], steps: Tuple[FilterRegularStep, ...]
    ) -> Optional[FilterRegularCertificate]:
        if accept(current, remaining, len(steps)):
            counts = tuple(q - r for q, r in zip(quota, remaining))
            return FilterRegularCertificate(steps, counts, current)
        used = frozenset(step.variable for step in steps)
        if (used, remaining) in failed or not any(remaining) or vanishing_test(current):
            return None
        for block, variables in enumerate(ordered_blocks):
            if remaining[block] == 0:
                continue
            for var in variables:
                if var in used:
                    continue
                if not stats.spend():
                    return None
                step = _filter_regular_step(current, var)
                if step is None:
                    continue
                found = extend(
                    cut(current, [var]),
                    shifted(remaining, unit_vector(len(remaining), block), -1),
                    steps + (step,),
                )
                if found is not None:
                    return found
        if not stats.exhausted:
            failed.add((used, remaining))
        return None

    return extend(quotient, quota, ())


def _check_type(quotient: GradedQuotient, type_vector: Sequence[int]) -> Tuple[int, ...]:
    type_vector = tuple(type_vector)
    if len(type_vector) != quotient.spec.d or any(k < 0 for k in type_vector):
        raise ValidationError(f"Type {type_vector} must have {quotient.spec.d} non-negative entries")
    return type_vector


def find_sequence(
    quotient: GradedQuotient,
    type_vector: Sequence[int],
    settings: Optional[Settings] = None,
    stats: Optional[SearchStats] = None,
) -> Optional[FilterRegularCertificate]:
    """
    Search a filter-regular sequence of the given type

    Returns None when no sequence exists or when the node budget runs out; the caller
    can tell both apart through `stats.exhausted`.
    """
    settings = resolve_settings(settings)
    type_vector = _check_type(quotient, type_vector)
    profile = diagonal_profile(quotient, settings)
    if sum(type_vector) > profile.ell - 1:
        raise PreconditionError(f"Type {type_vector} is longer than ell - 1 = {profile.ell - 1}")
    stats = stats if stats is not None else SearchStats(settings.budget)
    certificate = _search(quotient, type_vector, lambda current, remaining, length: not any(remaining), stats)
    if certificate is None and stats.exhausted:
        log.warning("Sequence search of type %s ran out of its %d node budget", type_vector, stats.budget)
    return certificate


def find_blocked_sequence(
    quotient: GradedQuotient,
    type_vector: Sequence[int],
    settings: Optional[Settings] = None,
    stats: Optional[SearchStats] = None,
) -> Optional[FilterRegularCertificate]:
    """A non-empty filter-regular sequence within the type whose final cut vanishes eventually"""
    settings = resolve_settings(settings)
    type_vector = _check_type(quotient, type_vector)
    stats = stats if stats is not None else SearchStats(settings.budget)
    return _search(
        quotient, type_vector, lambda current, remaining, length: length > 0 and vanishing_test(current), stats
    )


def explore_maximal_lengths(
    quotient: GradedQuotient,
    settings: Optional[Settings] = None,
    stats: Optional[SearchStats] = None,
) -> List[int]:
    """Lengths of maximal filter-regular sequences of variables reachable within the budget"""
    settings = resolve_settings(settings)
    if vanishing_test(quotient):
        raise DegenerateError(f"The quotient by {quotient.ideal} vanishes in all large multidegrees")
    stats = stats if stats is not None else SearchStats(settings.budget)
    ordered = [var for block in quotient.spec.blocks for var in natsorted(block)]
    lengths: Set[int] = set()
    visited: Set[FrozenSet[str]] = set()

    def explore(current: GradedQuotient, used: FrozenSet[str]) -> None:
        if used in visited:
            return
        visited.add(used)
        if used and vanishing_test(current):
            lengths.add(len(used))
            return
        for var in ordered:
            if var in used:
                continue
            if not stats.spend():
                return
            if _filter_regular_step(current, var) is not None:
                explore(cut(current, [var]), used | {var})

    explore(quotient, frozenset())
    if stats.exhausted:
        log.warning("Maximal length exploration stopped after %d nodes", stats.nodes)
    return sorted(lengths)


######## DIAGONAL LENGTHS ########


def saturated_diagonal_length(quotient: GradedQuotient, n: int, settings: Optional[Settings] = None) -> int:
    saturated = quotient.with_ideal(irrelevant_saturation(quotient))
    return graded_count(saturated, (n,) * quotient.spec.d, settings)


def stabilization_index(quotient: GradedQuotient, settings: Optional[Settings] = None) -> int:
    """Smallest n0 from which the saturated diagonal length is constant over the window"""
    settings = resolve_settings(settings)
    saturated = quotient.with_ideal(irrelevant_saturation(quotient))
    if vanishing_test(saturated):
        raise PreconditionError("The saturated quotient vanishes, its diagonal has no constant length")
    profile = diagonal_profile(saturated, settings)
    if profile.ell != 1:
        raise PreconditionError(f"The saturated diagonal has degree {profile.ell - 1}, expected a constant")
    constant = profile.diag_poly.poly.LC()
    for n0 in range(profile.diag_poly.base[0] + 1):
        if all(
            saturated_diagonal_length(quotient, n, settings) == constant
            for n in range(n0, n0 + settings.window + 1)
        ):
            return n0
    raise InternalConsistencyError("The saturated diagonal length never reaches its constant value")


######## POSITIVITY ########


def positivity_certificate(
    quotient: GradedQuotient,
    type_vector: Sequence[int],
    settings: Optional[Settings] = None,
    stats: Optional[SearchStats] = None,
) -> PositivityReport:
    """
    Decide e(k) > 0 and certify it through a filter-regular sequence

    A positive entry is certified by a sequence of the type whose saturated diagonal
    length equals the entry; a zero entry may come with a shorter sequence whose final
    cut already vanishes.
    """
    settings = resolve_settings(settings)
    type_vector = _check_type(quotient, type_vector)
    table = mixed_multiplicity_table(quotient, settings)
    if sum(type_vector) != table.ell - 1:
        raise PreconditionError(f"Type {type_vector} must have total {table.ell - 1}")
    coefficient = table[type_vector]
    stats = stats if stats is not None else SearchStats(settings.budget)

    if coefficient > 0:
        certificate = find_sequence(quotient, type_vector, settings, stats)
        if certificate is None:
            log.warning("e%s = %d is positive but no variable sequence certifies it", type_vector, coefficient)
            return PositivityReport(type_vector, Verdict.POSITIVE_WITHOUT_VARIABLE_SEQUENCE, coefficient)
        cut_quotient = certificate.quotient
        saturated = cut_quotient.with_ideal(irrelevant_saturation(cut_quotient))
        if vanishing_test(saturated) or diagonal_profile(saturated, settings).ell != 1:
            variables = ", ".join(certificate.variables)
            raise InternalConsistencyError(f"Cut by {variables} does not leave a constant diagonal")
        index = stabilization_index(cut_quotient, settings)
        pipeline = saturated_diagonal_length(cut_quotient, index, settings)
        if pipeline != coefficient:
            raise InternalConsistencyError(f"Sequence length {pipeline} disagrees with e{type_vector} = {coefficient}")
        return PositivityReport(type_vector, Verdict.POSITIVE, coefficient, pipeline, certificate, index)

    witness = find_blocked_sequence(quotient, type_vector, settings, stats)
    if witness is not None:
        return PositivityReport(type_vector, Verdict.ZERO_WITH_MAXIMAL_SEQUENCE_WITNESS, coefficient, witness=witness)
    return PositivityReport(type_vector, Verdict.ZERO, coefficient)


######## WINDOW ORACLES ########


def validated_window(quotient: GradedQuotient, var: str, settings: Optional[Settings] = None) -> List[Tuple[int, ...]]:
    """Multidegrees beyond the thresholds of R/I and R/(I : x), shifted by the block of x"""
    settings = resolve_settings(settings)
    block = _require_variable(quotient, var)
    d = quotient.spec.d
    colon = quotient.with_ideal(colon_by_monomial(quotient.ideal, Monomial.variable(var)))
    threshold = componentwise_max([polynomial_threshold(quotient), polynomial_threshold(colon)], d)
    start = shifted(threshold, unit_vector(d, block))
    reach = max(settings.window, len(quotient.spec.variables) - d)
    return [shifted(start, offset) for offset in itertools.product(range(reach + 1), repeat=d)]


def colon_vanishes_on_window(quotient: GradedQuotient, var: str, settings: Optional[Settings] = None) -> bool:
    """True when (0 :_M x) is zero in every multidegree of the validated window"""
    colon = quotient.with_ideal(colon_by_monomial(quotient.ideal, Monomial.variable(var)))
    block = _require_variable(quotient, var)
    e = unit_vector(quotient.spec.d, block)
    return all(
        graded_count(quotient, shifted(n, e, -1), settings) == graded_count(colon, shifted(n, e, -1), settings)
        for n in validated_window(quotient, var, settings)
    )


def length_drop_identity(
    quotient: GradedQuotient, var: str, settings: Optional[Settings] = None
) -> Dict[Tuple[int, ...], Tuple[int, int]]:
    """
    Compare l(M/xM)_n with l(M)_n - l(M)_(n - e_i) over the validated window

    Returns the multidegrees where both sides differ, mapped to (left, right).
    """
    if not is_filter_regular(quotient, var):
        raise PreconditionError(f"{var} is not filter-regular")
    block = quotient.spec.block_of(var)
    e = unit_vector(quotient.spec.d, block)
    cut_quotient = cut(quotient, [var])
    failures = {}
    for n in validated_window(quotient, var, settings):
        left = graded_count(cut_quotient, n, settings)
        right = graded_count(quotient, n, settings) - graded_count(quotient, shifted(n, e, -1), settings)
        if left != right:
            failures[n] = (left, right)
    return failures
