"""
Monomials and monomial ideals over a polynomial ring whose variables are split into blocks

Every ideal is stored by its minimal generating set, so two ideals are equal exactly
when their dataclasses compare equal. All operations are pure and return new values.
"""

import dataclasses
import functools
import itertools
import logging
import math
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple

from natsort import natsort_keygen, natsorted
from typing_extensions import Self

from .mixedmult_helper import ValidationError

log = logging.getLogger(__name__)

MAX_EXPONENT = 2**63 - 1

MultiDegree = Tuple[int, ...]

natural_key = natsort_keygen()


######## RING ########


@dataclasses.dataclass(frozen=True)
class BlockRingSpec:
    """Ordered blocks of distinct variable names, block i carries the i-th grading"""

    blocks: Tuple[Tuple[str, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise ValidationError("A ring needs at least one block")
        seen = set()
        for index, block in enumerate(blocks):
            if not block:
                raise ValidationError(f"Block {index + 1} is empty")
            for var in block:
                if var in seen:
                    raise ValidationError(f"Variable '{var}' is declared twice")
                seen.add(var)

    @classmethod
    def from_lists(cls, blocks: Sequence[Sequence[str]]) -> Self:
        return cls(tuple(tuple(block) for block in blocks))

    @property
    def d(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(var for block in self.blocks for var in block)

    @functools.cached_property
    def _block_index(self) -> Dict[str, int]:
        return {var: index for index, block in enumerate(self.blocks) for var in block}

    def block_of(self, var: str) -> int:
        try:
            return self._block_index[var]
        except KeyError:
            raise ValidationError(f"Unknown variable '{var}'") from None

    def has_variable(self, var: str) -> bool:
        return var in self._block_index

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(block) + "]" for block in self.blocks) + "]"


######## MONOMIALS ########


@dataclasses.dataclass(frozen=True, order=True)
class Monomial:
    """A monomial as a sorted tuple of (variable, positive exponent) pairs, `()` is 1"""

    exponents: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        collected: Dict[str, int] = {}
        for var, exp in self.exponents:
            if not isinstance(exp, int) or exp < 0:
                raise ValidationError(f"Exponent of '{var}' must be a non-negative integer, got {exp}")
            collected[var] = collected.get(var, 0) + exp
            if collected[var] > MAX_EXPONENT:
                raise ValidationError(f"Exponent of '{var}' overflows")
        object.__setattr__(self, "exponents", tuple(sorted((v, e) for v, e in collected.items() if e > 0)))

    @classmethod
    def from_mapping(cls, exponents: Mapping[str, int]) -> Self:
        return cls(tuple(exponents.items()))

    @classmethod
    def variable(cls, var: str, exp: int = 1) -> Self:
        return cls(((var, exp),))

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse `x1^2*y3`, `1` is the unit monomial"""
        text = text.replace(" ", "")
        if text == "1":
            return cls()
        factors = []
        for factor in text.split("*"):
            var, _, exp = factor.partition("^")
            if not var or not (var[0].isalpha() or var[0] == "_"):
                raise ValidationError(f"Malformed monomial '{text}'")
            try:
                factors.append((var, int(exp) if exp else 1))
            except ValueError:
                raise ValidationError(f"Malformed exponent in monomial '{text}'") from None
        return cls(tuple(factors))

    @functools.cached_property
    def _lookup(self) -> Dict[str, int]:
        return dict(self.exponents)

    def degree_in(self, var: str) -> int:
        return self._lookup.get(var, 0)

    @property
    def support(self) -> FrozenSet[str]:
        return frozenset(var for var, _ in self.exponents)

    @property
    def total_degree(self) -> int:
        return sum(exp for _, exp in self.exponents)

    @property
    def is_unit(self) -> bool:
        return not self.exponents

    def divides(self, other: "Monomial") -> bool:
        theirs = other._lookup
        return all(theirs.get(var, 0) >= exp for var, exp in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exponents + other.exponents)

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exponents)
        for var, exp in other.exponents:
            merged[var] = max(merged.get(var, 0), exp)
        return Monomial.from_mapping(merged)

    def gcd(self, other: "Monomial") -> "Monomial":
        theirs = other._lookup
        return Monomial(tuple((var, min(exp, theirs.get(var, 0))) for var, exp in self.exponents))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other, `other` must divide self"""
        theirs = other._lookup
        return Monomial(tuple((var, exp - theirs.get(var, 0)) for var, exp in self.exponents))

    def squarefree(self) -> "Monomial":
        return Monomial(tuple((var, 1) for var, _ in self.exponents))

    def without(self, variables: Iterable[str]) -> "Monomial":
        dropped = set(variables)
        return Monomial(tuple((var, exp) for var, exp in self.exponents if var not in dropped))

    def sort_key(self) -> tuple:
        return (self.total_degree, natural_key(str(self)))

    def __str__(self) -> str:
        if self.is_unit:
            return "1"
        factors = natsorted(self.exponents, key=lambda item: item[0])
        return "*".join(var if exp == 1 else f"{var}^{exp}" for var, exp in factors)


def multidegree_of(monomial: Monomial, spec: BlockRingSpec) -> MultiDegree:
    degree = [0] * spec.d
    for var, exp in monomial.exponents:
        degree[spec.block_of(var)] += exp
    return tuple(degree)


def monomials_of_degree(variables: Sequence[str], degree: int) -> Iterator[Monomial]:
    for combination in itertools.combinations_with_replacement(variables, degree):
        yield Monomial(tuple((var, 1) for var in combination))


def monomials_of_multidegree(spec: BlockRingSpec, n: MultiDegree) -> Iterator[Monomial]:
    per_block = [list(monomials_of_degree(block, degree)) for block, degree in zip(spec.blocks, n)]
    for parts in itertools.product(*per_block):
        yield functools.reduce(Monomial.__mul__, parts, Monomial())


def count_free_monomials(spec: BlockRingSpec, n: MultiDegree) -> int:
    """Number of monomials of multidegree n; zero when some entry is negative"""
    if any(entry < 0 for entry in n):
        return 0
    return math.prod(math.comb(entry + size - 1, size - 1) for entry, size in zip(n, spec.sizes))


######## IDEALS ########


def _antichain(generators: Iterable[Monomial]) -> FrozenSet[Monomial]:
    kept: List[Monomial] = []
    for candidate in sorted(set(generators), key=lambda m: (m.total_degree, m.exponents)):
        if not any(g.divides(candidate) for g in kept):
            kept.append(candidate)
    return frozenset(kept)


@dataclasses.dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, no generators is the zero ideal"""

    generators: FrozenSet[Monomial] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", _antichain(self.generators))

    @classmethod
    def zero(cls) -> Self:
        return cls(frozenset())

    @classmethod
    def unit(cls) -> Self:
        return cls(frozenset([Monomial()]))

    @classmethod
    def of_variables(cls, variables: Iterable[str]) -> Self:
        return cls(frozenset(Monomial.variable(var) for var in variables))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(g.is_unit for g in self.generators)

    @property
    def variables(self) -> FrozenSet[str]:
        return frozenset(var for g in self.generators for var in g.support)

    def sorted_generators(self) -> List[Monomial]:
        return sorted(self.generators, key=Monomial.sort_key)

    def max_total_degree(self) -> int:
        return max((g.total_degree for g in self.generators), default=0)

    def max_multidegree(self, spec: BlockRingSpec) -> MultiDegree:
        degrees = [multidegree_of(g, spec) for g in self.generators]
        return tuple(max((deg[axis] for deg in degrees), default=0) for axis in range(spec.d))

    def is_subset(self, other: "MonomialIdeal") -> bool:
        return all(contains(other, g) for g in self.generators)

    def __contains__(self, monomial: Monomial) -> bool:
        return contains(self, monomial)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.sorted_generators()) + ")"


def minimalize(generators: Iterable[Monomial]) -> MonomialIdeal:
    return MonomialIdeal(frozenset(generators))


def contains(ideal: MonomialIdeal, monomial: Monomial) -> bool:
    return any(g.divides(monomial) for g in ideal.generators)


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    return minimalize(g for ideal in ideals for g in ideal.generators)


def product(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    return minimalize(a * b for a in first.generators for b in second.generators)


@functools.lru_cache(maxsize=4096)
def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValidationError(f"Ideal powers need a non-negative exponent, got {k}")
    if k == 0:
        return MonomialIdeal.unit()
    if k == 1:
        return ideal
    half = power(ideal, k // 2)
    result = product(half, half)
    return product(result, ideal) if k % 2 else result


def intersect(first: MonomialIdeal, *others: MonomialIdeal) -> MonomialIdeal:
    result = first
    for other in others:
        result = minimalize(a.lcm(b) for a in result.generators for b in other.generators)
    return result


def colon_by_monomial(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    return minimalize(g.quotient(g.gcd(monomial)) for g in ideal.generators)


def saturate_by_monomial(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    support = monomial.support
    return minimalize(g.without(support) for g in ideal.generators)


def saturate_by_ideal(ideal: MonomialIdeal, by: MonomialIdeal) -> MonomialIdeal:
    """I : by^infinity, the intersection of the saturations by each generator of `by`"""
    if by.is_zero:
        raise ValidationError("Cannot saturate by the zero ideal")
    return intersect(*(saturate_by_monomial(ideal, g) for g in by.sorted_generators()))


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return minimalize(g.squarefree() for g in ideal.generators)


@functools.lru_cache(maxsize=128)
def irrelevant_products(spec: BlockRingSpec) -> MonomialIdeal:
    """The ideal generated by all products of one variable from each block"""
    return minimalize(
        Monomial(tuple((var, 1) for var in choice)) for choice in itertools.product(*spec.blocks)
    )


def restrict_ideal(ideal: MonomialIdeal, var: str) -> MonomialIdeal:
    """Image of the ideal in the ring where `var` is set to zero"""
    return minimalize(g for g in ideal.generators if g.degree_in(var) == 0)
