"""Errors, settings and small enumeration helpers shared by all modules"""

import argparse
import dataclasses
import logging
import math
from typing import Iterator, List, Optional, Sequence, Tuple

from typing_extensions import Self

log = logging.getLogger(__name__)


######## ERRORS ########


class MixedmultError(Exception):
    """Base of every error raised by mixedmult.

    `kind` is the machine readable label used in json error reports,
    `exit_code` the process exit status used by `main()`."""

    kind = "internal"
    exit_code = 1

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class ValidationError(MixedmultError):
    kind = "validation"
    exit_code = 2


class ParseError(ValidationError):
    kind = "parse"

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class PreconditionError(MixedmultError):
    kind = "precondition"
    exit_code = 2


class DegenerateError(PreconditionError):
    """Zero module or eventually-zero module: no Hilbert polynomial of positive degree exists."""

    kind = "degenerate"


class GuardError(MixedmultError):
    kind = "guard"
    exit_code = 1


class ResourceError(GuardError):
    kind = "resource"


class InternalConsistencyError(MixedmultError):
    kind = "internal"
    exit_code = 1


######## SETTINGS ########


@dataclasses.dataclass(frozen=True)
class Settings:
    """
    Tunables of the stabilization searches and enumeration guards

    Attributes:
        base: starting base per axis (None selects the automatic start)
        window: number of extra validation points per axis
        max_base: largest base per axis tried before a guard error
        budget: node budget of backtracking searches
        degree_cap: total-degree cap of monomial enumerations
        enumeration_limit: largest number of monomials a brute-force count may enumerate
        ie_generator_limit: largest generator count handled by inclusion-exclusion
    """

    base: Optional[int] = None
    window: int = 3
    max_base: int = 64
    budget: int = 10000
    degree_cap: int = 64
    enumeration_limit: int = 1_000_000
    ie_generator_limit: int = 22

    def __post_init__(self) -> None:
        if self.base is not None and self.base < 0:
            raise ValidationError(f"base must be non-negative, got {self.base}")
        if self.window < 0:
            raise ValidationError(f"window must be non-negative, got {self.window}")
        if self.max_base < 1:
            raise ValidationError(f"max-base must be positive, got {self.max_base}")
        if self.budget < 1:
            raise ValidationError(f"budget must be positive, got {self.budget}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> Self:
        """Build settings from parsed command line arguments, missing options keep defaults"""
        defaults = cls()
        return cls(
            base=getattr(args, "base", None),
            window=getattr(args, "window", defaults.window),
            max_base=getattr(args, "max_base", defaults.max_base),
            budget=getattr(args, "budget", defaults.budget),
        )

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def resolve_settings(settings: Optional[Settings]) -> Settings:
    return Settings() if settings is None else settings


######## HELPERS ########


def parse_int_list(text: str, what: str = "value") -> Tuple[int, ...]:
    """Parse `1,2,3` into a tuple of non-negative integers"""
    try:
        values = tuple(int(item) for item in text.split(",") if item.strip() != "")
    except ValueError as error:
        raise ValidationError(f"Malformed {what} '{text}': {error}") from error
    if any(value < 0 for value in values):
        raise ValidationError(f"Malformed {what} '{text}': entries must be non-negative")
    return values


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to `total`, largest first entry first"""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def factorial_product(values: Sequence[int]) -> int:
    return math.prod(math.factorial(value) for value in values)


def multinomial(values: Sequence[int]) -> int:
    return math.factorial(sum(values)) // factorial_product(values)


def format_tuple(values: Sequence[int]) -> str:
    return ",".join(str(value) for value in values)


def unit_vector(length: int, index: int) -> Tuple[int, ...]:
    return tuple(1 if position == index else 0 for position in range(length))


def shifted(point: Sequence[int], offset: Sequence[int], sign: int = 1) -> Tuple[int, ...]:
    return tuple(a + sign * b for a, b in zip(point, offset))


def componentwise_max(points: List[Tuple[int, ...]], length: int) -> Tuple[int, ...]:
    if not points:
        return (0,) * length
    return tuple(max(point[axis] for point in points) for axis in range(length))


######## ARGUMENTS ########


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Model location, stabilization tunables and output format shared by every subcommand"""
    defaults = Settings()
    parser.add_argument("model", help="model file, or builtin:example36, builtin:example37, builtin:ideals")
    parser.add_argument("--t", dest="t", type=int, default=3, help="number of variables of builtin:example36")
    parser.add_argument("--base", type=int, default=None, help="starting base per axis (default: automatic)")
    parser.add_argument("--window", type=int, default=defaults.window, help="extra validation points per axis")
    parser.add_argument(
        "--max-base", dest="max_base", type=int, default=defaults.max_base, help="largest base tried per axis"
    )
    parser.add_argument("--budget", type=int, default=defaults.budget, help="node budget of sequence searches")
    parser.add_argument("--format", dest="format", choices=("text", "json"), default="text", help="report format")


def parse_type_argument(text: str) -> Tuple[int, ...]:
    return parse_int_list(text, "type")
