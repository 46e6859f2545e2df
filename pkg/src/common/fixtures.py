"""Builtin models and the values they are known to produce"""

import logging
from typing import Dict, Tuple

from .mixedmult_helper import ValidationError

log = logging.getLogger(__name__)

EXAMPLE37 = """\
# Four monomial primes in three blocks of three variables
ring blocks = [[x1, x2, x3], [y1, y2, y3], [z1, z2, z3]]
ideal I = intersect((x1, y1, z1), (x1, x2), (y1, y2), (z1, z2))
"""

IDEALS = """\
# Two ideal systems in k[x, y]
ring blocks = [[x, y]]
ideal m = (x, y)
ideal X = (x)
system S1 = (m; m)
system S2 = (m; X)
"""

EXAMPLE37_ELL = 5
EXAMPLE37_TABLE: Dict[Tuple[int, ...], int] = {
    (2, 2, 0): 1,
    (2, 0, 2): 1,
    (0, 2, 2): 1,
}
EXAMPLE37_SEQUENCE = ("x3", "x2", "y3", "y2")
EXAMPLE37_BLOCKED_SEQUENCE = ("x3", "x2", "x1")
EXAMPLE37_DIMENSION = 7
EXAMPLE37_MULTIPLICITY = 3
EXAMPLE37_MAX_LENGTH = 5

IDEALS_TABLES: Dict[str, Dict[Tuple[int, ...], int]] = {
    "S1": {(1, 0): 1, (0, 1): 1},
    "S2": {(1, 0): 1, (0, 1): 0},
}
IDEALS_THEOREM45 = {
    "S1": ((0, 1), (("x", 1),)),
    "S2": ((1, 0), ()),
}


def example36(t: int) -> str:
    """A polynomial ring in t variables modulo zero, single grading"""
    if t < 1:
        raise ValidationError(f"example36 needs t >= 1, got {t}")
    variables = ", ".join(f"X{i}" for i in range(1, t + 1))
    return f"# Polynomial ring in {t} variables\nring blocks = [[{variables}]]\nideal I = (0)\n"


def builtin_text(name: str, t: int = 3) -> str:
    log.debug("Loading builtin model %s", name)
    if name == "example36":
        return example36(t)
    if name == "example37":
        return EXAMPLE37
    if name == "ideals":
        return IDEALS
    raise ValidationError(f"Unknown builtin model '{name}', use example36, example37 or ideals")
