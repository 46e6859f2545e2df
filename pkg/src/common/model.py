"""Model files: a block ring with named monomial ideals and ideal systems"""

import dataclasses
import logging
import re
from pathlib import Path
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from natsort import natsorted

from .fixtures import builtin_text
from .hilbert import GradedQuotient
from .idealmm import IdealSystem, validate_system
from .kernel import (
    BlockRingSpec,
    Monomial,
    MonomialIdeal,
    ideal_sum,
    intersect,
    minimalize,
    power,
    product,
)
from .mixedmult_helper import MixedmultError, ParseError, ValidationError

log = logging.getLogger(__name__)

KEYWORDS = {"ring", "blocks", "ideal", "system", "intersect", "sum", "product", "power"}

TOKEN_PATTERN = re.compile(
    r"(?P<comment>#[^\n]*)|(?P<space>[ \t\r]+)|(?P<newline>\n)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<integer>[0-9]+)|(?P<symbol>[\[\](),;=*^])"
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[Token]:
    line, line_start, position = 1, 0, 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ParseError(f"Unexpected character '{text[position]}'", line, position - line_start + 1)
        kind = match.lastgroup
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind not in ("comment", "space"):
            yield Token(kind, match.group(), line, position - line_start + 1)
        position = match.end()
    yield Token("end", "", line, position - line_start + 1)


@dataclasses.dataclass
class Model:
    """A parsed model, declarations keep their file order"""

    ring: BlockRingSpec
    ideals: Dict[str, MonomialIdeal] = dataclasses.field(default_factory=dict)
    systems: Dict[str, IdealSystem] = dataclasses.field(default_factory=dict)
    source: str = "<memory>"

    def ideal(self, name: Optional[str] = None) -> MonomialIdeal:
        """The named ideal, or the last declared one"""
        if name is None:
            if not self.ideals:
                raise ValidationError(f"{self.source} declares no ideal")
            return list(self.ideals.values())[-1]
        if name not in self.ideals:
            raise ValidationError(f"Unknown ideal '{name}'")
        return self.ideals[name]

    def quotient(self, name: Optional[str] = None) -> GradedQuotient:
        return GradedQuotient(self.ring, self.ideal(name))

    def system(self, name: Optional[str] = None) -> IdealSystem:
        if name is None:
            if not self.systems:
                raise ValidationError(f"{self.source} declares no ideal system")
            return list(self.systems.values())[-1]
        if name not in self.systems:
            raise ValidationError(f"Unknown system '{name}'")
        return self.systems[name]

    def to_text(self) -> str:
        """Model file text that parses back to an equal model"""
        lines = [f"ring blocks = {self.ring}"]
        names = {}
        for name, ideal in self.ideals.items():
            lines.append(f"ideal {name} = {ideal}")
            names.setdefault(ideal, name)
        for name, system in self.systems.items():
            members = [names[ideal] for ideal in (system.j_ideal, *system.ideals)]
            lines.append(f"system {name} = ({members[0]}; {', '.join(members[1:])})")
        return "\n".join(lines) + "\n"


class Parser:
    def __init__(self, text: str, source: str) -> None:
        self.tokens: List[Token] = list(tokenize(text))
        self.position = 0
        self.source = source
        self.names: Dict[str, str] = {}

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.line, token.column)

    def advance(self) -> Token:
        token = self.current
        self.position += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "end":
            found = self.current.text or "end of input"
            raise self.error(f"Expected '{text}', found '{found}'")
        return self.advance()

    def accept(self, text: str) -> bool:
        if self.current.text == text and self.current.kind != "end":
            self.advance()
            return True
        return False

    def name(self) -> Token:
        token = self.current
        if token.kind != "name" or token.text in KEYWORDS:
            raise self.error(f"Expected a name, found '{token.text or 'end of input'}'")
        return self.advance()

    def integer(self) -> int:
        token = self.current
        if token.kind != "integer":
            raise self.error(f"Expected an integer, found '{token.text or 'end of input'}'")
        self.advance()
        return int(token.text)

    def declare(self, token: Token, kind: str) -> None:
        if token.text in self.names:
            raise self.error(f"Duplicate name '{token.text}' (already a {self.names[token.text]})", token)
        self.names[token.text] = kind

    def parse(self) -> Model:
        model = Model(self.ring(), source=self.source)
        while self.current.kind != "end":
            if self.accept("ideal"):
                token = self.name()
                self.expect("=")
                ideal = self.expr(model)
                self.declare(token, "ideal")
                model.ideals[token.text] = ideal
            elif self.accept("system"):
                token = self.name()
                self.expect("=")
                system = self.system(model, token)
                self.declare(token, "system")
                model.systems[token.text] = system
            else:
                raise self.error(f"Expected 'ideal' or 'system', found '{self.current.text}'")
        return model

    def ring(self) -> BlockRingSpec:
        self.expect("ring")
        self.expect("blocks")
        self.expect("=")
        self.expect("[")
        blocks = [self.block()]
        while self.accept(","):
            blocks.append(self.block())
        self.expect("]")
        return BlockRingSpec.from_lists(blocks)

    def block(self) -> List[str]:
        self.expect("[")
        variables = []
        while True:
            token = self.name()
            self.declare(token, "variable")
            variables.append(token.text)
            if not self.accept(","):
                break
        self.expect("]")
        return variables

    def expr(self, model: Model) -> MonomialIdeal:
        token = self.current
        if token.text in ("intersect", "sum", "product"):
            self.advance()
            self.expect("(")
            operands = [self.expr(model)]
            while self.accept(","):
                operands.append(self.expr(model))
            self.expect(")")
            if token.text == "intersect":
                return intersect(*operands)
            if token.text == "sum":
                return ideal_sum(*operands)
            result = operands[0]
            for operand in operands[1:]:
                result = product(result, operand)
            return result
        if token.text == "power":
            self.advance()
            self.expect("(")
            base = self.expr(model)
            self.expect(",")
            exponent = self.integer()
            self.expect(")")
            return power(base, exponent)
        if token.text == "(":
            return self.term_ideal(model)
        if token.kind == "name" and token.text not in KEYWORDS:
            self.advance()
            if self.names.get(token.text) != "ideal":
                raise self.error(f"Unknown ideal '{token.text}'", token)
            return model.ideals[token.text]
        raise self.error(f"Expected an ideal expression, found '{token.text or 'end of input'}'")

    def term_ideal(self, model: Model) -> MonomialIdeal:
        self.expect("(")
        if self.current.text == "0":
            self.advance()
            self.expect(")")
            return MonomialIdeal.zero()
        generators = [self.monomial(model)]
        while self.accept(","):
            generators.append(self.monomial(model))
        self.expect(")")
        return minimalize(generators)

    def monomial(self, model: Model) -> Monomial:
        if self.current.text == "1":
            self.advance()
            return Monomial()
        factors = [self.factor(model)]
        while self.accept("*"):
            factors.append(self.factor(model))
        return Monomial(tuple(factors))

    def factor(self, model: Model) -> Tuple[str, int]:
        token = self.name()
        if not model.ring.has_variable(token.text):
            raise self.error(f"Unknown variable '{token.text}'", token)
        exponent = 1
        if self.accept("^"):
            exponent_token = self.current
            exponent = self.integer()
            if exponent < 1:
                raise self.error("Exponents must be positive", exponent_token)
        return (token.text, exponent)

    def system(self, model: Model, token: Token) -> IdealSystem:
        self.expect("(")
        members = [self.ideal_reference()]
        self.expect(";")
        members.append(self.ideal_reference())
        while self.accept(","):
            members.append(self.ideal_reference())
        self.expect(")")
        try:
            ideals = [model.ideals[member] for member in members[1:]]
            return validate_system(model.ring.variables, model.ideals[members[0]], ideals)
        except MixedmultError as error:
            raise self.error(f"System '{token.text}': {error.message}", token) from error

    def ideal_reference(self) -> str:
        token = self.name()
        if self.names.get(token.text) != "ideal":
            raise self.error(f"Unknown ideal '{token.text}'", token)
        return token.text


def parse_model(text: str, source: str = "<memory>") -> Model:
    model = Parser(text, source).parse()
    log.debug(
        "Parsed %s: ring %s, ideals %s, systems %s",
        source,
        model.ring,
        ", ".join(natsorted(model.ideals)) or "-",
        ", ".join(natsorted(model.systems)) or "-",
    )
    return model


def load_model(location: str, t: int = 3) -> Model:
    """Read a model file or one of the `builtin:` fixtures"""
    if location.startswith("builtin:"):
        return parse_model(builtin_text(location[len("builtin:") :], t), location)
    path = Path(location)
    if not path.is_file():
        raise ValidationError(f"Model file '{location}' does not exist")
    return parse_model(path.read_text(encoding="utf-8"), str(path))
