from __future__ import annotations

from dataclasses import dataclass

import pyparsing as pp

from config.settings import ParserSettings
from core.errors import PolyParseError
from polynomials.models import MultivarPoly
from rings.models import RingSpec

pp.ParserElement.enable_packrat()


@dataclass(frozen=True, slots=True)
class Number:
    text: str
    position: int


@dataclass(frozen=True, slots=True)
class Variable:
    index: int
    position: int


@dataclass(frozen=True, slots=True)
class Negation:
    operand: PolyExpr
    position: int


@dataclass(frozen=True, slots=True)
class BinaryOp:
    op: str
    left: PolyExpr
    right: PolyExpr
    position: int


@dataclass(frozen=True, slots=True)
class Power:
    base: PolyExpr
    exponent: PolyExpr
    position: int


PolyExpr = Number | Variable | Negation | BinaryOp | Power


def _number(s: str, loc: int, toks: pp.ParseResults) -> Number:
    return Number(toks[0], loc)


def _variable(s: str, loc: int, toks: pp.ParseResults) -> Variable:
    return Variable(int(toks[0][1:]), loc)


def _negation(s: str, loc: int, toks: pp.ParseResults) -> PolyExpr:
    # tokens: ['-', '-', ..., operand]
    group = toks[0]
    node: PolyExpr = group[-1]
    for _ in group[:-1]:
        node = Negation(node, loc)
    return node


def _power(s: str, loc: int, toks: pp.ParseResults) -> PolyExpr:
    # right associative: fold from the end
    group = list(toks[0])
    node: PolyExpr = group[-1]
    for base in reversed(group[:-1:2]):
        node = Power(base, node, loc)
    return node


def _left_fold(s: str, loc: int, toks: pp.ParseResults) -> PolyExpr:
    group = list(toks[0])
    node: PolyExpr = group[0]
    for op, right in zip(group[1::2], group[2::2], strict=True):
        node = BinaryOp(op, node, right, loc)
    return node


def make_grammar() -> pp.ParserElement:
    number = pp.Regex(r"\d+(/\d+)?").set_name("number").set_parse_action(_number)
    variable = pp.Regex(r"x\d+").set_name("variable").set_parse_action(_variable)
    operand = number | variable
    return pp.infix_notation(
        operand,
        [
            (pp.Literal("^"), 2, pp.OpAssoc.RIGHT, _power),
            (pp.Literal("-"), 1, pp.OpAssoc.RIGHT, _negation),
            (pp.Literal("*"), 2, pp.OpAssoc.LEFT, _left_fold),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _left_fold),
        ],
    )


GRAMMAR = make_grammar()


def parse_expr(text: str) -> PolyExpr:
    try:
        result = GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise PolyParseError(f"Syntax error: {exc.msg}", exc.loc, exc) from exc
    node: PolyExpr = result[0]
    return node


def max_variable(node: PolyExpr) -> int:
    if isinstance(node, Variable):
        return node.index
    if isinstance(node, Number):
        return 0
    if isinstance(node, Negation):
        return max_variable(node.operand)
    if isinstance(node, Power):
        return max(max_variable(node.base), max_variable(node.exponent))
    return max(max_variable(node.left), max_variable(node.right))


class _Evaluator:
    def __init__(self, ring: RingSpec, nvars: int, max_exponent: int) -> None:
        self._ring = ring
        self._nvars = nvars
        self._max_exponent = max_exponent

    def _exponent(self, node: PolyExpr) -> int:
        if not isinstance(node, Number) or "/" in node.text:
            raise PolyParseError("Exponent must be a nonnegative integer literal", node.position)
        value = int(node.text)
        if value > self._max_exponent:
            raise PolyParseError(f"Exponent {value} exceeds the cap {self._max_exponent}", node.position)
        return value

    def evaluate(self, node: PolyExpr) -> MultivarPoly:
        if isinstance(node, Number):
            return MultivarPoly.constant(self._ring, self._nvars, self._ring.parse_element(node.text))
        if isinstance(node, Variable):
            if not 1 <= node.index <= self._nvars:
                raise PolyParseError(f"Unknown variable x{node.index} for x1..x{self._nvars}", node.position)
            return MultivarPoly.variable(self._ring, self._nvars, node.index)
        if isinstance(node, Negation):
            return -self.evaluate(node.operand)
        if isinstance(node, Power):
            return self.evaluate(node.base).pow(self._exponent(node.exponent))
        left, right = self.evaluate(node.left), self.evaluate(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right


def parse_poly(
    text: str, ring: RingSpec, nvars: int | None = None, settings: ParserSettings | None = None
) -> MultivarPoly:
    settings = settings or ParserSettings()
    node = parse_expr(text)
    used = max_variable(node)
    count = nvars if nvars is not None else max(used, 1)
    if count > settings.max_nvars:
        raise PolyParseError(f"{count} variables exceed the cap {settings.max_nvars}", 0)
    return _Evaluator(ring, count, settings.max_exponent).evaluate(node)
