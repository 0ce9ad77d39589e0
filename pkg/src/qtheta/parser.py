"""Surface expression language for q-series, with a recursive-descent
parser, a renderer, and an evaluator dispatching into the engine.

Grammar (whitespace insignificant):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := ('-')? atom ('^' int)?
    atom   := int | 'q' | call | '(' expr ')'
    call   := name '(' expr (',' expr)* ')'

'^' binds tighter than the unary minus, so -q^4 is the monomial -q^4.
Exponents after '^' may be negative (q^-32).  Function argument
positions that require a signed monomial are checked at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .appell import GenericityError, appell_m, delta_term, g2, geom_inverse, lambda_term, small_k
from .mock import mt_chi, mt_X
from .monomial import Monomial, Q
from .series import EvalContext, LaurentSeries, QSeriesError
from .theta import J, Jm, jtheta, pochhammer


class ExprSyntaxError(Exception):
    """Malformed expression text; .pos is the 0-based offending offset."""

    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class ArityError(ExprSyntaxError):
    """Wrong number or type of arguments for a known function."""


class NonMonomialArgumentError(ExprSyntaxError):
    """An argument position requiring a signed monomial got a general
    expression."""


class EvalError(Exception):
    """An engine error raised while evaluating a parsed expression."""

    def __init__(self, message: str, pos: int, cause: Exception) -> None:
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos
        self.cause = cause


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Int:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Mono:
    """The bare variable q."""

    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(default=0, compare=False)


Expr = Union[Int, Mono, Neg, Add, Sub, Mul, Div, Pow, Call]


# kind per argument position: 'm' = monomial, 'i' = integer literal;
# trailing '?' positions are optional.
_SIGNATURES = {
    "j": "mm",
    "J": "iim?",
    "Jm": "im?",
    "poch": "mmi",
    "pochinf": "mm",
    "m": "mmm",
    "k": "mm",
    "g2": "mm",
    "delta": "mmmm",
    "lambda": "mmm",
    "X": "m",
    "chi": "m",
}


def as_monomial(node: Expr) -> Monomial:
    """Reduce an argument expression to a signed monomial, or fail."""
    if isinstance(node, Mono):
        return Monomial(1, 1)
    if isinstance(node, Int):
        if node.value == 1:
            return Monomial(1, 0)
        raise NonMonomialArgumentError("expected a signed monomial +-q^e", node.pos)
    if isinstance(node, Neg):
        return -as_monomial(node.arg)
    if isinstance(node, Pow):
        return as_monomial(node.base) ** node.exponent
    if isinstance(node, Mul):
        return as_monomial(node.left) * as_monomial(node.right)
    pos = getattr(node, "pos", 0)
    raise NonMonomialArgumentError("expected a signed monomial +-q^e", pos)


def _as_int(node: Expr) -> int:
    if isinstance(node, Int):
        return node.value
    if isinstance(node, Neg) and isinstance(node.arg, Int):
        return -node.arg.value
    raise ArityError("expected an integer literal", getattr(node, "pos", 0))


def _check_call(call: Call) -> None:
    sig = _SIGNATURES.get(call.name)
    if sig is None:
        raise ExprSyntaxError(f"unknown function {call.name!r}", call.pos)
    required = sig.replace("?", "")
    n_opt = sig.count("?")
    kinds = [k for k in sig if k != "?"]
    n_min = len(kinds) - n_opt
    if not (n_min <= len(call.args) <= len(kinds)):
        raise ArityError(
            f"{call.name} expects {n_min}"
            + (f"..{len(kinds)}" if n_opt else "")
            + f" arguments, got {len(call.args)}",
            call.pos,
        )
    del required
    for kind, arg in zip(kinds, call.args):
        if kind == "m":
            as_monomial(arg)
        else:
            _as_int(arg)


# -- tokenizer / parser -----------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
        elif c in "+-*/^(),":
            out.append(_Token(c, c, i))
            i += 1
        else:
            raise ExprSyntaxError(f"unexpected character {c!r}", i)
    out.append(_Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected trailing input {tok.text!r}", tok.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in "+-":
            op = self.next()
            rhs = self.term()
            node = Add(node, rhs, op.pos) if op.kind == "+" else Sub(node, rhs, op.pos)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind in "*/":
            op = self.next()
            rhs = self.factor()
            node = Mul(node, rhs, op.pos) if op.kind == "*" else Div(node, rhs, op.pos)
        return node

    def factor(self) -> Expr:
        neg = None
        if self.peek().kind == "-":
            neg = self.next()
        node = self.atom()
        if self.peek().kind == "^":
            op = self.next()
            node = Pow(node, self._int_literal(), op.pos)
        if neg is not None:
            node = Neg(node, neg.pos)
        return node

    def _int_literal(self) -> int:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        tok = self.expect("int")
        return sign * int(tok.text)

    def atom(self) -> Expr:
        tok = self.next()
        if tok.kind == "int":
            return Int(int(tok.text), tok.pos)
        if tok.kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "name":
            if self.peek().kind == "(":
                self.next()
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                call = Call(tok.text, tuple(args), tok.pos)
                _check_call(call)
                return call
            if tok.text == "q":
                return Mono(tok.pos)
            raise ExprSyntaxError(f"unknown name {tok.text!r}", tok.pos)
        raise ExprSyntaxError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse(text: str) -> Expr:
    """Parse expression text into an AST; raises ExprSyntaxError,
    ArityError or NonMonomialArgumentError with positions."""
    return _Parser(text).parse()


# -- renderer ---------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_NEG, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def render(node: Expr, prec: int = 0) -> str:
    """Expression text that reparses to a structurally identical AST."""
    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, Mono):
        return "q"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(render(a) for a in node.args)})"
    if isinstance(node, Pow):
        text = f"{render(node.base, _PREC_ATOM)}^{node.exponent}"
        level = _PREC_POW
    elif isinstance(node, Neg):
        text = f"-{render(node.arg, _PREC_POW)}"
        level = _PREC_NEG
    elif isinstance(node, (Mul, Div)):
        op = "*" if isinstance(node, Mul) else "/"
        text = f"{render(node.left, _PREC_MUL)}{op}{render(node.right, _PREC_MUL + 1)}"
        level = _PREC_MUL
    elif isinstance(node, (Add, Sub)):
        op = "+" if isinstance(node, Add) else "-"
        text = f"{render(node.left, _PREC_ADD)} {op} {render(node.right, _PREC_ADD + 1)}"
        level = _PREC_ADD
    else:
        raise TypeError(f"not an expression node: {node!r}")
    return f"({text})" if level < prec else text


# -- evaluator --------------------------------------------------------------


def _call_series(call: Call, ctx: EvalContext) -> LaurentSeries:
    name = call.name
    args = call.args
    if name == "j":
        return jtheta(as_monomial(args[0]), as_monomial(args[1]), ctx)
    if name == "J":
        base = as_monomial(args[2]) if len(args) > 2 else Q
        return J(_as_int(args[0]), _as_int(args[1]), base, ctx)
    if name == "Jm":
        base = as_monomial(args[1]) if len(args) > 1 else Q
        return Jm(_as_int(args[0]), base, ctx)
    if name == "poch":
        return pochhammer(as_monomial(args[0]), as_monomial(args[1]), _as_int(args[2]), ctx)
    if name == "pochinf":
        return pochhammer(as_monomial(args[0]), as_monomial(args[1]), None, ctx)
    if name == "m":
        return appell_m(as_monomial(args[0]), as_monomial(args[1]), as_monomial(args[2]), ctx)
    if name == "k":
        return small_k(as_monomial(args[0]), as_monomial(args[1]), ctx)
    if name == "g2":
        return g2(as_monomial(args[0]), as_monomial(args[1]), ctx)
    if name == "delta":
        return delta_term(
            as_monomial(args[0]),
            as_monomial(args[1]),
            as_monomial(args[2]),
            as_monomial(args[3]),
            ctx,
        )
    if name == "lambda":
        return lambda_term(as_monomial(args[0]), as_monomial(args[1]), as_monomial(args[2]), ctx)
    if name == "X":
        return mt_X(as_monomial(args[0]), ctx)
    if name == "chi":
        return mt_chi(as_monomial(args[0]), ctx)
    raise ExprSyntaxError(f"unknown function {name!r}", call.pos)


def eval_expr(node: Expr, ctx: EvalContext) -> LaurentSeries:
    """Evaluate an AST to a Laurent series; engine errors are re-raised
    as EvalError carrying the source position of the offending call."""
    if isinstance(node, Int):
        return LaurentSeries.monomial(Fraction(node.value), 0, ctx.order)
    if isinstance(node, Mono):
        return LaurentSeries.monomial(1, 1, ctx.order)
    if isinstance(node, Neg):
        return eval_expr(node.arg, ctx).neg()
    if isinstance(node, Add):
        return eval_expr(node.left, ctx).add(eval_expr(node.right, ctx))
    if isinstance(node, Sub):
        return eval_expr(node.left, ctx).sub(eval_expr(node.right, ctx))
    if isinstance(node, Mul):
        return eval_expr(node.left, ctx).mul(eval_expr(node.right, ctx))
    if isinstance(node, (Div, Pow, Call)):
        try:
            if isinstance(node, Div):
                return eval_expr(node.left, ctx).mul(eval_expr(node.right, ctx).invert())
            if isinstance(node, Pow):
                return eval_expr(node.base, ctx).pow_int(node.exponent)
            return _call_series(node, ctx)
        except EvalError:
            raise
        except (GenericityError, QSeriesError, ValueError) as exc:
            raise EvalError(str(exc), node.pos, exc) from exc
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(text: str, ctx: EvalContext) -> LaurentSeries:
    return eval_expr(parse(text), ctx)
