"""A small two-sorted expression language over ``q`` with an integer parameter ``n``.

Integer-valued expressions (literals, ``n``, ``+ - * ^``, ``trinom``) may be
used anywhere; q-valued expressions (anything involving ``q``, division or a
q-function) may not appear where an integer is required: exponents and
function arguments.  Sorts are fixed at parse time.

Precedence, tightest first: ``^`` (right-associative), unary ``-``,
``* /``, ``+ -``.  So ``-q^2`` is ``-(q^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import qseries
from .poly import IntPoly, RatFun, substitute_monomial

INT, QV = "int", "q"

# name -> (argument sorts, result sort); "any" accepts either sort
FUNCTIONS = {
    "qint": ((INT,), QV),
    "qbinom": ((INT, INT), QV),
    "qtrinom": ((INT, INT), QV),
    "cyclo": ((INT,), QV),
    "trinom": ((INT, INT), INT),
    "subst": (("any", INT), QV),
    "rn": ((INT,), QV),
}


class ParseError(Exception):
    def __init__(self, message: str, offset: int, expected: str | None = None):
        self.message = message
        self.offset = offset
        self.expected = expected
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail)


class EvalError(Exception):
    pass


@dataclass(frozen=True)
class Int:
    value: int
    sort: str = INT


@dataclass(frozen=True)
class Sym:
    name: str
    sort: str


@dataclass(frozen=True)
class Neg:
    operand: object
    sort: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    sort: str


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    sort: str


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\.\.|[-+*/^(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.group(3) == "..":
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, "a number, name, operator or parenthesis")
        kind = "int" if m.group(1) else "name" if m.group(2) else "op"
        toks.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, off = self.peek()
        if val != value or kind != "op":
            found = "end of input" if kind == "eof" else repr(val)
            raise ParseError(f"found {found}", off, repr(value))
        return self.take()

    def parse(self):
        node = self.expr()
        kind, val, off = self.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {val!r}", off, "an operator or end of input")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            right = self.term()
            node = BinOp(op, node, right, _join(node, right))
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.take()[1]
            right = self.unary()
            sort = QV if op == "/" else _join(node, right)
            node = BinOp(op, node, right, sort)
        return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            operand = self.unary()
            return Neg(operand, operand.sort)
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            off = self.peek()[2]
            exponent = self.unary()
            if exponent.sort != INT:
                raise ParseError("exponent must be an integer expression", off, "an integer expression in n")
            return BinOp("^", base, exponent, base.sort)
        return base

    def atom(self):
        kind, val, off = self.take()
        if kind == "int":
            return Int(int(val))
        if kind == "name":
            if val == "q":
                return Sym("q", QV)
            if val == "n":
                return Sym("n", INT)
            if val not in FUNCTIONS:
                raise ParseError(f"unknown name {val!r}", off, "q, n or one of " + ", ".join(FUNCTIONS))
            return self.call(val, off)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"found {found}", off, "a number, q, n, a function call or '('")

    def call(self, name: str, off: int):
        sorts, result = FUNCTIONS[name]
        self.expect("(")
        args = []
        for idx, want in enumerate(sorts):
            if idx:
                self.expect(",")
            arg_off = self.peek()[2]
            arg = self.expr()
            if want == INT and arg.sort != INT:
                raise ParseError(
                    f"argument {idx + 1} of {name} must be an integer expression", arg_off, "an integer expression in n"
                )
            args.append(arg)
        self.expect(")")
        return Call(name, tuple(args), result)


def _join(a, b) -> str:
    return INT if a.sort == INT and b.sort == INT else QV


def parse(text: str):
    """Parse ``text`` into an AST; raises :class:`ParseError` with a byte offset."""
    return _Parser(text).parse()


# -- printing ----------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4, "atom": 5}


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return _PREC["neg"]
    return _PREC["atom"]


def _wrap(node, min_prec: int) -> str:
    s = to_text(node)
    return f"({s})" if _prec(node) < min_prec else s


def to_text(node) -> str:
    """Render an AST with the fewest parentheses that parse back to the same tree."""
    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, _PREC["neg"])
    if isinstance(node, Call):
        return f"{node.func}(" + ", ".join(to_text(a) for a in node.args) + ")"
    p = _PREC[node.op]
    if node.op == "^":
        return _wrap(node.left, _PREC["atom"]) + "^" + _wrap(node.right, _PREC["neg"])
    sep = f" {node.op} " if p == 1 else node.op
    return _wrap(node.left, p) + sep + _wrap(node.right, p + 1)


# -- evaluation --------------------------------------------------------------


def _rat(x) -> RatFun:
    return x if isinstance(x, RatFun) else RatFun(x)


def _ev(node, n: int):
    if isinstance(node, Int):
        return node.value
    if isinstance(node, Sym):
        return n if node.name == "n" else RatFun.q()
    if isinstance(node, Neg):
        return -_ev(node.operand, n)
    if isinstance(node, Call):
        return _call(node, [_ev(a, n) for a in node.args])
    left, right = _ev(node.left, n), _ev(node.right, n)
    op = node.op
    if op == "^":
        if node.sort == INT:
            if right < 0:
                raise EvalError(f"negative exponent {right} in an integer expression")
            return left**right
        return _rat(left) ** right
    if node.sort == INT:
        return {"+": int.__add__, "-": int.__sub__, "*": int.__mul__}[op](left, right)
    left, right = _rat(left), _rat(right)
    if op == "+":
        return left + right
    if op == "-":
        return left - right
    if op == "*":
        return left * right
    return left / right


def _call(node: Call, args):
    f = node.func
    if f == "qint":
        return RatFun(qseries.q_int(args[0]))
    if f == "qbinom":
        return RatFun(qseries.gauss_binom(*args))
    if f == "qtrinom":
        return RatFun(qseries.q_trinomial(*args))
    if f == "cyclo":
        return RatFun(qseries.cyclotomic(args[0]))
    if f == "trinom":
        return qseries.trinomial(*args)
    if f == "rn":
        from .statements import r_n

        return RatFun(r_n(args[0]).value)
    # subst
    r, m = _rat(args[0]), args[1]
    if m < 1:
        raise EvalError(f"subst needs an exponent >= 1, got {m}")
    return RatFun._raw(substitute_monomial(r.num, m), substitute_monomial(r.den, m))


def evaluate(ast, n: int) -> RatFun:
    """Exact value of ``ast`` at parameter ``n`` as an element of Q(q)."""
    try:
        return _rat(_ev(ast, n))
    except ZeroDivisionError as exc:
        raise EvalError(f"division by zero: {exc}") from exc
    except ValueError as exc:
        raise EvalError(str(exc)) from exc


def parse_ratfun(text: str) -> RatFun:
    """Read back the canonical text form of a polynomial or rational function."""
    ast = parse(text)
    if _mentions_n(ast):
        raise ParseError("canonical polynomial text cannot mention n", text.find("n"))
    return evaluate(ast, 0)


def parse_poly(text: str) -> IntPoly:
    r = parse_ratfun(text)
    if not r.is_polynomial():
        raise ValueError(f"{text!r} is not a polynomial")
    return r.num


def _mentions_n(node) -> bool:
    if isinstance(node, Sym):
        return node.name == "n"
    if isinstance(node, Neg):
        return _mentions_n(node.operand)
    if isinstance(node, BinOp):
        return _mentions_n(node.left) or _mentions_n(node.right)
    if isinstance(node, Call):
        return any(_mentions_n(a) for a in node.args)
    return False


eval = evaluate  # noqa: A001
