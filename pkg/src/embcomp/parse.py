"""Text syntax for polynomials and parametrizations.

Variables are the declared names, ``i`` (or ``ii``) is the imaginary unit unless
declared as a variable, powers use ``^`` or ``**`` and ``*`` may be omitted::

    x^2 + 2 y h - (1+2i)*x*y

The same grammar is compiled into plain numeric callables for component
parametrizations, where division by a nonconstant expression is allowed.
"""

import re

from .errors import ParseError
from .poly import Polynomial, Ring

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*/^()])
    """,
    re.VERBOSE,
)


def _tokenize(text):
    pos, line, col = 0, 1, 1
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        val = m.group()
        if kind != "ws":
            out.append((kind, val, line, col))
        for ch in val:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    out.append(("end", "", line, col))
    return out


class _Parser:
    def __init__(self, text, names):
        self.toks = _tokenize(text)
        self.pos = 0
        self.names = list(names)

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], tok[3])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def _starts_factor(self, tok):
        return tok[0] in ("num", "name") or (tok[0] == "op" and tok[1] == "(")

    def term(self):
        node = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in ("*", "/"):
                self.take()
                node = ("mul" if tok[1] == "*" else "div", node, self.unary())
            elif self._starts_factor(tok):
                node = ("mul", node, self.power())
            else:
                return node

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.unary()
            return inner if tok[1] == "+" else ("neg", inner)
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("^", "**"):
            self.take()
            return ("pow", base, self.unary(), tok)
        return base

    def atom(self):
        tok = self.take()
        kind, val = tok[0], tok[1]
        if kind == "num":
            return ("num", complex(float(val)))
        if kind == "name":
            if val in self.names:
                return ("var", self.names.index(val))
            if val in ("i", "ii"):
                return ("num", 1j)
            self.fail(f"unknown variable {val!r}", tok)
        if kind == "op" and val == "(":
            node = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return node
        self.fail(f"unexpected token {val!r}" if val else "unexpected end of input", tok)


def parse_ast(text, names):
    return _Parser(text, names).parse()


def _to_poly(node, ring):
    kind = node[0]
    if kind == "num":
        return Polynomial.constant(ring, node[1])
    if kind == "var":
        return Polynomial.variable(ring, node[1])
    if kind == "neg":
        return -_to_poly(node[1], ring)
    if kind == "pow":
        base = _to_poly(node[1], ring)
        expo = _to_poly(node[2], ring)
        tok = node[3]
        if expo.degree() > 0:
            raise ParseError("exponent must be a constant", tok[2], tok[3])
        e = expo.coefficient((0,) * ring.nvars)
        if e.imag != 0 or e.real < 0 or e.real != int(e.real):
            raise ParseError("exponent must be a non-negative integer", tok[2], tok[3])
        return base ** int(e.real)
    a, b = _to_poly(node[1], ring), _to_poly(node[2], ring)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if b.degree() > 0 or b.is_zero():
        raise ParseError("polynomials may only be divided by nonzero constants")
    return a / b


def parse_polynomial(text, ring):
    """Parse ``text`` as an element of ``ring``."""
    if isinstance(ring, (list, tuple)):
        ring = Ring(tuple(ring))
    return _to_poly(parse_ast(text, ring.names), ring)


def parse_system(lines, ring):
    """Parse a list of strings, reporting the failing entry as the line number."""
    out = []
    for k, text in enumerate(lines, start=1):
        try:
            out.append(parse_polynomial(text, ring))
        except ParseError as exc:
            raise ParseError(f"generator {k}: {exc.message}", k, exc.column) from None
    return out


def _compile(node):
    kind = node[0]
    if kind == "num":
        v = node[1]
        return lambda t: v
    if kind == "var":
        i = node[1]
        return lambda t: t[i]
    if kind == "neg":
        f = _compile(node[1])
        return lambda t: -f(t)
    f, g = _compile(node[1]), _compile(node[2])
    if kind == "add":
        return lambda t: f(t) + g(t)
    if kind == "sub":
        return lambda t: f(t) - g(t)
    if kind == "mul":
        return lambda t: f(t) * g(t)
    if kind == "div":
        return lambda t: f(t) / g(t)
    if kind == "pow":
        def power(t):
            e = g(t)
            if e.imag == 0 and e.real == int(e.real):
                return f(t) ** int(e.real)
            return f(t) ** e
        return power
    raise AssertionError(kind)


def compile_expression(text, names):
    """Compile ``text`` into ``callable(values) -> complex`` over ``names``."""
    f = _compile(parse_ast(text, names))
    return lambda values: complex(f(values))
