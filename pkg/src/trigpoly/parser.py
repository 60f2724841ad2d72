"""Expression language for trigonometric and hyperbolic polynomials.

Grammar (precedence low to high: ``+ -`` < ``*`` < unary ``-`` < ``^``)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' int)?
    atom   := number | 'i' | func '(' [int] 't' ')' | '(' expr ')'
    number := int ['/' int]
    func   := 'sin' | 'cos' | 'sinh' | 'cosh'

In bivariate mode (used by ``reduce``) the atoms ``x`` and ``y`` replace the
function calls.
"""
from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .numkernel import BiPoly, GaussRational, I
from .quotient import CanonicalForm, Modulus
from .trigalg import TrigPoly

__all__ = [
    "ExpressionError",
    "LexError",
    "ParseError",
    "SemanticError",
    "TokenKind",
    "Token",
    "Number",
    "FuncCall",
    "Var",
    "Neg",
    "Add",
    "Mul",
    "Pow",
    "tokenize",
    "parse",
    "parse_bivariate",
    "family",
    "lower",
    "lower_bivariate",
    "evaluate",
]


class ExpressionError(ValueError):
    """Base class for input errors; ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} at position {self.position}"


class LexError(ExpressionError):
    pass


class ParseError(ExpressionError):
    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        super().__init__(message, position)
        self.expected = expected


class SemanticError(ExpressionError):
    pass


class TokenKind(enum.Enum):
    INT = "integer"
    SLASH = "'/'"
    IMAG = "'i'"
    VAR_T = "'t'"
    VAR_X = "'x'"
    VAR_Y = "'y'"
    FUNC = "function name"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    CARET = "'^'"
    LPAREN = "'('"
    RPAREN = "')'"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int


_PUNCT = {
    "/": TokenKind.SLASH,
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}
_FUNCS = ("sinh", "cosh", "sin", "cos")  # longest first


def tokenize(text: str, bivariate: bool = False, offset: int = 0) -> list[Token]:
    """Split ``text`` into tokens; positions are offsets into the input plus ``offset``.

    The returned list always ends with an END token.
    """
    letters = {"i": TokenKind.IMAG}
    if bivariate:
        letters.update(x=TokenKind.VAR_X, y=TokenKind.VAR_Y)
    else:
        letters["t"] = TokenKind.VAR_T
    tokens: list[Token] = []
    pos, n = 0, len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            tokens.append(Token(TokenKind.INT, text[pos:end], pos + offset))
            pos = end
        elif ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, pos + offset))
            pos += 1
        else:
            name = None if bivariate else next(
                (f for f in _FUNCS if text.startswith(f, pos)), None
            )
            if name is not None:
                tokens.append(Token(TokenKind.FUNC, name, pos + offset))
                pos += len(name)
            elif ch in letters:
                tokens.append(Token(letters[ch], ch, pos + offset))
                pos += 1
            else:
                raise LexError(f"unexpected character {ch!r}", pos + offset)
    tokens.append(Token(TokenKind.END, "", n + offset))
    return tokens


# AST. ``pos`` is excluded from equality so trees compare structurally.


@dataclass(frozen=True)
class Number:
    value: GaussRational
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class FuncCall:
    func: str
    multiplier: int = 1
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: Node
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Add:
    left: Node
    right: Node
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Mul:
    left: Node
    right: Node
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: Node
    exponent: int
    pos: int = field(default=0, compare=False)


Node = Union[Number, FuncCall, Var, Neg, Add, Mul, Pow]


class _Parser:
    def __init__(self, tokens: list[Token], bivariate: bool):
        self.tokens = tokens
        self.i = 0
        self.bivariate = bivariate

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: set[TokenKind]):
        tok = self.tok
        names = sorted(k.value for k in expected)
        found = "end of input" if tok.kind is TokenKind.END else repr(tok.lexeme)
        raise ParseError(
            f"expected {' or '.join(names)}, found {found}", tok.position, frozenset(names)
        )

    def expect(self, kind: TokenKind) -> Token:
        if self.tok.kind is not kind:
            self.fail({kind})
        return self.advance()

    def atom_starts(self) -> set[TokenKind]:
        kinds = {TokenKind.INT, TokenKind.IMAG, TokenKind.LPAREN, TokenKind.MINUS}
        kinds |= {TokenKind.VAR_X, TokenKind.VAR_Y} if self.bivariate else {TokenKind.FUNC}
        return kinds

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind is not TokenKind.END:
            self.fail({TokenKind.PLUS, TokenKind.MINUS, TokenKind.STAR, TokenKind.END})
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            rhs = self.term()
            if op.kind is TokenKind.MINUS:
                rhs = Neg(rhs, op.position)
            node = Add(node, rhs, op.position)
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.tok.kind is TokenKind.STAR:
            op = self.advance()
            node = Mul(node, self.factor(), op.position)
        return node

    def factor(self) -> Node:
        if self.tok.kind is TokenKind.MINUS:
            op = self.advance()
            return Neg(self.factor(), op.position)
        node = self.atom()
        if self.tok.kind is TokenKind.CARET:
            op = self.advance()
            exp = self.expect(TokenKind.INT)
            node = Pow(node, int(exp.lexeme), op.position)
        return node

    def atom(self) -> Node:
        tok = self.tok
        kind = tok.kind
        if kind is TokenKind.INT:
            self.advance()
            num = Fraction(int(tok.lexeme))
            if self.tok.kind is TokenKind.SLASH:
                self.advance()
                den_tok = self.expect(TokenKind.INT)
                den = int(den_tok.lexeme)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.position)
                num /= den
            return Number(GaussRational(num), tok.position)
        if kind is TokenKind.IMAG:
            self.advance()
            return Number(I, tok.position)
        if kind is TokenKind.LPAREN:
            self.advance()
            node = self.expr()
            self.expect(TokenKind.RPAREN)
            return node
        if kind in (TokenKind.VAR_X, TokenKind.VAR_Y) and self.bivariate:
            self.advance()
            return Var(tok.lexeme, tok.position)
        if kind is TokenKind.FUNC and not self.bivariate:
            self.advance()
            self.expect(TokenKind.LPAREN)
            mult = 1
            if self.tok.kind is TokenKind.INT:
                mult_tok = self.advance()
                mult = int(mult_tok.lexeme)
                if mult < 1:
                    raise ParseError("angle multiplier must be at least 1", mult_tok.position)
                if self.tok.kind is not TokenKind.VAR_T:
                    self.fail({TokenKind.VAR_T})
            elif self.tok.kind is not TokenKind.VAR_T:
                self.fail({TokenKind.INT, TokenKind.VAR_T})
            self.advance()
            self.expect(TokenKind.RPAREN)
            return FuncCall(tok.lexeme, mult, tok.position)
        self.fail(self.atom_starts() - {TokenKind.MINUS})


def parse(text: str, offset: int = 0) -> Node:
    """Parse a trigonometric/hyperbolic expression into an AST."""
    return _Parser(tokenize(text, offset=offset), bivariate=False).parse()


def parse_bivariate(text: str, offset: int = 0) -> Node:
    """Parse a polynomial in ``x`` and ``y``."""
    return _Parser(tokenize(text, bivariate=True, offset=offset), bivariate=True).parse()


def _walk(node: Node):
    yield node
    if isinstance(node, Neg):
        yield from _walk(node.operand)
    elif isinstance(node, (Add, Mul)):
        yield from _walk(node.left)
        yield from _walk(node.right)
    elif isinstance(node, Pow):
        yield from _walk(node.base)


def family(*nodes: Node) -> str | None:
    """``"circular"``, ``"hyperbolic"`` or None (constants only) for the given trees."""
    found = None
    for root in nodes:
        for node in _walk(root):
            if not isinstance(node, FuncCall):
                continue
            fam = "hyperbolic" if node.func in ("sinh", "cosh") else "circular"
            if found is None:
                found = fam
            elif fam != found:
                raise SemanticError(
                    "cannot mix circular (sin/cos) and hyperbolic (sinh/cosh) functions",
                    node.pos,
                )
    return found


def lower(node: Node, as_family: str | None = None) -> TrigPoly | CanonicalForm:
    """Evaluate the AST exactly.

    Circular (and constant-only) expressions become a :class:`TrigPoly`;
    hyperbolic ones become a hyperbola residue with ``x = cosh t``, ``y = sinh t``.
    ``as_family`` forces the target ring, e.g. for a constant side of an identity.
    """
    fam = family(node)
    if as_family is not None:
        if fam is not None and fam != as_family:
            culprit = next(n for n in _walk(node) if isinstance(n, FuncCall))
            raise SemanticError(
                f"expected a {as_family} expression, found {culprit.func}", culprit.pos
            )
        fam = as_family
    if fam == "hyperbolic":
        return _lower(node, _hyperbolic_atom, lambda c: CanonicalForm.constant(c, Modulus.HYPERBOLA))
    return _lower(node, _circular_atom, TrigPoly.constant)


def _circular_atom(node: FuncCall) -> TrigPoly:
    if node.func == "cos":
        return TrigPoly.cos(node.multiplier)
    return TrigPoly.sin(node.multiplier)


def _hyperbolic_atom(node: FuncCall) -> CanonicalForm:
    if node.multiplier != 1:
        raise SemanticError(
            f"{node.func}({node.multiplier}t) is unsupported; only {node.func}(t) is allowed",
            node.pos,
        )
    if node.func == "cosh":
        return CanonicalForm.x(Modulus.HYPERBOLA)
    return CanonicalForm.y(Modulus.HYPERBOLA)


def _lower(node: Node, atom, const):
    if isinstance(node, Number):
        return const(node.value)
    if isinstance(node, FuncCall):
        return atom(node)
    if isinstance(node, Neg):
        return -_lower(node.operand, atom, const)
    if isinstance(node, Add):
        return _lower(node.left, atom, const) + _lower(node.right, atom, const)
    if isinstance(node, Mul):
        return _lower(node.left, atom, const) * _lower(node.right, atom, const)
    if isinstance(node, Pow):
        return _lower(node.base, atom, const) ** node.exponent
    raise SemanticError(f"unexpected node {type(node).__name__}", node.pos)


def lower_bivariate(node: Node) -> BiPoly:
    if isinstance(node, Number):
        return BiPoly.constant(node.value)
    if isinstance(node, Var):
        return BiPoly.x() if node.name == "x" else BiPoly.y()
    if isinstance(node, Neg):
        return -lower_bivariate(node.operand)
    if isinstance(node, Add):
        return lower_bivariate(node.left) + lower_bivariate(node.right)
    if isinstance(node, Mul):
        return lower_bivariate(node.left) * lower_bivariate(node.right)
    if isinstance(node, Pow):
        return lower_bivariate(node.base) ** node.exponent
    raise SemanticError(f"unexpected node {type(node).__name__}", node.pos)


_FLOAT_FUNCS = {"sin": cmath.sin, "cos": cmath.cos, "sinh": cmath.sinh, "cosh": cmath.cosh}


def evaluate(node: Node, t: float) -> complex:
    """Direct floating-point evaluation of the AST at ``t``."""
    if isinstance(node, Number):
        return complex(node.value)
    if isinstance(node, FuncCall):
        return _FLOAT_FUNCS[node.func](node.multiplier * t)
    if isinstance(node, Neg):
        return -evaluate(node.operand, t)
    if isinstance(node, Add):
        return evaluate(node.left, t) + evaluate(node.right, t)
    if isinstance(node, Mul):
        return evaluate(node.left, t) * evaluate(node.right, t)
    if isinstance(node, Pow):
        return evaluate(node.base, t) ** node.exponent
    raise SemanticError(f"cannot evaluate {type(node).__name__}", node.pos)
