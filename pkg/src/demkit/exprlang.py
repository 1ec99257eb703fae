"""A tiny expression language for characters.

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := func | '(' expr ')' | '-' factor
    func   := IDENT '(' args ')'

Weights are bracketed integer lists like [1,-1]; Weyl words are written
's1 s2 s1' (or 'e' for the identity) in the argument slots that expect a
word.  Argument counts and kinds are checked while parsing, so an
ill-formed call never reaches evaluation.

>>> printExpr(parse("pair(P([-1,-1]), Q([0,0]))"))
'pair(P([-1,-1]), Q([0,0]))'
"""
from __future__ import annotations

from dataclasses import dataclass

from . import demazure as _dz
from . import ktheory as _kt
from .characters import Character, decomposeWeylBasis, dual
from .weyl import WeylGroup

CHAR = "char"
WEIGHT = "weight"
WORD = "word"
GEXP = "gexp"

# name -> (argument kinds, result kind)
FUNCS: dict[str, tuple[tuple[str, ...], str]] = {
    "e": ((WEIGHT,), CHAR),
    "chi": ((WEIGHT,), CHAR),
    "P": ((WEIGHT,), CHAR),
    "Q": ((WEIGHT,), CHAR),
    "Qhat": ((WEIGHT,), CHAR),
    "dualOf": ((CHAR,), CHAR),
    "D": ((WORD, CHAR), CHAR),
    "pair": ((CHAR, CHAR), CHAR),
    "euler": ((CHAR,), CHAR),
    "decomposeG": ((CHAR,), GEXP),
    "steinberg": ((WORD,), CHAR),
    "xclass": ((WORD,), CHAR),
}


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line = line
        self.col = col


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src: str) -> list[_Tok]:
    toks = []
    line, col = 1, 1
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append(_Tok("INT", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(_Tok("IDENT", src[i:j], line, start_col))
            col += j - i
            i = j
            continue
        kinds = {"(": "LPAREN", ")": "RPAREN", "[": "LBRACK", "]": "RBRACK",
                 ",": "COMMA", "+": "PLUS", "-": "MINUS", "*": "STAR"}
        kind = kinds.get(ch)
        if kind is None:
            raise ParseError(f"unexpected character {ch!r}", line, start_col)
        toks.append(_Tok(kind, ch, line, start_col))
        i += 1
        col += 1
    toks.append(_Tok("EOF", "", line, col))
    return toks


class _Parser:
    def __init__(self, src: str):
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {what}, found {t.text or 'end of input'!r}",
                             t.line, t.col)
        return self.next()

    def fail(self, msg: str):
        t = self.peek()
        raise ParseError(msg, t.line, t.col)

    # expr := term (('+'|'-') term)*
    def expr(self):
        node, kind = self.term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.next()
            right, rkind = self.term()
            if kind != CHAR or rkind != CHAR:
                raise ParseError("arithmetic needs character operands", op.line, op.col)
            node = ("add" if op.kind == "PLUS" else "sub", node, right)
        return node, kind

    # term := factor ('*' factor)*
    def term(self):
        node, kind = self.factor()
        while self.peek().kind == "STAR":
            op = self.next()
            right, rkind = self.factor()
            if kind != CHAR or rkind != CHAR:
                raise ParseError("arithmetic needs character operands", op.line, op.col)
            node = ("mul", node, right)
        return node, kind

    # factor := func | '(' expr ')' | '-' factor
    def factor(self):
        t = self.peek()
        if t.kind == "MINUS":
            self.next()
            node, kind = self.factor()
            if kind != CHAR:
                raise ParseError("negation needs a character operand", t.line, t.col)
            return ("neg", node), CHAR
        if t.kind == "LPAREN":
            self.next()
            node, kind = self.expr()
            self.expect("RPAREN", "')'")
            return node, kind
        if t.kind == "IDENT":
            return self.call()
        self.fail(f"expected an expression, found {t.text or 'end of input'!r}")

    def call(self):
        name_tok = self.expect("IDENT", "a function name")
        sig = FUNCS.get(name_tok.text)
        if sig is None:
            raise ParseError(f"unknown function {name_tok.text!r}",
                             name_tok.line, name_tok.col)
        argkinds, result = sig
        self.expect("LPAREN", "'('")
        args = []
        for k, want in enumerate(argkinds):
            if k > 0:
                self.expect("COMMA", "','")
            if want == WEIGHT:
                args.append(self.weightLit())
            elif want == WORD:
                args.append(self.wordLit())
            else:
                node, kind = self.expr()
                if kind != CHAR:
                    t = self.peek()
                    raise ParseError(
                        f"argument {k + 1} of {name_tok.text} must be a character",
                        t.line, t.col)
                args.append(node)
        self.expect("RPAREN", "')'")
        return (name_tok.text, *args), result

    def weightLit(self):
        self.expect("LBRACK", "'['")
        coords = [self.signedInt()]
        while self.peek().kind == "COMMA":
            self.next()
            coords.append(self.signedInt())
        self.expect("RBRACK", "']'")
        return ("weight", tuple(coords))

    def signedInt(self) -> int:
        sign = 1
        if self.peek().kind == "MINUS":
            self.next()
            sign = -1
        t = self.expect("INT", "an integer")
        return sign * int(t.text)

    def wordLit(self):
        t = self.peek()
        if t.kind != "IDENT":
            self.fail("expected a Weyl word ('e' or 's1 s2 ...')")
        if t.text == "e":
            self.next()
            return ("word", ())
        letters = []
        while self.peek().kind == "IDENT":
            tok = self.next()
            if len(tok.text) < 2 or tok.text[0] != "s" or not tok.text[1:].isdigit():
                raise ParseError(f"bad word letter {tok.text!r}", tok.line, tok.col)
            k = int(tok.text[1:])
            if k < 1:
                raise ParseError("word letters are numbered from s1", tok.line, tok.col)
            letters.append(k - 1)
        if not letters:
            self.fail("expected a Weyl word ('e' or 's1 s2 ...')")
        return ("word", tuple(letters))


def parse(src: str):
    p = _Parser(src)
    node, kind = p.expr()
    t = p.peek()
    if t.kind != "EOF":
        raise ParseError(f"trailing input {t.text!r}", t.line, t.col)
    return node


def printExpr(node) -> str:
    kind = node[0]
    if kind == "weight":
        return "[" + ",".join(str(x) for x in node[1]) + "]"
    if kind == "word":
        return "e" if not node[1] else " ".join(f"s{i + 1}" for i in node[1])
    if kind in ("add", "sub"):
        op = " + " if kind == "add" else " - "
        right = printExpr(node[2])
        if node[2][0] in ("add", "sub"):
            right = f"({right})"
        return printExpr(node[1]) + op + right
    if kind == "mul":
        parts = []
        for child in node[1:]:
            s = printExpr(child)
            if child[0] in ("add", "sub"):
                s = f"({s})"
            parts.append(s)
        return "*".join(parts)
    if kind == "neg":
        s = printExpr(node[1])
        if node[1][0] in ("add", "sub", "mul"):
            s = f"({s})"
        return "-" + s
    return f"{kind}(" + ", ".join(printExpr(a) for a in node[1:]) + ")"


@dataclass
class EvalContext:
    W: WeylGroup
    piP: tuple[int, ...] = ()
    order: list[int] | None = None


def _weight(ctx: EvalContext, node):
    coords = node[1]
    if len(coords) != ctx.W.sys.rank:
        raise ValueError(
            f"weight {list(coords)} has {len(coords)} coordinates; "
            f"{ctx.W.sys.name} needs {ctx.W.sys.rank}")
    return coords

def _element(ctx: EvalContext, node) -> int:
    w = 0
    for i in node[1]:
        if i >= ctx.W.sys.rank:
            raise ValueError(f"word letter s{i + 1} out of range for {ctx.W.sys.name}")
        w = ctx.W.rmul(w, i)
    return w


def evalExpr(node, ctx: EvalContext):
    kind = node[0]
    W = ctx.W
    if kind == "add":
        return evalExpr(node[1], ctx) + evalExpr(node[2], ctx)
    if kind == "sub":
        return evalExpr(node[1], ctx) - evalExpr(node[2], ctx)
    if kind == "mul":
        return evalExpr(node[1], ctx) * evalExpr(node[2], ctx)
    if kind == "neg":
        return -evalExpr(node[1], ctx)
    if kind == "e":
        return Character.monomial(_weight(ctx, node[1]))
    if kind == "chi":
        return _dz.charNabla(W, _weight(ctx, node[1]))
    if kind == "P":
        return _dz.charP(W, _weight(ctx, node[1]))
    if kind == "Q":
        return _dz.charQ(W, _weight(ctx, node[1]))
    if kind == "Qhat":
        return _dz.charQhat(W, _weight(ctx, node[1]), ctx.piP)
    if kind == "dualOf":
        return dual(evalExpr(node[1], ctx))
    if kind == "D":
        word = node[1][1]
        for i in word:
            if i >= W.sys.rank:
                raise ValueError(f"word letter s{i + 1} out of range for {W.sys.name}")
        return _dz.demWord(W, word, evalExpr(node[2], ctx))
    if kind == "pair":
        return _kt.eulerPair(W, evalExpr(node[1], ctx), evalExpr(node[2], ctx))
    if kind == "euler":
        return _dz.eulerChar(W, evalExpr(node[1], ctx))
    if kind == "decomposeG":
        return decomposeWeylBasis(W, evalExpr(node[1], ctx))
    if kind == "steinberg":
        return Character.monomial(W.steinbergWeight(_element(ctx, node[1])))
    if kind == "xclass":
        return _kt.xClass(W, _element(ctx, node[1]), ctx.order)
    raise ValueError(f"cannot evaluate node kind {kind!r}")
