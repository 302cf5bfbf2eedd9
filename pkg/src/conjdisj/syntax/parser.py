"""Recursive-descent parsers for disjunctive and conjunctive terms.

Disjunctive::

    term := 'id' NAT | 'kappa' NAT | 'in1' NAT NAT | 'in2' NAT NAT | 'fold' NAT
          | '(' term ';' term ')' | '(' term '+' term ')' | '[' term ',' term ']'

Conjunctive::

    obj  := 'I' | 'p'NAT ('*' 'p'NAT)*
    term := 'id' obj | 'bang' obj | 'pr1' obj '|' obj | 'pr2' obj '|' obj | 'dup' obj
          | '(' term ';' term ')' | '(' term '*' term ')' | '<' term ',' term '>'

``(f ; g)`` is ``f`` followed by ``g``.  Whitespace is insignificant.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from ..errors import ParseError
from . import conj, disj

_TOKEN = re.compile(
    r"\s*(?:(?P<gen>p\d+)|(?P<word>[A-Za-z_][A-Za-z_0-9]*)|(?P<nat>\d+)|(?P<punct>[()\[\];+,*|<>]))"
)


class Token(NamedTuple):
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"expected {expected}, found {found}", self.text, tok.pos)

    def expect(self, text: str) -> Token:
        if self.peek.text != text or self.peek.kind == "eof":
            self.fail(repr(text))
        return self.advance()

    def nat(self) -> int:
        if self.peek.kind != "nat":
            self.fail("a natural number")
        return int(self.advance().text)

    def finish(self):
        if self.peek.kind != "eof":
            self.fail("end of input")


class _DisjParser(_Parser):
    def term(self) -> disj.DisjTerm:
        tok = self.peek
        if tok.kind == "word":
            self.advance()
            if tok.text == "id":
                return disj.Id(self.nat())
            if tok.text == "kappa":
                return disj.Kappa(self.nat())
            if tok.text == "in1":
                return disj.In1(self.nat(), self.nat())
            if tok.text == "in2":
                return disj.In2(self.nat(), self.nat())
            if tok.text == "fold":
                return disj.Fold(self.nat())
            self.i -= 1
            self.fail("a disjunctive term")
        if tok.text == "(":
            self.advance()
            left = self.term()
            op = self.peek.text
            if op not in (";", "+") or self.peek.kind != "punct":
                self.fail("';' or '+'")
            self.advance()
            right = self.term()
            self.expect(")")
            return disj.Seq(left, right) if op == ";" else disj.Sum(left, right)
        if tok.text == "[":
            self.advance()
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect("]")
            return disj.Case(left, right)
        self.fail("a disjunctive term")


class _ConjParser(_Parser):
    def obj(self) -> conj.ConjObj:
        tok = self.peek
        if tok.kind == "word" and tok.text == "I":
            self.advance()
            return ()
        if tok.kind != "gen":
            self.fail("an object ('I' or p<n>)")
        indices = [self._gen(self.advance())]
        # '*' continues the object only when a generator follows it
        while self.peek.text == "*" and self.tokens[self.i + 1].kind == "gen":
            self.advance()
            indices.append(self._gen(self.advance()))
        return tuple(indices)

    def _gen(self, tok: Token) -> int:
        index = int(tok.text[1:])
        if index < 1:
            raise ParseError(f"generator index must be positive in {tok.text!r}", self.text, tok.pos)
        return index

    def term(self) -> conj.ConjTerm:
        tok = self.peek
        if tok.kind == "word":
            self.advance()
            if tok.text == "id":
                return conj.Id(self.obj())
            if tok.text == "bang":
                return conj.Bang(self.obj())
            if tok.text == "dup":
                return conj.Dup(self.obj())
            if tok.text in ("pr1", "pr2"):
                left = self.obj()
                self.expect("|")
                right = self.obj()
                return conj.Pr1(left, right) if tok.text == "pr1" else conj.Pr2(left, right)
            self.i -= 1
            self.fail("a conjunctive term")
        if tok.text == "(":
            self.advance()
            left = self.term()
            op = self.peek.text
            if op not in (";", "*") or self.peek.kind != "punct":
                self.fail("';' or '*'")
            self.advance()
            right = self.term()
            self.expect(")")
            return conj.Seq(left, right) if op == ";" else conj.Prod(left, right)
        if tok.text == "<":
            self.advance()
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(">")
            return conj.Pair(left, right)
        self.fail("a conjunctive term")


def parse_disj(text: str) -> disj.DisjTerm:
    p = _DisjParser(text)
    t = p.term()
    p.finish()
    return t


def parse_conj(text: str) -> conj.ConjTerm:
    p = _ConjParser(text)
    t = p.term()
    p.finish()
    return t


def parse_obj(text: str) -> conj.ConjObj:
    p = _ConjParser(text)
    obj = p.obj()
    p.finish()
    return obj
