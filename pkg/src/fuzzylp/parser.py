"""Parsers for program files and goal strings.

The concrete grammar:

* a program is a sequence of rules, each ended by a dot
* ``head <- body.`` is a rule; ``head.`` abbreviates ``head <- <top>.``
* ``head <-label body with v.`` is a weighted rule and parses as
  ``head <- &label(v, body).``; without the label the configured default
  conjunction (Goedel by default) is used
* connective applications are written ``&label(...)``, ``|label(...)`` and
  ``@label(...)``; the label is optional for ``&`` and ``|``, resolving to
  the default logic
* variables start with an upper-case letter or ``_``; predicate and function
  symbols with a lower-case letter; numbers are literals
* ``%`` starts a line comment

Truth literals are recognised through the active lattice: numbers on numeric
carriers, element names on finite ones.  Both parsers are pure functions of
their input.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass
from typing import Optional

from .errors import LatticeError, ParseError
from .lattice import Lattice, builtin_unit_interval
from .terms import (
    Atom,
    Compound,
    ConnApp,
    ConnectiveRef,
    Expression,
    Rule,
    Symbol,
    TruthLit,
    Var,
    format_value,
)

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>[ \t\r\n]+)
    | (?P<comment>%[^\n]*)
    | (?P<impl><-(?P<impllabel>[a-z][A-Za-z0-9_]*)?)
    | (?P<number>\d+\.\d+|\d+)
    | (?P<id>[a-z][A-Za-z0-9_]*)
    | (?P<var>[A-Z_][A-Za-z0-9_]*)
    | (?P<punct>[&|@(),.~=/])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # impl | number | id | var | punct | eof
    text: str
    line: int
    col: int
    label: Optional[str] = None  # implication label, when present


def _line_starts(text: str) -> list:
    starts = [0]
    for i, ch in enumerate(text):
        if ch == "\n":
            starts.append(i + 1)
    return starts


def tokenize(text: str, source: Optional[str] = None) -> list:
    """Scan source text into tokens; raises ParseError on stray characters."""
    starts = _line_starts(text)

    def at(pos: int) -> tuple:
        line = bisect_right(starts, pos)
        return line, pos - starts[line - 1] + 1

    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            line, col = at(pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col, source)
        pos = m.end()
        kind = m.lastgroup
        if kind in ("ws", "comment"):
            continue
        line, col = at(m.start())
        if kind == "impl":
            out.append(Token("impl", m.group("impl"), line, col, m.group("impllabel")))
        else:
            out.append(Token(kind, m.group(kind), line, col))
    line, col = at(len(text))
    out.append(Token("eof", "", line, col))
    return out


class _Parser:
    def __init__(self, tokens, lattice: Lattice, default_label: str, source):
        self.tokens = tokens
        self.i = 0
        self.lattice = lattice
        self.default_label = default_label
        self.source = source

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.col, self.source)

    def expect_punct(self, ch: str) -> Token:
        tok = self.take()
        if tok.kind != "punct" or tok.text != ch:
            self.error(f"expected {ch!r}", tok)
        return tok

    def at_punct(self, ch: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == ch

    # -- programs -----------------------------------------------------------

    def program(self) -> list:
        rules = []
        while self.peek().kind != "eof":
            rules.append(self.rule(len(rules) + 1))
        return rules

    def rule(self, rid: int) -> Rule:
        head = self.head_atom()
        tok = self.peek()
        if self.at_punct("."):
            self.take()
            return Rule(rid, head, TruthLit(self.lattice.top))
        if tok.kind != "impl":
            self.error("expected '<-' or '.' after rule head", tok)
        self.take()
        body = self.expression()
        if self.peek().kind == "id" and self.peek().text == "with":
            self.take()
            weight = self.truth_literal()
            label = tok.label or self.default_label
            body = ConnApp(ConnectiveRef("and", label), (weight, body))
        self.expect_punct(".")
        return Rule(rid, head, body)

    def head_atom(self) -> Atom:
        tok = self.peek()
        if tok.kind != "id":
            self.error("rule head must be an atom", tok)
        return self.atom()

    def atom(self) -> Atom:
        tok = self.take()
        args = self.arg_list(self.term) if self.at_punct("(") else ()
        return Atom(Symbol(tok.text, len(args)), tuple(args))

    def arg_list(self, parse_one) -> list:
        self.expect_punct("(")
        args = [parse_one()]
        while self.at_punct(","):
            self.take()
            args.append(parse_one())
        self.expect_punct(")")
        return args

    # -- expressions ----------------------------------------------------------

    def expression(self) -> Expression:
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            return TruthLit(self.parse_value(tok))
        if tok.kind == "punct" and tok.text in ("&", "|"):
            self.take()
            kind = "and" if tok.text == "&" else "or"
            label = self.default_label
            if self.peek().kind == "id":
                label = self.take().text
            args = self.arg_list(self.expression)
            if len(args) != 2:
                self.error(
                    f"{tok.text}{label} takes exactly 2 arguments, got {len(args)}", tok
                )
            return ConnApp(ConnectiveRef(kind, label), tuple(args))
        if tok.kind == "punct" and tok.text == "@":
            self.take()
            if self.peek().kind != "id":
                self.error("aggregator sigil '@' requires a label")
            label = self.take().text
            args = self.arg_list(self.expression)
            return ConnApp(ConnectiveRef("agr", label), tuple(args))
        if tok.kind == "id":
            nxt = self.tokens[self.i + 1]
            is_applied = nxt.kind == "punct" and nxt.text == "("
            if not is_applied and self.lattice.is_truth_name(tok.text):
                self.take()
                return TruthLit(tok.text)
            return self.atom()
        if tok.kind == "var":
            self.error(f"a variable ({tok.text}) is not a formula by itself", tok)
        self.error("expected a formula", tok)

    def term(self):
        tok = self.peek()
        if tok.kind == "var":
            self.take()
            return Var(tok.text)
        if tok.kind == "number":
            self.take()
            return Compound(Symbol(format_value(float(tok.text)), 0), ())
        if tok.kind == "id":
            self.take()
            args = self.arg_list(self.term) if self.at_punct("(") else ()
            return Compound(Symbol(tok.text, len(args)), tuple(args))
        self.error("expected a term", tok)

    def truth_literal(self) -> TruthLit:
        tok = self.take()
        if tok.kind not in ("number", "id"):
            self.error("expected a truth value", tok)
        return TruthLit(self.parse_value(tok))

    def parse_value(self, tok: Token):
        try:
            return self.lattice.parse_value(tok.text)
        except LatticeError as e:
            self.error(str(e), tok)

    # -- goals ---------------------------------------------------------------

    def goal(self) -> Expression:
        expr = self.expression()
        if self.at_punct("."):
            self.take()
        if self.peek().kind != "eof":
            self.error("trailing input after goal")
        return expr

    def finish_program(self, rules):
        if self.peek().kind != "eof":
            self.error("trailing input after last rule")
        return rules


def parse_program(
    text: str,
    lattice: Optional[Lattice] = None,
    default_label: str = "godel",
    source: Optional[str] = None,
) -> list:
    """Parse program text into rules numbered 1..n in source order."""
    lattice = lattice or builtin_unit_interval()
    p = _Parser(tokenize(text, source), lattice, default_label, source)
    return p.finish_program(p.program())


def parse_goal(
    text: str,
    lattice: Optional[Lattice] = None,
    default_label: str = "godel",
    source: Optional[str] = None,
) -> Expression:
    """Parse a goal expression (optionally dot-terminated)."""
    lattice = lattice or builtin_unit_interval()
    p = _Parser(tokenize(text, source), lattice, default_label, source)
    return p.goal()
