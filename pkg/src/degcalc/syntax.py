"""Shared lexer and recursive-descent parser for ordinal and W-term text.

Grammar (whitespace-insensitive)::

    expr  := term ('+' term)*
    term  := power ('*' power)*
    power := atom ('^' power)?
    atom  := NAT | 'w' | 'W' | 'phi' '(' expr ',' expr ')' | '(' expr ')'

``ω``, ``Ω``, ``φ`` and ``·`` are accepted as aliases for ``w``, ``W``,
``phi`` and ``*``.  The parser only builds a small tuple AST; the ordinal and
meta-ordinal modules fold it with their own arithmetic.
"""

import re

from .errors import ParseError

GRAMMAR_HELP = """\
term grammar (whitespace-insensitive):
  ordinal   := 0 | 1 | 2 ... | w | phi(a,b) | a+b | a*b | w^a | (a)
  W-term    := ordinal grammar plus W (the meta symbol), e.g. W^3*2+W+5
  name      := [<ordinal>-]word[^<ordinal>]-...-(inaccessible|Mahlo)
               words: hyper richly utterly deeply truly eternally vastly
  node ref  := id | id(param) | id(param1,param2)
"""

_TOKEN = re.compile(r"\s*(?:(\d+)|(phi|φ)|([wωWΩ])|([-+*·^(),]))")

ALIASES = {"ω": "w", "Ω": "W", "φ": "phi", "·": "*"}


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        num, phi, sym, punct = m.groups()
        if num is not None:
            tokens.append(("NAT", int(num), start))
        elif phi is not None:
            tokens.append(("phi", "phi", start))
        elif sym is not None:
            tokens.append((ALIASES.get(sym, sym), sym, start))
        else:
            tokens.append((ALIASES.get(punct, punct), punct, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {found}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "+":
            pos = self.take("+")[2]
            node = ("+", node, self.term(), pos)
        return node

    def term(self):
        node = self.power()
        while self.peek()[0] == "*":
            pos = self.take("*")[2]
            node = ("*", node, self.power(), pos)
        return node

    def power(self):
        node = self.atom()
        if self.peek()[0] == "^":
            pos = self.take("^")[2]
            node = ("^", node, self.power(), pos)
        return node

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "NAT":
            self.i += 1
            return ("nat", value, pos)
        if kind in ("w", "W"):
            self.i += 1
            return (kind, pos)
        if kind == "phi":
            self.i += 1
            self.take("(")
            a = self.expr()
            self.take(",")
            b = self.expr()
            self.take(")")
            return ("phi", a, b, pos)
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if kind == "EOF" else repr(value)
        raise ParseError(f"expected a term, found {found}", self.text, pos)


def parse_ast(text):
    """Parse ``text`` into a tuple AST, requiring the whole input be consumed."""
    p = _Parser(text)
    if p.peek()[0] == "EOF":
        raise ParseError("empty term", text, 0)
    node = p.expr()
    kind, value, pos = p.peek()
    if kind != "EOF":
        raise ParseError(f"unexpected {value!r}", text, pos)
    return node
