"""Surface syntax for game expressions.

Grammar (whitespace-insensitive)::

    expr   := term ('+' term)*
    term   := factor (':' factor)*          (':' associates right)
    factor := number | star | brace | '~' factor | '(' expr ')'
    number := ['-'] int ['/' int]           (power-of-two denominator)
    star   := '*' [digits]                  ('*' alone is *1)
    brace  := '{' list '|' list '}'         (partizan form)
            | '{' list '}'                  (impartial shorthand: both sides)
    list   := [expr (',' expr)*]

'+' builds a position (disjunctive sum of components), ':' an ordinal sum,
'~' a conjugate.  ':' binds tighter than '+', '~' tightest.  An expression
used where a single form is needed (inside ':', '~' or a brace list) is
folded into one literal sum tree.
"""

from __future__ import annotations

import re
from typing import Optional

from .forms import Arena, Dyadic, FormId, Position, flower_parts, mutant_parts

_TOKEN = re.compile(
    r"\s*(?:(?P<number>-?\d+(?:/\d+)?)|(?P<star>\*\d*)|(?P<op>[{}|,:+~()]))"
)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int) -> None:
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            rest = text[i:]
            stripped = rest.lstrip()
            if stripped:
                pos = i + len(rest) - len(stripped)
                raise ParseError(f"unexpected character {stripped[0]!r}", pos)
            break
        if m.group("number"):
            tokens.append(("number", m.group("number"), m.start("number")))
        elif m.group("star"):
            tokens.append(("star", m.group("star"), m.start("star")))
        else:
            tokens.append((m.group("op"), m.group("op"), m.start("op")))
        i = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, arena: Arena, text: str) -> None:
        self.arena = arena
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple:
        return self.tokens[self.i]

    def take(self, kind: Optional[str] = None) -> tuple:
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    # -- grammar -------------------------------------------------------------

    def parse(self) -> Position:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> Position:
        parts = list(self.term())
        while self.peek()[0] == "+":
            self.take()
            parts.extend(self.term())
        return self.arena.position(*parts)

    def term(self) -> Position:
        factors = [self.factor()]
        while self.peek()[0] == ":":
            self.take()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        forms = [self._as_form(f) for f in factors]
        out = forms[-1]
        for base in reversed(forms[:-1]):
            out = self.arena.ordinal_sum(base, out)
        return self.arena.position(out)

    def factor(self) -> Position:
        kind, value, pos = self.peek()
        if kind == "number":
            self.take()
            try:
                return self.arena.position(self.arena.number(Dyadic.parse(value)))
            except ValueError as exc:
                raise ParseError(str(exc), pos) from None
        if kind == "star":
            self.take()
            n = 1 if value == "*" else int(value[1:])
            return self.arena.position(self.arena.nimber(n))
        if kind == "~":
            self.take()
            inner = self.factor()
            return self.arena.conjugate_position(inner)
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "{":
            return self.brace()
        raise ParseError(f"unexpected {value!r}", pos)

    def brace(self) -> Position:
        self.take("{")
        left = self.option_list()
        if self.peek()[0] == "|":
            self.take()
            right = self.option_list()
        else:
            right = left
        self.take("}")
        return self.arena.position(self.arena.intern(left, right))

    def option_list(self) -> list:
        if self.peek()[0] in ("|", "}"):
            return []
        out = [self._as_form(self.expr())]
        while self.peek()[0] == ",":
            self.take()
            out.append(self._as_form(self.expr()))
        return out

    def _as_form(self, p: Position) -> FormId:
        if not p:
            return self.arena.zero
        form = p[0]
        for extra in p[1:]:
            form = self.arena.sum_form(form, extra)
        return form


def parse_expr(arena: Arena, text: str) -> Position:
    """Parse an expression into a position (multiset of component forms)."""
    return _Parser(arena, text).parse()


# ============================================================================
# Printing
# ============================================================================


def format_form(arena: Arena, g: FormId) -> str:
    """Render a form; parsing the result reproduces the identical handle."""
    value = arena.number_value(g)
    if value is not None:
        return str(value)
    k = arena.nimber_index(g)
    if k is not None:
        return "*" if k == 1 else f"*{k}"
    fl = flower_parts(arena, g)
    if fl is not None and fl[1].num != 0:
        n, a = fl
        head = "*" if n == 1 else f"*{n}"
        return f"{head}:{a}"
    mp = mutant_parts(arena, g)
    if mp is not None and mp[1].num != 0:
        xs, a = mp
        head = ",".join(format_form(arena, arena.nimber(x)) for x in sorted(xs))
        return f"{{{head}}}:{a}"
    reg = arena.ordinal_parts(g)
    if reg is not None:
        base, top = reg
        return f"{format_form(arena, base)}:{format_form(arena, top)}"
    lefts = ",".join(format_form(arena, o) for o in arena.left(g))
    rights = ",".join(format_form(arena, o) for o in arena.right(g))
    if arena.is_impartial(g):
        return f"{{{lefts}}}"
    return f"{{{lefts}|{rights}}}"


def format_position(arena: Arena, p: Position) -> str:
    if not p:
        return "0"
    return " + ".join(format_form(arena, c) for c in p)
