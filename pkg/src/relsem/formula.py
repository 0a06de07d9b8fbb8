"""Formulas over atoms, bottom, conjunction and strict implication.

Concrete syntax::

    formula := imp
    imp     := conj ("->" imp)?
    conj    := atom ("&" atom)*
    atom    := IDENT | "_|_" | "bot" | "(" formula ")"

``&`` binds tighter than ``->``; ``&`` associates to the left and ``->`` to
the right.  Modal formulas (with ``Box``) are produced only by
:func:`translate_modal` and are never parsed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union


class FormulaSyntaxError(ValueError):
    """Malformed formula text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.text = text


class _Node:
    __slots__ = ()

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((type(self).__name__,) + self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, eq=True, repr=False)
class Atom(_Node):
    name: str
    _hash: int | None = field(default=None, init=False, compare=False, repr=False)

    def _key(self):
        return (self.name,)

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True, repr=False)
class Bottom(_Node):
    _hash: int | None = field(default=None, init=False, compare=False, repr=False)

    def _key(self):
        return ()

    def __repr__(self) -> str:
        return "Bottom()"

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True, repr=False)
class And(_Node):
    left: "Formula"
    right: "Formula"
    _hash: int | None = field(default=None, init=False, compare=False, repr=False)

    def _key(self):
        return (self.left, self.right)

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True, repr=False)
class Imp(_Node):
    left: "Formula"
    right: "Formula"
    _hash: int | None = field(default=None, init=False, compare=False, repr=False)

    def _key(self):
        return (self.left, self.right)

    def __repr__(self) -> str:
        return f"Imp({self.left!r}, {self.right!r})"

    __hash__ = _Node.__hash__


@dataclass(frozen=True, eq=True, repr=False)
class Box(_Node):
    """Necessity; only appears in the image of :func:`translate_modal`."""

    inner: "ModalFormula"
    _hash: int | None = field(default=None, init=False, compare=False, repr=False)

    def _key(self):
        return (self.inner,)

    def __repr__(self) -> str:
        return f"Box({self.inner!r})"

    __hash__ = _Node.__hash__


Formula = Union[Atom, Bottom, And, Imp]
ModalFormula = Union[Atom, Bottom, And, Imp, Box]

BOT = Bottom()
TOP = Imp(BOT, BOT)  # true at every world of every model


def neg(f: Formula) -> Formula:
    return Imp(f, BOT)


def conj(*fs: Formula) -> Formula:
    """Left-nested conjunction ``f1 & f2 & ... & fn`` (n >= 1)."""
    if not fs:
        raise ValueError("conj needs at least one formula")
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<imp>->)|(?P<and>&)|(?P<bot>_\|_)|(?P<lp>\()|(?P<rp>\))"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.lastgroup is None:
            raise FormulaSyntaxError(f"unknown token {text[pos]!r}", pos, text)
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "ident" and value == "bot":
            kind = "bot"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str) -> FormulaSyntaxError:
        kind, value, pos = self.peek()
        found = "end of input" if kind == "eof" else repr(value)
        return FormulaSyntaxError(f"{message}, found {found}", pos, self.text)

    def formula(self) -> Formula:
        left = self.conj()
        if self.peek()[0] == "imp":
            self.advance()
            return Imp(left, self.formula())
        return left

    def conj(self) -> Formula:
        out = self.atom()
        while self.peek()[0] == "and":
            self.advance()
            out = And(out, self.atom())
        return out

    def atom(self) -> Formula:
        kind, value, _ = self.peek()
        if kind == "ident":
            self.advance()
            return Atom(value)
        if kind == "bot":
            self.advance()
            return BOT
        if kind == "lp":
            self.advance()
            inner = self.formula()
            if self.peek()[0] != "rp":
                raise self.error("expected ')'")
            self.advance()
            return inner
        raise self.error("expected atom, '_|_' or '('")


def parse(text: str) -> Formula:
    """Parse ``text`` into a :data:`Formula`; raises :class:`FormulaSyntaxError`."""
    p = _Parser(text)
    f = p.formula()
    if p.peek()[0] != "eof":
        raise p.error("unexpected trailing input")
    return f


# --------------------------------------------------------------------------
# printing

_PREC_IMP, _PREC_AND, _PREC_ATOM = 1, 2, 3


def _prec(f: ModalFormula) -> int:
    if isinstance(f, Imp):
        return _PREC_IMP
    if isinstance(f, And):
        return _PREC_AND
    return _PREC_ATOM


def to_text(f: ModalFormula) -> str:
    """Print with the fewest parentheses that still parse back to ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "_|_"
    if isinstance(f, Box):
        return f"[]({to_text(f.inner)})" if _prec(f.inner) < _PREC_ATOM else f"[]{to_text(f.inner)}"
    if isinstance(f, And):
        left = to_text(f.left)
        if _prec(f.left) < _PREC_AND:
            left = f"({left})"
        right = to_text(f.right)
        if _prec(f.right) <= _PREC_AND:  # left-assoc: a right conjunct needs parens
            right = f"({right})"
        return f"{left} & {right}"
    if isinstance(f, Imp):
        left = to_text(f.left)
        if _prec(f.left) <= _PREC_IMP:
            left = f"({left})"
        return f"{left} -> {to_text(f.right)}"
    raise TypeError(f"not a formula: {f!r}")


# --------------------------------------------------------------------------
# structural operations

def translate_modal(f: Formula) -> ModalFormula:
    """Map strict implication to boxed material implication."""
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, And):
        return And(translate_modal(f.left), translate_modal(f.right))
    if isinstance(f, Imp):
        return Box(Imp(translate_modal(f.left), translate_modal(f.right)))
    raise TypeError(f"not a propositional formula: {f!r}")


def imp_depth(f: ModalFormula) -> int:
    """Nesting depth of ``->``; bounds how far satisfaction looks along R."""
    if isinstance(f, (Atom, Bottom)):
        return 0
    if isinstance(f, And):
        return max(imp_depth(f.left), imp_depth(f.right))
    if isinstance(f, Imp):
        return 1 + max(imp_depth(f.left), imp_depth(f.right))
    if isinstance(f, Box):
        return imp_depth(f.inner)
    raise TypeError(f"not a formula: {f!r}")


def box_depth(f: ModalFormula) -> int:
    if isinstance(f, (Atom, Bottom)):
        return 0
    if isinstance(f, Box):
        return 1 + box_depth(f.inner)
    return max(box_depth(f.left), box_depth(f.right))


def size(f: ModalFormula) -> int:
    """Number of AST nodes."""
    if isinstance(f, (Atom, Bottom)):
        return 1
    if isinstance(f, Box):
        return 1 + size(f.inner)
    return 1 + size(f.left) + size(f.right)


def subformulas(f: ModalFormula) -> Iterator[ModalFormula]:
    """Pre-order walk, duplicates included."""
    yield f
    if isinstance(f, Box):
        yield from subformulas(f.inner)
    elif isinstance(f, (And, Imp)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


def atoms(f: ModalFormula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def count_nodes(f: ModalFormula, kind: type) -> int:
    return sum(1 for g in subformulas(f) if isinstance(g, kind))
