"""Textual class-diagram language: AST, recursive-descent parser and printers.

Grammar (surface form accepted by :func:`parse_diagram`)::

    Diagram     ::= "classdiagram" IDENT "{" ( Element | "inv" TEXT ";" )* "}"
    Element     ::= Class | Association
    Class       ::= "class" IDENT ( "extends" IDENT ( "," IDENT )* )?
                    ( "{" Attribute* "}" | ";" )
    Attribute   ::= ( "public" | "private" )? IDENT IDENT ";"
    Association ::= "association" IDENT "--" IDENT ";"

Whitespace and ``//`` line comments are skipped between tokens.  The text of
an invariant is taken verbatim (stripped) up to the next ``;``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Union

KEYWORDS = frozenset(
    {"classdiagram", "class", "extends", "association", "public", "private", "inv"}
)

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class ParseError(Exception):
    """Syntax error with a 1-based source position."""

    def __init__(self, line: int, column: int, expected: str, found: str, path: str | None = None):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        self.path = path
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f"{self.line}:{self.column}"
        if self.path is not None:
            where = f"{self.path}:{where}"
        return f"{where}: expected {self.expected}, found {self.found}"


class DiagramFileError(Exception):
    """A diagram file could not be read."""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"{path}: {reason}")


def is_ident(text: str) -> bool:
    """True for a user-level identifier (no keywords, no leading underscore)."""
    return (
        _IDENT_RE.fullmatch(text) is not None
        and not text.startswith("_")
        and text not in KEYWORDS
    )


class Modifier(enum.Enum):
    PUBLIC = "public"
    PRIVATE = "private"


@dataclass(frozen=True)
class Attribute:
    type_name: str
    name: str
    modifier: Modifier | None = None


@dataclass(frozen=True)
class ClassDecl:
    name: str
    supers: tuple[str, ...] = ()
    attrs: tuple[Attribute, ...] = ()


@dataclass(frozen=True)
class AssocDecl:
    left: str
    right: str


Element = Union[ClassDecl, AssocDecl]


@dataclass(frozen=True)
class RawInvariant:
    text: str


@dataclass(frozen=True)
class Diagram:
    name: str
    invariants: tuple[RawInvariant, ...] = ()
    elements: tuple[Element, ...] = ()

    @property
    def classes(self) -> tuple[ClassDecl, ...]:
        return tuple(e for e in self.elements if isinstance(e, ClassDecl))

    @property
    def associations(self) -> tuple[AssocDecl, ...]:
        return tuple(e for e in self.elements if isinstance(e, AssocDecl))


# -- lexer -----------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "keyword", "punct", "invtext", "eof"
    value: str
    line: int
    column: int

    def describe(self) -> str:
        if self.kind == "eof":
            return "end of input"
        return repr(self.value)


_PUNCT = ("--", "{", "}", ";", ",")


def tokenize(source: str) -> Iterator[Token]:
    pos = 0
    line = 1
    line_start = 0
    n = len(source)
    expect_invtext = False

    def advance_to(new_pos: int) -> None:
        nonlocal pos, line, line_start
        chunk = source[pos:new_pos]
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = new_pos

    while True:
        if expect_invtext:
            expect_invtext = False
            end = source.find(";", pos)
            if end < 0:
                end = n
            col = pos - line_start + 1
            tok = Token("invtext", source[pos:end].strip(), line, col)
            advance_to(end)
            yield tok
            continue

        # skip whitespace and comments
        while pos < n:
            ch = source[pos]
            if ch.isspace():
                advance_to(pos + 1)
            elif source.startswith("//", pos):
                end = source.find("\n", pos)
                advance_to(n if end < 0 else end)
            else:
                break
        col = pos - line_start + 1
        if pos >= n:
            yield Token("eof", "", line, col)
            return

        m = _IDENT_RE.match(source, pos)
        if m:
            word = m.group()
            kind = "keyword" if word in KEYWORDS else "ident"
            advance_to(m.end())
            yield Token(kind, word, line, col)
            if word == "inv":
                expect_invtext = True
            continue
        for p in _PUNCT:
            if source.startswith(p, pos):
                advance_to(pos + len(p))
                yield Token("punct", p, line, col)
                break
        else:
            raise ParseError(line, col, "a token", repr(source[pos]))


# -- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, source: str):
        self._tokens = tokenize(source)
        self._tok = next(self._tokens)

    def _next(self) -> Token:
        tok = self._tok
        if tok.kind != "eof":
            self._tok = next(self._tokens)
        return tok

    def _error(self, expected: str) -> ParseError:
        return ParseError(self._tok.line, self._tok.column, expected, self._tok.describe())

    def _at(self, value: str) -> bool:
        return self._tok.kind in ("keyword", "punct") and self._tok.value == value

    def _expect(self, value: str) -> Token:
        if not self._at(value):
            raise self._error(repr(value))
        return self._next()

    def _ident(self, what: str = "identifier") -> str:
        tok = self._tok
        if tok.kind != "ident" or tok.value.startswith("_"):
            raise self._error(what)
        return self._next().value

    def diagram(self) -> Diagram:
        self._expect("classdiagram")
        name = self._ident("diagram name")
        self._expect("{")
        invariants: list[RawInvariant] = []
        elements: list[Element] = []
        while not self._at("}"):
            if self._at("class"):
                elements.append(self.class_decl())
            elif self._at("association"):
                elements.append(self.assoc_decl())
            elif self._at("inv"):
                self._next()
                invariants.append(RawInvariant(self._next().value))
                self._expect(";")
            else:
                raise self._error("'class', 'association', 'inv' or '}'")
        self._expect("}")
        if self._tok.kind != "eof":
            raise self._error("end of input")
        return Diagram(name, tuple(invariants), tuple(elements))

    def class_decl(self) -> ClassDecl:
        self._expect("class")
        name = self._ident("class name")
        supers: list[str] = []
        if self._at("extends"):
            self._next()
            supers.append(self._ident("superclass name"))
            while self._at(","):
                self._next()
                supers.append(self._ident("superclass name"))
        attrs: list[Attribute] = []
        if self._at(";"):
            self._next()
        elif self._at("{"):
            self._next()
            while not self._at("}"):
                attrs.append(self.attribute())
            self._next()
        else:
            raise self._error("'extends', '{' or ';'" if not supers else "',', '{' or ';'")
        return ClassDecl(name, tuple(supers), tuple(attrs))

    def attribute(self) -> Attribute:
        modifier = None
        if self._at("public") or self._at("private"):
            modifier = Modifier(self._next().value)
        type_name = self._ident("attribute type or '}'" if modifier is None else "attribute type")
        name = self._ident("attribute name")
        self._expect(";")
        return Attribute(type_name, name, modifier)

    def assoc_decl(self) -> AssocDecl:
        self._expect("association")
        left = self._ident("class name")
        self._expect("--")
        right = self._ident("class name")
        self._expect(";")
        return AssocDecl(left, right)


def parse_diagram(source: str) -> Diagram:
    """Parse one ``classdiagram`` document.  Raises :class:`ParseError`."""
    return _Parser(source).diagram()


def parse_files(paths: Iterable[str | Path]) -> list[Diagram]:
    """Parse each file in order; the first failure aborts."""
    diagrams = []
    for path in paths:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise DiagramFileError(str(path), getattr(exc, "strerror", None) or str(exc)) from exc
        try:
            diagrams.append(parse_diagram(text))
        except ParseError as exc:
            exc.path = str(path)
            raise
    return diagrams


# -- printers --------------------------------------------------------------

def format_diagram(d: Diagram) -> str:
    """Canonical surface syntax; ``parse_diagram(format_diagram(d)) == d``."""
    lines = [f"classdiagram {d.name} {{"]
    for inv in d.invariants:
        lines.append(f"  inv {inv.text};")
    for e in d.elements:
        if isinstance(e, AssocDecl):
            lines.append(f"  association {e.left} -- {e.right};")
            continue
        head = f"  class {e.name}"
        if e.supers:
            head += " extends " + ", ".join(e.supers)
        if not e.attrs:
            lines.append(head + ";")
            continue
        lines.append(head + " {")
        for a in e.attrs:
            mod = f"{a.modifier.value} " if a.modifier else ""
            lines.append(f"    {mod}{a.type_name} {a.name};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_diagram(d: Diagram) -> str:
    """Stable line-oriented AST rendering used by the ``parse`` command."""
    lines = [f"classdiagram {d.name}"]
    for inv in d.invariants:
        lines.append(f"  invariant {inv.text!r}")
    for e in d.elements:
        if isinstance(e, AssocDecl):
            lines.append(f"  association {e.left} -- {e.right}")
            continue
        lines.append(f"  class {e.name} extends [{', '.join(e.supers)}]")
        for a in e.attrs:
            mod = a.modifier.value if a.modifier else "-"
            lines.append(f"    attribute {mod} {a.type_name} {a.name}")
    return "\n".join(lines) + "\n"
