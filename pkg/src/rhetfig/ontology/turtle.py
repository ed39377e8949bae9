"""Parser and serializer for the Turtle subset used by the figure ontology.

Supported syntax: ``@prefix`` declarations, triples with ``;`` predicate
lists and ``,`` object lists, absolute IRIs, prefixed names, ``a`` for
``rdf:type``, language-tagged string literals, and ``#`` comments.
Blank nodes and collections are deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import Iri, Literal, RDF_TYPE, term_sort_key
from .store import TripleStore


class TurtleParseError(ValueError):
    """Syntax or prefix error with 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str  # IRIREF | PNAME | LITERAL | DOT | SEMI | COMMA | A | PREFIX | EOF
    value: object
    line: int
    column: int


_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", '"': '"', "\\": "\\"}

_PUNCT = {".": "DOT", ";": "SEMI", ",": "COMMA"}


def _is_name_char(ch: str) -> bool:
    return bool(ch) and (ch.isalnum() or ch in "_-")


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.column = 1

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return ch

    def _error(self, message: str, line: int | None = None, column: int | None = None):
        raise TurtleParseError(message, line or self.line, column or self.column)

    def tokens(self):
        while True:
            while self._peek() and self._peek() in " \t\r\n":
                self._advance()
            if self._peek() == "#":
                while self._peek() and self._peek() != "\n":
                    self._advance()
                continue
            line, column = self.line, self.column
            ch = self._peek()
            if not ch:
                yield _Token("EOF", None, line, column)
                return
            if ch in _PUNCT:
                self._advance()
                yield _Token(_PUNCT[ch], ch, line, column)
            elif ch == "<":
                yield self._iriref(line, column)
            elif ch == '"':
                yield self._literal(line, column)
            elif ch == "@":
                self._advance()
                word = self._word()
                if word != "prefix":
                    self._error(f"unexpected directive '@{word}'", line, column)
                yield _Token("PREFIX", "@prefix", line, column)
            else:
                yield self._name(line, column)

    def _iriref(self, line: int, column: int) -> _Token:
        self._advance()  # <
        chars = []
        while True:
            ch = self._peek()
            if not ch or ch == "\n":
                self._error("unterminated IRI", line, column)
            self._advance()
            if ch == ">":
                break
            chars.append(ch)
        value = "".join(chars)
        if not value:
            self._error("empty IRI", line, column)
        return _Token("IRIREF", value, line, column)

    def _literal(self, line: int, column: int) -> _Token:
        self._advance()  # opening quote
        chars = []
        while True:
            ch = self._peek()
            if not ch or ch == "\n":
                self._error("unterminated literal", line, column)
            self._advance()
            if ch == "\\":
                esc = self._peek()
                if esc not in _ESCAPES:
                    self._error(f"unsupported escape '\\{esc}'")
                self._advance()
                chars.append(_ESCAPES[esc])
            elif ch == '"':
                break
            else:
                chars.append(ch)
        lang = None
        if self._peek() == "@":
            self._advance()
            tag = []
            while self._peek().isalnum() or self._peek() == "-":
                tag.append(self._advance())
            lang = "".join(tag)
            if not lang:
                self._error("empty language tag")
        return _Token("LITERAL", ("".join(chars), lang), line, column)

    def _word(self) -> str:
        chars = []
        while self._peek().isalpha():
            chars.append(self._advance())
        return "".join(chars)

    def _name(self, line: int, column: int) -> _Token:
        chars = []
        while _is_name_char(self._peek()):
            chars.append(self._advance())
        prefix = "".join(chars)
        if self._peek() == ":":
            self._advance()
            local_chars = []
            while _is_name_char(self._peek()):
                local_chars.append(self._advance())
            return _Token("PNAME", (prefix, "".join(local_chars)), line, column)
        if prefix == "a":
            return _Token("A", "a", line, column)
        if not prefix:
            self._error(f"unexpected character {self._peek()!r}", line, column)
        self._error(f"expected ':' after name '{prefix}'", line, column)


class _Parser:
    def __init__(self, text: str):
        self._tokens = list(_Lexer(text).tokens())
        self._index = 0
        self.store = TripleStore()

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _next(self) -> _Token:
        token = self._tokens[self._index]
        if token.kind != "EOF":
            self._index += 1
        return token

    def _expect(self, kind: str) -> _Token:
        token = self._next()
        if token.kind != kind:
            raise TurtleParseError(
                f"expected {kind}, found {token.kind}", token.line, token.column
            )
        return token

    def _resolve(self, token: _Token) -> Iri:
        prefix, local = token.value
        if prefix not in self.store.prefixes:
            raise TurtleParseError(
                f"unknown prefix '{prefix}:'", token.line, token.column
            )
        if not local:
            raise TurtleParseError("empty local name", token.line, token.column)
        return Iri(self.store.prefixes[prefix] + local)

    def _term(self, token: _Token, *, allow_literal: bool):
        if token.kind == "IRIREF":
            return Iri(token.value)
        if token.kind == "PNAME":
            return self._resolve(token)
        if token.kind == "LITERAL" and allow_literal:
            lexical, lang = token.value
            return Literal(lexical, lang)
        raise TurtleParseError(
            f"unexpected {token.kind} in triple", token.line, token.column
        )

    def parse(self) -> TripleStore:
        while True:
            token = self._peek()
            if token.kind == "EOF":
                return self.store
            if token.kind == "PREFIX":
                self._next()
                name = self._expect("PNAME")
                prefix, local = name.value
                if local:
                    raise TurtleParseError(
                        "prefix declaration must end with ':'", name.line, name.column
                    )
                ns = self._expect("IRIREF")
                self._expect("DOT")
                self.store.prefixes[prefix] = ns.value
                continue
            self._statement()

    def _statement(self) -> None:
        subject = self._term(self._next(), allow_literal=False)
        while True:
            token = self._next()
            if token.kind == "A":
                predicate = RDF_TYPE
            else:
                predicate = self._term(token, allow_literal=False)
            while True:
                obj = self._term(self._next(), allow_literal=True)
                self.store.add(subject, predicate, obj)
                if self._peek().kind == "COMMA":
                    self._next()
                    continue
                break
            token = self._next()
            if token.kind == "SEMI":
                if self._peek().kind == "DOT":  # tolerate trailing ';'
                    self._next()
                    return
                continue
            if token.kind == "DOT":
                return
            raise TurtleParseError(
                f"expected ';' or '.', found {token.kind}", token.line, token.column
            )


def parse_ontology(document: str) -> TripleStore:
    """Parse a Turtle-subset document into a triple store."""
    return _Parser(document).parse()


def _escape_literal(value: str) -> str:
    out = value.replace("\\", "\\\\").replace('"', '\\"')
    return out.replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")


def _render_term(term, prefixes) -> str:
    if isinstance(term, Iri):
        return term.curie(prefixes)
    lang = f"@{term.lang}" if term.lang else ""
    return f'"{_escape_literal(term.lexical)}"{lang}'


def serialize_turtle(store: TripleStore) -> str:
    """Serialize a store with sorted subjects/predicates for stable output."""
    lines = []
    for prefix in sorted(store.prefixes):
        lines.append(f"@prefix {prefix}: <{store.prefixes[prefix]}> .")
    if store.prefixes and len(store):
        lines.append("")

    by_subject: dict[Iri, dict[Iri, list]] = {}
    for triple in store:
        by_subject.setdefault(triple.subject, {}).setdefault(triple.predicate, []).append(
            triple.object
        )

    for subject in sorted(by_subject, key=lambda s: s.value):
        rendered_subject = _render_term(subject, store.prefixes)
        parts = []
        # rdf:type first, Turtle convention; the rest sorted for stability
        for predicate in sorted(by_subject[subject], key=lambda p: (p != RDF_TYPE, p.value)):
            rendered_pred = "a" if predicate == RDF_TYPE else _render_term(predicate, store.prefixes)
            objects = sorted(by_subject[subject][predicate], key=term_sort_key)
            rendered_objects = ", ".join(_render_term(o, store.prefixes) for o in objects)
            parts.append(f"{rendered_pred} {rendered_objects}")
        body = " ;\n    ".join(parts)
        lines.append(f"{rendered_subject} {body} .")
    return "\n".join(lines) + ("\n" if lines else "")
