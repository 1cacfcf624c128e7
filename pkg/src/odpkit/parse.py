"""N-Triples and Turtle-subset parsing plus N-Triples serialization.

The Turtle subset covers @prefix/@base directives, prefixed names, the `a`
keyword, object lists (","), predicate lists (";"), typed and language-tagged
literals and blank node labels.  No collections, no quoted triples.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphPart
from .terms import (
    RDF_TYPE,
    XSD_STRING,
    BlankNode,
    Iri,
    Literal,
    Term,
    Triple,
    escape_literal,
)


class RdfSyntaxError(Exception):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass
class _Token:
    kind: str  # iri, pname, bnode, literal_body, keyword, punct, eof
    value: str
    line: int
    column: int
    # literal extras
    language: str | None = None
    datatype_raw: tuple[str, str] | None = None  # (kind, value) of datatype token


_PUNCT = {".", ";", ",", "[", "]", "(", ")"}

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, msg: str) -> RdfSyntaxError:
        return RdfSyntaxError(self.line, self.col, msg)

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text):
                if self.text[self.pos] == "\n":
                    self.line += 1
                    self.col = 1
                else:
                    self.col += 1
                self.pos += 1

    def _peek(self, offset: int = 0) -> str:
        idx = self.pos + offset
        return self.text[idx] if idx < len(self.text) else ""

    def _skip_ws(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def next(self) -> _Token:
        self._skip_ws()
        line, col = self.line, self.col
        ch = self._peek()
        if not ch:
            return _Token("eof", "", line, col)
        if ch == "<":
            return self._iri(line, col)
        if ch == '"':
            return self._literal(line, col)
        if ch == "_" and self._peek(1) == ":":
            return self._bnode(line, col)
        if ch in _PUNCT:
            self._advance()
            return _Token("punct", ch, line, col)
        if ch == "@":
            self._advance()
            word = self._bare_word()
            return _Token("keyword", "@" + word, line, col)
        # bare word: `a`, prefixed name, numeric-ish garbage (rejected later)
        word = self._pname_word()
        if not word:
            raise RdfSyntaxError(line, col, f"unexpected character {ch!r}")
        if word == "a":
            return _Token("keyword", "a", line, col)
        if ":" in word:
            return _Token("pname", word, line, col)
        if word in ("PREFIX", "BASE"):
            return _Token("keyword", "@" + word.lower(), line, col)
        raise RdfSyntaxError(line, col, f"unexpected token {word!r}")

    def _bare_word(self) -> str:
        out = []
        while True:
            ch = self._peek()
            if ch.isalnum() or ch in "-_":
                out.append(ch)
                self._advance()
            else:
                return "".join(out)

    def _pname_word(self) -> str:
        out = []
        while True:
            ch = self._peek()
            if ch and (ch.isalnum() or ch in "-_.:%"):
                out.append(ch)
                self._advance()
            else:
                break
        # a trailing dot is the statement terminator, not part of the name
        word = "".join(out)
        while word.endswith("."):
            word = word[:-1]
            self.pos -= 1
            self.col -= 1
        return word

    def _iri(self, line: int, col: int) -> _Token:
        self._advance()  # <
        out = []
        while True:
            ch = self._peek()
            if not ch or ch == "\n":
                raise RdfSyntaxError(line, col, "unterminated IRI")
            if ch == ">":
                self._advance()
                return _Token("iri", "".join(out), line, col)
            if ch == "\\":
                out.append(self._escape(line))
            else:
                out.append(ch)
                self._advance()

    def _escape(self, line: int) -> str:
        self._advance()  # backslash
        ch = self._peek()
        if ch == "u" or ch == "U":
            width = 4 if ch == "u" else 8
            self._advance()
            digits = self.text[self.pos : self.pos + width]
            if len(digits) != width:
                raise self.error("truncated unicode escape")
            try:
                code = int(digits, 16)
            except ValueError:
                raise self.error(f"bad unicode escape \\{ch}{digits}")
            self._advance(width)
            return chr(code)
        if ch in _ESCAPES:
            self._advance()
            return _ESCAPES[ch]
        raise self.error(f"unknown escape \\{ch}")

    def _literal(self, line: int, col: int) -> _Token:
        self._advance()  # opening quote
        out = []
        while True:
            ch = self._peek()
            if not ch or ch == "\n":
                raise RdfSyntaxError(line, col, "unterminated string literal")
            if ch == '"':
                self._advance()
                break
            if ch == "\\":
                out.append(self._escape(line))
            else:
                out.append(ch)
                self._advance()
        tok = _Token("literal_body", "".join(out), line, col)
        if self._peek() == "@":
            self._advance()
            lang = []
            while self._peek().isalnum() or self._peek() == "-":
                lang.append(self._peek())
                self._advance()
            if not lang:
                raise self.error("empty language tag")
            tok.language = "".join(lang)
        elif self._peek() == "^" and self._peek(1) == "^":
            self._advance(2)
            dt = self.next()
            if dt.kind not in ("iri", "pname"):
                raise RdfSyntaxError(dt.line, dt.column, "expected datatype IRI after ^^")
            tok.datatype_raw = (dt.kind, dt.value)
        return tok

    def _bnode(self, line: int, col: int) -> _Token:
        self._advance(2)  # _:
        label = self._bare_word()
        if not label:
            raise RdfSyntaxError(line, col, "empty blank node label")
        return _Token("bnode", label, line, col)


class _Parser:
    def __init__(self, text: str, fmt: str, base: str | None):
        self.lexer = _Lexer(text)
        self.fmt = fmt
        self.base = base
        self.prefixes: dict[str, str] = {}
        self.graph = Graph()
        self.tok = self.lexer.next()

    def _next(self) -> None:
        self.tok = self.lexer.next()

    def _err(self, msg: str) -> RdfSyntaxError:
        return RdfSyntaxError(self.tok.line, self.tok.column, msg)

    def parse(self) -> Graph:
        while self.tok.kind != "eof":
            if self.tok.kind == "keyword" and self.tok.value in ("@prefix", "@base"):
                if self.fmt == "ntriples":
                    raise self._err("directives are not allowed in N-Triples")
                self._directive()
            else:
                self._statement()
        return self.graph

    def _directive(self) -> None:
        kind = self.tok.value
        self._next()
        if kind == "@prefix":
            if self.tok.kind != "pname" or not self.tok.value.endswith(":"):
                raise self._err("expected prefix name in @prefix directive")
            prefix = self.tok.value[:-1]
            self._next()
            if self.tok.kind != "iri":
                raise self._err("expected IRI in @prefix directive")
            self.prefixes[prefix] = self._resolve(self.tok.value)
            self._next()
        else:  # @base
            if self.tok.kind != "iri":
                raise self._err("expected IRI in @base directive")
            self.base = self._resolve(self.tok.value)
            self._next()
        self._expect_punct(".")

    def _expect_punct(self, value: str) -> None:
        if self.tok.kind != "punct" or self.tok.value != value:
            raise self._err(f"expected {value!r}")
        self._next()

    def _resolve(self, iri: str) -> str:
        if ":" in iri:
            return iri
        if self.base is None:
            raise self._err(f"relative IRI {iri!r} without a base")
        base = self.base
        if iri.startswith("#") or not iri:
            return base.split("#")[0] + iri
        return base.rstrip("/#") + "/" + iri

    def _term(self, position: str) -> Term:
        tok = self.tok
        if tok.kind == "iri":
            self._next()
            return Iri(self._resolve(tok.value))
        if tok.kind == "pname":
            if self.fmt == "ntriples":
                raise self._err("prefixed names are not allowed in N-Triples")
            self._next()
            return self._expand_pname(tok)
        if tok.kind == "bnode":
            if position == "predicate":
                raise self._err("blank node cannot be a predicate")
            self._next()
            return BlankNode(tok.value)
        if tok.kind == "keyword" and tok.value == "a":
            if self.fmt == "ntriples" or position != "predicate":
                raise self._err("'a' is only valid as a Turtle predicate")
            self._next()
            return Iri(RDF_TYPE)
        if tok.kind == "literal_body":
            if position != "object":
                raise self._err("literal is only valid in object position")
            self._next()
            if tok.language:
                return Literal(tok.value, language=tok.language)
            if tok.datatype_raw:
                kind, value = tok.datatype_raw
                if kind == "iri":
                    dt = self._resolve(value)
                else:
                    if self.fmt == "ntriples":
                        raise self._err("prefixed datatype not allowed in N-Triples")
                    dt = self._expand_pname_str(value, tok.line, tok.column)
                return Literal(tok.value, datatype=dt)
            return Literal(tok.value)
        raise self._err(f"unexpected token {tok.value!r}")

    def _expand_pname(self, tok: _Token) -> Iri:
        return Iri(self._expand_pname_str(tok.value, tok.line, tok.column))

    def _expand_pname_str(self, value: str, line: int, column: int) -> str:
        prefix, _, local = value.partition(":")
        if prefix not in self.prefixes:
            raise RdfSyntaxError(line, column, f"undefined prefix {prefix!r}")
        return self.prefixes[prefix] + local

    def _statement(self) -> None:
        subject = self._term("subject")
        while True:
            predicate = self._term("predicate")
            while True:
                obj = self._term("object")
                self.graph.add(Triple(subject, predicate, obj))
                if self.fmt == "turtle" and self.tok.kind == "punct" and self.tok.value == ",":
                    self._next()
                    continue
                break
            if self.fmt == "turtle" and self.tok.kind == "punct" and self.tok.value == ";":
                self._next()
                # `;` may dangle before `.`
                if self.tok.kind == "punct" and self.tok.value == ".":
                    break
                continue
            break
        self._expect_punct(".")


def parse_document(
    text: str,
    format: str = "ntriples",
    base: str | None = None,
    part: GraphPart | None = None,
) -> Graph:
    """Parse an N-Triples (`ntriples`) or Turtle-subset (`turtle`) document."""
    if format not in ("ntriples", "turtle"):
        raise ValueError(f"unsupported format {format!r}")
    graph = _Parser(text, format, base).parse()
    graph.part = part
    return graph


def serialize_graph(graph: Graph, format: str = "ntriples") -> str:
    """Serialize to N-Triples, sorted for byte-stable output."""
    if format != "ntriples":
        raise ValueError(f"unsupported output format {format!r}")
    lines = sorted(_serialize_triple(t) for t in graph)
    return "".join(line + "\n" for line in lines)


def _serialize_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{term.label}"
    out = '"' + escape_literal(term.lexical) + '"'
    if term.language:
        return out + "@" + term.language
    if term.datatype != XSD_STRING:
        return out + "^^<" + term.datatype + ">"
    return out


def _serialize_triple(t: Triple) -> str:
    return f"{_serialize_term(t.subject)} {_serialize_term(t.predicate)} {_serialize_term(t.object)} ."
