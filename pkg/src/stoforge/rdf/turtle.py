"""Reader and writer for the Turtle subset used by the I40 knowledge graph.

Supported: ``@prefix``/``@base`` (and their SPARQL-style spellings), ``a``,
predicate lists, object lists, language-tagged and datatyped literals,
numeric and boolean shorthands, and labelled blank nodes. Collections,
anonymous ``[ ]`` blank nodes and triple-quoted literals are rejected with a
positioned :class:`RdfSyntaxError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from urllib.parse import urljoin

from .graph import Graph
from .namespaces import RDF_TYPE, XSD
from .terms import BNode, InvalidIri, Iri, Literal, Term, Triple, XSD_STRING

__all__ = [
    "RdfSyntaxError",
    "UnresolvedPrefix",
    "parse_turtle",
    "serialize_turtle",
    "expand_qname",
    "compact_iri",
]


class RdfSyntaxError(SyntaxError):
    """Malformed input, positioned at the offending token (1-based)."""

    def __init__(self, message: str, line: int, column: int, token: str = "", source: str | None = None):
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        self.source = source
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message} (at {token!r})")
        self.lineno = line
        self.offset = column

    def with_source(self, source: str) -> RdfSyntaxError:
        return type(self)(self.message, self.line, self.column, self.token, source)


class UnresolvedPrefix(KeyError):
    """A prefixed name uses a prefix that was never declared."""

    def __init__(self, prefix: str, line: int | None = None, column: int | None = None):
        self.prefix = prefix
        self.line = line
        self.column = column
        where = f" at {line}:{column}" if line is not None else ""
        super().__init__(f"undeclared prefix {prefix!r}{where}")

    def __str__(self) -> str:
        return self.args[0]


# -- lexer ----------------------------------------------------------------

@dataclass(slots=True)
class Token:
    kind: str
    value: str
    line: int
    column: int
    text: str


_PN_PREFIX = r"(?:[A-Za-z][A-Za-z0-9_-]*)?"
_PN_LOCAL = r"(?:[A-Za-z0-9_:%-]|\.(?=[A-Za-z0-9_:%-]))*"
_PNAME = re.compile(rf"({_PN_PREFIX}):({_PN_LOCAL})")
_BNODE = re.compile(r"_:([A-Za-z0-9_](?:[A-Za-z0-9_-]|\.(?=[A-Za-z0-9_-]))*)")
_NUMBER = re.compile(r"[+-]?(?:\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+)")
_WORD = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_LANG = re.compile(r"@([A-Za-z]+(?:-[A-Za-z0-9]+)*)")

_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}


class Lexer:
    def __init__(self, text: str, first_line: int = 1):
        self.text = text
        self.pos = 0
        self.line = first_line
        self.line_start = 0

    def error(self, message: str, token: str | None = None, pos: int | None = None) -> RdfSyntaxError:
        pos = self.pos if pos is None else pos
        col = pos - self.line_start + 1
        if token is None:
            token = self.text[pos:pos + 12].split("\n", 1)[0] or "<eof>"
        return RdfSyntaxError(message, self.line, col, token)

    def _skip(self) -> None:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch == "\n":
                self.pos += 1
                self.line += 1
                self.line_start = self.pos
            elif ch in " \t\r":
                self.pos += 1
            elif ch == "#":
                nl = text.find("\n", self.pos)
                self.pos = len(text) if nl < 0 else nl
            else:
                return

    def tokens(self):
        while True:
            tok = self.next()
            yield tok
            if tok.kind == "EOF":
                return

    def next(self) -> Token:
        self._skip()
        text, start = self.text, self.pos
        line, col = self.line, start - self.line_start + 1
        if start >= len(text):
            return Token("EOF", "", line, col, "<eof>")
        ch = text[start]

        def tok(kind: str, value: str, end: int) -> Token:
            self.pos = end
            return Token(kind, value, line, col, text[start:end])

        if ch == "<":
            return tok("IRI", *self._iri(start))
        if ch in "\"'":
            return tok("STRING", *self._string(start))
        if ch in ".;,":
            return tok(ch, ch, start + 1)
        if ch in "[]()":
            raise self.error(f"unsupported construct {ch!r} (collections and anonymous blank nodes are not supported)", ch)
        if ch == "^":
            if text.startswith("^^", start):
                return tok("^^", "^^", start + 2)
            raise self.error("expected '^^'")
        if ch == "@":
            m = _LANG.match(text, start)
            if not m:
                raise self.error("malformed language tag or directive")
            word = m.group(1)
            if word in ("prefix", "base"):
                return tok("@" + word, word, m.end())
            return tok("LANG", word, m.end())
        if text.startswith("_:", start):
            m = _BNODE.match(text, start)
            if not m:
                raise self.error("malformed blank node label")
            return tok("BNODE", m.group(1), m.end())
        m = _NUMBER.match(text, start)
        if m and (ch.isdigit() or ch in "+-."):
            lex = m.group(0)
            if lex.endswith(".") and not re.search(r"[eE]", lex):
                # "1." is an integer followed by the statement terminator
                return tok("INTEGER", lex[:-1], m.end() - 1)
            kind = "DOUBLE" if re.search(r"[eE]", lex) else ("DECIMAL" if "." in lex else "INTEGER")
            return tok(kind, lex, m.end())
        m = _PNAME.match(text, start)
        if m:
            return tok("PNAME", m.group(0), m.end())
        m = _WORD.match(text, start)
        if m:
            return tok("WORD", m.group(0), m.end())
        raise self.error("unexpected character", ch)

    def _iri(self, start: int) -> tuple[str, int]:
        text = self.text
        i = start + 1
        out = []
        while i < len(text):
            c = text[i]
            if c == ">":
                return "".join(out), i + 1
            if c in " \t\r\n":
                raise self.error("whitespace inside IRI", text[start:i + 1].strip(), i)
            if c in '<"{}|^`':
                raise self.error(f"illegal character {c!r} in IRI", c, i)
            if c == "\\":
                code, i = self._unicode_escape(i)
                out.append(code)
                continue
            out.append(c)
            i += 1
        raise self.error("unterminated IRI", text[start:start + 20], start)

    def _unicode_escape(self, i: int) -> tuple[str, int]:
        text = self.text
        kind = text[i + 1:i + 2]
        width = {"u": 4, "U": 8}.get(kind)
        if width is None:
            raise self.error("invalid escape", text[i:i + 2], i)
        digits = text[i + 2:i + 2 + width]
        if len(digits) != width or not re.fullmatch(r"[0-9A-Fa-f]+", digits):
            raise self.error("invalid unicode escape", text[i:i + 2 + width], i)
        return chr(int(digits, 16)), i + 2 + width

    def _string(self, start: int) -> tuple[str, int]:
        text = self.text
        quote = text[start]
        if text.startswith(quote * 3, start):
            raise self.error("multiline (triple-quoted) literals are not supported", quote * 3, start)
        i = start + 1
        out = []
        while i < len(text):
            c = text[i]
            if c == quote:
                return "".join(out), i + 1
            if c == "\n":
                raise self.error("unterminated string literal", text[start:i], start)
            if c == "\\":
                nxt = text[i + 1:i + 2]
                if nxt in _ESCAPES:
                    out.append(_ESCAPES[nxt])
                    i += 2
                    continue
                code, i = self._unicode_escape(i)
                out.append(code)
                continue
            out.append(c)
            i += 1
        raise self.error("unterminated string literal", text[start:start + 20], start)


# -- prefixed names ---------------------------------------------------------

def expand_qname(prefixes: dict[str, str], qname: str) -> Iri:
    """Expand ``prefix:local`` against ``prefixes``.

    >>> expand_qname({"sto": "https://w3id.org/i40/sto#"}, "sto:OPC_UA").value
    'https://w3id.org/i40/sto#OPC_UA'
    """
    if ":" not in qname:
        raise ValueError(f"not a prefixed name: {qname!r}")
    prefix, local = qname.split(":", 1)
    try:
        ns = prefixes[prefix]
    except KeyError:
        raise UnresolvedPrefix(prefix) from None
    return Iri(ns + local)


_SAFE_LOCAL = re.compile(r"^[A-Za-z0-9_](?:[A-Za-z0-9_.-]*[A-Za-z0-9_-])?$")
_SAFE_PREFIX = re.compile(r"^(?:[A-Za-z][A-Za-z0-9_-]*)?$")


def compact_iri(prefixes: dict[str, str], iri: Iri) -> str | None:
    """Shortest safe ``prefix:local`` form of ``iri``, or None.

    Picks the longest matching namespace; ties go to the smallest prefix.
    """
    best: tuple[int, str, str] | None = None
    for prefix, ns in prefixes.items():
        if not iri.value.startswith(ns) or not _SAFE_PREFIX.match(prefix):
            continue
        local = iri.value[len(ns):]
        if not _SAFE_LOCAL.match(local):
            continue
        cand = (-len(ns), prefix, local)
        if best is None or cand < best:
            best = cand
    if best is None:
        return None
    return f"{best[1]}:{best[2]}"


# -- parser -----------------------------------------------------------------

_NUMERIC_TYPES = {"INTEGER": XSD.integer, "DECIMAL": XSD.decimal, "DOUBLE": XSD.double}


class _TurtleParser:
    def __init__(self, text: str, base: str | None, bnode_prefix: str):
        self.lexer = Lexer(text)
        self.base = base
        self.bnode_prefix = bnode_prefix
        self.graph = Graph()
        self.tok = self.lexer.next()

    def advance(self) -> Token:
        tok = self.tok
        self.tok = self.lexer.next()
        return tok

    def error(self, message: str, tok: Token | None = None) -> RdfSyntaxError:
        tok = tok or self.tok
        return RdfSyntaxError(message, tok.line, tok.column, tok.text)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise self.error(f"expected {kind!r}")
        return self.advance()

    def parse(self) -> Graph:
        while self.tok.kind != "EOF":
            kind = self.tok.kind
            if kind in ("@prefix", "@base"):
                self.directive(sparql_style=False)
            elif kind == "WORD" and self.tok.value.upper() in ("PREFIX", "BASE"):
                self.directive(sparql_style=True)
            else:
                self.triples()
                self.expect(".")
        return self.graph

    def directive(self, sparql_style: bool) -> None:
        word = self.advance().value.lower()
        if word == "prefix":
            tok = self.tok
            if tok.kind != "PNAME" or not tok.value.endswith(":"):
                raise self.error("expected prefix declaration 'name:'")
            self.advance()
            ns = self.resolve(self.expect("IRI"))
            self.graph.prefixes[tok.value[:-1]] = ns.value
        else:
            self.base = self.resolve(self.expect("IRI")).value
        if not sparql_style:
            self.expect(".")

    def resolve(self, tok: Token) -> Iri:
        value = tok.value
        if self.base and not re.match(r"^[A-Za-z][A-Za-z0-9+.-]*:", value):
            value = urljoin(self.base, value)
        try:
            return Iri(value)
        except InvalidIri as exc:
            raise self.error(str(exc), tok) from None

    def pname(self, tok: Token) -> Iri:
        prefix, local = tok.value.split(":", 1)
        ns = self.graph.prefixes.get(prefix)
        if ns is None:
            raise UnresolvedPrefix(prefix, tok.line, tok.column)
        try:
            return Iri(ns + local)
        except InvalidIri as exc:
            raise self.error(str(exc), tok) from None

    def iri(self) -> Iri | None:
        tok = self.tok
        if tok.kind == "IRI":
            self.advance()
            return self.resolve(tok)
        if tok.kind == "PNAME":
            self.advance()
            return self.pname(tok)
        return None

    def subject(self):
        if self.tok.kind == "BNODE":
            return BNode(self.bnode_prefix + self.advance().value)
        node = self.iri()
        if node is None:
            raise self.error("expected subject (IRI or blank node)")
        return node

    def verb(self) -> Iri:
        if self.tok.kind == "WORD" and self.tok.value == "a":
            self.advance()
            return RDF_TYPE
        node = self.iri()
        if node is None:
            raise self.error("expected predicate")
        return node

    def object(self) -> Term:
        tok = self.tok
        if tok.kind == "BNODE":
            self.advance()
            return BNode(self.bnode_prefix + tok.value)
        if tok.kind == "STRING":
            self.advance()
            if self.tok.kind == "LANG":
                return Literal(tok.value, language=self.advance().value)
            if self.tok.kind == "^^":
                self.advance()
                dt = self.iri()
                if dt is None:
                    raise self.error("expected datatype IRI after '^^'")
                return Literal(tok.value, dt)
            return Literal(tok.value)
        if tok.kind in _NUMERIC_TYPES:
            self.advance()
            return Literal(tok.value, _NUMERIC_TYPES[tok.kind])
        if tok.kind == "WORD" and tok.value in ("true", "false"):
            self.advance()
            return Literal(tok.value, XSD.boolean)
        node = self.iri()
        if node is None:
            raise self.error("expected object")
        return node

    def triples(self) -> None:
        if self.tok.kind in ("STRING", "INTEGER", "DECIMAL", "DOUBLE"):
            raise self.error("literal in subject position")
        subj = self.subject()
        while True:
            pred = self.verb()
            while True:
                self.graph.add(Triple(subj, pred, self.object()))
                if self.tok.kind != ",":
                    break
                self.advance()
            if self.tok.kind != ";":
                return
            while self.tok.kind == ";":
                self.advance()
            if self.tok.kind == ".":
                return


def parse_turtle(text: str, base: str | Iri | None = None, *, bnode_prefix: str = "") -> Graph:
    """Parse Turtle ``text`` into a new :class:`Graph`.

    Raises :class:`RdfSyntaxError` or :class:`UnresolvedPrefix`, both carrying
    the 1-based line and column of the offending token.
    """
    if not text:
        return Graph()
    return _TurtleParser(text, str(base) if base else None, bnode_prefix).parse()


# -- serializer -------------------------------------------------------------

_SHORT_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}
_NEEDS_ESCAPE = re.compile(r'[\\"\x00-\x1f\x7f\x85\u2028\u2029]')


def _escape(lexical: str) -> str:
    """Escape quotes, backslashes and every control or line-separator character."""
    return _NEEDS_ESCAPE.sub(lambda m: _SHORT_ESCAPES.get(m.group(), f"\\u{ord(m.group()):04X}"), lexical)


def format_term(term: Term, prefixes: dict[str, str]) -> str:
    if isinstance(term, Iri):
        return compact_iri(prefixes, term) or f"<{term.value}>"
    if isinstance(term, BNode):
        return f"_:{term.label}"
    out = f'"{_escape(term.lexical)}"'
    if term.language:
        return f"{out}@{term.language}"
    if term.datatype.value != XSD_STRING:
        return f"{out}^^{format_term(term.datatype, prefixes)}"
    return out


def serialize_turtle(graph: Graph, prefixes: dict[str, str] | None = None) -> str:
    """Deterministic Turtle: sorted prefixes, subjects, predicates and objects.

    Equal triple sets with equal prefix maps serialize to identical text.
    """
    prefixes = dict(graph.prefixes if prefixes is None else prefixes)
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(prefixes.items())]
    by_subject: dict = {}
    for t in graph.sorted():
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)
    for subj, preds in by_subject.items():
        lines.append("")
        head = format_term(subj, prefixes)
        chunks = []
        for pred, objs in preds.items():
            verb = "a" if pred == RDF_TYPE else format_term(pred, prefixes)
            chunks.append(f"{verb} " + ", ".join(format_term(o, prefixes) for o in objs))
        lines.append(head + " " + " ;\n    ".join(chunks) + " .")
    return "\n".join(lines) + "\n" if lines else ""
