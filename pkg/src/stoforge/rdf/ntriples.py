from __future__ import annotations

from .graph import Graph
from .terms import BNode, InvalidIri, Iri, Literal, Triple
from .turtle import Lexer, RdfSyntaxError, format_term


def parse_ntriples(text: str, *, bnode_prefix: str = "") -> Graph:
    """Parse N-Triples; one triple per line, absolute IRIs only.

    Blank-node labels are scoped to the document: pass a distinct
    ``bnode_prefix`` when merging several documents into one graph.
    """
    graph = Graph()
    for lineno, line in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        lexer = Lexer(line, first_line=lineno)
        tok = lexer.next()
        if tok.kind == "EOF":
            continue

        def fail(message: str, t) -> RdfSyntaxError:
            return RdfSyntaxError(message, t.line, t.column, t.text)

        def iri(t) -> Iri:
            if t.kind != "IRI":
                raise fail("expected absolute IRI", t)
            try:
                return Iri(t.value)
            except InvalidIri as exc:
                raise fail(str(exc), t) from None

        if tok.kind == "BNODE":
            subj = BNode(bnode_prefix + tok.value)
        else:
            subj = iri(tok)
        pred = iri(lexer.next())
        tok = lexer.next()
        if tok.kind == "BNODE":
            obj = BNode(bnode_prefix + tok.value)
        elif tok.kind == "STRING":
            nxt = lexer.next()
            if nxt.kind == "LANG":
                obj = Literal(tok.value, language=nxt.value)
                nxt = lexer.next()
            elif nxt.kind == "^^":
                obj = Literal(tok.value, iri(lexer.next()))
                nxt = lexer.next()
            else:
                obj = Literal(tok.value)
            tok = nxt
            if tok.kind != ".":
                raise fail("expected '.'", tok)
            graph.add(Triple(subj, pred, obj))
            _expect_end(lexer, fail)
            continue
        else:
            obj = iri(tok)
        tok = lexer.next()
        if tok.kind != ".":
            raise fail("expected '.'", tok)
        graph.add(Triple(subj, pred, obj))
        _expect_end(lexer, fail)
    return graph


def _expect_end(lexer: Lexer, fail) -> None:
    tok = lexer.next()
    if tok.kind != "EOF":
        raise fail("trailing content after '.'", tok)


def serialize_ntriples(graph: Graph) -> str:
    """One sorted line per triple."""
    return "".join(
        f"{format_term(t.subject, {})} {format_term(t.predicate, {})} {format_term(t.object, {})} .\n"
        for t in graph.sorted()
    )
