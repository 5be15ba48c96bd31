"""RDF substrate: terms, indexed graphs, Turtle and N-Triples I/O."""

from .graph import FrozenGraphError, Graph, literal_values
from .namespaces import (
    DBC,
    DBO,
    DBP,
    DBR,
    DCTERMS,
    DEFAULT_PREFIXES,
    FOAF,
    GOLD,
    OWL,
    PROV,
    RAMI,
    RDF,
    RDF_TYPE,
    RDFS,
    SKOS,
    STO,
    XSD,
    YAGO,
    Namespace,
)
from .ntriples import parse_ntriples, serialize_ntriples
from .terms import BNode, InvalidIri, Iri, Literal, Subject, Term, Triple, term_key
from .turtle import (
    RdfSyntaxError,
    UnresolvedPrefix,
    compact_iri,
    expand_qname,
    format_term,
    parse_turtle,
    serialize_turtle,
)

__all__ = [
    "BNode", "DBC", "DBO", "DBP", "DBR", "DCTERMS", "DEFAULT_PREFIXES", "FOAF", "FrozenGraphError",
    "GOLD", "Graph", "InvalidIri", "Iri", "Literal", "Namespace", "OWL", "PROV", "RAMI", "RDF",
    "RDFS", "RDF_TYPE", "RdfSyntaxError", "SKOS", "STO", "Subject", "Term", "Triple", "UnresolvedPrefix",
    "XSD", "YAGO", "compact_iri", "expand_qname", "format_term", "literal_values", "parse_ntriples",
    "parse_turtle", "serialize_ntriples", "serialize_turtle", "term_key",
]
