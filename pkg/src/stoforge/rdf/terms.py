"""RDF terms: IRIs, blank nodes, literals and triples."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

_WHITESPACE = re.compile(r"\s")
_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*:")

XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"
RDF_LANGSTRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"


class InvalidIri(ValueError):
    pass


@dataclass(frozen=True, order=True, slots=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        if not isinstance(self.value, str) or not self.value:
            raise InvalidIri("IRI must be a non-empty string")
        if _WHITESPACE.search(self.value):
            raise InvalidIri(f"IRI contains whitespace: {self.value!r}")
        if not _SCHEME.match(self.value):
            raise InvalidIri(f"IRI has no scheme: {self.value!r}")

    def __str__(self) -> str:
        return self.value

    @property
    def local_name(self) -> str:
        """Fragment after the last ``#`` or ``/``."""
        v = self.value
        cut = max(v.rfind("#"), v.rfind("/"))
        return v[cut + 1:] if cut >= 0 else v.split(":", 1)[1]

    @property
    def namespace(self) -> str:
        v = self.value
        cut = max(v.rfind("#"), v.rfind("/"))
        return v[: cut + 1] if cut >= 0 else v.split(":", 1)[0] + ":"


@dataclass(frozen=True, order=True, slots=True)
class BNode:
    label: str

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: Iri = Iri(XSD_STRING)
    language: str | None = None

    def __post_init__(self) -> None:
        if self.language is not None:
            object.__setattr__(self, "language", self.language.lower())
            if self.datatype.value != RDF_LANGSTRING:
                object.__setattr__(self, "datatype", Iri(RDF_LANGSTRING))
        elif self.datatype.value == RDF_LANGSTRING:
            raise ValueError("rdf:langString literal requires a language tag")

    def __str__(self) -> str:
        return self.lexical


Term = Union[Iri, BNode, Literal]
Subject = Union[Iri, BNode]


def term_key(term: Term) -> tuple:
    """Total order over terms: IRIs, then blank nodes, then literals."""
    if isinstance(term, Iri):
        return (0, term.value, "", "")
    if isinstance(term, BNode):
        return (1, term.label, "", "")
    return (2, term.lexical, term.datatype.value, term.language or "")


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Subject
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, (Iri, BNode)):
            raise TypeError(f"invalid subject: {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise TypeError(f"invalid predicate: {self.predicate!r}")
        if not isinstance(self.object, (Iri, BNode, Literal)):
            raise TypeError(f"invalid object: {self.object!r}")

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))

    def sort_key(self) -> tuple:
        return (term_key(self.subject), self.predicate.value, term_key(self.object))
