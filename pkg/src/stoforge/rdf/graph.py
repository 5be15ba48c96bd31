from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator

from .terms import BNode, Iri, Literal, Subject, Term, Triple, term_key


class FrozenGraphError(RuntimeError):
    pass


class Graph:
    """Set of triples with subject, predicate and object indexes.

    Graphs are mutable while being built and can be frozen afterwards; a
    frozen graph rejects mutation and is safe to share between readers.
    """

    def __init__(self, triples: Iterable[Triple] = (), prefixes: dict[str, str] | None = None):
        self._triples: set[Triple] = set()
        self._by_s: dict[Term, set[Triple]] = defaultdict(set)
        self._by_p: dict[Iri, set[Triple]] = defaultdict(set)
        self._by_o: dict[Term, set[Triple]] = defaultdict(set)
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self.frozen = False
        for t in triples:
            self.add(t)

    # -- mutation -------------------------------------------------------

    def _check_mutable(self) -> None:
        if self.frozen:
            raise FrozenGraphError("graph is frozen")

    def add(self, triple: Triple) -> bool:
        """Insert a triple; returns False if it was already present."""
        self._check_mutable()
        if triple in self._triples:
            return False
        self._triples.add(triple)
        self._by_s[triple.subject].add(triple)
        self._by_p[triple.predicate].add(triple)
        self._by_o[triple.object].add(triple)
        return True

    def update(self, triples: Iterable[Triple]) -> int:
        return sum(self.add(t) for t in triples)

    def discard(self, triple: Triple) -> bool:
        self._check_mutable()
        if triple not in self._triples:
            return False
        self._triples.remove(triple)
        for index, key in ((self._by_s, triple.subject), (self._by_p, triple.predicate), (self._by_o, triple.object)):
            bucket = index[key]
            bucket.discard(triple)
            if not bucket:
                del index[key]
        return True

    def freeze(self) -> Graph:
        self.frozen = True
        return self

    def copy(self) -> Graph:
        g = Graph(prefixes=self.prefixes)
        g.update(self._triples)
        return g

    # -- queries --------------------------------------------------------

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __repr__(self) -> str:
        return f"<Graph triples={len(self)} prefixes={len(self.prefixes)}>"

    @property
    def triple_set(self) -> frozenset[Triple]:
        return frozenset(self._triples)

    def sorted(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.sort_key)

    def triples(self, s: Term | None = None, p: Iri | None = None, o: Term | None = None) -> Iterator[Triple]:
        """Pattern match; ``None`` is a wildcard."""
        candidates = None
        for index, key in ((self._by_s, s), (self._by_p, p), (self._by_o, o)):
            if key is None:
                continue
            bucket = index.get(key)
            if not bucket:
                return iter(())
            if candidates is None or len(bucket) < len(candidates):
                candidates = bucket
        if candidates is None:
            candidates = self._triples
        return (
            t for t in list(candidates)
            if (s is None or t.subject == s) and (p is None or t.predicate == p) and (o is None or t.object == o)
        )

    def subjects(self, p: Iri | None = None, o: Term | None = None) -> set[Subject]:
        if p is None and o is None:
            return set(self._by_s)
        return {t.subject for t in self.triples(None, p, o)}

    def objects(self, s: Term | None = None, p: Iri | None = None) -> set[Term]:
        return {t.object for t in self.triples(s, p, None)}

    def predicates(self, s: Term | None = None) -> set[Iri]:
        if s is None:
            return set(self._by_p)
        return {t.predicate for t in self.triples(s, None, None)}

    def value(self, s: Term, p: Iri) -> Term | None:
        """Smallest object of ``(s, p, ?)`` in term order, or None."""
        objs = self.objects(s, p)
        return min(objs, key=term_key) if objs else None

    def mentions(self, term: Term) -> Iterator[Triple]:
        """Triples in which ``term`` occurs in any position."""
        seen = set(self._by_s.get(term, ())) | set(self._by_o.get(term, ()))
        if isinstance(term, Iri):
            seen |= set(self._by_p.get(term, ()))
        return iter(seen)

    def has_subject(self, s: Term) -> bool:
        return s in self._by_s

    # -- set algebra ----------------------------------------------------

    def union(self, other: Graph) -> Graph:
        g = Graph(prefixes={**self.prefixes, **other.prefixes})
        g.update(self._triples)
        g.update(other._triples)
        return g

    __or__ = union

    def intersection(self, other: Graph) -> Graph:
        return Graph(self._triples & other._triples, prefixes=self.prefixes)

    def difference(self, other: Graph) -> Graph:
        return Graph(self._triples - other._triples, prefixes=self.prefixes)

    def has_blank_nodes(self) -> bool:
        return any(isinstance(t.subject, BNode) or isinstance(t.object, BNode) for t in self._triples)


def literal_values(graph: Graph, s: Term, p: Iri) -> list[str]:
    """Lexical forms of the literal objects of ``(s, p, ?)``, sorted."""
    return sorted(o.lexical for o in graph.objects(s, p) if isinstance(o, Literal))
