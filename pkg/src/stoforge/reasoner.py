"""Forward-chaining closure over property rules.

Four rule kinds are supported, each over a single predicate ``p``:

* symmetric ``p``: (s p o) => (o p s)
* transitive ``p``: (s p x), (x p o) => (s p o)
* inverse ``p q``: (s p o) => (o q s)
* subproperty ``p q``: (s p o) => (s q o)

Evaluation is semi-naive: each round only fires rules on triples derived in
the previous round. Self-loops produced by rules are dropped, and rdf:type is
never rewritten whatever the rule set says.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable

from .rdf import OWL, RDF_TYPE, RDFS, Graph, Iri, Literal, Triple

log = logging.getLogger(__name__)


class RuleKind(str, Enum):
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"
    INVERSE = "inverse"
    SUBPROPERTY = "subproperty"


_BINARY = {RuleKind.INVERSE, RuleKind.SUBPROPERTY}


class ConflictingOverride(ValueError):
    pass


class RuleFileError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Rule:
    p: Iri
    kind: RuleKind
    q: Iri | None = None

    def __post_init__(self) -> None:
        if (self.kind in _BINARY) != (self.q is not None):
            raise ValueError(f"{self.kind.value} rule {'requires' if self.kind in _BINARY else 'takes no'} a target property")

    def __str__(self) -> str:
        return f"{self.kind.value} {self.p.value}" + (f" {self.q.value}" if self.q else "")


def _sort_key(rule: Rule) -> tuple:
    return (rule.p.value, rule.kind.value, rule.q.value if rule.q else "")


def parse_rules(text: str) -> list[Rule]:
    """Read the line-oriented override format, e.g. ``inverse <p> <q>``."""
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            kind = RuleKind(parts[0].lower())
        except ValueError:
            raise RuleFileError(f"line {lineno}: unknown rule kind {parts[0]!r}") from None
        iris = [p.strip("<>") for p in parts[1:]]
        expected = 2 if kind in _BINARY else 1
        if len(iris) != expected:
            raise RuleFileError(f"line {lineno}: {kind.value} expects {expected} IRI(s), got {len(iris)}")
        try:
            rules.append(Rule(Iri(iris[0]), kind, Iri(iris[1]) if expected == 2 else None))
        except ValueError as exc:
            raise RuleFileError(f"line {lineno}: {exc}") from None
    return rules


def load_rules(path: str | Path) -> list[Rule]:
    return parse_rules(Path(path).read_text(encoding="utf-8"))


def rules_from_ontology(ontology: Graph, overrides: Iterable[Rule] = ()) -> list[Rule]:
    """Rules declared by OWL/RDFS axioms, extended by ``overrides``.

    ``owl:inverseOf`` yields a rule in each direction. A property that ends up
    both symmetric and inverse of a different property is rejected when an
    override is involved.
    """
    found: set[Rule] = set()
    for s in ontology.subjects(RDF_TYPE, OWL.SymmetricProperty):
        if isinstance(s, Iri):
            found.add(Rule(s, RuleKind.SYMMETRIC))
    for s in ontology.subjects(RDF_TYPE, OWL.TransitiveProperty):
        if isinstance(s, Iri):
            found.add(Rule(s, RuleKind.TRANSITIVE))
    for t in ontology.triples(None, OWL.inverseOf, None):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            found.add(Rule(t.subject, RuleKind.INVERSE, t.object))
            found.add(Rule(t.object, RuleKind.INVERSE, t.subject))
    for t in ontology.triples(None, RDFS.subPropertyOf, None):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri) and t.subject != t.object:
            found.add(Rule(t.subject, RuleKind.SUBPROPERTY, t.object))

    overrides = set(overrides)
    rules = found | overrides
    symmetric = {r.p for r in rules if r.kind is RuleKind.SYMMETRIC}
    for r in rules:
        if r.kind is RuleKind.INVERSE and r.p in symmetric and r.q != r.p:
            sym = Rule(r.p, RuleKind.SYMMETRIC)
            if r in overrides or sym in overrides:
                raise ConflictingOverride(f"{r.p.value} declared both symmetric and inverse of {r.q.value}")
    return sorted(rules, key=_sort_key)


@dataclass
class InferenceStats:
    explicit_count: int
    inferred_count: int
    iterations: int


@dataclass
class InferenceResult:
    closure: Graph
    inferred: frozenset[Triple]
    stats: InferenceStats
    explicit: frozenset[Triple] = field(default_factory=frozenset)

    def provenance(self, triple: Triple) -> str | None:
        if triple in self.inferred:
            return "inferred"
        if triple in self.explicit:
            return "explicit"
        return None

    def inferred_graph(self) -> Graph:
        return Graph(self.inferred, prefixes=self.closure.prefixes)


def apply_closure(graph: Graph, rules: Iterable[Rule]) -> InferenceResult:
    """Least fixpoint of ``graph`` under ``rules`` (semi-naive)."""
    rules = [r for r in rules if r.p != RDF_TYPE and r.q != RDF_TYPE]
    by_pred: dict[Iri, list[Rule]] = defaultdict(list)
    for r in rules:
        by_pred[r.p].append(r)
    transitive = {r.p for r in rules if r.kind is RuleKind.TRANSITIVE}

    explicit = frozenset(graph)
    closure = graph.copy()
    # per transitive predicate: successor and predecessor maps
    out_edges: dict[Iri, dict] = {p: defaultdict(set) for p in transitive}
    in_edges: dict[Iri, dict] = {p: defaultdict(set) for p in transitive}
    for p in transitive:
        for t in graph.triples(None, p, None):
            out_edges[p][t.subject].add(t.object)
            in_edges[p][t.object].add(t.subject)

    frontier = [t for t in graph if t.predicate in by_pred]
    iterations = 0
    while frontier:
        iterations += 1
        derived: set[Triple] = set()
        for t in frontier:
            s, p, o = t.subject, t.predicate, t.object
            for r in by_pred[p]:
                if r.kind is RuleKind.SYMMETRIC:
                    if not isinstance(o, Literal):
                        derived.add(Triple(o, p, s))
                elif r.kind is RuleKind.INVERSE:
                    if not isinstance(o, Literal):
                        derived.add(Triple(o, r.q, s))
                elif r.kind is RuleKind.SUBPROPERTY:
                    derived.add(Triple(s, r.q, o))
                else:
                    succ, pred = out_edges[p], in_edges[p]
                    for x in list(succ.get(o, ())):
                        derived.add(Triple(s, p, x))
                    for x in list(pred.get(s, ())):
                        derived.add(Triple(x, p, o))
        new = []
        for t in derived:
            if t.subject == t.object or t in closure:
                continue
            closure.add(t)
            new.append(t)
            if t.predicate in transitive:
                out_edges[t.predicate][t.subject].add(t.object)
                in_edges[t.predicate][t.object].add(t.subject)
        frontier = [t for t in new if t.predicate in by_pred]
    inferred = frozenset(closure.triple_set - explicit)
    log.debug("closure: %d explicit, %d inferred, %d rounds", len(explicit), len(inferred), iterations)
    return InferenceResult(closure, inferred, InferenceStats(len(explicit), len(inferred), iterations), explicit)


# -- relation summaries -------------------------------------------------------

@dataclass(frozen=True)
class RelationSummary:
    """Relation counts between typed entities before and after closure.

    ``*_assertions`` count directed triples; ``*_pairs`` count unordered pairs.
    """

    explicit_assertions: int
    inferred_assertions: int
    explicit_pairs: frozenset
    closure_pairs: frozenset

    @property
    def inferred_pairs(self) -> frozenset:
        return self.closure_pairs - self.explicit_pairs

    def as_dict(self) -> dict[str, int]:
        return {
            "explicit_assertions": self.explicit_assertions,
            "inferred_assertions": self.inferred_assertions,
            "explicit_pairs": len(self.explicit_pairs),
            "closure_pairs": len(self.closure_pairs),
            "inferred_pairs": len(self.inferred_pairs),
        }


def relation_pairs(result: InferenceResult, predicates: Iterable[Iri], node_type: Iri | None = None) -> RelationSummary:
    """Unordered pairs linked by any in-scope predicate, split by provenance.

    With ``node_type`` set, both endpoints must carry that rdf:type in the
    closure.
    """
    predicates = set(predicates)
    typed = result.closure.subjects(RDF_TYPE, node_type) if node_type is not None else None

    def in_scope(t: Triple) -> bool:
        if t.predicate not in predicates or t.subject == t.object or isinstance(t.object, Literal):
            return False
        return typed is None or (t.subject in typed and t.object in typed)

    explicit = [t for t in result.explicit if in_scope(t)]
    inferred = [t for t in result.inferred if in_scope(t)]
    explicit_pairs = frozenset(frozenset((t.subject, t.object)) for t in explicit)
    closure_pairs = explicit_pairs | frozenset(frozenset((t.subject, t.object)) for t in inferred)
    return RelationSummary(len(explicit), len(inferred), explicit_pairs, closure_pairs)
