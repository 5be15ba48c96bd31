"""RDF molecules, molecule templates and the molecule store."""

from __future__ import annotations

import csv
import io
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from .rdf import OWL, RDF_TYPE, RDFS, STO, Graph, Iri, Literal, Subject, Triple, term_key

UNTYPED = STO.UntypedEntity
LABEL_PREDICATES = (RDFS.label, STO.hasTag)


class EmptyName(ValueError):
    pass


class UnknownSubject(KeyError):
    pass


def normalize_label(label: str) -> str:
    """Case-fold, trim and collapse internal whitespace."""
    return " ".join(label.split()).casefold()


def sanitize_name(name: str) -> str:
    """Local name for ``name``: spaces become underscores, other
    characters outside ``[A-Za-z0-9_.-]`` are dropped."""
    return re.sub(r"[^A-Za-z0-9_.-]", "", re.sub(r"\s+", "_", name.strip()))


@dataclass
class RdfMolecule:
    subject: Subject
    triples: set[Triple] = field(default_factory=set)

    def __post_init__(self) -> None:
        self.triples = set(self.triples)
        for t in self.triples:
            if t.subject != self.subject:
                raise ValueError(f"triple subject {t.subject} does not match molecule subject {self.subject}")

    def __len__(self) -> int:
        return len(self.triples)

    def objects(self, predicate: Iri) -> list:
        return sorted((t.object for t in self.triples if t.predicate == predicate), key=term_key)

    @property
    def predicates(self) -> set[Iri]:
        return {t.predicate for t in self.triples}

    @property
    def types(self) -> set[Iri]:
        return {t.object for t in self.triples if t.predicate == RDF_TYPE and isinstance(t.object, Iri)}


def extract_molecule(graph: Graph, subject: Subject) -> RdfMolecule:
    return RdfMolecule(subject, set(graph.triples(subject, None, None)))


class MoleculeStore:
    """One molecule per subject plus a label index.

    The store is the unit of mutation during a build: it holds every triple of
    the knowledge graph, partitioned by subject.
    """

    def __init__(self) -> None:
        self.molecules: dict[Subject, RdfMolecule] = {}
        self.name_index: dict[str, Iri] = {}
        self._minted: dict[str, Iri] = {}
        self.prefixes: dict[str, str] = {}

    @classmethod
    def from_graph(cls, graph: Graph) -> MoleculeStore:
        store = cls()
        store.prefixes = dict(graph.prefixes)
        grouped: dict[Subject, set[Triple]] = defaultdict(set)
        for t in graph:
            grouped[t.subject].add(t)
        for subject, triples in grouped.items():
            store.molecules[subject] = RdfMolecule(subject, triples)
        store.refresh_index()
        return store

    def __len__(self) -> int:
        return len(self.molecules)

    def __contains__(self, subject: object) -> bool:
        return subject in self.molecules

    def get(self, subject: Subject) -> RdfMolecule:
        try:
            return self.molecules[subject]
        except KeyError:
            raise UnknownSubject(subject) from None

    def triple_count(self) -> int:
        return sum(len(m) for m in self.molecules.values())

    def to_graph(self) -> Graph:
        g = Graph(prefixes=self.prefixes)
        for m in self.molecules.values():
            g.update(m.triples)
        return g

    def refresh_index(self) -> None:
        """Rebuild ``name_index`` from rdfs:label and sto:hasTag literals.

        Labels take precedence over tags; remaining ties go to the smallest IRI.
        """
        index: dict[str, tuple[int, str, Iri]] = {}
        for subject, mol in self.molecules.items():
            if not isinstance(subject, Iri):
                continue
            for t in mol.triples:
                if t.predicate in LABEL_PREDICATES and isinstance(t.object, Literal):
                    rank = 0 if t.predicate == RDFS.label else 1
                    key = normalize_label(t.object.lexical)
                    cand = (rank, subject.value, subject)
                    if key and (key not in index or cand < index[key]):
                        index[key] = cand
        self.name_index = {k: v[2] for k, v in index.items()}

    def lookup(self, name: str) -> Iri | None:
        key = normalize_label(name)
        return self.name_index.get(key) or self._minted.get(key)

    def add(self, triple: Triple) -> bool:
        mol = self.molecules.get(triple.subject)
        if mol is None:
            mol = self.molecules[triple.subject] = RdfMolecule(triple.subject)
        if triple in mol.triples:
            return False
        mol.triples.add(triple)
        return True

    def discard(self, triple: Triple) -> bool:
        mol = self.molecules.get(triple.subject)
        if mol is None or triple not in mol.triples:
            return False
        mol.triples.remove(triple)
        if not mol.triples:
            del self.molecules[triple.subject]
        return True

    def remove_subject(self, subject: Subject) -> RdfMolecule:
        return self.molecules.pop(subject)


def mint_iri(namespace: str | Iri, name: str, store: MoleculeStore) -> Iri:
    """Deterministic IRI for ``name`` in ``namespace``.

    If the normalized name is already known to the store, the existing IRI is
    returned. A sanitized local name already taken by a different label gets a
    numeric suffix so distinct labels never share an IRI.
    """
    if not name or not name.strip():
        raise EmptyName("cannot mint an IRI for an empty name")
    existing = store.lookup(name)
    if existing is not None:
        return existing
    local = sanitize_name(name)
    if not local:
        raise EmptyName(f"name {name!r} has no usable characters")
    taken = set(store.name_index.values()) | set(store._minted.values()) | set(store.molecules)
    iri = Iri(str(namespace) + local)
    n = 2
    while iri in taken:
        iri = Iri(f"{namespace}{local}_{n}")
        n += 1
    store._minted[normalize_label(name)] = iri
    return iri


def upsert_molecule(store: MoleculeStore, molecule: RdfMolecule) -> MoleculeStore:
    """Union ``molecule`` into the store and refresh the label index."""
    for t in molecule.triples:
        store.add(t)
    if any(t.predicate in LABEL_PREDICATES for t in molecule.triples):
        store.refresh_index()
    return store


# -- molecule templates -----------------------------------------------------

@dataclass(frozen=True)
class RdfMoleculeTemplate:
    cls: Iri
    datatype_properties: frozenset[Iri] = frozenset()
    object_links: frozenset[tuple[Iri, Iri]] = frozenset()
    instance_count: int = 0

    @property
    def properties(self) -> frozenset[Iri]:
        return self.datatype_properties | frozenset(p for p, _ in self.object_links)


@dataclass
class TemplateSet:
    """Templates keyed by class, plus properties with mixed literal/IRI use."""

    templates: dict[Iri, RdfMoleculeTemplate]
    warnings: list[tuple[Iri, Iri]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.templates)

    def __iter__(self):
        return iter(self.templates[c] for c in sorted(self.templates))

    def __getitem__(self, cls: Iri) -> RdfMoleculeTemplate:
        return self.templates[cls]

    def __contains__(self, cls: object) -> bool:
        return cls in self.templates

    def link_count(self) -> int:
        return sum(len(t.object_links) for t in self.templates.values())


def types_of(graph: Graph, node) -> set[Iri]:
    return {o for o in graph.objects(node, RDF_TYPE) if isinstance(o, Iri)}


def compute_mts(graph: Graph) -> TemplateSet:
    """One template per class observed through rdf:type.

    rdf:type itself defines membership and is not a template property.
    Untyped subjects are grouped under ``sto:UntypedEntity`` and untyped IRI
    objects are linked to that pseudo-class too.
    """
    literal_use: dict[tuple[Iri, Iri], bool] = {}
    iri_use: dict[tuple[Iri, Iri], set[Iri]] = defaultdict(set)
    members: dict[Iri, set] = defaultdict(set)
    type_cache: dict = {}

    def classes(node) -> set[Iri]:
        if node not in type_cache:
            type_cache[node] = types_of(graph, node) or {UNTYPED}
        return type_cache[node]

    for subject in graph.subjects():
        for c in classes(subject):
            members[c].add(subject)
    for t in graph:
        if t.predicate == RDF_TYPE:
            continue
        for c in classes(t.subject):
            key = (c, t.predicate)
            if isinstance(t.object, Literal):
                literal_use[key] = True
            else:
                iri_use[key] |= classes(t.object)

    datatype: dict[Iri, set[Iri]] = defaultdict(set)
    links: dict[Iri, set[tuple[Iri, Iri]]] = defaultdict(set)
    warnings = []
    for key in sorted(set(literal_use) | set(iri_use)):
        c, p = key
        if key in literal_use and key in iri_use:
            links[c].add((p, OWL.Thing))
            warnings.append(key)
        elif key in literal_use:
            datatype[c].add(p)
        else:
            links[c].update((p, target) for target in iri_use[key])
    templates = {
        c: RdfMoleculeTemplate(c, frozenset(datatype[c]), frozenset(links[c]), len(members[c]))
        for c in members
    }
    return TemplateSet(templates, warnings)


def mt_link_graph(mts: Iterable[RdfMoleculeTemplate] | TemplateSet):
    """Undirected class graph: one edge per object link, self-loops dropped."""
    from .analytics import SimpleGraph

    nodes: set[Iri] = set()
    edges: set[frozenset] = set()
    for mt in mts:
        nodes.add(mt.cls)
        for _, target in mt.object_links:
            nodes.add(target)
            if target != mt.cls:
                edges.add(frozenset((mt.cls, target)))
    return SimpleGraph(frozenset(nodes), frozenset(edges))


def mts_to_csv(mts: TemplateSet, prefixes: dict[str, str] | None = None) -> str:
    from .rdf import compact_iri

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class", "n_datatype_props", "n_object_links", "n_instances"])
    for mt in mts:
        name = (compact_iri(prefixes, mt.cls) if prefixes else None) or mt.cls.value
        writer.writerow([name, len(mt.datatype_properties), len(mt.object_links), mt.instance_count])
    return buf.getvalue()
