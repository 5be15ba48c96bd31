"""Standards, organizations and frameworks over the molecule store."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .rdf import DCTERMS, OWL, RDF_TYPE, RDFS, STO, Graph, Iri, Triple, literal_values
from .store import MoleculeStore, UnknownSubject, normalize_label

log = logging.getLogger(__name__)

RELATION_PREDICATES = (STO.relatedTo, STO.isInteroperableWith, STO.integratesWith)

# single-valued properties and where a fused duplicate's value is kept
SECONDARY_PROPERTY = {
    RDFS.label: STO.secondaryLabel,
    DCTERMS.license: STO.secondaryLicense,
}

# properties describing a standard beyond the core record fields
ANNOTATION_PROPERTIES = (DCTERMS.language, STO.hasTechnicalCommittee, STO.stabilityDate, DCTERMS.issued)


@dataclass(frozen=True, order=True)
class ClassificationAssignment:
    standard: Iri
    framework: Iri
    layer: Iri


@dataclass
class StandardRecord:
    iri: Iri
    label: str
    tags: list[str] = field(default_factory=list)
    publisher: Iri | None = None
    developer: Iri | None = None
    license: Iri | None = None
    classifications: list[ClassificationAssignment] = field(default_factory=list)
    dbpedia_resource: Iri | None = None
    wikipedia_article: Iri | None = None
    official_resource: Iri | None = None
    domain: Iri | None = None
    annotations: dict[str, list[str]] = field(default_factory=dict)
    kind: str = "std"


@dataclass
class FrameworkRecord:
    iri: Iri
    name: str
    layers: list[tuple[Iri, str]] = field(default_factory=list)

    @property
    def layer_iris(self) -> set[Iri]:
        return {layer for layer, _ in self.layers}


@dataclass
class CompletenessReport:
    total: int = 0
    missing: dict[str, list[Iri]] = field(default_factory=dict)
    missing_label: list[Iri] = field(default_factory=list)
    annotated: dict[str, int] = field(default_factory=dict)

    def ratio(self, field_name: str) -> float:
        if not self.total:
            return 1.0
        return 1 - len(self.missing.get(field_name, ())) / self.total


def _iri(graph: Graph, s: Iri, p: Iri) -> Iri | None:
    vals = sorted(o for o in graph.objects(s, p) if isinstance(o, Iri))
    return vals[0] if vals else None


def load_frameworks(graph: Graph) -> list[FrameworkRecord]:
    """Frameworks and their layers (``layer sto:isDescribedin framework``)."""
    out = []
    for fw in sorted(s for s in graph.subjects(RDF_TYPE, STO.StandardizationFramework) if isinstance(s, Iri)):
        name = (literal_values(graph, fw, RDFS.label) or [fw.local_name])[0]
        layers = []
        for layer in sorted(s for s in graph.subjects(STO.isDescribedin, fw) if isinstance(s, Iri)):
            dims = literal_values(graph, layer, STO.hasDimension)
            layers.append((layer, dims[0] if dims else ""))
        out.append(FrameworkRecord(fw, name, layers))
    return out


def layer_frameworks(graph: Graph) -> dict[Iri, Iri]:
    return {
        t.subject: t.object
        for t in graph.triples(None, STO.isDescribedin, None)
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri)
    }


def load_standards(graph: Graph, store: MoleculeStore | None = None, node_type: Iri = STO.Standard,
                   report: CompletenessReport | None = None) -> list[StandardRecord]:
    """One record per subject typed ``node_type``, sorted by IRI.

    A record without rdfs:label falls back to its local name and is listed in
    ``report.missing_label``.
    """
    store = store or MoleculeStore.from_graph(graph)
    report = report if report is not None else CompletenessReport()
    layer_fw = layer_frameworks(graph)
    records = []
    for s in sorted(x for x in graph.subjects(RDF_TYPE, node_type) if isinstance(x, Iri)):
        mol = store.molecules.get(s)
        triples = mol.triples if mol else set()
        g = Graph(triples)
        labels = literal_values(g, s, RDFS.label)
        if not labels:
            report.missing_label.append(s)
        classifications = sorted(
            ClassificationAssignment(s, layer_fw[layer], layer)
            for layer in g.objects(s, STO.hasClassification)
            if isinstance(layer, Iri) and layer in layer_fw
        )
        annotations = {
            p.local_name: literal_values(g, s, p) or [str(o) for o in sorted(g.objects(s, p), key=str)]
            for p in ANNOTATION_PROPERTIES if g.objects(s, p)
        }
        rec = StandardRecord(
            iri=s,
            label=labels[0] if labels else s.local_name.replace("_", " "),
            tags=literal_values(g, s, STO.hasTag),
            publisher=_iri(g, s, STO.hasPublisher),
            developer=_iri(g, s, STO.hasDeveloper),
            license=_iri(g, s, DCTERMS.license),
            classifications=classifications,
            dbpedia_resource=_iri(g, s, STO.hasDBpediaResource),
            wikipedia_article=_iri(g, s, STO.hasWikipediaArticle),
            official_resource=_iri(g, s, STO.hasOfficialResource),
            domain=_iri(g, s, STO.hasDomain),
            annotations=annotations,
            kind="std" if node_type == STO.Standard else "org",
        )
        records.append(rec)
    report.total += len(records)
    for name in ("publisher", "developer", "license", "dbpedia_resource", "wikipedia_article",
                 "official_resource", "domain"):
        report.missing[name] = [r.iri for r in records if getattr(r, name) is None]
    report.missing["classifications"] = [r.iri for r in records if not r.classifications]
    for p in ANNOTATION_PROPERTIES:
        report.annotated[p.local_name] = sum(1 for r in records if p.local_name in r.annotations)
    return records


def load_organizations(graph: Graph, store: MoleculeStore | None = None) -> list[StandardRecord]:
    return load_standards(graph, store, node_type=STO.StandardOrganization)


# -- equivalence ------------------------------------------------------------

def read_alias_table(path: str | Path) -> list[tuple[str, str]]:
    """Two label columns; a header row whose first cell is ``name_a`` is skipped."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].startswith("#") or row[0].strip().lower() == "name_a":
                continue
            if len(row) < 2:
                raise ValueError(f"{path}: alias row needs two columns: {row}")
            rows.append((row[0].strip(), row[1].strip()))
    return rows


@dataclass
class EquivalenceResult:
    pairs: list[tuple[Iri, Iri]]
    unknown_rows: list[tuple[str, str]] = field(default_factory=list)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def equivalence_classes(edges: Iterable[tuple[Iri, Iri]]) -> list[list[Iri]]:
    parent: dict[Iri, Iri] = {}

    def find(x: Iri) -> Iri:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[Iri, list[Iri]] = {}
    for x in list(parent):
        groups.setdefault(find(x), []).append(x)
    return [sorted(g) for g in groups.values()]


def find_equivalents(store: MoleculeStore, alias_table: Iterable[tuple[str, str]]) -> EquivalenceResult:
    """Equivalent IRI pairs from owl:sameAs triples and the alias table.

    Pairs are closed under symmetry and transitivity within the local
    molecules and returned once each as ``(smaller, larger)``.
    """
    edges: list[tuple[Iri, Iri]] = []
    for s, mol in store.molecules.items():
        for t in mol.triples:
            if t.predicate == OWL.sameAs and isinstance(t.object, Iri) and isinstance(s, Iri) and t.object in store:
                edges.append((s, t.object))
    unknown = []
    for a, b in alias_table:
        ia, ib = store.name_index.get(normalize_label(a)), store.name_index.get(normalize_label(b))
        if ia is None or ib is None:
            unknown.append((a, b))
            log.info("alias row not resolvable: %r / %r", a, b)
            continue
        if ia != ib:
            edges.append((ia, ib))
    pairs = set()
    for group in equivalence_classes(edges):
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                pairs.add((a, b))
    return EquivalenceResult(sorted(pairs), unknown)


def merge_equivalent(store: MoleculeStore, canonical: Iri, duplicate: Iri) -> MoleculeStore:
    """Fuse ``duplicate`` into ``canonical`` in place.

    The duplicate's triples move to the canonical subject. Single-valued
    properties keep the canonical value; a differing duplicate value lands on
    the matching secondary property. References to the duplicate elsewhere are
    rewritten, rewrites that would loop are dropped, and
    ``canonical owl:sameAs duplicate`` is kept for provenance.
    """
    if canonical == duplicate:
        return store
    for iri in (canonical, duplicate):
        if iri not in store:
            raise UnknownSubject(iri)
    canon_mol = store.molecules[canonical]
    dup_mol = store.remove_subject(duplicate)
    canon_single = {p: {t.object for t in canon_mol.triples if t.predicate == p} for p in SECONDARY_PROPERTY}

    for t in sorted(dup_mol.triples, key=Triple.sort_key):
        obj = canonical if t.object == duplicate else t.object
        if obj == canonical:
            continue
        pred = t.predicate
        if pred in SECONDARY_PROPERTY and canon_single[pred] and obj not in canon_single[pred]:
            pred = SECONDARY_PROPERTY[pred]
        store.add(Triple(canonical, pred, obj))

    for subject in list(store.molecules):
        mol = store.molecules.get(subject)
        if mol is None:
            continue
        hits = [t for t in mol.triples if t.object == duplicate]
        for t in hits:
            store.discard(t)
            if subject != canonical:
                store.add(Triple(subject, t.predicate, canonical))
    store.add(Triple(canonical, OWL.sameAs, duplicate))
    store.refresh_index()
    return store


def fuse_all(store: MoleculeStore, pairs: Iterable[tuple[Iri, Iri]]) -> list[tuple[Iri, Iri]]:
    """Merge every equivalence class into its smallest IRI.

    Returns the ``(canonical, duplicate)`` merges actually performed.
    """
    done = []
    for group in equivalence_classes(pairs):
        canonical = group[0]
        for dup in group[1:]:
            if dup in store and canonical in store:
                merge_equivalent(store, canonical, dup)
                done.append((canonical, dup))
    return done
