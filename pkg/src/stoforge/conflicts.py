"""Executable checks for semantic interoperability conflicts in the KG."""

from __future__ import annotations

import csv
import json
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .model import equivalence_classes, layer_frameworks
from .rdf import DBC, DBO, DBP, DBR, DEFAULT_PREFIXES, OWL, RDF_TYPE, RDFS, STO, YAGO, Graph, Iri, Literal, Triple
from .store import MoleculeStore, normalize_label

EQUIVALENCE_PREDICATES = (OWL.sameAs, STO.hasDBpediaResource)


class ConflictKind(str, Enum):
    SIC1 = "SIC1"  # domain
    SIC2 = "SIC2"  # schematic
    SIC3 = "SIC3"  # granularity
    SIC4 = "SIC4"  # representation
    SIC5 = "SIC5"  # missing item
    SIC6 = "SIC6"  # language
    DIVERGENT_CLASSIFICATION = "divergent_classification"
    HOMONYM = "homonym"
    ACRONYM = "acronym"
    SYNONYM = "synonym"


@dataclass(frozen=True)
class ConflictReport:
    kind: ConflictKind
    entities: tuple[Iri, ...]
    evidence: tuple[Triple, ...] = ()
    message: str = ""
    informational: bool = False

    def sort_key(self) -> tuple:
        return (self.kind.value, tuple(e.value for e in self.entities), self.message)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "entities": [e.value for e in self.entities],
            "evidence": [[t.subject.value if isinstance(t.subject, Iri) else str(t.subject), t.predicate.value,
                          t.object.lexical if isinstance(t.object, Literal) else str(t.object)]
                         for t in self.evidence],
            "message": self.message,
            "informational": self.informational,
        }


@dataclass
class LayerAlignment:
    """Aligned layer pairs across frameworks, kept symmetric."""

    rows: set[tuple[Iri, Iri, Iri, Iri]] = field(default_factory=set)

    def __post_init__(self) -> None:
        self.rows = set(self.rows)
        self.rows |= {(fb, lb, fa, la) for fa, la, fb, lb in self.rows}

    def add(self, fa: Iri, la: Iri, fb: Iri, lb: Iri) -> None:
        self.rows |= {(fa, la, fb, lb), (fb, lb, fa, la)}

    def aligned(self, la: Iri, lb: Iri) -> bool:
        return any(r[1] == la and r[3] == lb for r in self.rows)

    def validate(self, kg: Graph) -> list[str]:
        """Rows whose layers are not declared in the stated framework."""
        fw = layer_frameworks(kg)
        problems = []
        for fa, la, fb, lb in sorted(self.rows):
            for f, layer in ((fa, la), (fb, lb)):
                if fw.get(layer) != f:
                    problems.append(f"{layer.value} is not a layer of {f.value}")
        return sorted(set(problems))

    @classmethod
    def from_csv(cls, path: str | Path) -> LayerAlignment:
        rows = set()
        with open(path, newline="", encoding="utf-8") as fh:
            for row in csv.reader(fh):
                if not row or row[0].startswith("#") or row[0] == "framework_a":
                    continue
                if len(row) != 4:
                    raise ValueError(f"{path}: alignment row needs four IRIs: {row}")
                rows.add(tuple(Iri(c.strip()) for c in row))
        return cls(rows)


def _equivalence_groups(kg: Graph) -> dict[Iri, int]:
    edges = [(t.subject, t.object) for p in EQUIVALENCE_PREDICATES for t in kg.triples(None, p, None)
             if isinstance(t.subject, Iri) and isinstance(t.object, Iri)]
    return {iri: i for i, group in enumerate(equivalence_classes(edges)) for iri in group}


def _equivalent(groups: dict[Iri, int], a: Iri, b: Iri) -> bool:
    return a in groups and groups.get(a) == groups.get(b)


def detect_divergent_classification(kg: Graph, alignment: LayerAlignment) -> list[ConflictReport]:
    """One report per standard and per unaligned pair of layers from two frameworks."""
    fw = layer_frameworks(kg)
    out = []
    for s in sorted(x for x in kg.subjects(STO.hasClassification) if isinstance(x, Iri)):
        layers = sorted(o for o in kg.objects(s, STO.hasClassification) if isinstance(o, Iri) and o in fw)
        for la, lb in combinations(layers, 2):
            if fw[la] == fw[lb] or alignment.aligned(la, lb):
                continue
            evidence = (
                Triple(s, STO.hasClassification, la), Triple(s, STO.hasClassification, lb),
                Triple(la, STO.isDescribedin, fw[la]), Triple(lb, STO.isDescribedin, fw[lb]),
            )
            out.append(ConflictReport(
                ConflictKind.DIVERGENT_CLASSIFICATION, (s, la, lb), evidence,
                f"{s.local_name} sits in {la.local_name} ({fw[la].local_name}) and "
                f"{lb.local_name} ({fw[lb].local_name}) with no alignment between them",
            ))
    return out


def detect_homonyms(kg: Graph) -> list[ConflictReport]:
    """Distinct, non-equivalent IRIs sharing a normalized label or a defined term.

    Labels are compared with labels and defined terms with defined terms.
    sto:Term entities are covered through the sto:definesTerm literal of
    their standard, so their own labels are not compared again.
    """
    terms = kg.subjects(RDF_TYPE, STO.Term)
    by_key: dict[tuple[str, str], list[Triple]] = defaultdict(list)
    for p in (RDFS.label, STO.definesTerm):
        for t in kg.triples(None, p, None):
            if isinstance(t.subject, Iri) and isinstance(t.object, Literal) and t.subject not in terms:
                key = normalize_label(t.object.lexical)
                if key:
                    by_key[(p.value, key)].append(t)
    groups = _equivalence_groups(kg)
    found: dict[tuple[Iri, Iri], list[Triple]] = {}
    for key in sorted(by_key):
        subjects = sorted({t.subject for t in by_key[key]})
        for a, b in combinations(subjects, 2):
            if _equivalent(groups, a, b):
                continue
            ev = found.setdefault((a, b), [])
            ev.extend(t for t in by_key[key] if t.subject in (a, b))
    return [
        ConflictReport(ConflictKind.HOMONYM, pair, tuple(sorted(set(ev), key=Triple.sort_key)),
                       f"{pair[0].local_name} and {pair[1].local_name} share a name but are not declared equivalent")
        for pair, ev in sorted(found.items())
    ]


def _alias_pairs(kg: Graph, aliases: Iterable[tuple[str, str]]):
    store = MoleculeStore.from_graph(kg)
    groups = _equivalence_groups(kg)
    for a, b in aliases:
        ia, ib = store.lookup(a), store.lookup(b)
        if ia is None or ib is None or ia == ib or _equivalent(groups, ia, ib):
            continue
        yield (a, b), tuple(sorted((ia, ib)))


def _name_evidence(kg: Graph, iri: Iri) -> list[Triple]:
    return [t for p in (RDFS.label, STO.hasTag) for t in kg.triples(iri, p, None)]


def _alias_reports(kg: Graph, aliases, kind: ConflictKind, want_terms: bool) -> list[ConflictReport]:
    terms = kg.subjects(RDF_TYPE, STO.Term)
    out = {}
    for (a, b), pair in _alias_pairs(kg, aliases):
        if (pair[0] in terms and pair[1] in terms) != want_terms:
            continue
        evidence = tuple(sorted(_name_evidence(kg, pair[0]) + _name_evidence(kg, pair[1]), key=Triple.sort_key))
        out.setdefault(pair, ConflictReport(kind, pair, evidence, f"'{a}' and '{b}' name the same thing but are separate entities"))
    return [out[k] for k in sorted(out)]


def detect_acronyms(kg: Graph, aliases: Iterable[tuple[str, str]]) -> list[ConflictReport]:
    """Alias pairs naming two unfused standards or organizations."""
    return _alias_reports(kg, list(aliases), ConflictKind.ACRONYM, want_terms=False)


def detect_synonyms(kg: Graph, aliases: Iterable[tuple[str, str]]) -> list[ConflictReport]:
    """Alias pairs naming two distinct sto:Term entities.

    The KG carries no standard-internal information models, so synonyms can
    only come from the curated alias table.
    """
    return _alias_reports(kg, list(aliases), ConflictKind.SYNONYM, want_terms=True)


# -- informational checks -----------------------------------------------------------

# longest match first, so an IRI like dbr:EtherNet/IP keeps its source namespace
_SOURCES = sorted({*DEFAULT_PREFIXES.values(), *(str(n) for n in (DBR, DBO, DBC, DBP, YAGO))}, key=len, reverse=True)


def source_namespace(iri: Iri) -> str:
    for ns in _SOURCES:
        if iri.value.startswith(ns):
            return ns
    return iri.namespace


def informational_reports(kg: Graph, min_coverage: float = 0.5) -> list[ConflictReport]:
    """Descriptive schematic, granularity, missing-item and language findings.

    * SIC2: a class whose instances come from several namespaces that use
      different property sets.
    * SIC3: a property single-valued in one namespace, multi-valued in another.
    * SIC5: a property most instances of a class carry but some lack.
    * SIC6: a class whose labels mix languages.
    """
    members: dict[Iri, list[Iri]] = defaultdict(list)
    for t in kg.triples(None, RDF_TYPE, None):
        if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
            members[t.object].append(t.subject)
    out = []
    for cls in sorted(members):
        insts = sorted(set(members[cls]))
        props = {s: kg.predicates(s) - {RDF_TYPE} for s in insts}
        by_ns: dict[str, set[Iri]] = defaultdict(set)
        card: dict[tuple[str, Iri], int] = defaultdict(int)
        for s in insts:
            ns = source_namespace(s)
            by_ns[ns] |= props[s]
            for p in props[s]:
                n = sum(1 for _ in kg.triples(s, p, None))
                card[(ns, p)] = max(card[(ns, p)], n)
        if len(by_ns) > 1:
            union = set().union(*by_ns.values())
            common = set.intersection(*by_ns.values())
            if union != common:
                out.append(ConflictReport(
                    ConflictKind.SIC2, (cls,), (), informational=True,
                    message=f"{cls.local_name}: {len(union - common)} properties used by only some sources "
                            f"({', '.join(sorted(by_ns))})",
                ))
            for p in sorted(common):
                values = {ns: card[(ns, p)] for ns in by_ns}
                if min(values.values()) == 1 and max(values.values()) > 1:
                    out.append(ConflictReport(
                        ConflictKind.SIC3, (cls, p), (), informational=True,
                        message=f"{cls.local_name}.{p.local_name}: single-valued in some sources, multi-valued in others",
                    ))
        if len(insts) >= 2:
            counts: dict[Iri, int] = defaultdict(int)
            for s in insts:
                for p in props[s]:
                    counts[p] += 1
            for p in sorted(counts):
                if min_coverage <= counts[p] / len(insts) < 1:
                    missing = tuple(s for s in insts if p not in props[s])
                    out.append(ConflictReport(
                        ConflictKind.SIC5, (cls, p) + missing, (), informational=True,
                        message=f"{cls.local_name}: {len(missing)} of {len(insts)} instances lack {p.local_name}",
                    ))
        langs: dict[str | None, list[Triple]] = defaultdict(list)
        for s in insts:
            for t in kg.triples(s, RDFS.label, None):
                if isinstance(t.object, Literal):
                    langs[t.object.language].append(t)
        if len(langs) > 1:
            names = sorted(lang or "none" for lang in langs)
            sample = tuple(sorted((ts[0] for ts in langs.values()), key=Triple.sort_key))
            out.append(ConflictReport(
                ConflictKind.SIC6, (cls,), sample, informational=True,
                message=f"{cls.local_name}: labels in languages {', '.join(names)}",
            ))
    return out


# -- aggregate ------------------------------------------------------------------

@dataclass
class ConflictSummary:
    reports: list[ConflictReport]

    def counts(self) -> dict[str, int]:
        c: dict[str, int] = defaultdict(int)
        for r in self.reports:
            c[r.kind.value] += 1
        return dict(sorted(c.items()))

    def to_json(self) -> str:
        doc = {"counts": self.counts(), "reports": [r.to_dict() for r in self.reports]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"{k}: {v}" for k, v in self.counts().items()]
        for r in self.reports:
            tag = " (informational)" if r.informational else ""
            lines.append(f"[{r.kind.value}{tag}] {r.message}")
        return "\n".join(lines) + "\n"


def detect_all(kg: Graph, alignment: LayerAlignment | None = None,
               aliases: Iterable[tuple[str, str]] = (), informational: bool = True) -> ConflictSummary:
    aliases = list(aliases)
    reports = detect_divergent_classification(kg, alignment or LayerAlignment())
    reports += detect_homonyms(kg)
    reports += detect_acronyms(kg, aliases)
    reports += detect_synonyms(kg, aliases)
    if informational:
        reports += informational_reports(kg)
    return ConflictSummary(sorted(reports, key=ConflictReport.sort_key))
