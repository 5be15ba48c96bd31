"""Name-identity linking of local standards to remote resources, and enrichment."""

from __future__ import annotations

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable

import requests

from ..model import StandardRecord
from ..rdf import DBO, OWL, RDF, RDF_TYPE, STO, Iri, Triple
from ..store import MoleculeStore, RdfMolecule, UnknownSubject, normalize_label, upsert_molecule
from .sparql import EndpointConfig, EndpointUnreachable, SparqlClient

log = logging.getLogger(__name__)

PROPERTY_CLASSES = (RDF.Property, OWL.ObjectProperty, OWL.DatatypeProperty)

DEFAULT_STANDARD_DISALLOWED = frozenset({DBO.Person, DBO.Place, DBO.Organisation})
DEFAULT_ORGANIZATION_DISALLOWED = frozenset({DBO.Person, DBO.Place})


class Method(IntEnum):
    """Probe that produced a link; higher means more confident."""

    ACRONYM_ALIAS = 1
    TAG = 2
    EXACT_LABEL = 3


@dataclass(frozen=True, order=True)
class LinkCandidate:
    local: Iri
    remote: Iri
    method: Method
    probe: str = ""

    @property
    def confidence(self) -> int:
        return int(self.method)


def resource_iri(namespace: str, name: str) -> Iri:
    return Iri(namespace + "_".join(name.split()))


def _probes(record: StandardRecord, aliases: Iterable[tuple[str, str]]) -> list[tuple[Method, str]]:
    names = {normalize_label(record.label)} | {normalize_label(t) for t in record.tags}
    out = [(Method.EXACT_LABEL, record.label)]
    out += [(Method.TAG, t) for t in record.tags]
    for a, b in aliases:
        if normalize_label(a) in names:
            out.append((Method.ACRONYM_ALIAS, b))
        elif normalize_label(b) in names:
            out.append((Method.ACRONYM_ALIAS, a))
    return out


def probe_record(client: SparqlClient, record: StandardRecord,
                 aliases: Iterable[tuple[str, str]] = ()) -> LinkCandidate | None:
    """First probe whose remote resource exists, in label, tag, alias order."""
    seen = set()
    for method, name in _probes(record, aliases):
        remote = resource_iri(client.config.resource_namespace, name)
        if remote in seen:
            continue
        seen.add(remote)
        if client.ask(f"ASK {{ <{remote.value}> ?p ?o }}"):
            return LinkCandidate(record.iri, remote, method, name)
    return None


class _Skipped(Exception):
    """A probe not attempted because the endpoint already proved unreachable."""


@dataclass
class CandidateSet:
    candidates: list[LinkCandidate]
    unmatched: list[Iri]


def generate_candidates(records: list[StandardRecord], config: EndpointConfig,
                        aliases: Iterable[tuple[str, str]] = (), *,
                        client: SparqlClient | None = None,
                        session: requests.Session | None = None) -> CandidateSet:
    """Probe every record; at most one candidate per record, sorted by local IRI.

    An unreachable endpoint aborts the batch; the exception carries the
    candidates completed so far.
    """
    client = client or SparqlClient(config, session)
    aliases = list(aliases)
    ordered = sorted(records, key=lambda r: r.iri)
    done: dict[Iri, LinkCandidate | None] = {}
    stop = threading.Event()

    def probe(record: StandardRecord) -> LinkCandidate | None:
        if stop.is_set():
            raise _Skipped()
        try:
            return probe_record(client, record, aliases)
        except EndpointUnreachable:
            stop.set()
            raise

    failure = None
    with ThreadPoolExecutor(max_workers=config.max_parallel) as pool:
        futures = [(r.iri, pool.submit(probe, r)) for r in ordered]
        for iri, fut in futures:
            try:
                done[iri] = fut.result()
            except EndpointUnreachable as exc:
                failure = failure or exc
            except _Skipped:
                pass
    if failure is not None:
        partial = sorted(c for c in done.values() if c is not None)
        raise EndpointUnreachable(f"{failure} ({len(done)}/{len(ordered)} records probed)", partial)
    found = sorted(c for c in done.values() if c is not None)
    return CandidateSet(found, [iri for iri in sorted(done) if done[iri] is None])


# -- enrichment ---------------------------------------------------------------

@dataclass
class RemoteDescription:
    remote: Iri
    triples: frozenset[Triple]
    truncated: bool = False

    @property
    def empty(self) -> bool:
        return not self.triples


def fetch_enrichment(config: EndpointConfig, remote: Iri, *, client: SparqlClient | None = None,
                     session: requests.Session | None = None) -> RemoteDescription:
    """Triples with ``remote`` as subject, capped at ``config.max_triples``."""
    client = client or SparqlClient(config, session)
    g = client.graph(f"DESCRIBE <{remote.value}>")
    own = sorted(g.triples(remote, None, None), key=Triple.sort_key)
    truncated = len(own) > config.max_triples
    if truncated:
        log.warning("%s: %d triples, keeping the first %d", remote.value, len(own), config.max_triples)
        own = own[: config.max_triples]
    if not own:
        log.info("%s: remote description is empty", remote.value)
    return RemoteDescription(remote, frozenset(own), truncated)


@dataclass(frozen=True)
class Blacklist:
    iris: frozenset[Iri] = frozenset()
    prefixes: tuple[str, ...] = ()

    def __contains__(self, predicate: object) -> bool:
        if not isinstance(predicate, Iri):
            return False
        return predicate in self.iris or any(predicate.value.startswith(p) for p in self.prefixes)

    @classmethod
    def default(cls) -> Blacklist:
        return cls(
            frozenset({DBO.wikiPageID, DBO.wikiPageRevisionID, DBO.wikiPageWikiLink, DBO.wikiPageExternalLink}),
            (DBO.wikiPage.value,),
        )

    def extended(self, iris: Iterable[Iri] = (), prefixes: Iterable[str] = ()) -> Blacklist:
        return Blacklist(self.iris | frozenset(iris), self.prefixes + tuple(prefixes))


@dataclass
class EnrichmentBundle:
    remote: Iri
    triples: frozenset[Triple]
    filtered_out: frozenset[Iri] = frozenset()
    flagged: tuple[Triple, ...] = ()


def filter_properties(triples: Iterable[Triple], blacklist: Blacklist | Iterable[Iri],
                      remote: Iri | None = None) -> EnrichmentBundle:
    if not isinstance(blacklist, Blacklist):
        blacklist = Blacklist(frozenset(blacklist))
    kept, removed = set(), set()
    for t in triples:
        if t.predicate in blacklist:
            removed.add(t.predicate)
        else:
            kept.add(t)
    if remote is None:
        subjects = {t.subject for t in kept}
        remote = min(subjects) if subjects else Iri("urn:stoforge:none")
    return EnrichmentBundle(remote, frozenset(kept), frozenset(removed))


def semantic_error_check(bundle: EnrichmentBundle, expected_types: Iterable[Iri] = (),
                         disallowed_types: Iterable[Iri] = ()) -> list[Triple]:
    """rdf:type triples whose class is disallowed for the local entity kind.

    A class listed in ``expected_types`` is never flagged.
    """
    expected, disallowed = set(expected_types), set(disallowed_types)
    return sorted(
        (t for t in bundle.triples if t.predicate == RDF_TYPE and t.object in disallowed and t.object not in expected),
        key=Triple.sort_key,
    )


def drop_flagged(bundle: EnrichmentBundle, flagged: Iterable[Triple]) -> EnrichmentBundle:
    flagged = tuple(flagged)
    return EnrichmentBundle(bundle.remote, bundle.triples - set(flagged), bundle.filtered_out,
                            bundle.flagged + flagged)


@dataclass
class EnrichmentStats:
    local: Iri
    remote: Iri
    new_classes: list[Iri] = field(default_factory=list)
    new_properties: list[Iri] = field(default_factory=list)
    false_positive_properties: list[Iri] = field(default_factory=list)
    added_triples: int = 0

    @property
    def new_class_linkings(self) -> int:
        return len(self.new_classes)


def enrich(store: MoleculeStore, local: Iri, bundle: EnrichmentBundle,
           declared_properties: set[Iri] | None = None) -> tuple[MoleculeStore, EnrichmentStats]:
    """Attach ``bundle`` to ``local`` through sto:hasDBpediaResource.

    New properties are predicates the local entity did not expose before,
    directly or through its linked remote molecule. When
    ``declared_properties`` is given, undeclared ones are reported as false
    positives instead.
    """
    if local not in store:
        raise UnknownSubject(local)
    remote = bundle.remote
    local_mol = store.get(local)
    remote_mol = store.molecules.get(remote)
    known_types = local_mol.types | (remote_mol.types if remote_mol else set())
    known_preds = local_mol.predicates | (remote_mol.predicates if remote_mol else set())

    stats = EnrichmentStats(local, remote)
    if store.add(Triple(local, STO.hasDBpediaResource, remote)):
        stats.added_triples += 1
    fresh = [t for t in sorted(bundle.triples, key=Triple.sort_key) if t.subject == remote]
    fresh = [t for t in fresh if remote_mol is None or t not in remote_mol.triples]
    upsert_molecule(store, RdfMolecule(remote, set(fresh)))
    stats.added_triples += len(fresh)

    stats.new_classes = sorted({t.object for t in fresh if t.predicate == RDF_TYPE and t.object not in known_types})
    new_preds = sorted({t.predicate for t in fresh if t.predicate != RDF_TYPE and t.predicate not in known_preds})
    if declared_properties is None:
        stats.new_properties = new_preds
    else:
        stats.new_properties = [p for p in new_preds if p in declared_properties]
        stats.false_positive_properties = [p for p in new_preds if p not in declared_properties]
    return store, stats


# -- orchestration --------------------------------------------------------------

@dataclass
class InterlinkReport:
    candidates: list[LinkCandidate] = field(default_factory=list)
    unmatched: list[Iri] = field(default_factory=list)
    stats: list[EnrichmentStats] = field(default_factory=list)
    flagged: list[Triple] = field(default_factory=list)
    filtered_predicates: dict[Iri, int] = field(default_factory=dict)
    truncated: list[Iri] = field(default_factory=list)
    empty: list[Iri] = field(default_factory=list)

    def totals(self, locals_: set[Iri] | None = None) -> dict[str, int]:
        rows = [s for s in self.stats if locals_ is None or s.local in locals_]
        return {
            "linked": len(rows),
            "new_class_linkings": sum(s.new_class_linkings for s in rows),
            "new_properties": sum(len(s.new_properties) for s in rows),
            "false_positive_properties": sum(len(s.false_positive_properties) for s in rows),
        }


def declared_property_set(client: SparqlClient, predicates: Iterable[Iri]) -> set[Iri]:
    """Predicates the remote KG declares as properties."""
    classes = ", ".join(f"<{c.value}>" for c in PROPERTY_CLASSES)
    out = set()
    for p in sorted(set(predicates)):
        if client.ask(f"ASK {{ <{p.value}> a ?t . FILTER(?t IN ({classes})) }}"):
            out.add(p)
    return out


def interlink(store: MoleculeStore, records: list[StandardRecord], config: EndpointConfig, *,
              aliases: Iterable[tuple[str, str]] = (), blacklist: Blacklist | None = None,
              disallowed: dict[str, frozenset[Iri]] | None = None,
              session: requests.Session | None = None) -> InterlinkReport:
    """Link, fetch, filter, check and merge, writing to ``store`` in local-IRI order."""
    blacklist = blacklist or Blacklist.default()
    disallowed = disallowed or {"std": DEFAULT_STANDARD_DISALLOWED, "org": DEFAULT_ORGANIZATION_DISALLOWED}
    client = SparqlClient(config, session)
    kinds = {r.iri: r.kind for r in records}
    found = generate_candidates(records, config, aliases, client=client)
    report = InterlinkReport(candidates=found.candidates, unmatched=found.unmatched)

    with ThreadPoolExecutor(max_workers=config.max_parallel) as pool:
        descriptions = list(pool.map(lambda c: fetch_enrichment(config, c.remote, client=client), found.candidates))

    bundles = []
    for cand, desc in zip(found.candidates, descriptions):
        if desc.truncated:
            report.truncated.append(cand.remote)
        if desc.empty:
            report.empty.append(cand.remote)
        bundle = filter_properties(desc.triples, blacklist, cand.remote)
        for t in desc.triples:
            if t.predicate in bundle.filtered_out:
                report.filtered_predicates[t.predicate] = report.filtered_predicates.get(t.predicate, 0) + 1
        flagged = semantic_error_check(bundle, (), disallowed.get(kinds[cand.local], frozenset()))
        report.flagged.extend(flagged)
        bundles.append((cand, drop_flagged(bundle, flagged)))

    predicates = {t.predicate for _, b in bundles for t in b.triples if t.predicate != RDF_TYPE}
    declared = declared_property_set(client, predicates)
    for cand, bundle in bundles:  # single writer, already sorted by local IRI
        _, stats = enrich(store, cand.local, bundle, declared)
        report.stats.append(stats)
    report.filtered_predicates = dict(sorted(report.filtered_predicates.items()))
    return report
