"""Regenerate the bundled snapshot, DBpedia fixtures and gold files.

Run from the repository root:

    python3 tools/build_snapshot.py            # data files only
    python3 tools/build_snapshot.py --record   # also re-record the offline cache

The output is deterministic; committed files only change when the tables in
snapshot_data.py or remote_data.py change.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import shutil
import sys
from pathlib import Path
from urllib.parse import quote

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent))

import remote_data  # noqa: E402
import snapshot_data as d  # noqa: E402

from stoforge.rdf import (  # noqa: E402
    DBC, DBO, DBP, DBR, DCTERMS, FOAF, GOLD, OWL, PROV, RAMI, RDF, RDF_TYPE, RDFS, STO, XSD, YAGO,
    Graph, Iri, Literal, Triple, expand_qname, serialize_ntriples, serialize_turtle,
)

DATA = ROOT / "src" / "stoforge" / "data"
PREFIXES = {
    "dcterms": str(DCTERMS), "owl": str(OWL), "rami": str(RAMI), "rdf": str(RDF), "rdfs": str(RDFS),
    "sto": str(STO), "xsd": str(XSD),
}


def q(name: str) -> Iri:
    return expand_qname(PREFIXES, name)


def en(text: str) -> Literal:
    return Literal(text, language="en")


def rows(table: str) -> list[list[str]]:
    return [[c.strip() for c in line.split("|")] for line in table.strip().splitlines()]


# -- ontology -----------------------------------------------------------------------

def ontology() -> Graph:
    g = Graph(prefixes=PREFIXES)
    add = lambda s, p, o: g.add(Triple(s, p, o))  # noqa: E731
    classes = {
        "Standard": "Standard", "StandardOrganization": "Standard organization",
        "StandardizationFramework": "Standardization framework", "ClassificationLayer": "Classification layer",
        "Domain": "Domain", "Term": "Term", "License": "License",
    }
    for name, label in classes.items():
        add(STO[name], RDF_TYPE, OWL.Class)
        add(STO[name], RDFS.label, en(label))
    add(STO.License, RDFS.subClassOf, DCTERMS.LicenseDocument)

    obj = {
        "relatedTo": ("Standard", "Standard", "Two standards are discussed together without a named relation."),
        "isInteroperableWith": ("Standard", "Standard", "Implementations of both standards can exchange data."),
        "integratesWith": ("Standard", "Standard", "One standard embeds or maps onto the other."),
        "hasPublisher": ("Standard", "StandardOrganization", "Organization publishing the standard."),
        "hasDeveloper": ("Standard", "StandardOrganization", "Organization developing the standard."),
        "hasClassification": ("Standard", "ClassificationLayer", "Layer of a framework the standard is placed in."),
        "isDescribedin": ("ClassificationLayer", "StandardizationFramework", "Framework declaring the layer."),
        "hasDomain": ("Standard", "Domain", "Application domain of the standard."),
        "isDefinedIn": ("Term", "Standard", "Standard that defines the term."),
        "hasDBpediaResource": ("Standard", None, "Equivalent resource in DBpedia."),
        "hasWikipediaArticle": ("Standard", None, "Wikipedia article about the entity."),
        "hasOfficialResource": ("Standard", None, "Official web page."),
    }
    for name, (dom, rng, comment) in obj.items():
        add(STO[name], RDF_TYPE, OWL.ObjectProperty)
        add(STO[name], RDFS.comment, en(comment))
        add(STO[name], RDFS.domain, STO[dom])
        if rng:
            add(STO[name], RDFS.range, STO[rng])
    add(STO.relatedTo, RDF_TYPE, OWL.SymmetricProperty)
    add(STO.relatedTo, RDF_TYPE, OWL.TransitiveProperty)
    add(STO.isInteroperableWith, RDF_TYPE, OWL.SymmetricProperty)
    add(STO.isInteroperableWith, RDFS.subPropertyOf, STO.relatedTo)
    add(STO.integratesWith, RDFS.subPropertyOf, STO.relatedTo)

    data = {
        "hasTag": "Alternative name or keyword.", "hasDimension": "Dimension a layer belongs to.",
        "hasDefinition": "Definition text of a term.", "definesTerm": "Term name defined by a standard.",
        "hasTechnicalCommittee": "Responsible technical committee.", "stabilityDate": "Year until which the edition is stable.",
        "secondaryLabel": "Label of a fused duplicate entity.", "abbreviation": "Acronym of an organization.",
        "formationDate": "Year an organization was founded.",
    }
    for name, comment in data.items():
        add(STO[name], RDF_TYPE, OWL.DatatypeProperty)
        add(STO[name], RDFS.comment, en(comment))
    add(STO.secondaryLicense, RDF_TYPE, OWL.ObjectProperty)
    add(STO.secondaryLicense, RDFS.comment, en("License of a fused duplicate entity."))
    return g


# -- frameworks ---------------------------------------------------------------------

def frameworks() -> Graph:
    g = Graph(prefixes=PREFIXES)
    for fid, (name, dimension, layers) in d.FRAMEWORKS.items():
        fw = STO[fid]
        g.add(Triple(fw, RDF_TYPE, STO.StandardizationFramework))
        g.add(Triple(fw, RDFS.label, en(name)))
        for layer, label in layers:
            li = q(layer)
            g.add(Triple(li, RDF_TYPE, STO.ClassificationLayer))
            g.add(Triple(li, RDFS.label, en(label)))
            g.add(Triple(li, STO.isDescribedin, fw))
            g.add(Triple(li, STO.hasDimension, Literal(dimension)))
    return g


# -- knowledge graph ----------------------------------------------------------------

def knowledge_graph() -> Graph:
    g = Graph(prefixes=PREFIXES)
    add = lambda s, p, o: g.add(Triple(s, p, o))  # noqa: E731
    for dom in d.DOMAINS:
        add(STO[dom], RDF_TYPE, STO.Domain)
        add(STO[dom], RDFS.label, en(" ".join(_split_camel(dom))))
    for lid, label in d.LICENSES.items():
        add(STO[lid], RDF_TYPE, STO.License)
        add(STO[lid], RDFS.label, en(label))

    for oid, label, acronym, year, url in rows(d.ORGANIZATIONS):
        o = STO[oid]
        add(o, RDF_TYPE, STO.StandardOrganization)
        add(o, RDFS.label, en(label))
        add(o, STO.hasTag, en(acronym))
        add(o, STO.abbreviation, Literal(acronym))
        add(o, STO.formationDate, Literal(year, XSD.gYear))
        add(o, STO.hasOfficialResource, Iri(url))

    for sid, label, tags, publisher, layers, domain in rows(d.STANDARDS):
        s = STO[sid]
        add(s, RDF_TYPE, STO.Standard)
        add(s, RDFS.label, en(label))
        for tag in tags.split(";"):
            add(s, STO.hasTag, en(tag))
        add(s, STO.hasPublisher, STO[publisher])
        for layer in filter(None, layers.split(";")):
            add(s, STO.hasClassification, q(layer))
        add(s, STO.hasDomain, STO[domain])
        if sid in d.DEVELOPERS:
            add(s, STO.hasDeveloper, STO[d.DEVELOPERS[sid]])
        if sid in d.LICENSED:
            add(s, DCTERMS.license, STO[d.LICENSED[sid]])
        ann = d.ANNOTATIONS.get(sid)
        if ann:
            add(s, STO.hasTechnicalCommittee, Literal(ann["committee"]))
            for lang in ann["languages"]:
                add(s, DCTERMS.language, Literal(lang))
            add(s, STO.stabilityDate, Literal(ann["stability"], XSD.gYear))
            add(s, DCTERMS.issued, Literal(ann["issued"], XSD.gYear))

    opc = STO.OPC_UA
    add(opc, RDFS.comment, en("International standard for vertical and horizontal communication."))
    add(opc, STO.hasDBpediaResource, Iri("http://dbpedia.org/page/OPC_Unified_Architecture"))
    add(opc, STO.hasOfficialResource, Iri("https://opcfoundation.org/about/opc-technologies/opc-ua/"))
    add(opc, STO.hasWikipediaArticle, Iri("https://en.wikipedia.org/wiki/OPC_Unified_Architecture"))
    for name in remote_data.WIKIPEDIA_ARTICLES:
        local, article = name
        add(STO[local], STO.hasWikipediaArticle, Iri("https://en.wikipedia.org/wiki/" + article))

    for line in d.RELATIONS.strip().splitlines():
        s, p, o = line.split()
        add(STO[s], STO[p], STO[o])

    for tid, label, std, definition in d.TERMS:
        t = STO[tid]
        add(t, RDF_TYPE, STO.Term)
        add(t, RDFS.label, en(label))
        add(t, STO.isDefinedIn, STO[std])
        add(t, STO.hasDefinition, en(definition))
        add(STO[std], STO.definesTerm, en(label))
    return g


def _split_camel(name: str) -> list[str]:
    out, word = [], ""
    for ch in name:
        if ch.isupper() and word and not word[-1].isupper():
            out.append(word)
            word = ""
        word += ch
    return out + [word]


# -- remote fixtures ----------------------------------------------------------------

def _num(name: str, salt: str, lo: int, hi: int) -> int:
    h = int(hashlib.sha256(f"{salt}:{name}".encode()).hexdigest(), 16)
    return lo + h % (hi - lo)


def remote_resource(row: dict) -> Graph:
    name = row["name"]
    r = DBR[name]
    g = Graph()
    add = lambda p, o: g.add(Triple(r, p, o))  # noqa: E731
    for t in remote_data.CLASS_GROUPS[row["group"]] + row.get("extra_types", []):
        add(RDF_TYPE, expand_qname(remote_data.PREFIXES, t))
    add(RDFS.label, en(row["label"]))
    add(RDFS.comment, en(row["comment"]))
    add(DBO.abstract, en(row["comment"]))
    for cat in row["subjects"]:
        add(DCTERMS.subject, DBC[cat])
    if row.get("hypernym"):
        add(GOLD.hypernym, DBR[row["hypernym"]])
    add(OWL.sameAs, Iri("http://de.dbpedia.org/resource/" + name))
    add(OWL.sameAs, Iri("http://yago-knowledge.org/resource/" + name))
    add(FOAF.isPrimaryTopicOf, Iri("https://en.wikipedia.org/wiki/" + name))
    add(PROV.wasDerivedFrom, Iri(f"https://en.wikipedia.org/wiki/{name}?oldid={_num(name, 'rev', 700000000, 900000000)}"))
    add(DBO.wikiPageID, Literal(str(_num(name, "id", 10000, 60000000)), XSD.integer))
    add(DBO.wikiPageRevisionID, Literal(str(_num(name, "rev", 700000000, 900000000)), XSD.integer))
    add(DBO.wikiPageLength, Literal(str(_num(name, "len", 1500, 40000)), XSD.nonNegativeInteger))
    for link in row.get("links", []):
        add(DBO.wikiPageWikiLink, DBR[link])
    add(DBO.wikiPageExternalLink, Iri(row.get("website", f"https://www.example.org/{quote(name, safe='')}")))
    if row.get("year"):
        add(DBO.yearStarted, Literal(row["year"], XSD.gYear))
    for prop, value in row.get("dbp", {}).items():
        obj = DBR[value[4:]] if value.startswith("dbr:") else en(value)
        add(DBP[prop], obj)
    return g


def vocabulary() -> Graph:
    g = Graph()
    for qname, kind in remote_data.DECLARED_PROPERTIES.items():
        p = expand_qname(remote_data.PREFIXES, qname)
        g.add(Triple(p, RDF_TYPE, expand_qname(remote_data.PREFIXES, kind)))
        g.add(Triple(p, RDFS.label, en(qname.split(":")[1])))
    return g


def fixture_filename(name: str) -> str:
    return quote(name, safe="") + ".nt"


# -- tables -------------------------------------------------------------------------

def write_csv(path: Path, header: list[str], body: list[tuple]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)


def fw_of(layer: str) -> str:
    for fid, (_, _, layers) in d.FRAMEWORKS.items():
        if layer in [name for name, _ in layers]:
            return fid
    raise KeyError(layer)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--record", action="store_true", help="re-record the offline SPARQL cache")
    args = ap.parse_args()

    DATA.mkdir(parents=True, exist_ok=True)
    (DATA / "sto.ttl").write_text(serialize_turtle(ontology()), encoding="utf-8")
    (DATA / "frameworks.ttl").write_text(serialize_turtle(frameworks()), encoding="utf-8")
    (DATA / "i40kg.ttl").write_text(serialize_turtle(knowledge_graph()), encoding="utf-8")

    write_csv(DATA / "aliases.csv", ["name_a", "name_b"], d.ALIASES)
    write_csv(DATA / "synonyms.csv", ["name_a", "name_b"], d.SYNONYMS)
    write_csv(DATA / "alignment.csv", ["framework_a", "layer_a", "framework_b", "layer_b"], [
        (STO[fa].value, q(la).value, STO[fb].value, q(lb).value) for fa, la, fb, lb in d.ALIGNMENT
    ])
    for fa, la, fb, lb in d.ALIGNMENT:
        assert fw_of(la) == fa and fw_of(lb) == fb, (la, lb)

    fixtures = DATA / "dbpedia"
    if fixtures.exists():
        shutil.rmtree(fixtures)
    fixtures.mkdir()
    for row in remote_data.RESOURCES:
        (fixtures / fixture_filename(row["name"])).write_text(serialize_ntriples(remote_resource(row)), encoding="utf-8")
    (fixtures / "_vocabulary.nt").write_text(serialize_ntriples(vocabulary()), encoding="utf-8")

    write_csv(DATA / "gold_summary.csv", ["criterion", "group", "total", "tp", "fp", "source"],
              remote_data.GOLD_SUMMARY)
    write_csv(DATA / "gold_demo.csv", ["kind", "key1", "key2", "verdict", "source"], remote_data.GOLD_DEMO)

    if args.record:
        record_cache(fixtures, DATA / "cache")
    print(f"wrote snapshot files to {DATA}")


def record_cache(fixtures: Path, cache: Path) -> None:
    from stoforge.pipeline import PipelineConfig, run_pipeline
    from stoforge.interlink import FixtureEndpoint

    if cache.exists():
        shutil.rmtree(cache)
    endpoint = FixtureEndpoint.from_directory(fixtures)
    cfg = PipelineConfig.bundled(out_dir=None)
    cfg.endpoint = cfg.endpoint.with_overrides(cache_dir=str(cache), offline=False, min_interval=0)
    run_pipeline(cfg, session=endpoint.session(cfg.endpoint.url), write=False)
    print(f"recorded {len(endpoint.queries)} queries into {cache}")


if __name__ == "__main__":
    main()
