from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stoforge.config import PipelineConfig
from stoforge.conflicts import (
    ConflictKind, LayerAlignment, detect_acronyms, detect_all, detect_divergent_classification, detect_homonyms,
    detect_synonyms, informational_reports, source_namespace,
)
from stoforge.model import read_alias_table
from stoforge.pipeline import populate
from stoforge.rdf import OWL, RAMI, STO, Graph, Iri, Triple, parse_turtle

DOC = """
@prefix sto: <https://w3id.org/i40/sto#> .
@prefix rami: <https://w3id.org/i40/rami#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
sto:RAMI40 a sto:StandardizationFramework ; sto:hasLayer rami:Communication .
sto:IICF a sto:StandardizationFramework ; sto:hasLayer sto:FrameworkLevel, sto:TransportLevel .
rami:Communication sto:isDescribedin sto:RAMI40 .
sto:FrameworkLevel sto:isDescribedin sto:IICF .
sto:TransportLevel sto:isDescribedin sto:IICF .
sto:OPC_UA a sto:Standard ; rdfs:label "OPC UA" ;
    sto:hasClassification rami:Communication, sto:FrameworkLevel .
sto:MQTT a sto:Standard ; rdfs:label "MQTT" ; sto:hasClassification rami:Communication, sto:TransportLevel .
sto:ISO_10303 a sto:Standard ; rdfs:label "ISO 10303" ; sto:definesTerm "Resource" .
sto:ISO_15704 a sto:Standard ; rdfs:label "ISO 15704" ; sto:definesTerm "resource " .
sto:ISO_10303_Resource a sto:Term ; rdfs:label "Resource" .
sto:ISO_15704_Resource a sto:Term ; rdfs:label "Resource" .
sto:IEC_62541 a sto:Standard ; rdfs:label "IEC 62541" .
sto:InternalElement a sto:Term ; rdfs:label "InternalElement" .
sto:Object a sto:Term ; rdfs:label "Object" .
"""
ALIGN = LayerAlignment({(STO.RAMI40, RAMI.Communication, STO.IICF, STO.TransportLevel)})


def kg() -> Graph:
    return parse_turtle(DOC)


def test_divergent_classification_of_opc_ua():
    reports = detect_divergent_classification(kg(), ALIGN)
    assert [r.entities for r in reports] == [(STO.OPC_UA, RAMI.Communication, STO.FrameworkLevel)]
    assert ALIGN.aligned(STO.TransportLevel, RAMI.Communication)
    assert ALIGN.validate(kg()) == []
    bad = LayerAlignment({(STO.IICF, RAMI.Communication, STO.RAMI40, STO.TransportLevel)})
    assert len(bad.validate(kg())) == 2


def test_resource_homonym_reported_once():
    reports = detect_homonyms(kg())
    assert [r.entities for r in reports] == [(STO.ISO_10303, STO.ISO_15704)]
    g = kg()
    g.add(Triple(STO.ISO_10303, OWL.sameAs, STO.ISO_15704))
    assert detect_homonyms(g) == []


def test_acronym_and_synonym_from_alias_table():
    aliases = [("OPC UA", "IEC 62541"), ("InternalElement", "Object"), ("MQTT", "Unknown")]
    acr = detect_acronyms(kg(), aliases)
    syn = detect_synonyms(kg(), aliases)
    assert [r.entities for r in acr] == [(STO.IEC_62541, STO.OPC_UA)]
    assert [r.entities for r in syn] == [(STO.InternalElement, STO.Object)]
    assert syn[0].kind is ConflictKind.SYNONYM


def test_informational_findings_are_marked():
    reps = informational_reports(parse_turtle(DOC.replace('"MQTT"', '"MQTT"@de')))
    assert reps and all(r.informational for r in reps)
    assert ConflictKind.SIC6 in {r.kind for r in reps}
    assert source_namespace(Iri("http://dbpedia.org/resource/EtherNet/IP")) == "http://dbpedia.org/resource/"


def test_evidence_triples_exist():
    g = kg()
    summary = detect_all(g, ALIGN, [("OPC UA", "IEC 62541"), ("InternalElement", "Object")])
    assert summary.counts() == {"acronym": 1, "divergent_classification": 1, "homonym": 1, "synonym": 1}
    for r in summary.reports:
        assert all(t in g for t in r.evidence)


def test_bundled_conflicts(bundled_result):
    counts = bundled_result.conflicts.counts()
    assert counts["homonym"] >= 1 and counts["synonym"] == 1 and counts["acronym"] >= 1
    divergent = [r for r in bundled_result.conflicts.reports if r.kind is ConflictKind.DIVERGENT_CLASSIFICATION]
    assert any(r.entities[0] == STO.OPC_UA for r in divergent)
    kinds = {r.kind for r in bundled_result.conflicts.reports if r.informational}
    assert kinds <= {ConflictKind.SIC2, ConflictKind.SIC3, ConflictKind.SIC5, ConflictKind.SIC6}
    cfg = PipelineConfig.bundled()
    g, _ = populate(cfg)
    for r in bundled_result.conflicts.reports:
        if not r.informational:
            assert all(t in g for t in r.evidence)
    assert read_alias_table(cfg.synonyms) == [("InternalElement", "Object")]


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False))
def test_detection_is_order_independent(rnd: random.Random):
    triples = list(kg())
    rnd.shuffle(triples)
    aliases = [("OPC UA", "IEC 62541"), ("InternalElement", "Object")]
    a = detect_all(kg(), ALIGN, aliases)
    b = detect_all(Graph(triples), ALIGN, aliases)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("fix", ["alignment", "sameas"])
def test_suppression_removes_exactly_one_report(fix):
    aliases = [("OPC UA", "IEC 62541"), ("InternalElement", "Object")]
    g = kg()
    before = detect_all(g, ALIGN, aliases, informational=False).reports
    align = LayerAlignment(set(ALIGN.rows))
    if fix == "alignment":
        align.add(STO.RAMI40, RAMI.Communication, STO.IICF, STO.FrameworkLevel)
        gone = ConflictKind.DIVERGENT_CLASSIFICATION
    else:
        g.add(Triple(STO.IEC_62541, OWL.sameAs, STO.OPC_UA))
        gone = ConflictKind.ACRONYM
    after = detect_all(g, align, aliases, informational=False).reports
    assert [r for r in before if r.kind is not gone] == [r for r in after]
    assert len(before) - len(after) == 1
