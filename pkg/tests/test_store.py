from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stoforge.rdf import OWL, RDF_TYPE, RDFS, STO, Graph, Iri, Literal, Triple
from stoforge.store import (
    UNTYPED, EmptyName, MoleculeStore, RdfMolecule, compute_mts, extract_molecule, mint_iri, mt_link_graph,
    mts_to_csv, normalize_label, upsert_molecule,
)


def small_kg() -> Graph:
    return Graph([
        Triple(STO.OPC_UA, RDF_TYPE, STO.Standard),
        Triple(STO.OPC_UA, RDFS.label, Literal("OPC UA", language="en")),
        Triple(STO.OPC_UA, STO.hasPublisher, STO.OPC_Foundation),
        Triple(STO.OPC_UA, STO.isInteroperableWith, STO.AML),
        Triple(STO.AML, RDF_TYPE, STO.Standard),
        Triple(STO.AML, RDFS.label, Literal("AutomationML")),
        Triple(STO.AML, STO.hasTag, Literal("AML")),
        Triple(STO.OPC_Foundation, RDF_TYPE, STO.StandardOrganization),
        Triple(STO.OPC_Foundation, RDFS.label, Literal("OPC Foundation")),
        Triple(STO.Loose, STO.note, Literal("untyped")),
    ])


def test_normalize_label():
    assert normalize_label("  OPC   UA\t") == "opc ua"
    assert normalize_label("ÄBC") == normalize_label("äbc")


def test_molecule_rejects_foreign_subject():
    with pytest.raises(ValueError):
        RdfMolecule(STO.A, {Triple(STO.B, STO.p, STO.C)})


def test_store_partition_and_index():
    kg = small_kg()
    store = MoleculeStore.from_graph(kg)
    assert len(store) == 4
    assert store.triple_count() == len(kg)
    assert store.to_graph().triple_set == kg.triple_set
    assert store.lookup("opc  ua") == STO.OPC_UA
    assert store.lookup("AML") == STO.AML
    assert extract_molecule(kg, STO.AML).triples == store.get(STO.AML).triples


def test_mint_reuses_known_names_and_disambiguates():
    store = MoleculeStore.from_graph(small_kg())
    assert mint_iri(STO, "OPC UA", store) == STO.OPC_UA
    a = mint_iri(STO, "Loose", store)
    assert a == Iri(STO + "Loose_2")  # the local name is taken by an unlabeled molecule
    b = mint_iri(STO, "IEC 61131-3", store)
    assert b == Iri(STO + "IEC_61131-3")
    assert mint_iri(STO, "iec   61131-3", store) == b
    with pytest.raises(EmptyName):
        mint_iri(STO, "  ", store)
    with pytest.raises(EmptyName):
        mint_iri(STO, "???", store)


def test_upsert_is_union_and_refreshes_index():
    store = MoleculeStore.from_graph(small_kg())
    upsert_molecule(store, RdfMolecule(STO.MQTT, {Triple(STO.MQTT, RDFS.label, Literal("MQTT"))}))
    upsert_molecule(store, RdfMolecule(STO.MQTT, {Triple(STO.MQTT, RDFS.label, Literal("MQTT"))}))
    assert store.lookup("mqtt") == STO.MQTT
    assert len(store.get(STO.MQTT)) == 1


def test_mts_classes_links_and_untyped():
    mts = compute_mts(small_kg())
    assert set(mts.templates) == {STO.Standard, STO.StandardOrganization, UNTYPED}
    std = mts[STO.Standard]
    assert std.instance_count == 2
    assert (STO.hasPublisher, STO.StandardOrganization) in std.object_links
    assert (STO.isInteroperableWith, STO.Standard) in std.object_links
    assert RDFS.label in std.datatype_properties and STO.hasTag in std.datatype_properties
    assert RDF_TYPE not in std.properties
    assert mts.link_count() == 2
    assert mts_to_csv(mts).splitlines()[0] == "class,n_datatype_props,n_object_links,n_instances"
    g = mt_link_graph(mts)
    assert {frozenset((STO.Standard, STO.StandardOrganization))} == set(g.edges)


def test_mixed_property_goes_to_owl_thing_with_warning():
    kg = Graph([
        Triple(STO.A, RDF_TYPE, STO.Standard), Triple(STO.A, STO.license, Literal("GPL")),
        Triple(STO.B, RDF_TYPE, STO.Standard), Triple(STO.B, STO.license, STO.GPLv2),
    ])
    mts = compute_mts(kg)
    assert (STO.license, OWL.Thing) in mts[STO.Standard].object_links
    assert STO.license not in mts[STO.Standard].datatype_properties
    assert mts.warnings == [(STO.Standard, STO.license)]


# -- properties -----------------------------------------------------------------

nodes = st.sampled_from([STO.A, STO.B, STO.C, STO.D, STO.E])
classes = st.sampled_from([STO.Standard, STO.StandardOrganization, STO.Framework])
preds = st.sampled_from([STO.p, STO.q, RDFS.label])
objects = st.one_of(nodes, st.sampled_from([Literal("x"), Literal("y", language="en")]))
kg_triples = st.one_of(
    st.builds(Triple, nodes, preds, objects),
    st.builds(lambda s, c: Triple(s, RDF_TYPE, c), nodes, classes),
)


@settings(max_examples=200, deadline=None)
@given(st.sets(kg_triples, max_size=30))
def test_molecule_partition(ts):
    g = Graph(ts)
    store = MoleculeStore.from_graph(g)
    assert sum(len(m) for m in store.molecules.values()) == len(g)
    assert all(t.subject == s for s, m in store.molecules.items() for t in m.triples)


@settings(max_examples=200, deadline=None)
@given(st.sets(kg_triples, max_size=30))
def test_mt_soundness(ts):
    g = Graph(ts)
    mts = compute_mts(g)
    observed = {(c, t.predicate) for t in g if t.predicate != RDF_TYPE
                for c in ({o for o in g.objects(t.subject, RDF_TYPE)} or {UNTYPED})}
    for c, p in observed:
        mt = mts[c]
        in_dt = p in mt.datatype_properties
        in_links = any(lp == p for lp, _ in mt.object_links)
        assert in_dt != in_links
    for mt in mts:
        assert len(mt.object_links) == len(set(mt.object_links))
        for _, target in mt.object_links:
            assert target in mts or target in (OWL.Thing, UNTYPED)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.text(alphabet="abAB -_1.", min_size=1, max_size=8), max_size=25))
def test_minting_keeps_labels_injective(names):
    store = MoleculeStore.from_graph(small_kg())
    minted: dict[str, Iri] = {}
    for name in names:
        try:
            iri = mint_iri(STO, name, store)
        except EmptyName:
            continue
        key = normalize_label(name)
        assert minted.setdefault(key, iri) == iri
    assert len(set(minted.values())) == len(minted)
    assert not set(minted.values()) & ({STO.OPC_UA, STO.AML, STO.OPC_Foundation, STO.Loose} - {
        v for k, v in minted.items() if store.name_index.get(k) == v})
