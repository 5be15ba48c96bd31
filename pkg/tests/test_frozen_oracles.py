from __future__ import annotations

import json
from pathlib import Path

import pytest

import oracles
from stoforge.analytics import SimpleGraph, metrics_report
from stoforge.rdf import Graph, Iri, Triple
from stoforge.reasoner import Rule, RuleKind, apply_closure

FROZEN = json.loads((Path(__file__).parent / "fixtures" / "frozen_oracles.json").read_text())
TOL = 1e-12


def iri(name: str) -> Iri:
    return Iri(f"http://example.org/{name}")


@pytest.mark.parametrize("case", FROZEN["closure"], ids=lambda c: f"seed{c['seed']}")
def test_closure_against_frozen(case):
    rules = [Rule(iri(p), RuleKind(kind), iri(q) if q else None) for kind, p, q in case["rules"]]
    g = Graph(Triple(iri(s), iri(p), iri(o)) for s, p, o in case["triples"])
    got = sorted((t.subject.value, t.predicate.value, t.object.value) for t in apply_closure(g, rules).closure)
    assert got == sorted(tuple(iri(x).value for x in t) for t in case["closure"])


@pytest.mark.parametrize("case", FROZEN["closure"], ids=lambda c: f"seed{c['seed']}")
def test_closure_oracle_has_not_drifted(case):
    triples = {tuple(t) for t in case["triples"]}
    rules = [(k, p, q or None) for k, p, q in case["rules"]]
    assert sorted(oracles.naive_closure(triples, rules)) == [tuple(t) for t in case["closure"]]


@pytest.mark.parametrize("case", FROZEN["metrics"], ids=lambda c: f"seed{c['seed']}")
def test_metrics_against_frozen(case):
    rep = metrics_report(SimpleGraph.from_edges([tuple(e) for e in case["edges"]], case["nodes"]))
    for name in ("density", "transitivity", "avg_clustering", "degree_centralization"):
        assert abs(getattr(rep, name) - case[name]) < TOL, name
    for node, (d, c, b) in case["centrality"].items():
        got = rep.centrality[node]
        assert max(abs(got.degree - d), abs(got.closeness - c), abs(got.betweenness - b)) < TOL


@pytest.mark.parametrize("case", FROZEN["metrics"], ids=lambda c: f"seed{c['seed']}")
def test_metrics_oracle_has_not_drifted(case):
    adj = oracles.adjacency(case["nodes"], [tuple(e) for e in case["edges"]])
    assert oracles.bf_density(adj) == case["density"]
    assert oracles.bf_transitivity(adj) == case["transitivity"]
    assert oracles.bf_avg_clustering(adj) == case["avg_clustering"]
    assert oracles.bf_centralization(adj) == case["degree_centralization"]
