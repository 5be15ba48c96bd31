from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from stoforge.analytics import (
    SimpleGraph, avg_clustering, centralities, compare_reports, degree_centralization, deltas_to_csv, density,
    metrics_report, project_relation_graph, report_json, to_dot, to_edge_list, transitivity,
)
from stoforge.rdf import RDF_TYPE, STO, Graph, Triple

TOL = 1e-12


@st.composite
def simple_graphs(draw, max_nodes=15):
    n = draw(st.integers(0, max_nodes))
    nodes = [f"v{i:02d}" for i in range(n)]
    pairs = list(itertools.combinations(nodes, 2))
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return SimpleGraph.from_edges(edges, nodes)


def test_simple_graph_rejects_loops_and_dangling_edges():
    with pytest.raises(ValueError):
        SimpleGraph(frozenset({"a"}), frozenset({frozenset({"a"})}))
    with pytest.raises(ValueError):
        SimpleGraph(frozenset({"a"}), frozenset({frozenset({"a", "b"})}))
    g = SimpleGraph.from_edges([("a", "b"), ("b", "a"), ("c", "c")])
    assert len(g.edges) == 1 and g.nodes == {"a", "b", "c"}


@pytest.mark.parametrize("name, edges, nodes, expected", [
    ("K3", [("a", "b"), ("b", "c"), ("a", "c")], (), dict(density=1.0, transitivity=1.0, avg_clustering=1.0,
                                                        degree_centralization=0.0)),
    ("P3", [("a", "b"), ("b", "c")], (), dict(density=2 / 3, transitivity=0.0, avg_clustering=0.0,
                                            degree_centralization=1.0)),
    ("star5", [("h", x) for x in "abcd"], (), dict(density=0.4, transitivity=0.0, avg_clustering=0.0,
                                                  degree_centralization=1.0)),
    ("C5", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")], (),
     dict(density=0.5, transitivity=0.0, avg_clustering=0.0, degree_centralization=0.0)),
    ("empty", [], ("a", "b", "c"), dict(density=0.0, transitivity=0.0, avg_clustering=0.0,
                                        degree_centralization=0.0)),
])
def test_closed_forms(name, edges, nodes, expected):
    g = SimpleGraph.from_edges(edges, nodes)
    got = dict(density=density(g), transitivity=transitivity(g), avg_clustering=avg_clustering(g),
               degree_centralization=degree_centralization(g))
    assert got == expected


def test_star_centralities_exact():
    g = SimpleGraph.from_edges([("h", x) for x in "abcd"])
    c = centralities(g)
    assert (c["h"].degree, c["h"].closeness, c["h"].betweenness) == (1.0, 1.0, 1.0)
    assert c["a"].degree == 0.25 and c["a"].betweenness == 0.0
    assert c["a"].closeness == pytest.approx(4 / 7, abs=TOL)


def test_disconnected_closeness_is_component_scaled():
    g = SimpleGraph.from_edges([("a", "b")], ["c", "d"])
    c = centralities(g)
    assert c["a"].closeness == pytest.approx(1 / 3, abs=TOL)
    assert c["c"].closeness == 0.0


@settings(max_examples=100, deadline=None)
@given(simple_graphs())
def test_metrics_match_brute_force(g):
    adj = {v: set(n) for v, n in g.adjacency().items()}
    assert abs(density(g) - oracles.bf_density(adj)) < TOL
    assert abs(transitivity(g) - oracles.bf_transitivity(adj)) < TOL
    assert abs(avg_clustering(g) - oracles.bf_avg_clustering(adj)) < TOL
    assert abs(degree_centralization(g) - oracles.bf_centralization(adj)) < TOL
    bf = oracles.bf_centralities(adj)
    for v, c in centralities(g).items():
        assert max(abs(a - b) for a, b in zip((c.degree, c.closeness, c.betweenness), bf[v])) < TOL


@settings(max_examples=100, deadline=None)
@given(simple_graphs())
def test_metrics_match_networkx(g):
    """Second, unrelated reference; networkx closeness uses the same component scaling."""
    h = nx.Graph()
    h.add_nodes_from(g.nodes)
    h.add_edges_from(tuple(e) for e in g.edges)
    n = len(g.nodes)
    if n >= 2:
        assert abs(density(g) - nx.density(h)) < TOL
    assert abs(transitivity(g) - nx.transitivity(h)) < TOL
    if n:
        assert abs(avg_clustering(g) - nx.average_clustering(h)) < TOL
    c = centralities(g)
    if n >= 2:
        deg, clo = nx.degree_centrality(h), nx.closeness_centrality(h, wf_improved=True)
        bet = nx.betweenness_centrality(h, normalized=True)
        for v in g.nodes:
            assert abs(c[v].degree - deg[v]) < TOL
            assert abs(c[v].closeness - clo[v]) < TOL
            assert abs(c[v].betweenness - bet[v]) < TOL


@settings(max_examples=200, deadline=None)
@given(simple_graphs())
def test_ratios_in_unit_interval(g):
    rep = metrics_report(g)
    for name in ("density", "transitivity", "avg_clustering", "degree_centralization"):
        assert 0.0 <= getattr(rep, name) <= 1.0
    assert rep.edge_count == len(g.edges)


@settings(max_examples=100, deadline=None)
@given(simple_graphs(), st.randoms(use_true_random=False))
def test_adding_an_edge_never_lowers_density(g, rnd: random.Random):
    missing = [p for p in itertools.combinations(sorted(g.nodes), 2) if frozenset(p) not in g.edges]
    if not missing:
        return
    h = SimpleGraph(g.nodes, g.edges | {frozenset(rnd.choice(missing))})
    assert density(h) >= density(g)


@settings(max_examples=100, deadline=None)
@given(simple_graphs(), st.randoms(use_true_random=False))
def test_permutation_invariance(g, rnd: random.Random):
    nodes = sorted(g.nodes)
    shuffled = nodes[:]
    rnd.shuffle(shuffled)
    mapping = dict(zip(nodes, shuffled))
    a, b = metrics_report(g), metrics_report(g.relabel(mapping))
    for k, v in a.scalars().items():
        assert abs(v - b.scalars()[k]) < TOL
    for v in nodes:
        x, y = a.centrality[v], b.centrality[mapping[v]]
        assert abs(x.degree - y.degree) < TOL and abs(x.closeness - y.closeness) < TOL
        assert abs(x.betweenness - y.betweenness) < TOL


@settings(max_examples=200, deadline=None)
@given(simple_graphs(max_nodes=9))
def test_transitivity_one_iff_every_connected_triple_closes(g):
    adj = g.adjacency()
    open_triple = any(b not in adj[a] for v in adj for a, b in itertools.combinations(adj[v], 2))
    any_triple = any(len(n) >= 2 for n in adj.values())
    assert (transitivity(g) == 1.0) == (any_triple and not open_triple)


def test_projection_keeps_typed_related_nodes_only():
    kg = Graph([
        Triple(STO.A, RDF_TYPE, STO.Standard), Triple(STO.B, RDF_TYPE, STO.Standard),
        Triple(STO.C, RDF_TYPE, STO.Standard), Triple(STO.A, STO.relatedTo, STO.B),
        Triple(STO.B, STO.relatedTo, STO.A), Triple(STO.B, STO.integratesWith, STO.A),
        Triple(STO.A, STO.relatedTo, STO.Org), Triple(STO.C, STO.relatedTo, STO.C),
    ])
    g = project_relation_graph(kg, [STO.relatedTo, STO.integratesWith], STO.Standard)
    assert g.nodes == {STO.A, STO.B} and len(g.edges) == 1


def test_exports():
    g = SimpleGraph.from_edges([("a", "b"), ("b", "c")])
    dot = to_dot(g, "G")
    assert dot.startswith("graph \"G\" {") and '"a" -- "b";' in dot
    assert to_edge_list(g) == "a\tb\nb\tc\n"
    before, after = metrics_report(g), metrics_report(SimpleGraph.from_edges([("a", "b"), ("b", "c"), ("a", "c")]))
    deltas = {d.metric: d for d in compare_reports(before, after)}
    assert deltas["edge_count"].absolute == 1
    assert deltas["transitivity"].relative_to_before is None
    assert deltas_to_csv(list(deltas.values())).splitlines()[0].startswith("metric,before,after")
    assert '"density": 1.0' in report_json(before, after)
