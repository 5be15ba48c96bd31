"""Network metrics over undirected projections of the knowledge graph."""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Hashable, Iterable

from .rdf import RDF_TYPE, Graph, Iri, compact_iri


def _key(node):
    return node.value if isinstance(node, Iri) else node


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without self-loops or parallel edges."""

    nodes: frozenset
    edges: frozenset  # of frozenset({u, v})

    def __post_init__(self) -> None:
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"self-loop or malformed edge: {set(e)}")
            if not e <= self.nodes:
                raise ValueError(f"edge endpoint missing from nodes: {set(e)}")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[Hashable, Hashable]], nodes: Iterable[Hashable] = ()) -> SimpleGraph:
        node_set = set(nodes)
        edge_set = set()
        for u, v in edges:
            node_set.update((u, v))
            if u != v:
                edge_set.add(frozenset((u, v)))
        return cls(frozenset(node_set), frozenset(edge_set))

    def adjacency(self) -> dict:
        adj = {n: set() for n in self.nodes}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def sorted_nodes(self) -> list:
        return sorted(self.nodes, key=_key)

    def sorted_edges(self) -> list[tuple]:
        return sorted((tuple(sorted(e, key=_key)) for e in self.edges), key=lambda p: (_key(p[0]), _key(p[1])))

    def relabel(self, mapping: dict) -> SimpleGraph:
        return SimpleGraph(
            frozenset(mapping[n] for n in self.nodes),
            frozenset(frozenset(mapping[n] for n in e) for e in self.edges),
        )


def project_relation_graph(kg: Graph, predicates: Iterable[Iri], node_type: Iri) -> SimpleGraph:
    """Undirected graph of ``node_type`` instances linked by ``predicates``.

    Only nodes taking part in at least one in-scope link appear; direction and
    predicate multiplicity collapse into a single edge.
    """
    typed = kg.subjects(RDF_TYPE, node_type)
    edges = []
    for p in predicates:
        for t in kg.triples(None, p, None):
            if t.subject != t.object and t.subject in typed and t.object in typed:
                edges.append((t.subject, t.object))
    return SimpleGraph.from_edges(edges)


# -- metrics ----------------------------------------------------------------

def density(g: SimpleGraph) -> float:
    n = len(g.nodes)
    if n < 2:
        return 0.0
    return 2 * len(g.edges) / (n * (n - 1))


def _closed_pairs(adj: dict) -> dict:
    """Per node, the number of linked pairs among its neighbours."""
    out = {}
    for v, nbrs in adj.items():
        closed = 0
        for u in nbrs:
            closed += len(adj[u] & nbrs)
        out[v] = closed // 2
    return out


def transitivity(g: SimpleGraph) -> float:
    adj = g.adjacency()
    closed = _closed_pairs(adj)
    connected_triples = sum(len(n) * (len(n) - 1) // 2 for n in adj.values())
    if connected_triples == 0:
        return 0.0
    # each triangle closes three connected triples, one per corner
    return sum(closed.values()) / connected_triples


def local_clustering(g: SimpleGraph) -> dict:
    adj = g.adjacency()
    closed = _closed_pairs(adj)
    out = {}
    for v, nbrs in adj.items():
        k = len(nbrs)
        out[v] = 0.0 if k < 2 else closed[v] / (k * (k - 1) / 2)
    return out


def avg_clustering(g: SimpleGraph) -> float:
    if not g.nodes:
        return 0.0
    values = local_clustering(g)
    return sum(values[n] for n in g.sorted_nodes()) / len(values)


def degree_centralization(g: SimpleGraph) -> float:
    """Freeman degree centralization; 0 below three nodes."""
    n = len(g.nodes)
    if n < 3:
        return 0.0
    degrees = [len(nbrs) for nbrs in g.adjacency().values()]
    top = max(degrees)
    return sum(top - d for d in degrees) / ((n - 1) * (n - 2))


@dataclass(frozen=True)
class Centrality:
    degree: float
    closeness: float
    betweenness: float


def _bfs(adj: dict, source) -> tuple[list, dict, dict, dict]:
    order, dist, sigma, preds = [], {source: 0}, {source: 1}, {source: []}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0
                preds[w] = []
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, dist, sigma, preds


def centralities(g: SimpleGraph) -> dict:
    """Degree, closeness and betweenness for every node, sorted by node.

    Closeness uses distances inside the node's component, scaled by the
    component's share of the other nodes. Betweenness (Brandes) counts each
    unordered pair once and is normalized by ``(n-1)(n-2)/2``.
    """
    adj = g.adjacency()
    n = len(adj)
    between = {v: 0.0 for v in adj}
    closeness = {}
    for s in g.sorted_nodes():
        order, dist, sigma, preds = _bfs(adj, s)
        total = sum(dist.values())
        reach = len(dist) - 1
        closeness[s] = (reach / total) * (reach / (n - 1)) if total > 0 and n > 1 else 0.0
        delta = {v: 0.0 for v in order}
        for w in reversed(order):
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1 + delta[w])
            if w != s:
                between[w] += delta[w]
    scale = (n - 1) * (n - 2) / 2 if n > 2 else 0
    out = {}
    for v in g.sorted_nodes():
        # every unordered pair was visited from both ends
        b = between[v] / 2 / scale if scale else 0.0
        d = len(adj[v]) / (n - 1) if n > 1 else 0.0
        out[v] = Centrality(d, closeness[v], b)
    return out


# -- reports ----------------------------------------------------------------

SCALAR_METRICS = ("node_count", "edge_count", "density", "transitivity", "avg_clustering", "degree_centralization")


@dataclass
class MetricsReport:
    node_count: int
    edge_count: int
    density: float
    transitivity: float
    avg_clustering: float
    degree_centralization: float
    centrality: dict = field(default_factory=dict)

    def scalars(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in SCALAR_METRICS}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["metric", "value"])
        for name, value in self.scalars().items():
            w.writerow([name, value if isinstance(value, int) else f"{value:.3f}"])
        return buf.getvalue()

    def centrality_csv(self, prefixes: dict[str, str] | None = None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["node", "degree", "closeness", "betweenness"])
        for node, c in self.centrality.items():
            name = _node_name(node, prefixes)
            w.writerow([name, f"{c.degree:.3f}", f"{c.closeness:.3f}", f"{c.betweenness:.3f}"])
        return buf.getvalue()

    def to_dict(self, prefixes: dict[str, str] | None = None) -> dict:
        out = {k: (v if isinstance(v, int) else round(v, 3)) for k, v in self.scalars().items()}
        out["centrality"] = {
            _node_name(n, prefixes): {k: round(v, 3) for k, v in asdict(c).items()}
            for n, c in self.centrality.items()
        }
        return out


def metrics_report(g: SimpleGraph) -> MetricsReport:
    return MetricsReport(
        node_count=len(g.nodes),
        edge_count=len(g.edges),
        density=density(g),
        transitivity=transitivity(g),
        avg_clustering=avg_clustering(g),
        degree_centralization=degree_centralization(g),
        centrality=centralities(g),
    )


@dataclass(frozen=True)
class MetricDelta:
    metric: str
    before: float
    after: float
    absolute: float
    relative_to_before: float | None
    relative_to_after: float | None


def compare_reports(before: MetricsReport, after: MetricsReport) -> list[MetricDelta]:
    """Per-metric deltas; relative changes are percentages of either base."""
    out = []
    for name in SCALAR_METRICS:
        b, a = getattr(before, name), getattr(after, name)
        diff = a - b
        out.append(MetricDelta(
            name, b, a, diff,
            100.0 * diff / b if b else None,
            100.0 * diff / a if a else None,
        ))
    return out


def deltas_to_csv(deltas: list[MetricDelta]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["metric", "before", "after", "absolute", "relative_to_before_pct", "relative_to_after_pct"])

    def fmt(x):
        if x is None:
            return ""
        return str(x) if isinstance(x, int) else f"{x:.3f}"

    for d in deltas:
        w.writerow([d.metric, fmt(d.before), fmt(d.after), fmt(d.absolute), fmt(d.relative_to_before), fmt(d.relative_to_after)])
    return buf.getvalue()


# -- exports ----------------------------------------------------------------

def _node_name(node, prefixes: dict[str, str] | None) -> str:
    if isinstance(node, Iri):
        return (compact_iri(prefixes, node) if prefixes else None) or node.value
    return str(node)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: SimpleGraph, name: str = "G", prefixes: dict[str, str] | None = None) -> str:
    lines = [f"graph {_dot_quote(name)} {{"]
    for n in g.sorted_nodes():
        lines.append(f"  {_dot_quote(_node_name(n, prefixes))};")
    for u, v in g.sorted_edges():
        lines.append(f"  {_dot_quote(_node_name(u, prefixes))} -- {_dot_quote(_node_name(v, prefixes))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: SimpleGraph, prefixes: dict[str, str] | None = None) -> str:
    return "".join(f"{_node_name(u, prefixes)}\t{_node_name(v, prefixes)}\n" for u, v in g.sorted_edges())


def report_json(before: MetricsReport, after: MetricsReport, prefixes: dict[str, str] | None = None) -> str:
    doc = {
        "before": before.to_dict(prefixes),
        "after": after.to_dict(prefixes),
        "deltas": [asdict(d) for d in compare_reports(before, after)],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
