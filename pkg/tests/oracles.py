"""Independent reference implementations used as test oracles.

Deliberately naive: quadratic or worse, no shared code with the package
beyond the term types. Graphs are plain ``dict[node, set[node]]`` adjacency
maps or sets of tuples.
"""

from __future__ import annotations

import itertools
import random
from collections import deque


# -- closure -------------------------------------------------------------------

def naive_closure(triples: set[tuple], rules: list[tuple]) -> set[tuple]:
    """Iterate until stable, applying one rule instance per pass.

    ``rules`` holds ``(kind, p, q)`` with kind in symmetric, transitive,
    inverse, subproperty. Self-loops produced by rules are discarded.
    """
    closure = set(triples)
    while True:
        added = None
        for kind, p, q in rules:
            for (s, pp, o) in sorted(closure):
                if pp != p:
                    continue
                if kind == "symmetric":
                    cands = [(o, p, s)]
                elif kind == "inverse":
                    cands = [(o, q, s)]
                elif kind == "subproperty":
                    cands = [(s, q, o)]
                else:
                    cands = [(s, p, o2) for (s2, p2, o2) in sorted(closure) if s2 == o and p2 == p]
                for c in cands:
                    if c[0] != c[2] and c not in closure:
                        added = c
                        break
                if added:
                    break
            if added:
                break
        if added is None:
            return closure
        closure.add(added)


def reachability(edges: set[tuple], nodes) -> set[tuple]:
    out = set()
    for s in nodes:
        seen, stack = set(), [s]
        while stack:
            x = stack.pop()
            for (a, b) in edges:
                if a == x and b not in seen:
                    seen.add(b)
                    stack.append(b)
        out |= {(s, o) for o in seen if o != s}
    return out


def components(adj: dict) -> list[set]:
    seen, comps = set(), []
    for v in sorted(adj):
        if v in seen:
            continue
        comp, queue = {v}, deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append(comp)
    return comps


# -- metrics -------------------------------------------------------------------

def adjacency(nodes, edges) -> dict:
    adj = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def bf_density(adj: dict) -> float:
    n = len(adj)
    if n < 2:
        return 0.0
    m = sum(1 for a, b in itertools.combinations(sorted(adj), 2) if b in adj[a])
    return m / (n * (n - 1) / 2)


def bf_transitivity(adj: dict) -> float:
    """Count triangles and connected triples by enumerating every node triple."""
    closed = connected = 0
    for a, b, c in itertools.combinations(sorted(adj), 3):
        links = (b in adj[a]) + (c in adj[b]) + (c in adj[a])
        if links == 3:
            closed += 3
            connected += 3
        elif links == 2:
            connected += 1
    return closed / connected if connected else 0.0


def bf_local_clustering(adj: dict, v) -> float:
    nbrs = sorted(adj[v])
    k = len(nbrs)
    if k < 2:
        return 0.0
    t = sum(1 for a, b in itertools.combinations(nbrs, 2) if b in adj[a])
    return t / (k * (k - 1) / 2)


def bf_avg_clustering(adj: dict) -> float:
    return sum(bf_local_clustering(adj, v) for v in adj) / len(adj) if adj else 0.0


def bf_centralization(adj: dict) -> float:
    n = len(adj)
    if n < 3:
        return 0.0
    deg = [len(adj[v]) for v in adj]
    return sum(max(deg) - d for d in deg) / ((n - 1) * (n - 2))


def all_pairs_distances(adj: dict) -> dict:
    """Floyd-Warshall over integer hops."""
    inf = float("inf")
    nodes = sorted(adj)
    dist = {(a, b): (0 if a == b else (1 if b in adj[a] else inf)) for a in nodes for b in nodes}
    for k in nodes:
        for i in nodes:
            for j in nodes:
                if dist[(i, k)] + dist[(k, j)] < dist[(i, j)]:
                    dist[(i, j)] = dist[(i, k)] + dist[(k, j)]
    return dist


def all_shortest_paths(adj: dict, s, t, dist) -> list[list]:
    """Enumerate every shortest path from s to t explicitly."""
    if dist[(s, t)] == float("inf"):
        return []
    paths = [[s]]
    for _ in range(int(dist[(s, t)])):
        paths = [p + [y] for p in paths for y in sorted(adj[p[-1]]) if dist[(y, t)] == dist[(p[-1], t)] - 1]
    return paths


def bf_centralities(adj: dict) -> dict:
    n = len(adj)
    nodes = sorted(adj)
    dist = all_pairs_distances(adj)
    out = {}
    for v in nodes:
        deg = len(adj[v]) / (n - 1) if n > 1 else 0.0
        reach = [u for u in nodes if u != v and dist[(v, u)] < float("inf")]
        total = sum(dist[(v, u)] for u in reach)
        clo = (len(reach) / total) * (len(reach) / (n - 1)) if total > 0 and n > 1 else 0.0
        out[v] = [deg, clo, 0.0]
    for s, t in itertools.combinations(nodes, 2):
        paths = all_shortest_paths(adj, s, t, dist)
        if not paths:
            continue
        for v in nodes:
            if v in (s, t):
                continue
            out[v][2] += sum(1 for p in paths if v in p) / len(paths)
    norm = (n - 1) * (n - 2) / 2
    for v in nodes:
        out[v][2] = out[v][2] / norm if norm > 0 else 0.0
    return {v: tuple(x) for v, x in out.items()}


# -- generators ----------------------------------------------------------------

def random_simple_graph(rng: random.Random, max_nodes: int = 15) -> tuple[list, set]:
    n = rng.randint(0, max_nodes)
    nodes = [f"n{i:02d}" for i in range(n)]
    p = rng.random()
    edges = {(a, b) for a, b in itertools.combinations(nodes, 2) if rng.random() < p}
    return nodes, edges
