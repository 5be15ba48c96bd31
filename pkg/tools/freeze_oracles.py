"""Freeze brute-force oracle answers for a few seeded cases.

    python3 tools/freeze_oracles.py   # rewrites tests/fixtures/frozen_oracles.json

The frozen file pins the oracles themselves: a later edit to tests/oracles.py
that changes an answer shows up as a diff here, not as a silently moved target.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402

OUT = ROOT / "tests" / "fixtures" / "frozen_oracles.json"
KINDS = ("symmetric", "transitive", "inverse", "subproperty")


def closure_case(seed: int) -> dict:
    rng = random.Random(seed)
    nodes = [f"n{i}" for i in range(rng.randint(2, 8))]
    preds = ["p", "q", "r"][: rng.randint(1, 3)]
    triples = sorted({(rng.choice(nodes), rng.choice(preds), rng.choice(nodes)) for _ in range(rng.randint(1, 12))})
    rules = set()
    for _ in range(rng.randint(1, 4)):
        kind, p, q = rng.choice(KINDS), rng.choice(preds), rng.choice(preds)
        if kind in ("symmetric", "transitive"):
            rules.add((kind, p, ""))
        elif p != q:
            rules.add((kind, p, q))
    rules = sorted(rules)
    closure = oracles.naive_closure(set(triples), [(k, p, q or None) for k, p, q in rules])
    return {"seed": seed, "triples": triples, "rules": rules, "closure": sorted(closure)}


def metrics_case(seed: int) -> dict:
    rng = random.Random(seed)
    nodes, edges = oracles.random_simple_graph(rng, max_nodes=10)
    adj = oracles.adjacency(nodes, edges)
    cent = oracles.bf_centralities(adj)
    return {
        "seed": seed,
        "nodes": nodes,
        "edges": sorted(edges),
        "density": oracles.bf_density(adj),
        "transitivity": oracles.bf_transitivity(adj),
        "avg_clustering": oracles.bf_avg_clustering(adj),
        "degree_centralization": oracles.bf_centralization(adj),
        "centrality": {v: list(cent[v]) for v in sorted(cent)},
    }


def main() -> None:
    doc = {"closure": [closure_case(s) for s in range(12)], "metrics": [metrics_case(s) for s in range(12)]}
    OUT.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
