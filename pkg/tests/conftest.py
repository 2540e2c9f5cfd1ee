"""Shared test helpers: seeded random graphs and brute-force reference functions."""

from __future__ import annotations

import random

from minuniq.graphs import DiGraph, WeightFn, enumerate_paths


def random_dag(rng: random.Random, n: int, edge_pct: int = 40) -> DiGraph:
    """Random DAG on vertices 0..n-1 with the identity topological order."""
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.randrange(100) < edge_pct
    ]
    return DiGraph(n, tuple(edges), topo_order=tuple(range(n)))


def random_weights(rng: random.Random, m: int, lo: int = 1, hi: int = 5) -> WeightFn:
    return WeightFn.of([rng.randint(lo, hi) for _ in range(m)], bound=hi)


def path_weight(w: WeightFn, g: DiGraph, path: tuple[int, ...]) -> int:
    eid = g.edge_id
    return sum(w[eid[(a, b)]] for a, b in zip(path, path[1:]))


def brute_min_status(g: DiGraph, w: WeightFn, s: int, v: int, cap: int = 100000):
    """(dist, multiplicity) for v by full path enumeration; (None, 0) if unreachable."""
    listed = enumerate_paths(g, s, v, cap)
    assert not listed.truncated, "brute-force oracle hit its cap"
    if not listed.paths:
        return None, 0
    weights = [path_weight(w, g, p) for p in listed.paths]
    best = min(weights)
    return best, sum(1 for x in weights if x == best)
