"""Small named graphs shared by tests, docs, and the CLI examples."""

from __future__ import annotations

from .graphs import DiGraph

# Vertex conventions: s is 0 and the sink is the highest id.


def edge() -> DiGraph:
    """s -> t."""
    return DiGraph(2, ((0, 1),))


def line3() -> DiGraph:
    """s -> x -> t."""
    return DiGraph(3, ((0, 1), (1, 2)), topo_order=(0, 1, 2))


def diamond() -> DiGraph:
    """s -> {a, b} -> t with edge ids (s,a), (s,b), (a,t), (b,t)."""
    return DiGraph(4, ((0, 1), (0, 2), (1, 3), (2, 3)), topo_order=(0, 1, 2, 3))


def fig3() -> DiGraph:
    """Four vertices u1..u4 with edges (u1,u2), (u1,u3), (u2,u3), (u2,u4)."""
    return DiGraph(4, ((0, 1), (0, 2), (1, 2), (1, 3)), topo_order=(0, 1, 2, 3))


def diamond_chain(k: int) -> DiGraph:
    """k diamonds in series: 2^k source-to-sink paths on 3k + 1 vertices."""
    edges = []
    prev = 0
    n = 1
    for _ in range(k):
        a, b, t = n, n + 1, n + 2
        n += 3
        edges += [(prev, a), (prev, b), (a, t), (b, t)]
        prev = t
    return DiGraph(n, tuple(edges), topo_order=tuple(range(n)))
