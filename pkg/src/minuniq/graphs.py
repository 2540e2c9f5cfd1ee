"""Directed-graph substrate: exact shortest-path analysis and brute-force oracles.

Everything here is pure and exact: vertices are 0-based ints, edge ids are
positions in the edge list, weights and path counters are arbitrary-precision
ints.  The enumeration functions are deliberately naive; they serve as ground
truth for the rest of the package.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError


@dataclass(frozen=True)
class DiGraph:
    """Finite directed graph with stable edge ids.

    The id of an edge is its position in ``edges``.  No self-loops and no
    duplicate (src, dst) pairs are allowed.  ``topo_order`` is optional; when
    present every edge must go forward in it.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    topo_order: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in self.edges))
        if self.topo_order is not None:
            object.__setattr__(self, "topo_order", tuple(int(v) for v in self.topo_order))
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for eid, (a, b) in enumerate(self.edges):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InputError(f"edge {eid} endpoint out of range: ({a}, {b})")
            if a == b:
                raise InputError(f"edge {eid} is a self-loop at {a}")
            if (a, b) in seen:
                raise InputError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))
        if self.topo_order is not None:
            if sorted(self.topo_order) != list(range(self.n)):
                raise InputError("topo_order is not a permutation of the vertices")
            pos = self.position_of
            for eid, (a, b) in enumerate(self.edges):
                if pos[a] >= pos[b]:
                    raise InputError(f"edge {eid} ({a}, {b}) goes backward in topo_order")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def position_of(self) -> tuple[int, ...]:
        """Vertex -> position in topo_order (requires topo_order)."""
        if self.topo_order is None:
            raise InputError("graph has no topo_order")
        pos = [0] * self.n
        for i, v in enumerate(self.topo_order):
            pos[v] = i
        return tuple(pos)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            out[a].append(b)
        return tuple(tuple(sorted(bs)) for bs in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            inc[b].append(a)
        return tuple(tuple(sorted(astuple)) for astuple in inc)

    @cached_property
    def out_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (edge id, dst), sorted by dst."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (a, b) in enumerate(self.edges):
            out[a].append((eid, b))
        return tuple(tuple(sorted(es, key=lambda e: e[1])) for es in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (edge id, src), sorted by src."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for eid, (a, b) in enumerate(self.edges):
            inc[b].append((eid, a))
        return tuple(tuple(sorted(es, key=lambda e: e[1])) for es in inc)

    @cached_property
    def edge_id(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def check_vertex(self, v: int, what: str = "vertex") -> int:
        if not (0 <= v < self.n):
            raise InputError(f"{what} {v} out of range [0, {self.n})")
        return v

    def acyclic_order(self) -> tuple[int, ...] | None:
        """A topological order (Kahn, smallest-vertex-first), or None if cyclic."""
        indeg = [0] * self.n
        for _, b in self.edges:
            indeg[b] += 1
        heap = [v for v in range(self.n) if indeg[v] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for w in self.successors[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(heap, w)
        if len(order) != self.n:
            return None
        return tuple(order)

    def is_acyclic(self) -> bool:
        return self.topo_order is not None or self.acyclic_order() is not None

    def with_topo_order(self) -> DiGraph:
        """Copy of this graph carrying a computed topological order."""
        if self.topo_order is not None:
            return self
        order = self.acyclic_order()
        if order is None:
            raise InputError("graph is cyclic; no topological order exists")
        return DiGraph(self.n, self.edges, order)


@dataclass(frozen=True)
class WeightFn:
    """Positive integer edge weights, aligned to edge ids, with a declared bound."""

    weights: tuple[int, ...]
    bound: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.bound < 1:
            raise InputError(f"weight bound must be >= 1, got {self.bound}")
        for eid, w in enumerate(self.weights):
            if not (1 <= w <= self.bound):
                raise InputError(f"weight of edge {eid} is {w}, outside [1, {self.bound}]")

    @classmethod
    def unit(cls, m: int) -> WeightFn:
        return cls((1,) * m, 1)

    @classmethod
    def of(cls, weights, bound: int | None = None) -> WeightFn:
        ws = tuple(int(w) for w in weights)
        if bound is None:
            bound = max(ws, default=1)
        return cls(ws, bound)

    def __getitem__(self, eid: int) -> int:
        return self.weights[eid]

    def __len__(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class VertexMin:
    """Shortest-path verdict for one vertex: distance and number of minimum paths.

    ``dist is None`` (multiplicity 0) means unreachable; multiplicity 1 means
    the minimum-weight path is unique; >= 2 means tied.
    """

    dist: int | None
    multiplicity: int

    @property
    def unreachable(self) -> bool:
        return self.dist is None

    @property
    def unique(self) -> bool:
        return self.multiplicity == 1

    @property
    def tied(self) -> bool:
        return self.multiplicity >= 2


@dataclass(frozen=True)
class MinUniqueReport:
    source: int
    statuses: tuple[VertexMin, ...]

    @property
    def min_unique_wrt_s(self) -> bool:
        return not any(st.tied for st in self.statuses)

    def __getitem__(self, v: int) -> VertexMin:
        return self.statuses[v]


@dataclass(frozen=True)
class PathList:
    """Vertex-simple paths in deterministic lexicographic order."""

    paths: tuple[tuple[int, ...], ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)


class _Overflow:
    __slots__ = ()

    def __repr__(self) -> str:
        return "Overflow"


#: Returned by count_paths_capped when the count exceeds the cap.
OVERFLOW = _Overflow()


def reach(g: DiGraph, s: int, t: int) -> bool:
    """True iff a directed path s -> t exists (plain BFS)."""
    g.check_vertex(s, "source")
    g.check_vertex(t, "target")
    if s == t:
        return True
    seen = bytearray(g.n)
    seen[s] = 1
    queue = deque([s])
    succ = g.successors
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w == t:
                return True
            if not seen[w]:
                seen[w] = 1
                queue.append(w)
    return False


def unit_distances(g: DiGraph, s: int) -> list[int | None]:
    """BFS distances from s; None for unreachable vertices."""
    g.check_vertex(s, "source")
    dist: list[int | None] = [None] * g.n
    dist[s] = 0
    queue = deque([s])
    succ = g.successors
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if dist[w] is None:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def weighted_distances(g: DiGraph, w: WeightFn, s: int) -> list[int | None]:
    """Dijkstra distances from s under positive integer weights."""
    g.check_vertex(s, "source")
    if len(w) != g.m:
        raise InputError(f"weight function covers {len(w)} edges, graph has {g.m}")
    dist: list[int | None] = [None] * g.n
    heap: list[tuple[int, int]] = [(0, s)]
    out = g.out_edges
    while heap:
        d, v = heapq.heappop(heap)
        if dist[v] is not None:
            continue
        dist[v] = d
        for eid, u in out[v]:
            if dist[u] is None:
                heapq.heappush(heap, (d + w[eid], u))
    return dist


def min_unique_report(g: DiGraph, w: WeightFn, s: int) -> MinUniqueReport:
    """Exact minimum-weight distance and minimum-path multiplicity for every vertex.

    Positive weights make every shortest walk simple, so multiplicities count
    distinct simple minimum-weight paths.  Counting runs over the shortest-path
    DAG (edges with dist[u] + w = dist[v]) in increasing order of distance.
    """
    dist = weighted_distances(g, w, s)
    order = sorted((d, v) for v, d in enumerate(dist) if d is not None)
    count = [0] * g.n
    count[s] = 1
    inc = g.in_edges
    for d, v in order:
        if v == s:
            continue
        total = 0
        for eid, u in inc[v]:
            du = dist[u]
            if du is not None and du + w[eid] == d:
                total += count[u]
        count[v] = total
    statuses = tuple(VertexMin(dist[v], count[v]) for v in range(g.n))
    return MinUniqueReport(s, statuses)


def is_min_unique_wrt(g: DiGraph, w: WeightFn, s: int) -> bool:
    """Convenience projection: is the minimum-weight path to every vertex unique?"""
    return min_unique_report(g, w, s).min_unique_wrt_s


def enumerate_paths(g: DiGraph, s: int, t: int, cap: int) -> PathList:
    """All vertex-simple s -> t paths, lexicographic by vertex sequence, up to cap."""
    g.check_vertex(s, "source")
    g.check_vertex(t, "target")
    if cap < 1:
        raise InputError(f"cap must be >= 1, got {cap}")
    succ = g.successors
    found: list[tuple[int, ...]] = []
    path = [s]
    on_path = bytearray(g.n)
    on_path[s] = 1

    # Iterative DFS; the iterator stack mirrors `path`.
    stack = [iter(succ[s])]
    if s == t:
        found.append((s,))
    while stack:
        if len(found) > cap:
            break
        it = stack[-1]
        nxt = next(it, None)
        if nxt is None:
            stack.pop()
            on_path[path.pop()] = 0
            continue
        if on_path[nxt]:
            continue
        if nxt == t:
            found.append(tuple(path) + (t,))
            continue
        path.append(nxt)
        on_path[nxt] = 1
        stack.append(iter(succ[nxt]))
    truncated = len(found) > cap
    return PathList(tuple(found[:cap]), truncated)


def count_paths_capped(g: DiGraph, s: int, v: int, cap: int):
    """Exact number of distinct simple s -> v paths if <= cap, else OVERFLOW.

    DAGs are counted by dynamic programming; cyclic graphs fall back to a
    capped DFS enumeration.
    """
    g.check_vertex(s, "source")
    g.check_vertex(v, "target")
    if cap < 1:
        raise InputError(f"cap must be >= 1, got {cap}")
    counts = path_counts_from(g, s)
    if counts is not None:
        c = counts[v]
        return c if c <= cap else OVERFLOW
    listed = enumerate_paths(g, s, v, cap)
    return OVERFLOW if listed.truncated else len(listed)


def path_counts_from(g: DiGraph, s: int) -> list[int] | None:
    """Exact per-vertex counts of s -> v paths on a DAG; None if g is cyclic."""
    order = g.topo_order if g.topo_order is not None else g.acyclic_order()
    if order is None:
        return None
    counts = [0] * g.n
    counts[s] = 1
    succ = g.successors
    for v in order:
        cv = counts[v]
        if cv:
            for u in succ[v]:
                counts[u] += cv
    return counts


@dataclass(frozen=True)
class ExpandedGraph:
    """Unit-length expansion of a weighted graph.

    Original vertices keep their ids; chain vertices introduced for weight-k
    edges are appended after them.  ``origin[v]`` is the original vertex id for
    kept vertices and None for fresh chain vertices.
    """

    graph: DiGraph
    n_original: int
    origin: tuple[int | None, ...]


def expand_weights(g: DiGraph, w: WeightFn) -> ExpandedGraph:
    """Replace each weight-k edge with a k-edge path through k-1 fresh vertices.

    Unit shortest-path distances in the result equal weighted distances in the
    input, path-for-path.
    """
    if len(w) != g.m:
        raise InputError(f"weight function covers {len(w)} edges, graph has {g.m}")
    edges: list[tuple[int, int]] = []
    nxt = g.n
    for eid, (a, b) in enumerate(g.edges):
        k = w[eid]
        cur = a
        for _ in range(k - 1):
            edges.append((cur, nxt))
            cur = nxt
            nxt += 1
        edges.append((cur, b))
    origin: list[int | None] = list(range(g.n)) + [None] * (nxt - g.n)
    return ExpandedGraph(DiGraph(nxt, tuple(edges)), g.n, tuple(origin))
