"""Explicit configuration-graph model of nondeterministic machines and transducers.

A machine instance is represented extensionally: an acyclic configuration
graph with a start vertex, halting sinks partitioned into accept/reject, and
(for transducers) a non-negative output increment per edge.  A computation is
a maximal path from the start; its output is the sum of increments along it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import DiGraph, path_counts_from


@dataclass(frozen=True)
class ConfigMachine:
    graph: DiGraph
    start: int
    accept: frozenset[int]
    reject: frozenset[int]
    output_inc: tuple[int, ...] | None = None
    poly_bound: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "accept", frozenset(self.accept))
        object.__setattr__(self, "reject", frozenset(self.reject))
        if self.output_inc is not None:
            object.__setattr__(self, "output_inc", tuple(int(x) for x in self.output_inc))
        g = self.graph
        g.check_vertex(self.start, "start")
        if not g.is_acyclic():
            raise InputError("configuration graph must be acyclic")
        if self.accept & self.reject:
            raise InputError("accept and reject sets overlap")
        sinks = {v for v in range(g.n) if not g.successors[v]}
        halting = self.accept | self.reject
        if halting != sinks:
            raise InputError(
                f"accept/reject must partition the sinks; sinks={sorted(sinks)}, "
                f"classified={sorted(halting)}"
            )
        if self.output_inc is not None:
            if len(self.output_inc) != g.m:
                raise InputError("output_inc must assign one increment per edge")
            if any(x < 0 for x in self.output_inc):
                raise InputError("output increments must be non-negative")
            if self.poly_bound is not None:
                worst = _max_accepting_output(self)
                if worst is not None and worst > self.poly_bound:
                    raise InputError(
                        f"accepting output {worst} exceeds declared bound {self.poly_bound}"
                    )

    @property
    def transducer(self) -> bool:
        return self.output_inc is not None


@dataclass(frozen=True)
class ClassFlags:
    """Executable machine-class predicates, all by exact path counting."""

    unambiguous: bool
    reach_unambiguous: bool
    weakly_unambiguous: bool
    few: bool
    reach_few: bool


def graph_of(m: ConfigMachine) -> tuple[DiGraph, int, frozenset[int]]:
    """Projection (graph, start, accepting sinks) so graph oracles run on machines."""
    return m.graph, m.start, m.accept


def _start_counts(m: ConfigMachine) -> list[int]:
    counts = path_counts_from(m.graph, m.start)
    assert counts is not None  # graph validated acyclic
    return counts


def acc(m: ConfigMachine) -> int:
    """Number of accepting computations (exact)."""
    counts = _start_counts(m)
    return sum(counts[v] for v in m.accept)


def rej(m: ConfigMachine) -> int:
    """Number of rejecting computations (exact)."""
    counts = _start_counts(m)
    return sum(counts[v] for v in m.reject)


def gap(m: ConfigMachine) -> int:
    return acc(m) - rej(m)


def classify(m: ConfigMachine, p: int) -> ClassFlags:
    """Class flags under the polynomial cap value p.

    reach-unambiguous: every configuration has at most one path from the start;
    weakly unambiguous: every accepting configuration does; unambiguous: at
    most one accepting computation; the `few` variants relax 1 to p.
    """
    if p < 1:
        raise InputError(f"path-count cap must be >= 1, got {p}")
    counts = _start_counts(m)
    accepting = acc(m)
    return ClassFlags(
        unambiguous=accepting <= 1,
        reach_unambiguous=all(c <= 1 for c in counts),
        weakly_unambiguous=all(counts[v] <= 1 for v in m.accept),
        few=accepting <= p,
        reach_few=all(c <= p for c in counts),
    )


def _output_table(m: ConfigMachine) -> list[dict[int, int]]:
    """Per-vertex map {total output -> number of start paths with that output}."""
    if m.output_inc is None:
        raise InputError("machine has no output increments")
    order = m.graph.topo_order or m.graph.acyclic_order()
    table: list[dict[int, int]] = [{} for _ in range(m.graph.n)]
    table[m.start][0] = 1
    inc = m.output_inc
    for v in order:
        tv = table[v]
        if not tv:
            continue
        for eid, u in m.graph.out_edges[v]:
            tu = table[u]
            d = inc[eid]
            for o, c in tv.items():
                tu[o + d] = tu.get(o + d, 0) + c
    return table


def _max_accepting_output(m: ConfigMachine) -> int | None:
    table = _output_table(m)
    outs = [o for v in m.accept for o in table[v]]
    return max(outs, default=None)


def opt_value(m: ConfigMachine) -> int | None:
    """Minimum total output over accepting computations; None when all reject."""
    table = _output_table(m)
    outs = [o for v in m.accept for o in table[v]]
    return min(outs, default=None)


def opt_multiplicity(m: ConfigMachine) -> int:
    """Number of accepting computations attaining the optimum (0 when all reject)."""
    table = _output_table(m)
    best: int | None = None
    count = 0
    for v in m.accept:
        for o, c in table[v].items():
            if best is None or o < best:
                best, count = o, c
            elif o == best:
                count += c
    return count


def is_min_unique_transducer(m: ConfigMachine) -> bool:
    """True iff the machine rejects on all paths or attains its optimum exactly once."""
    return opt_multiplicity(m) <= 1
