"""Competition hypergraphs, acyclic orderings and witness verification."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError
from .hypercore import Digraph, Hypergraph


@dataclass(frozen=True)
class Witness:
    """An acyclic digraph certifying ``hk(base) <= len(added)``.

    The competition hypergraph of ``digraph`` should be ``base`` together with
    the ``added`` vertices as isolated vertices. Use :func:`verify_witness` to
    check that claim; constructing a Witness does not.
    """

    digraph: Digraph
    base: Hypergraph
    added: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.added)


@dataclass(frozen=True)
class Failure:
    kind: str  # vertex-mismatch | cycle | extra-edge | missing-edge
    value: tuple[str, ...]

    def __str__(self) -> str:
        if self.kind == "cycle":
            return "cycle " + " ".join(self.value)
        if self.kind == "vertex-mismatch":
            return f"vertex-mismatch {self.value[0]}"
        return f"{self.kind} {{{','.join(self.value)}}}"


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    failure: Failure | None = None

    def __str__(self) -> str:
        return "OK" if self.ok else str(self.failure)


def fresh_names(count: int, taken: Iterable[str], prefix: str = "_z") -> list[str]:
    """``_z1, _z2, ...`` skipping anything already in ``taken``."""
    taken = set(taken)
    names: list[str] = []
    i = 1
    while len(names) < count:
        name = f"{prefix}{i}"
        if name not in taken:
            names.append(name)
        i += 1
    return names


def competition_hypergraph(d: Digraph) -> Hypergraph:
    """Hypergraph on V(D) whose edges are the in-neighbourhoods of size >= 2."""
    edges = {d.in_neighborhood(v) for v in d.vertices}
    return Hypergraph(d.vertices, tuple(tuple(e) for e in edges if len(e) >= 2))


def acyclic_ordering(d: Digraph) -> tuple[str, ...] | None:
    """Lexicographically least topological order (by declaration index), or None on a cycle."""
    idx = d.index
    indeg = {v: len(d.in_neighborhood(v)) for v in d.vertices}
    heap = [idx[v] for v in d.vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order: list[str] = []
    while heap:
        v = d.vertices[heapq.heappop(heap)]
        order.append(v)
        for w in d.successors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, idx[w])
    return tuple(order) if len(order) == len(d.vertices) else None


def find_directed_cycle(d: Digraph) -> tuple[str, ...] | None:
    """A directed cycle as ``v0 v1 ... v0``, found by DFS in declaration order."""
    white, grey, black = 0, 1, 2
    color = dict.fromkeys(d.vertices, white)
    for root in d.vertices:
        if color[root] != white:
            continue
        stack = [(root, iter(d.successors[root]))]
        path = [root]
        color[root] = grey
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == grey:
                    start = path.index(w)
                    return tuple(path[start:]) + (w,)
                if color[w] == white:
                    color[w] = grey
                    stack.append((w, iter(d.successors[w])))
                    path.append(w)
                    break
            else:
                color[v] = black
                stack.pop()
                path.pop()
    return None


def verify_witness(w: Witness) -> VerificationReport:
    """Check every Witness invariant, reporting the first violation found.

    Order of checks: vertex sets, acyclicity, missing edges, extra edges.
    """
    d, base = w.digraph, w.base
    added = tuple(w.added)
    base_set = set(base.vertices)
    for z in added:
        if z in base_set:
            return VerificationReport(False, Failure("vertex-mismatch", (z,)))
    if len(set(added)) != len(added):
        dup = next(z for i, z in enumerate(added) if z in added[:i])
        return VerificationReport(False, Failure("vertex-mismatch", (dup,)))
    expected = base_set | set(added)
    for v in d.vertices:
        if v not in expected:
            return VerificationReport(False, Failure("vertex-mismatch", (v,)))
    d_set = set(d.vertices)
    for v in base.vertices + added:
        if v not in d_set:
            return VerificationReport(False, Failure("vertex-mismatch", (v,)))

    cycle = find_directed_cycle(d)
    if cycle is not None:
        return VerificationReport(False, Failure("cycle", cycle))

    ch = competition_hypergraph(d)
    base_edges = {frozenset(e) for e in base.edges}
    ch_edges = {frozenset(e) for e in ch.edges}
    for e in base.edges:
        if frozenset(e) not in ch_edges:
            return VerificationReport(False, Failure("missing-edge", e))
    for e in ch.edges:
        if frozenset(e) not in base_edges:
            return VerificationReport(False, Failure("extra-edge", e))
    return VerificationReport(True)


def default_added(h: Hypergraph, d: Digraph) -> tuple[str, ...]:
    """Digraph vertices that are not hypergraph vertices, in digraph order."""
    return tuple(v for v in d.vertices if v not in h.index)


def witness_from_arcs(
    base: Hypergraph, arcs: Iterable[tuple[str, str]], added: Iterable[str]
) -> Witness:
    """Assemble a Witness whose digraph has vertices V(base) followed by ``added``."""
    added = tuple(added)
    if set(added) & set(base.vertices):
        raise InputError("added vertices must be new")
    return Witness(Digraph(base.vertices + added, tuple(arcs)), base, added)
