"""Hypergraph and digraph value types plus structural queries.

Vertices are opaque strings. Each type assigns a dense index in declaration
order and uses Python ints as bitsets internally; hyperedges are kept as
member tuples sorted by that index, and the edge tuple itself is sorted
lexicographically by index, so equal hypergraphs compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, ResourceError

# size guard for the exhaustive cycle search
BRUTEFORCE_MAX_VERTICES = 10
BRUTEFORCE_MAX_EDGES = 8


def _check_unique(names: Sequence[str], what: str) -> None:
    seen: set[str] = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise InputError(f"{what} ids must be non-empty strings, got {name!r}")
        if name in seen:
            raise InputError(f"duplicate {what} {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class Hypergraph:
    """A loopless hypergraph, possibly with isolated vertices.

    ``edges`` may be given in any order and with members in any order; they
    are canonicalised on construction and duplicates collapse.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, ...], ...] = ()

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        _check_unique(vertices, "vertex")
        index = {v: i for i, v in enumerate(vertices)}
        canon = set()
        for edge in self.edges:
            members = set(edge)
            if len(members) != len(tuple(edge)):
                raise InputError(f"hyperedge {tuple(edge)!r} repeats a vertex")
            if len(members) < 2:
                raise InputError(
                    f"hyperedge {tuple(edge)!r} has fewer than 2 vertices (loops are not allowed)"
                )
            unknown = [v for v in edge if v not in index]
            if unknown:
                raise InputError(f"hyperedge {tuple(edge)!r} uses undeclared vertex {unknown[0]!r}")
            canon.add(tuple(sorted(members, key=index.__getitem__)))
        edges = tuple(sorted(canon, key=lambda e: [index[v] for v in e]))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[str]], vertices: Iterable[str] = ()) -> Hypergraph:
        """Build from edges, auto-declaring unseen vertex names in order of first appearance."""
        order = list(dict.fromkeys(vertices))
        known = set(order)
        edge_list = []
        for edge in edges:
            edge = tuple(edge)
            edge_list.append(edge)
            for v in edge:
                if v not in known:
                    known.add(v)
                    order.append(v)
        return cls(tuple(order), tuple(edge_list))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        idx = self.index
        return tuple(sum(1 << idx[v] for v in e) for e in self.edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def t(self) -> int:
        return len(self.edges)

    def mask(self, names: Iterable[str]) -> int:
        idx = self.index
        return sum(1 << idx[v] for v in set(names))

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.vertices) if mask >> i & 1)

    def has_edge(self, edge: Iterable[str]) -> bool:
        members = set(edge)
        if not members <= self.index.keys():
            return False
        return self.mask(members) in set(self.edge_masks)

    def isolated_vertices(self) -> tuple[str, ...]:
        covered = 0
        for m in self.edge_masks:
            covered |= m
        return tuple(v for i, v in enumerate(self.vertices) if not covered >> i & 1)

    def induced(self, keep: Iterable[str]) -> Hypergraph:
        """Subhypergraph induced by ``keep``: those vertices and every edge inside them."""
        keep_set = set(keep)
        unknown = keep_set - self.index.keys()
        if unknown:
            raise InputError(f"unknown vertex {sorted(unknown)[0]!r}")
        vertices = tuple(v for v in self.vertices if v in keep_set)
        return Hypergraph(vertices, tuple(e for e in self.edges if keep_set.issuperset(e)))

    def with_edges(self, edges: Iterable[Sequence[str]]) -> Hypergraph:
        """Same vertex set with a different edge set (spanning subhypergraph)."""
        return Hypergraph(self.vertices, tuple(edges))

    def __str__(self) -> str:
        edges = ", ".join("{" + ",".join(e) + "}" for e in self.edges)
        return f"Hypergraph(V={list(self.vertices)}, E=[{edges}])"


@dataclass(frozen=True)
class Digraph:
    """A loop-free digraph; arcs are canonicalised by (source, target) index."""

    vertices: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        _check_unique(vertices, "vertex")
        index = {v: i for i, v in enumerate(vertices)}
        arcs = set()
        for arc in self.arcs:
            src, dst = arc
            for end in (src, dst):
                if end not in index:
                    raise InputError(f"arc ({src!r}, {dst!r}) uses undeclared vertex {end!r}")
            if src == dst:
                raise InputError(f"self-arc on {src!r} is not allowed")
            arcs.add((src, dst))
        ordered = tuple(sorted(arcs, key=lambda a: (index[a[0]], index[a[1]])))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", ordered)

    @classmethod
    def from_arcs(cls, arcs: Iterable[tuple[str, str]], vertices: Iterable[str] = ()) -> Digraph:
        order = list(dict.fromkeys(vertices))
        known = set(order)
        arc_list = []
        for src, dst in arcs:
            arc_list.append((src, dst))
            for v in (src, dst):
                if v not in known:
                    known.add(v)
                    order.append(v)
        return cls(tuple(order), tuple(arc_list))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _in_sets(self) -> dict[str, frozenset[str]]:
        acc: dict[str, set[str]] = {v: set() for v in self.vertices}
        for src, dst in self.arcs:
            acc[dst].add(src)
        return {v: frozenset(s) for v, s in acc.items()}

    @cached_property
    def successors(self) -> dict[str, tuple[str, ...]]:
        acc: dict[str, list[str]] = {v: [] for v in self.vertices}
        for src, dst in self.arcs:
            acc[src].append(dst)
        return {v: tuple(s) for v, s in acc.items()}

    def in_neighborhood(self, v: str) -> frozenset[str]:
        """Set of vertices with an arc into ``v``."""
        try:
            return self._in_sets[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def sorted_names(self, names: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(names, key=self.index.__getitem__))


@dataclass(frozen=True)
class CyclePath:
    """A hypergraph cycle ``v0 v1 ... vk`` with ``v0 == vk`` and k distinct witnessing edges."""

    vertex_sequence: tuple[str, ...]
    edge_sequence: tuple[tuple[str, ...], ...]

    def is_valid_in(self, h: Hypergraph) -> bool:
        vs, es = self.vertex_sequence, self.edge_sequence
        k = len(es)
        if k < 2 or len(vs) != k + 1 or vs[0] != vs[-1]:
            return False
        if len(set(vs[:-1])) != k or len(set(es)) != k:
            return False
        return all(
            h.has_edge(e) and vs[i] in e and vs[i + 1] in e for i, e in enumerate(es)
        )


def degree(h: Hypergraph, v: str) -> int:
    """Number of hyperedges containing ``v``."""
    if v not in h.index:
        raise InputError(f"unknown vertex {v!r}")
    bit = 1 << h.index[v]
    return sum(1 for m in h.edge_masks if m & bit)


def degrees(h: Hypergraph) -> dict[str, int]:
    counts = dict.fromkeys(h.vertices, 0)
    for e in h.edges:
        for v in e:
            counts[v] += 1
    return counts


def connected_components(h: Hypergraph) -> list[tuple[str, ...]]:
    """Vertex partition into connected components.

    Blocks list their vertices in declaration order and are ordered by their
    first vertex; isolated vertices form singleton blocks.
    """
    parent = list(range(h.n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    idx = h.index
    for e in h.edges:
        root = find(idx[e[0]])
        for v in e[1:]:
            other = find(idx[v])
            if other != root:
                parent[max(root, other)] = min(root, other)
                root = min(root, other)

    blocks: dict[int, list[str]] = {}
    for i, v in enumerate(h.vertices):
        blocks.setdefault(find(i), []).append(v)
    return [tuple(b) for b in blocks.values()]


def component_subhypergraphs(h: Hypergraph) -> list[Hypergraph]:
    return [h.induced(block) for block in connected_components(h)]


def is_connected(h: Hypergraph) -> bool:
    return len(connected_components(h)) <= 1


def uniformity(h: Hypergraph) -> int | None:
    """Common edge size, or None when there are no edges or sizes differ."""
    sizes = {len(e) for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def has_no_cycle(h: Hypergraph) -> bool:
    """Acyclicity by the counting identity: sum(|e| - 1) == |V| - #components."""
    total = sum(len(e) - 1 for e in h.edges)
    return total == h.n - len(connected_components(h))


def find_cycle_bruteforce(h: Hypergraph) -> CyclePath | None:
    """Exhaustive search for a cycle straight from the path/cycle definition.

    A cycle needs at least two distinct edges. Intended as a test oracle only;
    raises ResourceError above 10 vertices or 8 edges.
    """
    if h.n > BRUTEFORCE_MAX_VERTICES or h.t > BRUTEFORCE_MAX_EDGES:
        raise ResourceError(
            f"exhaustive cycle search limited to {BRUTEFORCE_MAX_VERTICES} vertices and "
            f"{BRUTEFORCE_MAX_EDGES} edges (got {h.n}, {h.t})"
        )
    edges = [frozenset(e) for e in h.edges]

    def extend(path: list[str], used: list[int]) -> CyclePath | None:
        last, start = path[-1], path[0]
        if len(path) >= 2:
            for j, e in enumerate(edges):
                if j not in used and last in e and start in e:
                    return CyclePath(
                        tuple(path) + (start,),
                        tuple(h.edges[i] for i in used + [j]),
                    )
        for y in h.vertices:
            if y in path:
                continue
            for j, e in enumerate(edges):
                if j not in used and last in e and y in e:
                    found = extend(path + [y], used + [j])
                    if found is not None:
                        return found
        return None

    for v in h.vertices:
        found = extend([v], [])
        if found is not None:
            return found
    return None
