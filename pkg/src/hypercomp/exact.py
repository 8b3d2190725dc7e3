"""Exact hypercompetition numbers by branch-and-bound over prey assignments.

Why prey assignments suffice
----------------------------
Let D be an acyclic digraph whose competition hypergraph is H plus k isolated
vertices Z. Every hyperedge e equals the in-neighbourhood of some vertex p(e);
distinct edges need distinct vertices, so p is injective. Deleting every arc
except those ``x -> p(e)`` with ``x in e`` keeps D acyclic and leaves exactly
the in-neighbourhoods e at the p(e), empty ones elsewhere, so the competition
hypergraph is unchanged. Each vertex of Z is the target of at most one edge,
and no vertex of Z can usefully be an in-neighbour. Hence

    hk(H) = |E(H)| - max #edges e with p(e) in V(H)

over injective partial maps p with p(e) not in e whose arcs ``e -> p(e)`` form
an acyclic digraph. Edges left unmapped each get a fresh sink.

The search branches on edges (largest first); an edge is either given a prey
vertex that keeps the digraph acyclic or deferred to a fresh sink. Nodes are
pruned with the counting bounds of :mod:`hypercomp.bounds` and a count of
edges that have no usable prey left.

Determinism
-----------
The top-level choices for the first edge are searched as independent branches
with equal shares of the node budget, each starting from the same incumbent,
and their results are reduced in branch order. The outcome does not depend on
whether branches run sequentially or in worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .bounds import best_lower_bound
from .competition import Witness, fresh_names, verify_witness, witness_from_arcs
from .constructions import construct_auto
from .errors import ResourceError
from .hypercore import Hypergraph

DEFAULT_EXACT_BUDGET = 10**7
PROVED = "proved"
BUDGET_EXHAUSTED = "budget-exhausted-upper-bound"

NAIVE_MAX_VERTICES = 4
NAIVE_MAX_EDGES = 3


@dataclass(frozen=True)
class ExactResult:
    hk: int
    witness: Witness
    nodes_explored: int
    status: str
    lower_bound: int

    @property
    def proved(self) -> bool:
        return self.status == PROVED


@dataclass
class _BranchResult:
    best: int | None  # value strictly below the starting incumbent, if found
    prey: tuple[int | None, ...] | None
    nodes: int
    complete: bool


class _Search:
    def __init__(self, h: Hypergraph, lower: int):
        self.n = h.n
        order = sorted(
            range(h.t), key=lambda j: (-len(h.edges[j]), [h.index[v] for v in h.edges[j]])
        )
        self.order = order
        self.masks = [h.edge_masks[j] for j in order]
        self.t = h.t
        self.capacity = h.n - min(len(e) for e in h.edges) if h.edges else h.n
        self.lower = lower

    def root_choices(self) -> list[int | None]:
        em = self.masks[0]
        return [w for w in range(self.n) if not em >> w & 1] + [None]

    def run_branch(self, first: int | None, incumbent: int, budget: int) -> _BranchResult:
        n, t, masks = self.n, self.t, self.masks
        desc = [0] * n
        prey: list[int | None] = [None] * t
        state = {"nodes": 0, "best": incumbent, "found": None, "stop": False, "complete": True}

        def feasible(j: int, w: int, used: int, desc: list[int]) -> bool:
            em = masks[j]
            return not (used >> w & 1) and not (em >> w & 1) and not (desc[w] & em)

        def assign(j: int, w: int, desc: list[int]) -> list[int]:
            em = masks[j]
            reach = (1 << w) | desc[w]
            out = desc[:]
            for x in range(n):
                if em >> x & 1 or desc[x] & em:
                    out[x] |= reach
            return out

        def search(i: int, used: int, assigned: int, deferred: int, desc: list[int]) -> None:
            if state["stop"]:
                return
            if state["nodes"] >= budget:
                state["stop"] = True
                state["complete"] = False
                return
            state["nodes"] += 1
            if i == t:
                if deferred < state["best"]:
                    state["best"] = deferred
                    state["found"] = tuple(prey)
                    if deferred <= self.lower:
                        state["stop"] = True
                return
            rem = t - i
            forced = sum(
                1
                for j in range(i, t)
                if not any(feasible(j, w, used, desc) for w in range(n))
            )
            room = max(0, self.capacity - assigned)
            bound = deferred + forced + max(0, rem - forced - room)
            if bound >= state["best"]:
                return
            for w in range(n):
                if feasible(i, w, used, desc):
                    prey[i] = w
                    search(i + 1, used | 1 << w, assigned + 1, deferred, assign(i, w, desc))
                    prey[i] = None
                    if state["stop"]:
                        return
            search(i + 1, used, assigned, deferred + 1, desc)

        if first is None:
            search(1, 0, 0, 1, desc)
        else:
            prey[0] = first
            search(1, 1 << first, 1, 0, assign(0, first, desc))
        found = state["found"]
        best = state["best"] if found is not None else None
        return _BranchResult(best, found, state["nodes"], state["complete"])

    def witness(self, h: Hypergraph, prey: tuple[int | None, ...]) -> Witness:
        by_edge = {self.order[i]: w for i, w in enumerate(prey)}
        deferred = [j for j in range(h.t) if by_edge[j] is None]
        names = fresh_names(len(deferred), h.vertices)
        sink = dict(zip(deferred, names))
        arcs = []
        for j, e in enumerate(h.edges):
            target = h.vertices[by_edge[j]] if by_edge[j] is not None else sink[j]
            arcs += [(x, target) for x in e]
        return witness_from_arcs(h, arcs, names)


def _run_branch(args) -> _BranchResult:
    h, lower, first, incumbent, budget = args
    return _Search(h, lower).run_branch(first, incumbent, budget)


def exact_hk(h: Hypergraph, budget: int = DEFAULT_EXACT_BUDGET, threads: int = 1) -> ExactResult:
    """Exact hk(H) within ``budget`` search nodes.

    Seeds the incumbent with :func:`construct_auto` and stops as soon as it
    meets the best lower bound. When the budget runs out first, the result
    carries the best verified witness as an upper bound and status
    ``budget-exhausted-upper-bound``.
    """
    lower = best_lower_bound(h).best
    seed = construct_auto(h)
    if seed.k <= lower:
        return ExactResult(seed.k, seed, 0, PROVED, lower)

    search = _Search(h, lower)
    choices = search.root_choices()
    share, extra = divmod(budget, len(choices))
    jobs = [
        (h, lower, first, seed.k, share + (1 if i < extra else 0))
        for i, first in enumerate(choices)
    ]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_branch, jobs))
    else:
        results = []
        for job in jobs:
            res = _run_branch(job)
            results.append(res)
            if res.best is not None and res.best <= lower:
                break

    best, prey, nodes, complete = seed.k, None, 0, True
    for res in results:
        nodes += res.nodes
        if res.best is not None and res.best < best:
            best, prey = res.best, res.prey
        complete = complete and res.complete
        if best <= lower:
            break
    proved = best <= lower or complete
    witness = seed if prey is None else search.witness(h, prey)
    report = verify_witness(witness)
    if not report.ok:  # pragma: no cover - would mean a solver bug
        raise AssertionError(f"exact search produced an invalid witness: {report}")
    return ExactResult(best, witness, nodes, PROVED if proved else BUDGET_EXHAUSTED, lower)


def _naive_acyclic(in_masks: list[int]) -> bool:
    removed = 0
    remaining = set(range(len(in_masks)))
    while remaining:
        ready = [v for v in remaining if in_masks[v] & ~removed == 0]
        if not ready:
            return False
        for v in ready:
            removed |= 1 << v
            remaining.discard(v)
    return True


def exact_hk_naive(h: Hypergraph, max_k: int | None = None) -> int | None:
    """Definitional search: smallest k <= max_k admitting an acyclic digraph D
    on V(H) plus k new vertices with competition hypergraph H plus those vertices.

    Only in-neighbourhoods that are empty or a hyperedge of H are enumerated:
    any other set of size >= 2 would add a foreign hyperedge, and a singleton
    in-neighbourhood can be dropped without changing the competition
    hypergraph or creating a cycle. Restricted to 4 vertices and 3 edges.
    """
    if h.n > NAIVE_MAX_VERTICES or h.t > NAIVE_MAX_EDGES:
        raise ResourceError(
            f"naive search limited to {NAIVE_MAX_VERTICES} vertices and {NAIVE_MAX_EDGES} edges"
        )
    if max_k is None:
        max_k = h.t
    edges = list(h.edge_masks)
    need = set(edges)
    for k in range(max_k + 1):
        size = h.n + k
        options = []
        for v in range(size):
            options.append([0] + [m for m in edges if not m >> v & 1])
        for choice in product(*options):
            if need.issubset(choice) and _naive_acyclic(list(choice)):
                return k
    return None
