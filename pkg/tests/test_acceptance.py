"""Exit criteria. Each test carries its criterion label and time limit; the
terminal summary prints one PASS/FAIL line per criterion."""

import io
import random
import time
from itertools import combinations
from math import comb

import pytest

from corpus import (
    all_small_hypergraphs,
    elimination_orderings_bruteforce,
    hk_by_vertex_orders,
    random_acyclic_uniform,
    random_connected_graph,
    random_hypergraph,
)
from hypercomp import (
    Hypergraph,
    best_lower_bound,
    construct_auto,
    exact_hk,
    exact_hk_naive,
    find_cycle_bruteforce,
    has_no_cycle,
    verify_witness,
    witness_acyclic_uniform,
    witness_complete_uniform,
    witness_connected_graph,
)
from hypercomp.cli import METHODS, main
from hypercomp.constructions import complete_uniform
from hypercomp.formats import emit_hypergraph, parse_hypergraph
from hypercomp.hypercore import component_subhypergraphs, degrees, is_connected, uniformity

pytestmark = pytest.mark.acceptance

ENUMERATION = list(all_small_hypergraphs(4, 3))


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def cli(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def acyclic_uniform_corpus():
    rng = random.Random(2718)
    out = []
    while len(out) < 40:
        r = 3 if len(out) % 2 == 0 else 4
        h = random_acyclic_uniform(rng, r, rng.randint(1, 4))
        if h.n <= 13:
            out.append(h)
    return out


def test_c1_triangle(criterion, tmp_path):
    criterion("C1 triangle: exact hk = 2, bounds best = 2, < 1 s")
    path = tmp_path / "triangle.txt"
    path.write_text("e v1 v2\ne v1 v3\ne v2 v3\n")
    with Timer() as t:
        code, out = cli("exact", path)
        assert code == 0 and out.startswith("# hk=2 status=proved")
        code, out = cli("bounds", path)
        assert code == 0 and "best=2" in out
        tri = parse_hypergraph(path.read_text())
        assert exact_hk(tri).hk == 2 and best_lower_bound(tri).best == 2
    assert t.elapsed < 1.0


def test_c2_connected_graphs(criterion):
    criterion("C2 connected graphs: exact hk = |E|-|V|+2 on >= 50 graphs, < 60 s")
    rng = random.Random(1618)
    graphs = [random_connected_graph(rng, rng.randint(3, 7)) for _ in range(60)]
    with Timer() as t:
        for g in graphs:
            formula = g.t - g.n + 2
            res = exact_hk(g)
            assert res.proved and res.hk == formula, g
            w = witness_connected_graph(g)
            assert w.k == formula and verify_witness(w).ok
    assert t.elapsed < 60
    # independent confirmation of the exact value on the smaller graphs
    for g in graphs:
        if g.n <= 6:
            assert hk_by_vertex_orders(g) == g.t - g.n + 2, g


def test_c3_complete_uniform(criterion):
    criterion("C3 complete uniform: k = C(n,r)-n+r for 2<=r<=n<=7 (< 5 s); exact on 5 cases (< 120 s)")
    with Timer() as t:
        for n in range(2, 8):
            for r in range(2, n + 1):
                w = witness_complete_uniform(n, r)
                assert w.k == comb(n, r) - n + r, (n, r)
                assert verify_witness(w).ok, (n, r)
    assert t.elapsed < 5
    with Timer() as t:
        for n, r in [(4, 2), (4, 3), (5, 4), (5, 5), (5, 3)]:
            res = exact_hk(complete_uniform(n, r), budget=10**7)
            expected = comb(n, r) - n + r
            if res.proved:
                assert res.hk == expected, (n, r)
            else:
                # the budget ran out: the verified upper bound and the counting
                # lower bound must still pin the value
                assert res.hk == res.lower_bound == expected, (n, r)
    assert t.elapsed < 120


def test_c4_acyclic_uniform(criterion):
    criterion("C4 acyclic 3/4-uniform: witness k = 1 and exact hk = 1 (|V| <= 10), < 60 s")
    corpus = acyclic_uniform_corpus()
    assert len(corpus) >= 30
    exact_checked = 0
    with Timer() as t:
        for h in corpus:
            assert uniformity(h) in (3, 4) and not h.isolated_vertices()
            assert sum(len(e) - 1 for e in h.edges) == h.n - len(component_subhypergraphs(h))
            w = witness_acyclic_uniform(h)
            assert w.k == 1 and verify_witness(w).ok, h
            if h.n <= 10:
                res = exact_hk(h)
                assert res.proved and res.hk == 1
                exact_checked += 1
    assert t.elapsed < 60
    assert exact_checked >= 10


def test_c5_bounds_sandwich(criterion):
    criterion("C5 sandwich: lower bound <= exact <= construct_auto, zero violations, < 120 s")
    rng = random.Random(3141)
    corpus = ENUMERATION + [random_hypergraph(rng, 6, 6) for _ in range(250)]
    violations = []
    with Timer() as t:
        for h in corpus:
            low = best_lower_bound(h).best
            res = exact_hk(h)
            auto = construct_auto(h)
            assert res.proved
            if not (low <= res.hk <= auto.k and verify_witness(auto).ok):
                violations.append(h)
    assert violations == []
    assert t.elapsed < 120


def test_c6_oracle_equivalence(criterion):
    criterion("C6 oracle: exact_hk == exact_hk_naive on the <=4-vertex/<=3-edge enumeration, < 300 s")
    discrepancies = []
    with Timer() as t:
        for h in ENUMERATION:
            if exact_hk(h).hk != exact_hk_naive(h):
                discrepancies.append(h)
    assert discrepancies == []
    assert len(ENUMERATION) == 251
    assert t.elapsed < 300


def test_c7_cycle_detection(criterion):
    criterion("C7 cycles: counting formula agrees with exhaustive search, zero discrepancies")
    rng = random.Random(1414)
    corpus = ENUMERATION + [random_hypergraph(rng, 6, 4) for _ in range(500)]
    bad = [h for h in corpus if has_no_cycle(h) != (find_cycle_bruteforce(h) is None)]
    assert bad == []


def test_c8_degree_count(criterion):
    criterion("C8 degree count: q >= (r-2)t + 2 on connected acyclic r-uniform instances, r >= 3")
    rng = random.Random(577)
    pool = acyclic_uniform_corpus() + [random_acyclic_uniform(rng, rng.choice([3, 4, 5]), rng.randint(1, 6)) for _ in range(200)]
    pool += [h for h in ENUMERATION if h.edges]
    instances = []
    for h in pool:
        for comp in component_subhypergraphs(h):
            r = uniformity(comp)
            if r is not None and r >= 3 and has_no_cycle(comp) and is_connected(comp):
                instances.append((comp, r))
    assert len(instances) >= 100
    for comp, r in instances:
        q = sum(1 for d in degrees(comp).values() if d == 1)
        assert q >= (r - 2) * comp.t + 2, comp


def _eligible(method, h):
    r = uniformity(h)
    deg = degrees(h)
    if method in ("auto", "fallback"):
        return True
    if method == "graph":
        return r == 2 and h.n >= 2 and is_connected(h)
    if method == "degree-one":
        return bool(h.edges) and 0 not in deg.values() and sum(d == 1 for d in deg.values()) >= h.t - 1
    if method == "acyclic-uniform":
        return r is not None and r >= 3 and has_no_cycle(h) and not h.isolated_vertices()
    if method == "elimination":
        return (
            r is not None and r < h.n and is_connected(h) and h.t == h.n - r + 1
            and bool(elimination_orderings_bruteforce(h, r))
        )
    if method == "extra-edges":
        if r is None or not r < h.n or not is_connected(h):
            return False
        return any(
            elimination_orderings_bruteforce(h.with_edges(sub), r)
            for sub in combinations(h.edges, h.n - r + 1)
        )
    raise AssertionError(method)


def test_c9_cli_contract(criterion, tmp_path):
    criterion("C9 CLI: construct->verify round trip, parse/emit identity, byte-deterministic output")
    rng = random.Random(60221)
    corpus = [h for h in ENUMERATION if h.n >= 1]
    corpus += [random_connected_graph(rng, rng.randint(2, 6)) for _ in range(30)]
    corpus += acyclic_uniform_corpus()[:15]
    corpus += [random_hypergraph(rng, 6, 5, min_n=3) for _ in range(30)]
    corpus += [complete_uniform(5, 3), complete_uniform(4, 2)]
    hfile, wfile = tmp_path / "h.txt", tmp_path / "w.txt"
    round_trips = 0
    for h in corpus:
        hfile.write_text(emit_hypergraph(h))
        for method in METHODS:
            if method == "complete-uniform":
                continue
            eligible = _eligible(method, h)
            code, out = cli("construct", hfile, "--method", method)
            if not eligible:
                assert code == 2, (method, h)
                continue
            assert code == 0, (method, h)
            assert cli("construct", hfile, "--method", method) == (code, out)
            wfile.write_text(out)
            verdict = cli("verify", hfile, wfile)
            assert verdict[0] == 0, (method, h, verdict)
            round_trips += 1
    for n in range(2, 8):
        for r in range(2, n + 1):
            code, out = cli("construct", "--method", "complete-uniform", "--n", n, "--r", r)
            assert code == 0
            hfile.write_text(emit_hypergraph(complete_uniform(n, r)))
            wfile.write_text(out)
            assert cli("verify", hfile, wfile)[0] == 0
            round_trips += 1
    assert round_trips >= 500

    for _ in range(100):
        h = random_hypergraph(rng, 8, 7, min_n=0)
        order = list(h.vertices)
        rng.shuffle(order)
        text = emit_hypergraph(Hypergraph(tuple(order), h.edges))
        once = parse_hypergraph(text)
        assert parse_hypergraph(emit_hypergraph(once)) == once
        assert emit_hypergraph(once) == text

    for h in corpus[::7]:
        hfile.write_text(emit_hypergraph(h))
        for argv in (["info", hfile], ["bounds", hfile, "--json"], ["exact", hfile, "--json"], ["exact", hfile, "--dot"]):
            assert cli(*argv) == cli(*argv)
