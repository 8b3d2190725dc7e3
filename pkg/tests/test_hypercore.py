import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import all_small_hypergraphs, random_hypergraph
from hypercomp import Hypergraph, InputError, ResourceError
from hypercomp.hypercore import (
    Digraph,
    connected_components,
    degree,
    degrees,
    find_cycle_bruteforce,
    has_no_cycle,
    uniformity,
)

TRIANGLE = Hypergraph.from_edges(["ab", "ac", "bc"])


@st.composite
def hypergraphs(draw, max_n=6, max_t=4):
    n = draw(st.integers(0, max_n))
    vs = [chr(97 + i) for i in range(n)]
    if n < 2:
        return Hypergraph(tuple(vs))
    edge = st.lists(st.sampled_from(vs), min_size=2, max_size=n, unique=True)
    edges = draw(st.lists(edge, max_size=max_t))
    return Hypergraph(tuple(vs), tuple(tuple(e) for e in edges))


def test_edges_are_canonical_and_deduplicated():
    h = Hypergraph(("a", "b", "c"), (("b", "a"), ("a", "b"), ("c", "a")))
    assert h.edges == (("a", "b"), ("a", "c"))
    assert h == Hypergraph.from_edges(["ca", "ab"], vertices="abc")


@pytest.mark.parametrize(
    "vertices, edges",
    [(("a", "b"), (("a",),)), (("a", "b"), (("a", "c"),)), (("a", "a"), ()), (("a", "b"), (("a", "a"),))],
)
def test_invalid_hypergraphs_rejected(vertices, edges):
    with pytest.raises(InputError):
        Hypergraph(vertices, edges)


def test_degree_examples():
    assert degree(TRIANGLE, "a") == 2
    assert degree(Hypergraph(("a", "b")), "a") == 0
    h = Hypergraph.from_edges(["abc", "acd"])
    assert degree(h, "a") == 2 and degree(h, "b") == 1
    # recount from the raw edge tuples
    assert sum(1 for e in h.edges if "b" in e) == 1
    with pytest.raises(InputError):
        degree(h, "q")


def test_connected_components_examples():
    assert connected_components(Hypergraph.from_edges(["abc"], vertices="abcd")) == [("a", "b", "c"), ("d",)]
    assert connected_components(TRIANGLE) == [("a", "b", "c")]
    assert connected_components(Hypergraph.from_edges(["ab", "cd"])) == [("a", "b"), ("c", "d")]
    assert connected_components(Hypergraph(())) == []


def test_has_no_cycle_examples():
    assert has_no_cycle(Hypergraph.from_edges(["abc", "def"]))
    assert not has_no_cycle(TRIANGLE)
    assert has_no_cycle(Hypergraph.from_edges(["ab", "bc"]))
    # two edges sharing two vertices already form a cycle
    assert not has_no_cycle(Hypergraph.from_edges(["abc", "abd"]))


def test_bruteforce_cycle_examples():
    cyc = find_cycle_bruteforce(TRIANGLE)
    assert cyc is not None and cyc.is_valid_in(TRIANGLE)
    assert cyc.vertex_sequence[0] == cyc.vertex_sequence[-1]
    assert find_cycle_bruteforce(Hypergraph.from_edges(["ab", "bc"])) is None
    assert find_cycle_bruteforce(Hypergraph.from_edges(["abc"])) is None
    two = Hypergraph.from_edges(["abc", "abd"])
    cyc = find_cycle_bruteforce(two)
    assert cyc is not None and len(cyc.edge_sequence) == 2


def test_bruteforce_size_guard():
    big = Hypergraph.from_edges([(f"x{i}", f"x{i+1}") for i in range(10)])
    with pytest.raises(ResourceError):
        find_cycle_bruteforce(big)


def test_uniformity_examples():
    assert uniformity(TRIANGLE) == 2
    assert uniformity(Hypergraph.from_edges(["abc", "abd"])) == 3
    assert uniformity(Hypergraph.from_edges(["ab", "abc"])) is None
    assert uniformity(Hypergraph(("a",))) is None


def test_empty_hypergraph_counts():
    h = Hypergraph(())
    assert h.n == h.t == 0
    assert has_no_cycle(h)
    assert find_cycle_bruteforce(h) is None
    assert degrees(h) == {}


def test_cycle_formula_matches_bruteforce_on_enumeration():
    for h in all_small_hypergraphs(4, 4):
        assert has_no_cycle(h) == (find_cycle_bruteforce(h) is None), h


def test_cycle_formula_matches_bruteforce_random():
    rng = random.Random(2024)
    for _ in range(500):
        h = random_hypergraph(rng, 6, 4)
        found = find_cycle_bruteforce(h)
        assert has_no_cycle(h) == (found is None), h
        if found is not None:
            assert found.is_valid_in(h)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_handshake_identity(h):
    assert sum(degrees(h).values()) == sum(len(e) for e in h.edges)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_components_partition_vertices(h):
    blocks = connected_components(h)
    flat = [v for b in blocks for v in b]
    assert sorted(flat) == sorted(h.vertices)
    assert len(flat) == len(set(flat))
    # every edge lives inside one block
    where = {v: i for i, b in enumerate(blocks) for v in b}
    for e in h.edges:
        assert len({where[v] for v in e}) == 1


def test_digraph_validation():
    with pytest.raises(InputError):
        Digraph(("a",), (("a", "a"),))
    with pytest.raises(InputError):
        Digraph(("a",), (("a", "b"),))
    d = Digraph.from_arcs([("b", "a"), ("a", "c")])
    assert d.vertices == ("b", "a", "c")
    assert d.in_neighborhood("a") == {"b"}
    assert d.in_neighborhood("b") == frozenset()
