"""Line-oriented text formats for hypergraphs and digraphs, plus DOT export.

Hypergraph files::

    # comment
    v <name>                 declare a vertex (needed only for isolated ones)
    e <name> <name> ...      hyperedge on two or more distinct names

Digraph files use ``v <name>`` and ``a <src> <dst>``. Names first seen in an
``e`` or ``a`` line are declared in order of appearance.
"""

from __future__ import annotations

from .errors import InputError, ParseError
from .hypercore import Digraph, Hypergraph

RESERVED_PREFIX = "_"


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped.split()


def _check_name(name: str, lineno: int, allow_reserved: bool) -> None:
    if not allow_reserved and name.startswith(RESERVED_PREFIX):
        raise ParseError(
            f"vertex names starting with {RESERVED_PREFIX!r} are reserved for added vertices",
            lineno,
            name,
        )


def parse_hypergraph(text: str) -> Hypergraph:
    order: list[str] = []
    known: set[str] = set()
    edges: list[tuple[str, ...]] = []
    seen_edges: set[frozenset[str]] = set()

    def declare(name: str, lineno: int) -> None:
        _check_name(name, lineno, allow_reserved=False)
        known.add(name)
        order.append(name)

    for lineno, tokens in _lines(text):
        kind, args = tokens[0], tokens[1:]
        if kind == "v":
            if len(args) != 1:
                raise ParseError("'v' takes exactly one vertex name", lineno, " ".join(tokens))
            if args[0] in known:
                raise ParseError("vertex declared twice", lineno, args[0])
            declare(args[0], lineno)
        elif kind == "e":
            if len(args) < 2:
                raise ParseError(
                    "hyperedge needs at least 2 vertices (loops are not allowed)",
                    lineno,
                    " ".join(tokens),
                )
            if len(set(args)) != len(args):
                dup = next(a for i, a in enumerate(args) if a in args[:i])
                raise ParseError("hyperedge repeats a vertex", lineno, dup)
            key = frozenset(args)
            if key in seen_edges:
                raise ParseError("duplicate hyperedge", lineno, " ".join(args))
            seen_edges.add(key)
            for name in args:
                if name not in known:
                    declare(name, lineno)
            edges.append(tuple(args))
        else:
            raise ParseError("unknown directive (expected 'v' or 'e')", lineno, kind)
    return Hypergraph(tuple(order), tuple(edges))


def parse_digraph(text: str) -> Digraph:
    # reserved names are accepted here: witness digraphs carry the added vertices
    order: list[str] = []
    known: set[str] = set()
    arcs: list[tuple[str, str]] = []
    seen_arcs: set[tuple[str, str]] = set()
    for lineno, tokens in _lines(text):
        kind, args = tokens[0], tokens[1:]
        if kind == "v":
            if len(args) != 1:
                raise ParseError("'v' takes exactly one vertex name", lineno, " ".join(tokens))
            if args[0] in known:
                raise ParseError("vertex declared twice", lineno, args[0])
            known.add(args[0])
            order.append(args[0])
        elif kind == "a":
            if len(args) != 2:
                raise ParseError("'a' takes a source and a target", lineno, " ".join(tokens))
            src, dst = args
            if src == dst:
                raise ParseError("self-arcs are not allowed", lineno, src)
            if (src, dst) in seen_arcs:
                raise ParseError("duplicate arc", lineno, f"{src} {dst}")
            seen_arcs.add((src, dst))
            for name in args:
                if name not in known:
                    known.add(name)
                    order.append(name)
            arcs.append((src, dst))
        else:
            raise ParseError("unknown directive (expected 'v' or 'a')", lineno, kind)
    return Digraph(tuple(order), tuple(arcs))


def emit_hypergraph(h: Hypergraph) -> str:
    """Serialise so that re-parsing reproduces the vertex order exactly.

    Edges come out in lexicographic order. A ``v`` line is written just before
    the first edge that would otherwise introduce vertices out of order, and
    trailing isolated vertices follow the edges.
    """
    idx = h.index
    seen: set[str] = set()
    pos = 0
    out: list[str] = []
    for edge in h.edges:
        while True:
            fresh = [v for v in edge if v not in seen]
            expected = list(h.vertices[pos:pos + len(fresh)])
            if fresh == expected:
                break
            v = h.vertices[pos]
            out.append(f"v {v}")
            seen.add(v)
            pos += 1
        seen.update(fresh)
        pos += len(fresh)
        out.append("e " + " ".join(sorted(edge, key=idx.__getitem__)))
    for v in h.vertices[pos:]:
        out.append(f"v {v}")
    return "".join(line + "\n" for line in out)


def emit_digraph(d: Digraph, header: list[str] | None = None) -> str:
    """All ``v`` lines in declaration order, then arcs; ``header`` lines become comments."""
    out = [f"# {line}" for line in header or ()]
    out += [f"v {v}" for v in d.vertices]
    out += [f"a {src} {dst}" for src, dst in d.arcs]
    return "".join(line + "\n" for line in out)


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: Digraph, header: list[str] | None = None) -> str:
    out = [f"// {line}" for line in header or ()]
    out.append("digraph {")
    out += [f"  {_dot_quote(v)};" for v in d.vertices]
    out += [f"  {_dot_quote(s)} -> {_dot_quote(t)};" for s, t in d.arcs]
    out.append("}")
    return "".join(line + "\n" for line in out)


def parse_added_list(value: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in value.split(",") if part.strip())
    if len(set(names)) != len(names):
        raise InputError("--added lists a vertex twice")
    return names
