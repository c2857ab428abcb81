"""Named graphs and the hexagonal-cylinder near-planar family."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .embedding import Embedding, euler_characteristic
from .errors import InvalidParameter
from .graph import Graph
from .planarity import NestedCertificate, NonPlanar, planar_embedding


def k33() -> Graph:
    """K_{3,3} with parts {1,2,3} and {4,5,6} (0-based: {0,1,2}, {3,4,5})."""
    return Graph(6, tuple((u, v) for u in range(3) for v in range(3, 6)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, tuple((u, a + v) for u in range(a) for v in range(b)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def prism(k: int) -> Graph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, tuple(edges))


def cube() -> Graph:
    return Graph(8, tuple((u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)))


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(edges))


def wagner() -> Graph:
    """Mobius ladder on 8 vertices."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return Graph(8, tuple(edges))


def heawood() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph(14, tuple(edges))


@dataclass(frozen=True)
class Instance:
    graph: Graph
    x: int
    y: int
    planarizing_edge: int
    reference_planar: Embedding
    reference_rings: NestedCertificate
    reference_toroidal: Embedding
    rings: int


def _ring_pattern(inner: int, outer: int) -> list[str]:
    pattern = []
    i = o = 0
    while i < inner or o < outer:
        if i < inner:
            pattern.append("I")
            i += 1
        if o < outer:
            pattern.append("O")
            o += 1
    return pattern


def hex_cylinder_graph(r: int) -> tuple[Graph, int, int, list[list[int]]]:
    """Graph, terminals and rings of the ``r``-ring cylinder (order ``6r``).

    Rings alternate inward and outward attachments; inner rings are
    hexagons, the two end rings are pentagons (a square when ``r == 1``)
    because each terminal spends one of its three edges on ``xy``.
    """
    if r < 1:
        raise InvalidParameter("hex_cylinder needs at least one ring")
    x = 0
    patterns = [_ring_pattern(2 if i == 0 else 3, 2 if i == r - 1 else 3) for i in range(r)]
    rings: list[list[int]] = []
    nxt = 1
    for pat in patterns:
        rings.append(list(range(nxt, nxt + len(pat))))
        nxt += len(pat)
    y = nxt
    n = nxt + 1
    edges: list[tuple[int, int]] = []
    for ring in rings:
        edges += [(ring[j], ring[(j + 1) % len(ring)]) for j in range(len(ring))]
    for i in range(r - 1):
        outs = [v for v, p in zip(rings[i], patterns[i]) if p == "O"]
        ins = [v for v, p in zip(rings[i + 1], patterns[i + 1]) if p == "I"]
        edges += list(zip(outs, ins))
    edges += [(x, v) for v, p in zip(rings[0], patterns[0]) if p == "I"]
    edges += [(v, y) for v, p in zip(rings[-1], patterns[-1]) if p == "O"]
    edges.append((x, y))
    return Graph(n, tuple(edges)), x, y, rings


def _splice_edge(planar: Embedding, full: Graph, k: int) -> Embedding:
    """Add edge ``k`` of ``full`` to ``planar`` through the first face at each end."""
    u, v = full.edges[k]
    faces = planar.faces
    rot = [list(r) for r in planar.rotation]
    for end, dart in ((u, 2 * k), (v, 2 * k + 1)):
        face = next(f for f in faces if end in f.vertices)
        # the corner of this face at `end` sits right after the dart we arrive on
        i = face.vertex_sequence.index(end)
        arrive = face.darts[i - 1] ^ 1
        at = rot[end]
        at.insert(at.index(arrive) + 1, dart)
    return Embedding.orientable(full, rot)


def hex_cylinder(r: int) -> Instance:
    g, x, y, rings = hex_cylinder_graph(r)
    k = g.m - 1
    base = g.delete_edge(k)
    planar = planar_embedding(base)
    if planar is NonPlanar:
        raise AssertionError("cylinder minus xy must be planar")
    toroidal = _splice_edge(planar, g, k)
    if euler_characteristic(toroidal) != 0:
        raise AssertionError("spliced embedding is not toroidal")
    cert = NestedCertificate(x, y, tuple(tuple(ring) for ring in rings))
    return Instance(g, x, y, k, planar, cert, toroidal, r)
