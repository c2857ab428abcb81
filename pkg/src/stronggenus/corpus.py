"""Graph corpora for property checks: all small cubic graphs, random plane graphs."""

from __future__ import annotations

import itertools

import numpy as np
import pynauty

from . import families
from .graph import Graph


def certificate(g: Graph) -> bytes:
    """Canonical certificate (nauty) of a simple graph."""
    adj = {v: [w for w in g.neighbor_sets[v]] for v in range(g.n)}
    return pynauty.certificate(pynauty.Graph(g.n, adjacency_dict=adj))


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected simple cubic graphs of order ``n`` up to isomorphism.

    Backtracks over BFS-ordered labelings (every connected graph has one)
    and keeps one graph per nauty certificate.  Known counts for
    n = 4..12 are 1, 2, 5, 19, 85.
    """
    if n % 2 or n < 4:
        return []
    adj: list[set[int]] = [set() for _ in range(n)]
    found: dict[bytes, Graph] = {}

    def grow(i: int, discovered: int):
        if i == n:
            g = Graph(n, tuple((u, v) for u in range(n) for v in sorted(adj[u]) if u < v))
            found.setdefault(certificate(g), g)
            return
        if i >= discovered:
            return
        need = 3 - len(adj[i])
        old = [j for j in range(i + 1, discovered) if len(adj[j]) < 3 and j not in adj[i]]
        for fresh in range(need + 1):
            if discovered + fresh > n:
                break
            new = list(range(discovered, discovered + fresh))
            for picked in itertools.combinations(old, need - fresh):
                nbrs = list(picked) + new
                for j in nbrs:
                    adj[i].add(j)
                    adj[j].add(i)
                grow(i + 1, discovered + fresh)
                for j in nbrs:
                    adj[i].discard(j)
                    adj[j].discard(i)

    adj_root = list(range(1, 4))
    for j in adj_root:
        adj[0].add(j)
        adj[j].add(0)
    grow(1, 4)
    return sorted(found.values(), key=lambda g: g.edges)


def random_plane_graph(n: int, extra_edges: int, rng: np.random.Generator) -> Graph:
    """A random 2-connected planar graph with ``n`` vertices.

    Start from a cycle, then alternately subdivide edges and add chords
    inside faces; both moves keep the graph planar and 2-connected.
    """
    k = int(rng.integers(3, min(n, 6) + 1))
    faces = [list(range(k)), list(range(k))[::-1]]
    edges = {frozenset((i, (i + 1) % k)) for i in range(k)}
    size = k
    chords = 0
    while size < n or chords < extra_edges:
        if size < n and (chords >= extra_edges or rng.random() < 0.5):
            a, b = tuple(sorted(edges, key=sorted)[int(rng.integers(len(edges)))])
            w = size
            size += 1
            edges.discard(frozenset((a, b)))
            edges.update((frozenset((a, w)), frozenset((w, b))))
            for f in faces:
                for i in range(len(f)):
                    u, v = f[i], f[(i + 1) % len(f)]
                    if {u, v} == {a, b}:
                        f.insert(i + 1, w)
                        break
            continue
        options = []
        for fi, f in enumerate(faces):
            for i, j in itertools.combinations(range(len(f)), 2):
                if j - i > 1 and not (i == 0 and j == len(f) - 1) and frozenset((f[i], f[j])) not in edges:
                    options.append((fi, i, j))
        if not options:
            if size >= n:
                break
            chords = extra_edges
            continue
        fi, i, j = options[int(rng.integers(len(options)))]
        f = faces[fi]
        edges.add(frozenset((f[i], f[j])))
        faces[fi] = f[i : j + 1]
        faces.append(f[j:] + f[: i + 1])
        chords += 1
    return Graph(size, tuple(tuple(sorted(e)) for e in sorted(edges, key=sorted)))


def small_named_graphs() -> dict[str, Graph]:
    return {
        "C3": families.cycle_graph(3),
        "C5": families.cycle_graph(5),
        "K4": families.complete_graph(4),
        "K5": families.complete_graph(5),
        "K33": families.k33(),
        "K34": families.complete_bipartite(3, 4),
        "prism3": families.prism(3),
        "prism4": families.prism(4),
        "cube": families.cube(),
        "wagner": families.wagner(),
        "petersen": families.petersen(),
        "hex1": families.hex_cylinder_graph(1)[0],
    }
