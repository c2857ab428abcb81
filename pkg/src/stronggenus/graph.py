"""Undirected multigraphs in dart (half-edge) form.

Edge ``k`` joining ``u`` and ``v`` owns darts ``2k`` (at ``u``) and
``2k + 1`` (at ``v``), so the mate of a dart is ``d ^ 1``.  Vertices and
edges are 0-indexed in memory; the text formats are 1-indexed.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateCycle, GraphFormatError, LoopRejected

INFINITE = math.inf


def mate(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


@dataclass(frozen=True, eq=True)
class Graph:
    """Immutable multigraph; ``edges[k] = (u, v)`` with ``u != v``."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("graph needs at least one vertex")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for k, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge {k + 1}: vertex out of range")
            if u == v:
                raise LoopRejected(f"edge {k + 1}: loop at vertex {u + 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_darts(self) -> int:
        return 2 * len(self.edges)

    def endpoint(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    @cached_property
    def endpoints(self) -> np.ndarray:
        """``endpoints[d]`` is the vertex dart ``d`` sits at."""
        out = np.empty(self.num_darts, dtype=np.int64)
        for k, (u, v) in enumerate(self.edges):
            out[2 * k] = u
            out[2 * k + 1] = v
        out.flags.writeable = False
        return out

    @cached_property
    def darts_at(self) -> tuple[tuple[int, ...], ...]:
        at: list[list[int]] = [[] for _ in range(self.n)]
        for d in range(self.num_darts):
            at[self.endpoint(d)].append(d)
        return tuple(tuple(ds) for ds in at)

    def degree(self, v: int) -> int:
        return len(self.darts_at[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(ds) for ds in self.darts_at)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def edge_index(self) -> dict[frozenset[int], list[int]]:
        idx: dict[frozenset[int], list[int]] = {}
        for k, (u, v) in enumerate(self.edges):
            idx.setdefault(frozenset((u, v)), []).append(k)
        return idx

    def edges_between(self, u: int, v: int) -> list[int]:
        return self.edge_index.get(frozenset((u, v)), [])

    def delete_edge(self, k: int) -> "Graph":
        return Graph(self.n, self.edges[:k] + self.edges[k + 1 :])

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges + ((u, v),))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Read ``p <n> <m>`` followed by ``m`` lines ``e <u> <v>``.

    Lines of other kinds (embedding ``r``/``s`` records, ``#`` comments) are
    skipped so that an embedding file also parses as a graph file.
    """
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: bad header {line!r}")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad header {line!r}") from None
            if n < 1 or m < 0:
                raise GraphFormatError(f"line {lineno}: bad header {line!r}")
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: bad edge {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad edge {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"line {lineno}: vertex out of range")
            if u == v:
                raise LoopRejected(f"line {lineno}: loop at vertex {u}")
            edges.append((u - 1, v - 1))
    if n is None:
        raise GraphFormatError("missing 'p' header")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------


def is_cubic(g: Graph) -> bool:
    return all(d == 3 for d in g.degrees)


def components(g: Graph, removed: frozenset[int] | set[int] = frozenset()) -> list[set[int]]:
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbor_sets[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph, removed: Iterable[int] = ()) -> bool:
    """Connectivity of ``g`` minus ``removed``; the empty graph counts as connected."""
    return len(components(g, set(removed))) <= 1


def connectivity(g: Graph) -> int:
    """Vertex connectivity by vertex-cut enumeration (desk scale)."""
    if g.n == 1 or not is_connected(g):
        return 0
    min_deg = min(len(s) for s in g.neighbor_sets)
    for k in range(min_deg):
        if k > g.n - 2:
            break
        for cut in itertools.combinations(range(g.n), k):
            if not is_connected(g, cut):
                return k
    # no cut below the minimum degree; complete graphs have no cut at all
    return min(min_deg, g.n - 1)


def girth(g: Graph) -> float:
    """Length of a shortest cycle (2 for parallel edges), ``INFINITE`` for forests."""
    if any(len(ks) > 1 for ks in g.edge_index.values()):
        return 2
    best = INFINITE
    adj = [[(g.endpoint(d ^ 1), d >> 1) for d in g.darts_at[v]] for v in range(g.n)]
    for root in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w, k in adj[u]:
                if k == via[u]:
                    continue
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    via[w] = k
                    queue.append(w)
                else:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def subdivide(g: Graph, k: int) -> Graph:
    """Replace edge ``k`` by a path of length two through a new last vertex."""
    u, v = g.edges[k]
    w = g.n
    edges = list(g.edges)
    edges[k] = (u, w)
    edges.append((w, v))
    return Graph(g.n + 1, tuple(edges))


def suppress_degree_two(g: Graph) -> Graph:
    """Replace every maximal path through degree-2 vertices by one edge."""
    branch = [v for v in range(g.n) if g.degree(v) != 2]
    if not branch:
        raise DegenerateCycle("graph is a cycle")
    relabel = {v: i for i, v in enumerate(branch)}
    used: set[int] = set()
    found: list[tuple[int, int, int]] = []
    for v in branch:
        for d in g.darts_at[v]:
            k = d >> 1
            if k in used:
                continue
            path_edges = [k]
            cur = g.endpoint(d ^ 1)
            back = d ^ 1
            while g.degree(cur) == 2:
                nxt = next(x for x in g.darts_at[cur] if x != back)
                path_edges.append(nxt >> 1)
                back = nxt ^ 1
                cur = g.endpoint(back)
            used.update(path_edges)
            if cur == v:
                raise DegenerateCycle(f"suppression leaves a loop at vertex {v + 1}")
            found.append((min(path_edges), relabel[v], relabel[cur]))
    found.sort()
    return Graph(len(branch), tuple((a, b) for _, a, b in found))


def is_subdivision_of_3connected(g: Graph) -> bool:
    try:
        h = suppress_degree_two(g)
    except DegenerateCycle:
        return False
    return connectivity(h) >= 3
