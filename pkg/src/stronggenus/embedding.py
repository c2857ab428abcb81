"""Rotation-system embeddings with edge signatures.

An :class:`Embedding` stores, for every vertex, the cyclic order of its
darts and a sign per edge.  Faces are read off with the usual trace rule:
leave along a dart, flip the running orientation on negative edges, and
continue with the next (or previous) dart at the far end.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import (
    GraphFormatError,
    InvalidEmbedding,
    LayeringDegenerate,
    OddCharacteristicOrientable,
    SameVertex,
)
from .graph import Graph, format_graph, is_connected, parse_graph


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    signature: tuple[int, ...]

    def __post_init__(self):
        g = self.graph
        rot = tuple(tuple(int(d) for d in r) for r in self.rotation)
        if len(rot) != g.n:
            raise InvalidEmbedding("rotation must list every vertex")
        for v, r in enumerate(rot):
            if sorted(r) != sorted(g.darts_at[v]):
                raise InvalidEmbedding(f"rotation at vertex {v + 1} is not a permutation of its darts")
        sig = tuple(int(s) for s in self.signature)
        if len(sig) != g.m or any(s not in (1, -1) for s in sig):
            raise InvalidEmbedding("signature needs one +1/-1 entry per edge")
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "signature", sig)

    @classmethod
    def orientable(cls, graph: Graph, rotation: Sequence[Sequence[int]]) -> "Embedding":
        return cls(graph, tuple(tuple(r) for r in rotation), (1,) * graph.m)

    @classmethod
    def from_succ(cls, graph: Graph, succ: Sequence[int]) -> "Embedding":
        rot = []
        for v in range(graph.n):
            ds = graph.darts_at[v]
            if not ds:
                rot.append(())
                continue
            cyc = [ds[0]]
            d = int(succ[ds[0]])
            while d != ds[0]:
                cyc.append(d)
                d = int(succ[d])
            rot.append(tuple(cyc))
        return cls.orientable(graph, rot)

    @cached_property
    def succ(self) -> np.ndarray:
        out = np.empty(self.graph.num_darts, dtype=np.int64)
        for r in self.rotation:
            for i, d in enumerate(r):
                out[d] = r[(i + 1) % len(r)]
        out.flags.writeable = False
        return out

    @cached_property
    def pred(self) -> np.ndarray:
        out = np.empty(self.graph.num_darts, dtype=np.int64)
        for r in self.rotation:
            for i, d in enumerate(r):
                out[d] = r[i - 1]
        out.flags.writeable = False
        return out

    @property
    def all_positive(self) -> bool:
        return all(s == 1 for s in self.signature)

    @cached_property
    def faces(self) -> tuple["FaceWalk", ...]:
        return tuple(_trace(self))


@dataclass(frozen=True)
class FaceWalk:
    """A facial walk as ``(dart, side)`` steps; ``side`` is the running orientation."""

    steps: tuple[tuple[int, int], ...]
    vertex_sequence: tuple[int, ...]

    @property
    def darts(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.steps)

    @property
    def length(self) -> int:
        return len(self.steps)

    @cached_property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.vertex_sequence)

    @cached_property
    def edge_vector(self) -> int:
        """GF(2) edge vector as an int bitset (edges used twice cancel)."""
        vec = 0
        for d, _ in self.steps:
            vec ^= 1 << (d >> 1)
        return vec

    @property
    def is_cycle(self) -> bool:
        return len(self.vertices) == len(self.vertex_sequence)


@dataclass(frozen=True)
class SurfaceKind:
    orientable: bool
    genus: int

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus


def _trace(e: Embedding) -> list[FaceWalk]:
    g = e.graph
    ends = g.endpoints
    succ, pred, sig = e.succ, e.pred, e.signature
    walks = []
    if e.all_positive:
        labels, count = _kernels.face_labels(np.asarray(succ))
        seen = [False] * count
        for start in range(g.num_darts):
            f = labels[start]
            if seen[f]:
                continue
            seen[f] = True
            steps = []
            d = start
            while True:
                steps.append((d, 1))
                d = int(succ[d ^ 1])
                if d == start:
                    break
            walks.append(FaceWalk(tuple(steps), tuple(int(ends[d]) for d, _ in steps)))
        return walks

    # general trace over states (dart, side); every face shows up twice,
    # once per traversal direction
    used: set[tuple[int, int]] = set()
    for start in range(g.num_darts):
        for s0 in (1, -1):
            if (start, s0) in used:
                continue
            steps = []
            d, s = start, s0
            while (d, s) not in used:
                used.add((d, s))
                steps.append((d, s))
                back = d ^ 1
                s = s * sig[d >> 1]
                d = int(succ[back]) if s == 1 else int(pred[back])
            if (d, s) != (start, s0):
                raise InvalidEmbedding("face trace did not close")
            for d, s in steps:
                # same face read backwards
                used.add((d ^ 1, -s * sig[d >> 1]))
            walks.append(FaceWalk(tuple(steps), tuple(int(ends[d]) for d, _ in steps)))
    return walks


def trace_faces(e: Embedding) -> list[FaceWalk]:
    """All facial walks, ordered by their smallest starting dart."""
    return list(e.faces)


def euler_characteristic(e: Embedding) -> int:
    g = e.graph
    return g.n - g.m + len(e.faces)


def _flip_normal_form(e: Embedding) -> tuple[int, ...] | None:
    """Vertex flips making every edge positive, or ``None`` if impossible."""
    g = e.graph
    flip = [0] * g.n
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for d in g.darts_at[u]:
            w = g.endpoint(d ^ 1)
            if not seen[w]:
                seen[w] = True
                flip[w] = 1 if (flip[u] == 1) != (e.signature[d >> 1] == -1) else 0
                queue.append(w)
    for k, (u, v) in enumerate(g.edges):
        if (e.signature[k] == -1) != (flip[u] != flip[v]):
            return None
    return tuple(flip)


def is_orientable(e: Embedding) -> bool:
    if e.all_positive:
        return True
    return _flip_normal_form(e) is not None


def orientable_form(e: Embedding) -> Embedding:
    """Equivalent all-positive embedding (reverse rotations at flipped vertices)."""
    flip = _flip_normal_form(e)
    if flip is None:
        raise InvalidEmbedding("embedding is non-orientable")
    rot = [tuple(reversed(r)) if flip[v] else r for v, r in enumerate(e.rotation)]
    return Embedding.orientable(e.graph, rot)


def surface_of(e: Embedding) -> SurfaceKind:
    chi = euler_characteristic(e)
    if is_orientable(e):
        if chi % 2:
            raise OddCharacteristicOrientable(f"orientable trace gave odd characteristic {chi}")
        return SurfaceKind(True, (2 - chi) // 2)
    return SurfaceKind(False, 2 - chi)


def genus(e: Embedding) -> int:
    return surface_of(e).genus


def is_strong(e: Embedding) -> bool:
    return all(f.is_cycle for f in e.faces)


def _induced(g: Graph, walk: FaceWalk) -> bool:
    vs = walk.vertices
    own = {d >> 1 for d in walk.darts}
    for k, (u, v) in enumerate(g.edges):
        if u in vs and v in vs and k not in own:
            return False
    return True


def is_polyhedral(e: Embedding) -> bool:
    g = e.graph
    for f in e.faces:
        if not f.is_cycle or not _induced(g, f):
            return False
        if not is_connected(g, f.vertices):
            return False
    return True


def _face_graph(e: Embedding) -> tuple[list[list[int]], list[list[int]]]:
    """Faces through each vertex and face-intersection adjacency."""
    faces_at: list[list[int]] = [[] for _ in range(e.graph.n)]
    for i, f in enumerate(e.faces):
        for v in f.vertices:
            faces_at[v].append(i)
    adj: list[set[int]] = [set() for _ in e.faces]
    for fs in faces_at:
        for a in fs:
            adj[a].update(fs)
    return faces_at, [sorted(s - {i}) for i, s in enumerate(adj)]


def face_distances(e: Embedding, x: int) -> list[int]:
    """BFS depth of every face from ``x``: faces through ``x`` get 1."""
    faces_at, adj = _face_graph(e)
    dist = [0] * len(e.faces)
    queue = deque()
    for f in faces_at[x]:
        dist[f] = 1
        queue.append(f)
    while queue:
        f = queue.popleft()
        for h in adj[f]:
            if not dist[h]:
                dist[h] = dist[f] + 1
                queue.append(h)
    return dist


def facial_distance(e: Embedding, x: int, y: int) -> int:
    if x == y:
        raise SameVertex("facial distance needs two distinct vertices")
    dist = face_distances(e, x)
    reach = [dist[i] for i, f in enumerate(e.faces) if y in f.vertices and dist[i]]
    if not reach:
        raise InvalidEmbedding("terminals lie in different components")
    return min(reach)


@dataclass(frozen=True)
class EulerianSubgraph:
    edge_vector: int
    vertices: frozenset[int]
    cycles: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[int]:
        return [k for k in range(self.edge_vector.bit_length()) if self.edge_vector >> k & 1]


def edge_vector_vertices(g: Graph, vec: int) -> frozenset[int]:
    out = set()
    k = 0
    while vec:
        if vec & 1:
            out.update(g.edges[k])
        vec >>= 1
        k += 1
    return frozenset(out)


def cycle_decomposition(g: Graph, vec: int) -> list[tuple[int, ...]]:
    """Split an even-degree edge set into edge-disjoint cycles (vertex lists)."""
    remaining = {k for k in range(vec.bit_length()) if vec >> k & 1}
    inc: dict[int, set[int]] = {}
    for k in remaining:
        for v in g.edges[k]:
            inc.setdefault(v, set()).add(k)
    if any(len(ks) % 2 for ks in inc.values()):
        raise ValueError("edge set is not Eulerian")
    cycles = []
    while remaining:
        cur = g.edges[min(remaining)][0]
        path = [cur]
        pos = {cur: 0}
        while inc[cur]:
            k = min(inc[cur])
            a, b = g.edges[k]
            nxt = b if a == cur else a
            inc[cur].discard(k)
            inc[nxt].discard(k)
            remaining.discard(k)
            if nxt in pos:
                i = pos[nxt]
                cycles.append(tuple(path[i:]))
                for w in path[i + 1 :]:
                    del pos[w]
                del path[i + 1 :]
            else:
                pos[nxt] = len(path)
                path.append(nxt)
            cur = nxt
    return cycles


def face_bfs_layers(e: Embedding, x: int, y: int) -> list[EulerianSubgraph]:
    """Nested face layers around ``x`` up to, but excluding, the faces at ``y``.

    Layer ``i`` is the GF(2) sum of all faces at face distance ``<= i`` from
    ``x``.
    """
    if x == y:
        raise SameVertex("layers need two distinct vertices")
    q = facial_distance(e, x, y)
    dist = face_distances(e, x)
    g = e.graph
    layers = []
    vec = 0
    for i in range(1, q):
        for j, f in enumerate(e.faces):
            if dist[j] == i:
                vec ^= f.edge_vector
        vs = edge_vector_vertices(g, vec)
        layers.append(EulerianSubgraph(vec, vs, tuple(cycle_decomposition(g, vec))))
    for i, lay in enumerate(layers):
        if x in lay.vertices or y in lay.vertices:
            raise LayeringDegenerate(f"layer {i + 1} touches a terminal")
        for other in layers[i + 1 :]:
            if lay.vertices & other.vertices:
                raise LayeringDegenerate("layers are not vertex-disjoint")
    return layers


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def _dart_token(d: int) -> str:
    return f"{(d >> 1) + 1}{'ab'[d & 1]}"


def _parse_dart(tok: str, m: int) -> int:
    side = tok[-1:]
    if side not in ("a", "b"):
        raise GraphFormatError(f"bad dart {tok!r}")
    try:
        k = int(tok[:-1]) - 1
    except ValueError:
        raise GraphFormatError(f"bad dart {tok!r}") from None
    if not 0 <= k < m:
        raise GraphFormatError(f"dart {tok!r} names an unknown edge")
    return 2 * k + (side == "b")


def format_embedding(e: Embedding) -> str:
    lines = [format_graph(e.graph).rstrip("\n")]
    for v, r in enumerate(e.rotation):
        lines.append(f"r {v + 1} : " + " ".join(_dart_token(d) for d in r))
    for k, s in enumerate(e.signature):
        if s == -1:
            lines.append(f"s {k + 1} -1")
    return "\n".join(lines) + "\n"


def parse_embedding(text: str) -> Embedding:
    g = parse_graph(text)
    rot: list[tuple[int, ...] | None] = [None] * g.n
    sig = [1] * g.m
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "r":
            if len(parts) < 3 or parts[2] != ":":
                raise GraphFormatError(f"line {lineno}: bad rotation {raw!r}")
            try:
                v = int(parts[1]) - 1
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad rotation {raw!r}") from None
            if not 0 <= v < g.n or rot[v] is not None:
                raise GraphFormatError(f"line {lineno}: bad or repeated vertex")
            rot[v] = tuple(_parse_dart(t, g.m) for t in parts[3:])
        elif parts[0] == "s":
            if len(parts) != 3 or parts[2] not in ("-1", "1", "+1"):
                raise GraphFormatError(f"line {lineno}: bad signature {raw!r}")
            k = int(parts[1]) - 1
            if not 0 <= k < g.m:
                raise GraphFormatError(f"line {lineno}: unknown edge")
            sig[k] = int(parts[2])
    for v in range(g.n):
        if rot[v] is None:
            if g.degree(v):
                raise GraphFormatError(f"missing rotation for vertex {v + 1}")
            rot[v] = ()
    return Embedding(g, tuple(rot), tuple(sig))


def random_rotation(g: Graph, rng: np.random.Generator) -> Embedding:
    return Embedding.orientable(g, [tuple(rng.permutation(np.array(ds, dtype=np.int64)).tolist()) for ds in g.darts_at])


def succ_from_rotations(g: Graph, rotations: Iterable[Sequence[int]]) -> np.ndarray:
    out = np.empty(g.num_darts, dtype=np.int64)
    for r in rotations:
        for i, d in enumerate(r):
            out[d] = r[(i + 1) % len(r)]
    return out
