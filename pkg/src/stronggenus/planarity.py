"""Planar embeddings and nested-cycle certificates for facial distance."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from . import _kernels
from .embedding import (
    Embedding,
    cycle_decomposition,
    euler_characteristic,
    face_distances,
    facial_distance,
    is_orientable,
)
from .errors import ExtractionFailed, GraphFormatError, InvalidCycle, InvalidEmbedding, SameVertex
from .graph import Graph, is_connected
from .homology import CycleSet, cycle_edge_vector, format_cycles


class _NonPlanar:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NonPlanar"

    def __bool__(self):
        return False


NonPlanar = _NonPlanar()


def _canonical(g: Graph, rotation: list[list[int]]) -> Embedding:
    rot = []
    for r in rotation:
        if r:
            i = r.index(min(r))
            r = r[i:] + r[:i]
        rot.append(r)
    # fix the global mirror image at the first vertex where it is visible
    for r in rot:
        if len(r) >= 3:
            if r[1] > r[-1]:
                rot = [[x[0]] + x[1:][::-1] if x else x for x in rot]
            break
    return Embedding.orientable(g, rot)


def planar_embedding(g: Graph) -> Embedding | _NonPlanar:
    """A sphere embedding of ``g`` (all-positive, characteristic 2) or ``NonPlanar``."""
    if not is_connected(g):
        raise InvalidEmbedding("planar_embedding needs a connected graph")
    simple = nx.Graph()
    simple.add_nodes_from(range(g.n))
    simple.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(simple)
    if not ok:
        return NonPlanar
    rotation = []
    for v in range(g.n):
        darts: list[int] = []
        if g.degree(v):
            for w in emb.neighbors_cw_order(v):
                for k in g.edges_between(v, w):
                    darts.append(2 * k + (g.edges[k][0] != v))
        rotation.append(darts)
    e = _canonical(g, rotation)
    if euler_characteristic(e) != 2:
        raise AssertionError("planarity backend returned a non-spherical rotation")
    return e


def is_planar(g: Graph) -> bool:
    return planar_embedding(g) is not NonPlanar


# ---------------------------------------------------------------------------
# side tests
# ---------------------------------------------------------------------------


def _dart_faces(e: Embedding) -> list[int]:
    labels, _ = _kernels.face_labels(e.succ)
    return [int(x) for x in labels]


def separates(e: Embedding, cycle_vec: int, x: int, y: int) -> bool:
    """Whether the cycle with edge set ``cycle_vec`` splits the sphere between x and y.

    Faces are glued across every edge outside the cycle; ``x`` and ``y`` are
    separated iff their faces end up in different classes.
    """
    fid = _dart_faces(e)
    parent = list(range(max(fid) + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for k in range(e.graph.m):
        if not cycle_vec >> k & 1:
            a, b = find(fid[2 * k]), find(fid[2 * k + 1])
            if a != b:
                parent[a] = b
    g = e.graph
    fx = find(fid[g.darts_at[x][0]])
    fy = find(fid[g.darts_at[y][0]])
    return fx != fy


@dataclass(frozen=True)
class NestedCertificate:
    x: int
    y: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.cycles)


def _require_sphere(e: Embedding):
    if not is_orientable(e) or euler_characteristic(e) != 2:
        raise InvalidEmbedding("a planar (sphere) embedding is required")


def prop1_certificate(e: Embedding, x: int, y: int) -> NestedCertificate:
    """Disjoint cycles nested between ``x`` and ``y``, one per face layer.

    With ``q`` the facial distance, layer ``i < q`` is the boundary of the
    region of faces that are farther than ``i`` from ``x`` and reachable
    from ``y`` across edges.  One cycle of each boundary splits x from y.
    """
    if x == y:
        raise SameVertex("certificate needs two distinct vertices")
    _require_sphere(e)
    g = e.graph
    q = facial_distance(e, x, y)
    dist = face_distances(e, x)
    fid = _dart_faces(e)
    faces = e.faces
    nf = len(faces)
    adj: list[set[int]] = [set() for _ in range(nf)]
    for k in range(g.m):
        a, b = fid[2 * k], fid[2 * k + 1]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    y_faces = [i for i, f in enumerate(faces) if y in f.vertices]
    cycles = []
    for i in range(1, q):
        region = set()
        stack = [f for f in y_faces if dist[f] > i]
        region.update(stack)
        while stack:
            f = stack.pop()
            for h in adj[f]:
                if h not in region and dist[h] > i:
                    region.add(h)
                    stack.append(h)
        vec = 0
        for f in region:
            vec ^= faces[f].edge_vector
        chosen = None
        for cyc in cycle_decomposition(g, vec):
            if x in cyc or y in cyc:
                continue
            if separates(e, cycle_edge_vector(g, cyc), x, y):
                chosen = cyc
                break
        if chosen is None:
            raise ExtractionFailed(f"no separating cycle in layer {i}")
        cycles.append(tuple(chosen))
    cert = NestedCertificate(x, y, tuple(cycles))
    problems = certificate_problems(g, cert, e)
    if problems:
        raise ExtractionFailed("; ".join(problems))
    return cert


def certificate_problems(g: Graph, cert: NestedCertificate, e: Embedding) -> list[str]:
    """Reasons a certificate fails; empty when it verifies."""
    problems = []
    vecs = []
    for i, c in enumerate(cert.cycles):
        try:
            vecs.append(cycle_edge_vector(g, c))
        except InvalidCycle as exc:
            problems.append(f"Q{i + 1}: {exc}")
            vecs.append(None)
    seen: set[int] = set()
    for i, c in enumerate(cert.cycles):
        if cert.x in c or cert.y in c:
            problems.append(f"Q{i + 1} passes through a terminal")
        if seen & set(c):
            problems.append(f"Q{i + 1} meets an earlier cycle")
        seen.update(c)
    for i, (c, vec) in enumerate(zip(cert.cycles, vecs)):
        if vec is None or cert.x in c or cert.y in c:
            continue
        # cheap necessary condition first, then the exact side test
        if is_connected_between(g, set(c), cert.x, cert.y) or not separates(e, vec, cert.x, cert.y):
            problems.append(f"Q{i + 1} does not separate x from y")
    return problems


def is_connected_between(g: Graph, removed: set[int], a: int, b: int) -> bool:
    seen = set(removed) | {a}
    stack = [a]
    while stack:
        u = stack.pop()
        if u == b:
            return True
        for w in g.neighbor_sets[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def verify_certificate(g: Graph, cert: NestedCertificate, e: Embedding) -> bool:
    return not certificate_problems(g, cert, e)


def format_certificate(cert: NestedCertificate) -> str:
    return f"x {cert.x + 1}\ny {cert.y + 1}\n" + format_cycles(cert.cycles)


def parse_certificate(text: str) -> NestedCertificate:
    x = y = None
    cycles = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        try:
            if parts[0] == "x" and len(parts) == 2:
                x = int(parts[1]) - 1
            elif parts[0] == "y" and len(parts) == 2:
                y = int(parts[1]) - 1
            elif parts[0] == "c":
                cycles.append(tuple(int(t) - 1 for t in parts[1:]))
            else:
                raise GraphFormatError(f"line {lineno}: unexpected record {raw!r}")
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad number") from None
    if x is None or y is None:
        raise GraphFormatError("certificate needs x and y records")
    return NestedCertificate(x, y, tuple(cycles))


def certificate_cycleset(cert: NestedCertificate) -> CycleSet:
    return CycleSet(cert.cycles)
