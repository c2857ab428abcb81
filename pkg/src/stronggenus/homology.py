"""GF(2) edge-space algebra over an embedding.

Edge sets are Python ints used as bitsets (bit ``k`` = edge ``k``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .embedding import Embedding
from .errors import GraphFormatError, InvalidCycle
from .graph import Graph, components


def gf2_reduce(vec: int, basis: dict[int, int]) -> int:
    """Reduce ``vec`` against an echelon basis keyed by pivot bit."""
    while vec:
        top = vec.bit_length() - 1
        row = basis.get(top)
        if row is None:
            return vec
        vec ^= row
    return 0


def gf2_insert(vec: int, basis: dict[int, int]) -> bool:
    """Add ``vec`` to the basis; False if it was already in the span."""
    vec = gf2_reduce(vec, basis)
    if not vec:
        return False
    basis[vec.bit_length() - 1] = vec
    return True


def gf2_rank(rows: Iterable[int]) -> int:
    basis: dict[int, int] = {}
    return sum(gf2_insert(r, basis) for r in rows)


class FaceSpan:
    """Echelon basis of the span of an embedding's face boundaries."""

    def __init__(self, e: Embedding):
        self.basis: dict[int, int] = {}
        for f in e.faces:
            gf2_insert(f.edge_vector, self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, vec: int) -> bool:
        return gf2_reduce(vec, self.basis) == 0


def face_span(e: Embedding) -> FaceSpan:
    span = e.__dict__.get("_face_span")
    if span is None:
        span = FaceSpan(e)
        e.__dict__["_face_span"] = span
    return span


def cycle_edge_vector(g: Graph, cycle: Sequence[int]) -> int:
    """Edge bitset of a vertex-listed cycle; raises InvalidCycle if it is not one."""
    k = len(cycle)
    if k < 2 or len(set(cycle)) != k:
        raise InvalidCycle(f"not a cycle: {[v + 1 for v in cycle]}")
    if any(not 0 <= v < g.n for v in cycle):
        raise InvalidCycle("cycle vertex out of range")
    if k == 2:
        ks = g.edges_between(cycle[0], cycle[1])
        if len(ks) < 2:
            raise InvalidCycle("a 2-cycle needs parallel edges")
        return (1 << ks[0]) | (1 << ks[1])
    vec = 0
    for i in range(k):
        ks = g.edges_between(cycle[i], cycle[(i + 1) % k])
        if not ks:
            raise InvalidCycle(f"{cycle[i] + 1} and {cycle[(i + 1) % k] + 1} are not adjacent")
        vec |= 1 << ks[0]
    return vec


@dataclass(frozen=True)
class CycleSet:
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(int(v) for v in c) for c in self.cycles))

    def edge_sets(self, g: Graph) -> list[int]:
        return [cycle_edge_vector(g, c) for c in self.cycles]

    def validate(self, g: Graph) -> list[int]:
        vecs = self.edge_sets(g)
        seen: set[int] = set()
        for c in self.cycles:
            if seen & set(c):
                raise InvalidCycle("cycles are not pairwise vertex-disjoint")
            seen.update(c)
        return vecs

    def __len__(self):
        return len(self.cycles)


def is_surface_separating(e: Embedding, cs: CycleSet) -> bool:
    vecs = cs.validate(e.graph)
    union = 0
    for v in vecs:
        union ^= v
    return face_span(e).contains(union)


def homologically_independent(e: Embedding, cs: CycleSet) -> bool:
    """No non-empty subfamily sums to a combination of face boundaries."""
    vecs = cs.validate(e.graph)
    basis = dict(face_span(e).basis)
    return all(gf2_insert(v, basis) for v in vecs)


def cycle_space_dimension(g: Graph) -> int:
    return g.m - g.n + len(components(g))


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------


def format_cycles(cycles: Iterable[Sequence[int]]) -> str:
    return "".join("c " + " ".join(str(v + 1) for v in c) + "\n" for c in cycles)


def parse_cycleset(text: str) -> CycleSet:
    cycles = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] != "c":
            raise GraphFormatError(f"line {lineno}: expected a 'c' record")
        try:
            cycles.append(tuple(int(t) - 1 for t in parts[1:]))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex") from None
    return CycleSet(tuple(cycles))
