from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import disjoint_families, face_sums, independent_by_subsets, simple_cycles
from stronggenus.corpus import small_named_graphs
from stronggenus.embedding import euler_characteristic, random_rotation, surface_of
from stronggenus.errors import InvalidCycle
from stronggenus.families import complete_graph, cube, hex_cylinder, petersen
from stronggenus.graph import is_connected
from stronggenus.homology import (
    CycleSet,
    cycle_edge_vector,
    cycle_space_dimension,
    face_span,
    format_cycles,
    gf2_rank,
    homologically_independent,
    is_surface_separating,
    parse_cycleset,
)
from stronggenus.planarity import planar_embedding
from stronggenus.search import enumerate_rotations

NAMED = small_named_graphs()


def faces_of(e):
    return [list(f.vertex_sequence) for f in e.faces]


def test_gf2_rank():
    assert gf2_rank([0b011, 0b110, 0b101]) == 2
    assert gf2_rank([]) == 0
    assert gf2_rank([0b1, 0b10, 0b100, 0b111]) == 3


def test_single_face_separates():
    for e in (planar_embedding(cube()), hex_cylinder(2).reference_toroidal):
        for f in e.faces:
            if f.is_cycle:
                assert is_surface_separating(e, CycleSet((f.vertex_sequence,)))


def test_planar_cycles_separate():
    for g in (complete_graph(4), cube()):
        e = planar_embedding(g)
        for c in simple_cycles(g.n, g.edges):
            assert is_surface_separating(e, CycleSet((c,)))


def test_torus_has_nonseparating_cycles(k33_strong_torus):
    e = k33_strong_torus
    g = e.graph
    sums = face_sums(faces_of(e))
    found = 0
    for c in simple_cycles(g.n, g.edges):
        ours = is_surface_separating(e, CycleSet((c,)))
        assert ours == (not independent_by_subsets([c], sums))
        found += not ours
    assert found > 0


def test_independence_basic():
    e = planar_embedding(cube())
    assert homologically_independent(e, CycleSet(()))
    face = e.faces[0].vertex_sequence
    assert not homologically_independent(e, CycleSet((face,)))


def test_homologous_rings_on_torus():
    inst = hex_cylinder(2)
    e = inst.reference_toroidal
    q1, q2 = inst.reference_rings.cycles
    sums = face_sums(faces_of(e))
    for ring in (q1, q2):
        assert homologically_independent(e, CycleSet((ring,)))
        assert independent_by_subsets([ring], sums)
    pair = CycleSet((q1, q2))
    assert is_surface_separating(e, pair)
    assert not homologically_independent(e, pair)
    assert not independent_by_subsets([q1, q2], sums)


def test_cycleset_validation():
    g = cube()
    with pytest.raises(InvalidCycle):
        cycle_edge_vector(g, (0, 1, 2))  # 1 and 2 are not adjacent
    with pytest.raises(InvalidCycle):
        CycleSet(((0, 1, 3, 2), (0, 4, 5, 1))).validate(g)
    with pytest.raises(InvalidCycle):
        cycle_edge_vector(g, (0, 1))


def test_cycleset_roundtrip():
    cs = CycleSet(((0, 1, 3, 2), (4, 5, 7, 6)))
    assert parse_cycleset(format_cycles(cs.cycles)) == cs


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(sorted(NAMED)), st.integers(0, 2**32 - 1))
def test_face_span_dimension(name, seed):
    g = NAMED[name]
    e = random_rotation(g, np.random.default_rng(seed))
    f = len(e.faces)
    assert face_span(e).rank == f - 1
    assert cycle_space_dimension(g) == g.m - g.n + 1
    assert cycle_space_dimension(g) - (f - 1) == 2 - euler_characteristic(e) >= 0


def _induced_nonseparating(g, family):
    vs = set().union(*family)
    own = set()
    for c in family:
        own |= {frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c))}
    for u, v in g.edges:
        if u in vs and v in vs and frozenset((u, v)) not in own:
            return False
    return is_connected(g, vs)


@pytest.mark.parametrize("name", ["K4", "K33", "prism3", "K5"])
def test_nonfacial_induced_nonseparating_families_are_independent(name):
    g = NAMED[name]
    cycles = simple_cycles(g.n, g.edges)
    families = [f for f in disjoint_families(cycles) if _induced_nonseparating(g, f)]
    for e in enumerate_rotations(g):
        face_sets = {frozenset(f.vertex_sequence) for f in e.faces if f.is_cycle}
        for fam in families:
            if any(frozenset(c) in face_sets and _is_face(e, c) for c in fam):
                continue
            assert homologically_independent(e, CycleSet(fam))


def _is_face(e, c):
    key = _cyc(c)
    return any(_cyc(f.vertex_sequence) == key for f in e.faces)


def _cyc(seq):
    seq = list(seq)
    rots = [tuple(seq[i:] + seq[:i]) for i in range(len(seq))]
    rev = seq[::-1]
    rots += [tuple(rev[i:] + rev[:i]) for i in range(len(rev))]
    return min(rots)


@pytest.mark.parametrize("graph", [petersen(), cube(), hex_cylinder(1).graph], ids=["petersen", "cube", "hex1"])
def test_disjoint_independent_families_bounded_by_genus_up_to_10_vertices(graph):
    g = graph
    cycles = simple_cycles(g.n, g.edges)
    families = disjoint_families(cycles)
    for e in enumerate_rotations(g):
        gen = surface_of(e).genus
        sums = face_sums(faces_of(e))
        for fam in families:
            ours = homologically_independent(e, CycleSet(fam))
            assert ours == independent_by_subsets(list(fam), sums)
            if ours:
                assert len(fam) <= gen
