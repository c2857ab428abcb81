from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_genus, max_disjoint_separating, neighbor_rotation, simple_cycles
from stronggenus.corpus import connected_cubic_graphs, random_plane_graph
from stronggenus.embedding import euler_characteristic, facial_distance, is_strong
from stronggenus.errors import InvalidEmbedding
from stronggenus.families import complete_graph, cube, hex_cylinder, k33
from stronggenus.planarity import (
    NestedCertificate,
    NonPlanar,
    format_certificate,
    parse_certificate,
    planar_embedding,
    prop1_certificate,
    verify_certificate,
)


def test_k4_planar():
    e = planar_embedding(complete_graph(4))
    assert euler_characteristic(e) == 2 and len(e.faces) == 4


def test_k33_nonplanar():
    assert planar_embedding(k33()) is NonPlanar
    assert not NonPlanar


def test_hex5_near_planar():
    inst = hex_cylinder(5)
    assert planar_embedding(inst.graph) is NonPlanar
    base = inst.graph.delete_edge(inst.planarizing_edge)
    assert euler_characteristic(planar_embedding(base)) == 2


def test_deterministic():
    g = hex_cylinder(3).graph.delete_edge(hex_cylinder(3).planarizing_edge)
    assert planar_embedding(g) == planar_embedding(g)


def test_planarity_agrees_with_exhaustive_search(named):
    graphs = [g for n in (4, 6, 8) for g in connected_cubic_graphs(n)]
    graphs += [g for g in named.values() if g.n <= 8]
    for g in graphs:
        planar = brute_genus(g.n, g.edges) == 0
        e = planar_embedding(g)
        assert (e is not NonPlanar) == planar
        if planar:
            assert euler_characteristic(e) == 2


def test_prop1_examples():
    k4 = planar_embedding(complete_graph(4))
    assert prop1_certificate(k4, 0, 1).r == 0
    e = planar_embedding(cube())
    cert = prop1_certificate(e, 0, 7)
    assert cert.r == 1 and len(cert.cycles[0]) == 6
    assert verify_certificate(e.graph, cert, e)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_hex_certificates(r):
    inst = hex_cylinder(r)
    base = inst.graph.delete_edge(inst.planarizing_edge)
    e = inst.reference_planar
    assert verify_certificate(base, inst.reference_rings, e)
    cert = prop1_certificate(e, inst.x, inst.y)
    assert cert == inst.reference_rings
    assert facial_distance(e, inst.x, inst.y) == r + 1


def test_verify_rejects_bad_certificates():
    inst = hex_cylinder(2)
    base = inst.graph.delete_edge(inst.planarizing_edge)
    e = inst.reference_planar
    q1, q2 = inst.reference_rings.cycles
    # two cycles through a shared vertex
    assert not verify_certificate(base, NestedCertificate(inst.x, inst.y, (q1, q1)), e)
    # a facial cycle separates nothing
    face = next(f.vertex_sequence for f in e.faces if inst.x not in f.vertices and inst.y not in f.vertices)
    assert not verify_certificate(base, NestedCertificate(inst.x, inst.y, (face,)), e)
    # not a cycle at all
    assert not verify_certificate(base, NestedCertificate(inst.x, inst.y, (q1[:3],)), e)
    # cycle through a terminal
    assert not verify_certificate(base, NestedCertificate(inst.x, inst.y, ((inst.x,) + q1[:2],)), e)


def test_prop1_requires_sphere(k33_strong_torus):
    with pytest.raises(InvalidEmbedding):
        prop1_certificate(k33_strong_torus, 0, 3)


def test_certificate_roundtrip():
    cert = hex_cylinder(4).reference_rings
    text = format_certificate(cert)
    assert parse_certificate(text) == cert
    assert format_certificate(parse_certificate(text)) == text


def test_planar_2connected_embeddings_are_strong(planar_2conn_cubic_upto_12, random_plane_graphs):
    for g in [*planar_2conn_cubic_upto_12, *random_plane_graphs]:
        assert is_strong(planar_embedding(g))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_hex_rings_are_maximal(r):
    inst = hex_cylinder(r)
    e = inst.reference_planar
    g = e.graph
    rot = neighbor_rotation(e)
    cycles = simple_cycles(g.n, g.edges)
    assert max_disjoint_separating(rot, cycles, inst.x, inst.y) == r
    for x, y in itertools.islice(itertools.combinations(range(g.n), 2), 0, None, 7):
        assert facial_distance(e, x, y) == max_disjoint_separating(rot, cycles, x, y) + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 14), st.integers(0, 5), st.integers(0, 2**32 - 1), st.data())
def test_certificate_on_random_plane_graphs(n, extra, seed, data):
    g = random_plane_graph(n, extra, np.random.default_rng(seed))
    e = planar_embedding(g)
    x = data.draw(st.integers(0, g.n - 1))
    y = data.draw(st.integers(0, g.n - 1).filter(lambda v: v != x))
    cert = prop1_certificate(e, x, y)
    assert cert.r == facial_distance(e, x, y) - 1
    assert verify_certificate(g, cert, e)
    assert cert.r == max_disjoint_separating(neighbor_rotation(e), simple_cycles(g.n, g.edges), x, y)
