from __future__ import annotations

import numpy as np
import pytest

from stronggenus.corpus import connected_cubic_graphs, random_plane_graph, small_named_graphs
from stronggenus.embedding import euler_characteristic, is_strong
from stronggenus.families import k33
from stronggenus.graph import connectivity
from stronggenus.planarity import NonPlanar, planar_embedding
from stronggenus.search import enumerate_rotations


@pytest.fixture(scope="session")
def k33_all():
    return list(enumerate_rotations(k33()))


@pytest.fixture(scope="session")
def k33_strong_torus(k33_all):
    return next(e for e in k33_all if euler_characteristic(e) == 0 and is_strong(e))


@pytest.fixture(scope="session")
def k33_weak_torus(k33_all):
    return next(e for e in k33_all if euler_characteristic(e) == 0 and not is_strong(e))


@pytest.fixture(scope="session")
def cubic_upto_10():
    return [g for n in range(4, 11, 2) for g in connected_cubic_graphs(n)]


@pytest.fixture(scope="session")
def planar_2conn_cubic_upto_12():
    out = []
    for n in range(4, 13, 2):
        for g in connected_cubic_graphs(n):
            if planar_embedding(g) is not NonPlanar and connectivity(g) >= 2:
                out.append(g)
    return out


@pytest.fixture(scope="session")
def random_plane_graphs():
    rng = np.random.default_rng(20261018)
    return [random_plane_graph(int(rng.integers(4, 15)), int(rng.integers(0, 6)), rng) for _ in range(100)]


@pytest.fixture(scope="session")
def named():
    return small_named_graphs()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
