"""Exhaustive and branch-and-bound search over orientable rotation systems."""

from __future__ import annotations

import itertools
import logging
import os
import threading
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator

import numpy as np

from . import _kernels
from ._accel import backend
from .bounds import euler_girth_bound, max_genus_ub
from .embedding import Embedding
from .graph import INFINITE, Graph, girth, is_connected

log = logging.getLogger(__name__)


class _AboveCap:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "AboveCap"


AboveCap = _AboveCap()


@dataclass
class SearchResult:
    quantity: str
    value: int | _AboveCap | None
    witness: Embedding | None
    nodes_explored: int
    exhaustive: bool
    cap: int | None = None
    elapsed: float = 0.0
    config: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        value = self.value
        if value is AboveCap:
            value = "AboveCap"
        return {
            "quantity": self.quantity,
            "value": value,
            "exhaustive": self.exhaustive,
            "nodes": self.nodes_explored,
            "cap": self.cap,
            "config": self.config,
        }


def rotation_choices(g: Graph, v: int) -> list[tuple[int, ...]]:
    """Cyclic orders at ``v`` with the smallest dart first, in lexicographic order."""
    ds = g.darts_at[v]
    if not ds:
        return [()]
    return [(ds[0],) + p for p in itertools.permutations(ds[1:])]


def count_rotation_systems(g: Graph) -> int:
    total = 1
    for d in g.degrees:
        total *= factorial(max(d - 1, 0))
    return total


def enumerate_rotations(g: Graph) -> Iterator[Embedding]:
    """Every orientable rotation system exactly once, lexicographically by vertex."""
    per_vertex = [rotation_choices(g, v) for v in range(g.n)]
    for rot in itertools.product(*per_vertex):
        yield Embedding.orientable(g, rot)


def enumerate_succ(g: Graph, batch: int = 4096) -> Iterator[np.ndarray]:
    """Rotation systems as stacked successor arrays, same order as enumerate_rotations."""
    per_vertex = [rotation_choices(g, v) for v in range(g.n)]
    rows = []
    for rot in itertools.product(*per_vertex):
        succ = np.empty(g.num_darts, dtype=np.int64)
        for r in rot:
            for i, d in enumerate(r):
                succ[d] = r[(i + 1) % len(r)]
        rows.append(succ)
        if len(rows) == batch:
            yield np.stack(rows)
            rows = []
    if rows:
        yield np.stack(rows)


def search_order(g: Graph, root: int | None = None) -> list[int]:
    """BFS order so that faces close early."""
    if root is None:
        root = max(range(g.n), key=lambda v: (g.degree(v), -v))
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for d in g.darts_at[u]:
            w = g.endpoint(d ^ 1)
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    order += [v for v in range(g.n) if v not in seen]
    return order


class _Tables:
    def __init__(self, g: Graph, order: list[int]):
        self.g = g
        self.order = np.asarray(order, dtype=np.int64)
        maxdeg = max(g.degrees) if g.m else 1
        self.vdarts = np.zeros((g.n, maxdeg), dtype=np.int64)
        self.vdeg = np.asarray(g.degrees, dtype=np.int64)
        self.choices = [rotation_choices(g, v) for v in range(g.n)]
        self.choice_start = np.zeros(g.n, dtype=np.int64)
        self.choice_count = np.asarray([len(c) for c in self.choices], dtype=np.int64)
        total = int(self.choice_count.sum())
        self.choice_succ = np.zeros((total, maxdeg), dtype=np.int64)
        self.allowed = np.ones(total, dtype=np.int64)
        pos = 0
        for v in range(g.n):
            ds = g.darts_at[v]
            self.vdarts[v, : len(ds)] = ds
            self.choice_start[v] = pos
            for cyc in self.choices[v]:
                nxt = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
                for j, d in enumerate(ds):
                    self.choice_succ[pos, j] = nxt[d]
                pos += 1
        # mirror images give the same faces reversed: keep one of each pair
        for v in order:
            if len(self.choices[v]) > 1:
                index = {c: i for i, c in enumerate(self.choices[v])}
                for i, c in enumerate(self.choices[v]):
                    mirror = (c[0],) + tuple(reversed(c[1:]))
                    if index[mirror] < i:
                        self.allowed[self.choice_start[v] + i] = 0
                break

    def embedding(self, picks: np.ndarray) -> Embedding:
        return Embedding.orientable(self.g, [self.choices[v][int(picks[v])] for v in range(self.g.n)])

    def prefixes(self, depth: int) -> list[tuple[int, ...]]:
        ranges = []
        for v in self.order[:depth]:
            s = self.choice_start[v]
            ranges.append([i for i in range(self.choice_count[v]) if self.allowed[s + i]])
        return list(itertools.product(*ranges))


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("STRONGGENUS_THREADS", "1")))
    except ValueError:
        return 1


def _search(
    g: Graph,
    quantity: str,
    strong: bool,
    cap: int | None,
    threads: int | None,
    timeout: float | None,
    prune: bool,
    max_nodes: int,
    split_depth: int | None,
) -> SearchResult:
    if not is_connected(g):
        raise ValueError("search needs a connected graph")
    t0 = time.perf_counter()
    threads = threads or default_threads()
    order = search_order(g)
    tables = _Tables(g, order)
    gth = girth(g)
    min_len = 1 if min(g.degrees) < 2 or gth is INFINITE else int(gth)
    floor = 0
    if prune and gth is not INFINITE:
        floor = euler_girth_bound(g.n, g.m, int(gth))[0] if min(g.degrees) >= 2 else 0
    ceiling = max_genus_ub(g.n, g.m)
    limit = ceiling if cap is None else min(cap, ceiling)
    if not prune:
        min_len = 1
        floor = 0

    if split_depth is None:
        split_depth = 0
        count = 1
        while split_depth < g.n and count < 16 * threads and threads > 1:
            v = order[split_depth]
            count *= int(tables.allowed[tables.choice_start[v] : tables.choice_start[v] + tables.choice_count[v]].sum())
            split_depth += 1
    prefixes = tables.prefixes(split_depth)
    control = np.array([0, limit], dtype=np.int64)
    results: list[tuple[int, int, int, np.ndarray] | None] = [None] * len(prefixes)
    lock = threading.Lock()
    settled = threading.Event()

    def run(i: int):
        if control[0]:
            results[i] = (-1, 0, _kernels.STOPPED, None)
            return
        witness = np.full(g.n, -1, dtype=np.int64)
        best, nodes, status = _kernels.bnb_search(
            g.endpoints,
            tables.order,
            tables.vdarts,
            tables.vdeg,
            tables.choice_start,
            tables.choice_count,
            tables.choice_succ,
            tables.allowed,
            np.asarray(prefixes[i], dtype=np.int64),
            strong,
            min_len,
            floor,
            control,
            max_nodes,
            witness,
            prune,
        )
        with lock:
            results[i] = (int(best), int(nodes), int(status), witness)
            # once every earlier subtree is finished, a subtree that hit
            # the floor fixes both the value and the witness
            for r in results:
                if r is None:
                    break
                if r[0] == floor and r[2] == _kernels.DONE:
                    control[0] = 1
                    settled.set()
                    break

    timer = None
    if timeout is not None:
        timer = threading.Timer(timeout, control.__setitem__, (0, 1))
        timer.daemon = True
        timer.start()
    try:
        if threads == 1:
            for i in range(len(prefixes)):
                run(i)
                if settled.is_set():
                    break
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for f in [pool.submit(run, i) for i in range(len(prefixes))]:
                    f.result()
    finally:
        if timer is not None:
            timer.cancel()

    nodes = sum(r[1] for r in results if r is not None)
    value: int | _AboveCap | None = None
    witness = None
    exhaustive = True
    for r in results:
        if r is None:
            if settled.is_set():
                continue
            exhaustive = False
            continue
        best, _, status, wit = r
        if status != _kernels.DONE and not settled.is_set():
            exhaustive = False
        if best >= 0 and (value is None or best < value):
            value = best
            witness = tables.embedding(wit)
    if settled.is_set():
        exhaustive = True
    if value is None and exhaustive:
        value = AboveCap
    return SearchResult(
        quantity=quantity,
        value=value,
        witness=witness,
        nodes_explored=nodes,
        exhaustive=exhaustive,
        cap=cap,
        elapsed=time.perf_counter() - t0,
        config={
            "order": [v + 1 for v in order],
            "split_depth": split_depth,
            "threads": threads,
            "prune": prune,
            "backend": backend(),
            "max_nodes": max_nodes,
            "timeout": timeout,
        },
    )


def min_genus(
    g: Graph,
    cap: int | None = None,
    *,
    threads: int | None = None,
    timeout: float | None = None,
    prune: bool = True,
    max_nodes: int = 0,
    split_depth: int | None = None,
) -> SearchResult:
    """Minimum orientable genus, or ``AboveCap`` when every embedding exceeds ``cap``."""
    return _search(g, "min_genus", False, cap, threads, timeout, prune, max_nodes, split_depth)


def strong_genus(
    g: Graph,
    cap: int | None = None,
    *,
    threads: int | None = None,
    timeout: float | None = None,
    prune: bool = True,
    max_nodes: int = 0,
    split_depth: int | None = None,
) -> SearchResult:
    """Minimum genus of an orientable embedding whose faces are all cycles."""
    return _search(g, "strong_genus", True, cap, threads, timeout, prune, max_nodes, split_depth)
