"""Shared strategies and reference implementations for the test suite.

The helpers here deliberately avoid the library's own algorithms: they work
from definitions with dense numpy matrices or plain loops so they can act as
independent oracles.
"""

from __future__ import annotations

import math
from itertools import permutations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from disjnet import DirectedGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6) -> DirectedGraph:
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return DirectedGraph(n, tuple(rows))


def adjacency(g: DirectedGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in g.arcs():
        a[i, j] = 1
    return a


def eval_by_definition(g: DirectedGraph, x: int) -> int:
    """``f(x)_j`` is the OR of ``x_i`` over arcs ``i -> j``."""
    out = 0
    for j in range(g.n):
        if any((x >> i) & 1 and g.has_arc(i, j) for i in range(g.n)):
            out |= 1 << j
    return out


def floyd_reach(g: DirectedGraph) -> np.ndarray:
    """Reflexive-transitive closure by Floyd-Warshall."""
    r = adjacency(g).astype(bool) | np.eye(g.n, dtype=bool)
    for k in range(g.n):
        r = r | (r[:, [k]] & r[[k], :])
    return r


def strong_by_floyd(g: DirectedGraph) -> bool:
    return bool(floyd_reach(g).all())


def closed_walk_gcd(g: DirectedGraph) -> int:
    """gcd of k <= n with a closed walk of length k; 0 if none."""
    a = adjacency(g)
    power = np.eye(g.n, dtype=np.int64)
    result = 0
    for k in range(1, g.n + 1):
        power = np.minimum(power @ a, 1)
        if np.trace(power) > 0:
            result = math.gcd(result, k)
    return result


def isomorphic(g: DirectedGraph, h: DirectedGraph) -> bool:
    if g.n != h.n or g.arc_count != h.arc_count:
        return False
    if sorted(g.in_degrees()) != sorted(h.in_degrees()):
        return False
    target = set(h.arcs())
    for perm in permutations(range(g.n)):
        if all((perm[i], perm[j]) in target for i, j in g.arcs()):
            return True
    return False


def has_cycle_cover_by_search(g: DirectedGraph) -> bool:
    return any(all(g.has_arc(i, p[i]) for i in range(g.n)) for p in permutations(range(g.n)))


def table_of(g: DirectedGraph) -> list[int]:
    return [eval_by_definition(g, s) for s in range(1 << g.n)]


@pytest.fixture
def rng():
    import random

    return random.Random(7)
