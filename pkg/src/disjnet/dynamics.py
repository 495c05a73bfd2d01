"""Image, periodic and fixed points of disjunctive networks.

The fast paths here use graph structure only:

* image points through the unique maximal preimage,
* periodic points of strong graphs as unions of cyclic classes,
* fixed points of nontrivial graphs as the up-sets of the reachability
  preorder, which form a finite topology.

Graphs outside a fast path's hypothesis fall back to the brute-force oracle
and say so in the result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from disjnet.bits import full_mask, iter_bits, to_sorted
from disjnet.errors import InputError, PreconditionError, ResourceError
from disjnet.graph import (
    DirectedGraph,
    is_nontrivial,
    is_strong,
    loop_number,
    partition_classes,
    reachable_from,
    scc,
)
from disjnet.limits import ORACLE_CAP, POINT_CAP, check_cap
from disjnet.network import Configuration, DisjunctiveNetwork, _coerce, disjunctive_table
from disjnet.oracle import build_functional_graph, oracle_fixed_set


def _vertex_mask(vertices: int | Configuration | Iterable[int], n: int) -> int:
    if isinstance(vertices, (int, Configuration)):
        return _coerce(vertices, n)
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise InputError(f"vertex {v} outside 0..{n - 1}")
        mask |= 1 << v
    return mask


# --------------------------------------------------------------------------
# image points


def maximal_preimage(f: DisjunctiveNetwork, x: Configuration | int) -> int:
    """``Y* = [n] \\ N^in([n] \\ X)``: the vertices sending no arc outside ``X``."""
    g = f.graph
    bits = _coerce(x, g.n)
    top = full_mask(g.n)
    return top & ~g.in_neighbours(top & ~bits)


def is_image_point(f: DisjunctiveNetwork, x: Configuration | int) -> bool:
    bits = _coerce(x, f.n)
    return f.graph.out_neighbours(maximal_preimage(f, bits)) == bits


def image_set(f: DisjunctiveNetwork, cap: int = ORACLE_CAP) -> frozenset[int]:
    check_cap(f.n, cap, "image_set")
    return frozenset(disjunctive_table(f.graph))


def image_points_by_test(f: DisjunctiveNetwork, cap: int = ORACLE_CAP) -> frozenset[int]:
    """The image set assembled from :func:`is_image_point` over every subset."""
    check_cap(f.n, cap, "image_points_by_test")
    return frozenset(x for x in range(1 << f.n) if is_image_point(f, x))


# --------------------------------------------------------------------------
# periodic points


@dataclass(frozen=True)
class PeriodicStructure:
    """Periodic points with their periods.

    ``method`` is ``"d-partite"`` when the points were built from the cyclic
    classes of a strong graph and ``"brute-force"`` when the oracle was used.
    ``periodic_points`` and ``periods`` are ``None`` in counts-only mode.
    """

    loop_number: int
    classes: tuple[int, ...]
    count: int
    periodic_points: frozenset[int] | None
    periods: dict[int, int] | None
    method: str


def _rotation_period(index_set: int, length: int) -> int:
    full = full_mask(length)
    for p in range(1, length + 1):
        if length % p:
            continue
        rotated = ((index_set << p) | (index_set >> (length - p))) & full
        if rotated == index_set:
            return p
    return length


def periodic_structure(
    f: DisjunctiveNetwork, point_cap: int = POINT_CAP, cap: int = ORACLE_CAP
) -> PeriodicStructure:
    g = f.graph
    period = loop_number(g)
    if period == 0:
        raise PreconditionError("graph is acyclic; its only periodic point is the empty set")
    if is_strong(g):
        classes = tuple(partition_classes(g))
        count = 1 << period
        if count > point_cap:
            return PeriodicStructure(period, classes, count, None, None, "d-partite")
        periods = {}
        for index_set in range(count):
            point = 0
            for i in iter_bits(index_set):
                point |= classes[i]
            # f maps V_i onto V_{i+1}, so f acts on index sets by rotation.
            periods[point] = _rotation_period(index_set, period)
        return PeriodicStructure(period, classes, count, frozenset(periods), periods, "d-partite")
    fg = build_functional_graph(f, cap)
    points = fg.cycle_states()
    if len(points) > point_cap:
        return PeriodicStructure(period, (), len(points), None, None, "brute-force")
    periods = {s: fg.period[s] for s in points}
    return PeriodicStructure(period, (), len(points), points, periods, "brute-force")


def dpartite_sets(g: DirectedGraph) -> frozenset[int]:
    """All unions of cyclic classes of a strong graph."""
    classes = partition_classes(g)
    out = set()
    for index_set in range(1 << len(classes)):
        point = 0
        for i in iter_bits(index_set):
            point |= classes[i]
        out.add(point)
    return frozenset(out)


def period_of_point(f: DisjunctiveNetwork, x: Configuration | int) -> int:
    start = _coerce(x, f.n)
    seen = {start}
    state = f.graph.out_neighbours(start)
    steps = 1
    while state != start:
        if state in seen:
            raise PreconditionError(f"state {start} is not periodic")
        seen.add(state)
        state = f.graph.out_neighbours(state)
        steps += 1
    return steps


def transient_length(f: DisjunctiveNetwork, x: Configuration | int, cap: int = ORACLE_CAP) -> int:
    """Smallest ``t`` such that ``f^t(x)`` is periodic."""
    check_cap(f.n, cap, "transient_length")
    state = _coerce(x, f.n)
    first_visit: dict[int, int] = {}
    step = 0
    while state not in first_visit:
        first_visit[state] = step
        state = f.graph.out_neighbours(state)
        step += 1
    return first_visit[state]


# --------------------------------------------------------------------------
# fixed points and finite topologies


@dataclass(frozen=True)
class Topology:
    """A finite topology on ``0..n-1``; open sets are vertex bitmasks."""

    n: int
    opens: frozenset[int]

    def __post_init__(self) -> None:
        top = full_mask(self.n)
        for s in self.opens:
            if s < 0 or s & ~top:
                raise InputError(f"open set {s:#x} has vertices outside 0..{self.n - 1}")
        if 0 not in self.opens or top not in self.opens:
            raise InputError("a topology must contain the empty set and the full set")

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> Topology:
        return cls(n, frozenset(_vertex_mask(s, n) for s in sets))

    def as_sets(self) -> list[list[int]]:
        """Sorted list of sorted vertex lists (the JSON form)."""
        return sorted((to_sorted(s) for s in self.opens), key=lambda s: (len(s), s))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "opens": self.as_sets()})

    @classmethod
    def from_json(cls, text: str) -> Topology:
        data = json.loads(text)
        return cls.from_sets(int(data["n"]), data["opens"])

    def __len__(self) -> int:
        return len(self.opens)

    def __contains__(self, item: int) -> bool:
        return item in self.opens

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.opens))


def upset_closure(g: DirectedGraph, vertices: int | Configuration | Iterable[int]) -> int:
    """Vertices reachable from the given set, the set itself included."""
    return reachable_from(g, _vertex_mask(vertices, g.n))


def _upsets(g: DirectedGraph, limit: int) -> list[int]:
    # Up-closed unions of strong components.  Components are visited sinks
    # first; a component may join only if all of its successors already did,
    # so every branch of the recursion ends in a distinct up-set.
    dec = scc(g)
    succ = dec.condensation.out_rows
    comps = dec.components
    found: list[int] = []

    def extend(c: int, chosen: int, vertices: int) -> None:
        if c < 0:
            found.append(vertices)
            if len(found) > limit:
                raise ResourceError(f"more than {limit} fixed points; raise the point limit")
            return
        extend(c - 1, chosen, vertices)
        if succ[c] & ~chosen == 0:
            extend(c - 1, chosen | (1 << c), vertices | comps[c])

    extend(len(comps) - 1, 0, 0)
    return found


def fixed_points(
    f: DisjunctiveNetwork, limit: int = 1 << 20, cap: int = ORACLE_CAP
) -> Topology | frozenset[int]:
    """Fixed points; a :class:`Topology` when the graph is nontrivial.

    On graphs with a vertex outside every cycle the oracle is used and a plain
    frozenset of states is returned instead.
    """
    g = f.graph
    if is_nontrivial(g):
        return Topology(g.n, frozenset(_upsets(g, limit)))
    return oracle_fixed_set(f, cap)


def is_topology(t: Iterable[int | Iterable[int]], n: int) -> bool:
    members = {_vertex_mask(s, n) for s in t}
    top = full_mask(n)
    if 0 not in members or top not in members:
        return False
    ordered = sorted(members)
    for k, a in enumerate(ordered):
        for b in ordered[k + 1 :]:
            if a | b not in members or a & b not in members:
                return False
    return True


def graph_from_topology(t: Topology) -> DirectedGraph:
    """Graph with arc ``(i, j)`` iff ``j`` lies in the smallest open set containing ``i``.

    Every vertex gets a loop, so the graph is nontrivial and its fixed points
    are exactly the open sets of ``t``.
    """
    if not is_topology(t.opens, t.n):
        raise InputError("graph_from_topology needs a topology")
    top = full_mask(t.n)
    rows = []
    for i in range(t.n):
        smallest = top
        for s in t.opens:
            if (s >> i) & 1:
                smallest &= s
        rows.append(smallest)
    return DirectedGraph(t.n, tuple(rows))
