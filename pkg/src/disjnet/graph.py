"""Directed graphs stored as out/in bitset rows.

A :class:`DirectedGraph` is also the Boolean adjacency matrix of the graph:
``out_rows[i]`` is row ``i`` and ``in_rows[j]`` is column ``j``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from disjnet.bits import full_mask, iter_bits, popcount, union_of_rows
from disjnet.errors import InputError, PreconditionError
from disjnet.limits import MAX_VERTICES


def _transpose(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    cols = [0] * n
    for i, row in enumerate(rows):
        bit = 1 << i
        for j in iter_bits(row):
            cols[j] |= bit
    return tuple(cols)


@dataclass(frozen=True)
class DirectedGraph:
    """Digraph on vertices ``0..n-1``; bit ``j`` of ``out_rows[i]`` is arc ``(i, j)``."""

    n: int
    out_rows: tuple[int, ...]
    in_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        rows = tuple(self.out_rows)
        if self.n < 0 or len(rows) != self.n:
            raise InputError(f"expected {self.n} rows, got {len(rows)}")
        limit = full_mask(self.n)
        for i, row in enumerate(rows):
            if row < 0 or row & ~limit:
                raise InputError(f"row {i} has bits outside 0..{self.n - 1}")
        object.__setattr__(self, "out_rows", rows)
        object.__setattr__(self, "in_rows", _transpose(self.n, rows))

    @classmethod
    def from_index(cls, n: int, index: int) -> DirectedGraph:
        """Decode the enumeration index used by exhaustive scans (bit ``i*n + j`` is arc ``(i, j)``)."""
        mask = full_mask(n)
        return cls(n, tuple((index >> (i * n)) & mask for i in range(n)))

    def to_index(self) -> int:
        index = 0
        for i, row in enumerate(self.out_rows):
            index |= row << (i * self.n)
        return index

    @property
    def vertices(self) -> range:
        return range(self.n)

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.out_rows) for j in iter_bits(row)]

    @property
    def arc_count(self) -> int:
        return sum(popcount(row) for row in self.out_rows)

    def has_arc(self, i: int, j: int) -> bool:
        return bool((self.out_rows[i] >> j) & 1)

    def out_neighbours(self, vertices: int) -> int:
        """``N^out`` of a vertex set given as a bitmask."""
        return union_of_rows(self.out_rows, vertices)

    def in_neighbours(self, vertices: int) -> int:
        """``N^in`` of a vertex set given as a bitmask."""
        return union_of_rows(self.in_rows, vertices)

    def in_degrees(self) -> list[int]:
        return [popcount(col) for col in self.in_rows]

    def out_degrees(self) -> list[int]:
        return [popcount(row) for row in self.out_rows]

    def transpose(self) -> DirectedGraph:
        return DirectedGraph(self.n, self.in_rows)

    def relabel(self, perm: Sequence[int]) -> DirectedGraph:
        """Graph with vertex ``i`` renamed to ``perm[i]``."""
        rows = [0] * self.n
        for i, j in self.arcs():
            rows[perm[i]] |= 1 << perm[j]
        return DirectedGraph(self.n, tuple(rows))

    def __str__(self) -> str:
        arcs = ", ".join(f"{i}->{j}" for i, j in self.arcs())
        return f"DirectedGraph(n={self.n}, arcs=[{arcs}])"


def from_edge_list(
    n: int, arcs: Iterable[tuple[int, int]], max_n: int = MAX_VERTICES
) -> DirectedGraph:
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    if n > max_n:
        raise InputError(f"n={n} exceeds the vertex cap {max_n}")
    rows = [0] * n
    for pair in arcs:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"arc {(i, j)} has an endpoint outside 0..{n - 1}")
        rows[i] |= 1 << j
    return DirectedGraph(n, tuple(rows))


def empty_graph(n: int) -> DirectedGraph:
    return DirectedGraph(n, (0,) * n)


def identity_graph(n: int) -> DirectedGraph:
    return DirectedGraph(n, tuple(1 << i for i in range(n)))


def disjoint_union(g: DirectedGraph, h: DirectedGraph) -> DirectedGraph:
    shift = g.n
    return DirectedGraph(g.n + h.n, g.out_rows + tuple(row << shift for row in h.out_rows))


# --------------------------------------------------------------------------
# strong components


@dataclass(frozen=True)
class SccDecomposition:
    """Strong components indexed in a topological order of the condensation.

    ``components[c]`` is a vertex bitmask; ``component_of[v]`` is the index of
    the component holding ``v``.  Arcs of ``condensation`` always go from a
    lower to a higher index, so ``topo_order`` is simply ``0..k-1``.
    """

    components: tuple[int, ...]
    condensation: DirectedGraph
    topo_order: tuple[int, ...]
    component_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.components)


def _tarjan(g: DirectedGraph) -> list[int]:
    """Strong components as bitmasks, sinks first (Tarjan, iterative)."""
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    found: list[int] = []
    counter = 0
    for root in range(g.n):
        if index[root] != -1:
            continue
        work = [(root, iter(iter_bits(g.out_rows[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, succ = work[-1]
            advanced = False
            for w in succ:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(iter_bits(g.out_rows[w]))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp |= 1 << w
                    if w == v:
                        break
                found.append(comp)
    return found


def scc(g: DirectedGraph) -> SccDecomposition:
    comps = tuple(reversed(_tarjan(g)))
    component_of = [0] * g.n
    for c, comp in enumerate(comps):
        for v in iter_bits(comp):
            component_of[v] = c
    rows = [0] * len(comps)
    for i, j in g.arcs():
        ci, cj = component_of[i], component_of[j]
        if ci != cj:
            rows[ci] |= 1 << cj
    condensation = DirectedGraph(len(comps), tuple(rows))
    return SccDecomposition(comps, condensation, tuple(range(len(comps))), tuple(component_of))


def is_strong(g: DirectedGraph) -> bool:
    return len(_tarjan(g)) <= 1


def _bfs_levels(g: DirectedGraph, root: int, within: int) -> dict[int, int]:
    level = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in iter_bits(g.out_rows[v] & within):
            if w not in level:
                level[w] = level[v] + 1
                queue.append(w)
    return level


def _component_period(g: DirectedGraph, comp: int) -> int:
    # Every closed walk inside a strong component has length divisible by the
    # gcd of (level[u] + 1 - level[v]) over its arcs, and that gcd is attained.
    root = next(iter_bits(comp))
    level = _bfs_levels(g, root, comp)
    period = 0
    for u in iter_bits(comp):
        for v in iter_bits(g.out_rows[u] & comp):
            period = math.gcd(period, abs(level[u] + 1 - level[v]))
    return period


def loop_number(g: DirectedGraph) -> int:
    """gcd of all cycle lengths of ``g``; 0 when ``g`` is acyclic."""
    result = 0
    for comp in _tarjan(g):
        result = math.gcd(result, _component_period(g, comp))
    return result


def is_primitive(g: DirectedGraph) -> bool:
    return is_strong(g) and loop_number(g) == 1


def partition_classes(g: DirectedGraph) -> list[int]:
    """Cyclic classes ``V_0..V_{l-1}`` of a strong graph, as bitmasks.

    ``N^out(V_i) = V_{i+1 mod l}`` and vertex 0 lies in ``V_0``.
    """
    if g.n == 0 or not is_strong(g):
        raise PreconditionError("partition_classes needs a strong graph")
    period = loop_number(g)
    if period == 0:
        raise PreconditionError("partition_classes needs a graph with a cycle")
    level = _bfs_levels(g, 0, full_mask(g.n))
    classes = [0] * period
    for v, depth in level.items():
        classes[depth % period] |= 1 << v
    return classes


# --------------------------------------------------------------------------
# structural predicates


@dataclass(frozen=True)
class StructuralSummary:
    is_strong: bool
    is_nontrivial: bool
    is_reflexive: bool
    sources: frozenset[int]
    sinks: frozenset[int]
    in_degrees: tuple[int, ...]


def cyclic_vertices(g: DirectedGraph) -> int:
    """Bitmask of vertices lying on some cycle."""
    mask = 0
    for comp in _tarjan(g):
        if comp & (comp - 1):
            mask |= comp
        else:
            v = comp.bit_length() - 1
            if g.has_arc(v, v):
                mask |= comp
    return mask


def is_nontrivial(g: DirectedGraph) -> bool:
    return cyclic_vertices(g) == full_mask(g.n)


def structural_predicates(g: DirectedGraph) -> StructuralSummary:
    return StructuralSummary(
        is_strong=is_strong(g),
        is_nontrivial=is_nontrivial(g),
        is_reflexive=all(g.has_arc(i, i) for i in g.vertices),
        sources=frozenset(i for i in g.vertices if not g.in_rows[i]),
        sinks=frozenset(i for i in g.vertices if not g.out_rows[i]),
        in_degrees=tuple(g.in_degrees()),
    )


def coverable_by_cycles(g: DirectedGraph) -> tuple[bool, list[int] | None]:
    """Find ``pi`` with arc ``(i, pi[i])`` for every ``i`` (a cycle cover).

    Kuhn's augmenting-path matching between vertices and their
    out-neighbourhoods.  Returns ``(False, None)`` when no cover exists.
    """
    match_of_target = [-1] * g.n

    def augment(i: int, seen: list[bool]) -> bool:
        for j in iter_bits(g.out_rows[i]):
            if seen[j]:
                continue
            seen[j] = True
            if match_of_target[j] == -1 or augment(match_of_target[j], seen):
                match_of_target[j] = i
                return True
        return False

    for i in g.vertices:
        if not augment(i, [False] * g.n):
            return False, None
    perm = [0] * g.n
    for j, i in enumerate(match_of_target):
        perm[i] = j
    return True, perm


def reachable_from(g: DirectedGraph, start: int) -> int:
    """Vertices reachable from the set ``start`` by paths of length >= 0."""
    seen = start
    frontier = start
    while frontier:
        frontier = g.out_neighbours(frontier) & ~seen
        seen |= frontier
    return seen


def weak_components(g: DirectedGraph) -> list[int]:
    """Weakly connected components as bitmasks, ordered by lowest vertex."""
    remaining = full_mask(g.n)
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            frontier = (g.out_neighbours(frontier) | g.in_neighbours(frontier)) & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def induced_subgraph(g: DirectedGraph, vertices: int) -> tuple[DirectedGraph, list[int]]:
    """Subgraph on ``vertices``, relabelled ``0..k-1`` in increasing order; also returns the old labels."""
    labels = list(iter_bits(vertices))
    position = {v: k for k, v in enumerate(labels)}
    rows = []
    for v in labels:
        row = 0
        for w in iter_bits(g.out_rows[v] & vertices):
            row |= 1 << position[w]
        rows.append(row)
    return DirectedGraph(len(labels), tuple(rows)), labels
