"""Brute-force reference over the full state space.

Nothing here uses the structural characterisations; every answer comes from
walking the ``2**n`` successor map.  Fast paths elsewhere are tested against
these functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from disjnet.bits import full_mask
from disjnet.errors import ResourceError
from disjnet.limits import ORACLE_CAP, check_cap
from disjnet.network import Network, TruthTableNetwork, as_truth_table, power


@dataclass(frozen=True)
class FunctionalGraph:
    """The map ``s -> f(s)`` with cycle membership, transients and periods.

    ``period[s]`` is 0 for states that are not on a cycle.
    """

    n: int
    successor: tuple[int, ...]
    on_cycle: bytes
    transient: tuple[int, ...]
    period: tuple[int, ...]

    def cycle_states(self) -> frozenset[int]:
        return frozenset(s for s, flag in enumerate(self.on_cycle) if flag)


def build_functional_graph(f: Network, cap: int = ORACLE_CAP) -> FunctionalGraph:
    check_cap(f.n, cap, "build_functional_graph")
    succ = as_truth_table(f, cap).table
    size = len(succ)
    colour = bytearray(size)  # 0 unseen, 1 on the current walk, 2 finished
    on_cycle = bytearray(size)
    transient = [0] * size
    period = [0] * size
    for start in range(size):
        if colour[start]:
            continue
        path = []
        position = {}
        v = start
        while not colour[v]:
            colour[v] = 1
            position[v] = len(path)
            path.append(v)
            v = succ[v]
        if colour[v] == 1:
            first = position[v]
            loop = path[first:]
            for u in loop:
                on_cycle[u] = 1
                period[u] = len(loop)
            tail = path[:first]
        else:
            tail = path
        depth = transient[v]
        for u in reversed(tail):
            depth += 1
            transient[u] = depth
        for u in path:
            colour[u] = 2
    return FunctionalGraph(f.n, tuple(succ), bytes(on_cycle), tuple(transient), tuple(period))


def oracle_image_set(f: Network, cap: int = ORACLE_CAP) -> frozenset[int]:
    check_cap(f.n, cap, "oracle_image_set")
    return frozenset(as_truth_table(f, cap).table)


def oracle_periodic_set(f: Network, cap: int = ORACLE_CAP) -> frozenset[int]:
    return build_functional_graph(f, cap).cycle_states()


def oracle_fixed_set(f: Network, cap: int = ORACLE_CAP) -> frozenset[int]:
    check_cap(f.n, cap, "oracle_fixed_set")
    return frozenset(s for s, v in enumerate(as_truth_table(f, cap).table) if s == v)


def oracle_preimages(f: Network, x: int, cap: int = ORACLE_CAP) -> list[int]:
    check_cap(f.n, cap, "oracle_preimages")
    return [s for s, v in enumerate(as_truth_table(f, cap).table) if v == x]


def image_of_power(f: Network, k: int, cap: int = ORACLE_CAP) -> frozenset[int]:
    """Image of ``f**k``, with the power taken by repeated squaring of the table."""
    check_cap(f.n, cap, "image_of_power")
    return frozenset(power(as_truth_table(f, cap), k).table)


def oracle_orbit_transient(f: Network, x: int, cap: int = ORACLE_CAP) -> int:
    """Steps from ``x`` until the orbit first hits a periodic state."""
    return build_functional_graph(f, cap).transient[x]


def all_topologies(n: int) -> list[frozenset[int]]:
    """Every topology on ``n`` points, by filtering all families of subsets.

    Families always contain the empty set and the full set; the remaining
    ``2**n - 2`` subsets are switched on and off exhaustively, so this is only
    usable for ``n <= 4``.
    """
    if n > 4:
        raise ResourceError("all_topologies enumerates 2**(2**n - 2) families; n <= 4 only")
    top = full_mask(n)
    middle = [s for s in range(1, top)] if n else []
    found = []
    for choice in range(1 << len(middle)):
        family = {0, top}
        for k, s in enumerate(middle):
            if (choice >> k) & 1:
                family.add(s)
        if all(a | b in family and a & b in family for a, b in combinations(family, 2)):
            found.append(frozenset(family))
    return found


def is_lattice_of_fixed_points(f: TruthTableNetwork) -> tuple[int, int] | None:
    """Least and greatest fixed point under ``<=`` if both exist and are unique."""
    fixed = [s for s, v in enumerate(f.table) if s == v]
    if not fixed:
        return None
    minimal = [a for a in fixed if not any(b != a and b & ~a == 0 for b in fixed)]
    maximal = [a for a in fixed if not any(b != a and a & ~b == 0 for b in fixed)]
    if len(minimal) != 1 or len(maximal) != 1:
        return None
    return minimal[0], maximal[0]
