"""Named graph families and the near-cyclic recogniser.

Families (0-based labels):

* ``cycle(n)``: ``C_n``, arcs ``(i, i+1 mod n)``; ``C_1`` is a single loop.
* ``chorded_cycle(p, q)``: ``A_{p,q}``, ``C_p`` plus the chord ``(0, q)``.
* ``link_of_cycles(s, t)``: ``B_{s,t}``, ``C_s`` on ``0..s-1``, ``C_t`` on
  ``s..s+t-1`` and the single arc ``(0, s)``.
* ``g_n(n)``: ``G_n = B_{1,1} + C_1 + ... + C_1``, loops everywhere plus ``(0, 1)``.
* ``transitive_tournament(a)``: ``T_a``, arcs ``(i, j)`` for all ``i <= j``.
* ``empty(c)``: ``E_c``, no arcs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterator

from disjnet.bits import popcount
from disjnet.errors import InputError
from disjnet.graph import (
    DirectedGraph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    weak_components,
)


def cycle(n: int) -> DirectedGraph:
    if n < 1:
        raise InputError(f"cycle needs n >= 1, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def chorded_cycle(p: int, q: int) -> DirectedGraph:
    if p < 1 or not 0 <= q <= p - 1:
        raise InputError(f"chorded_cycle needs p >= 1 and 0 <= q <= p-1, got p={p}, q={q}")
    return from_edge_list(p, [(i, (i + 1) % p) for i in range(p)] + [(0, q)])


def link_of_cycles(s: int, t: int) -> DirectedGraph:
    if s < 1 or t < 1:
        raise InputError(f"link_of_cycles needs s, t >= 1, got s={s}, t={t}")
    arcs = [(i, (i + 1) % s) for i in range(s)]
    arcs += [(s + i, s + (i + 1) % t) for i in range(t)]
    arcs.append((0, s))
    return from_edge_list(s + t, arcs)


def g_n(n: int) -> DirectedGraph:
    if n < 2:
        raise InputError(f"g_n needs n >= 2, got {n}")
    return from_edge_list(n, [(i, i) for i in range(n)] + [(0, 1)])


def transitive_tournament(a: int) -> DirectedGraph:
    if a < 0:
        raise InputError(f"transitive_tournament needs a >= 0, got {a}")
    return from_edge_list(a, [(i, j) for i in range(a) for j in range(i, a)])


def empty(c: int) -> DirectedGraph:
    if c < 0:
        raise InputError(f"empty needs c >= 0, got {c}")
    return empty_graph(c)


FAMILIES = {
    "cycle": (cycle, 1),
    "chorded_cycle": (chorded_cycle, 2),
    "link_of_cycles": (link_of_cycles, 2),
    "g_n": (g_n, 1),
    "transitive_tournament": (transitive_tournament, 1),
    "empty": (empty, 1),
}

ALIASES = {
    "c": "cycle",
    "a": "chorded_cycle",
    "b": "link_of_cycles",
    "g": "g_n",
    "t": "transitive_tournament",
    "e": "empty",
}


def make_graph(family: str, *params: int) -> DirectedGraph:
    name = ALIASES.get(family, family)
    if name not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    builder, arity = FAMILIES[name]
    if len(params) != arity:
        raise InputError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def parse_family_spec(spec: str) -> DirectedGraph:
    """Parse ``name:p1,p2+name:p...`` into the disjoint union of the parts.

    >>> parse_family_spec("b:1,1+cycle:2").n
    4
    """
    parts = []
    for chunk in spec.split("+"):
        chunk = chunk.strip()
        name, _, args = chunk.partition(":")
        try:
            params = [int(a) for a in args.split(",")] if args else []
        except ValueError:
            raise InputError(f"bad parameters in family spec {chunk!r}") from None
        parts.append(make_graph(name.strip(), *params))
    if not parts:
        raise InputError("empty family spec")
    return reduce(disjoint_union, parts)


# --------------------------------------------------------------------------
# near-cyclic recognition


@dataclass(frozen=True)
class NearCyclicWitness:
    """``kind`` is ``"A"`` (params ``(p, q)``) or ``"B"`` (params ``(s, t)``)."""

    kind: str
    params: tuple[int, int]
    cycles: tuple[int, ...] = field(default=())

    def __str__(self) -> str:
        parts = [f"{self.kind}_{{{self.params[0]},{self.params[1]}}}"]
        parts += [f"C_{c}" for c in self.cycles]
        return " + ".join(parts)


def _cycle_length(g: DirectedGraph) -> int | None:
    """Length if ``g`` is a single directed cycle through all its vertices."""
    if g.n == 0 or any(popcount(r) != 1 for r in g.out_rows):
        return None
    if any(popcount(c) != 1 for c in g.in_rows):
        return None
    v, steps = 0, 0
    while True:
        v = g.out_rows[v].bit_length() - 1
        steps += 1
        if v == 0:
            break
    return steps if steps == g.n else None


def _cycle_order(rows: list[int], start: int) -> list[int]:
    order = [start]
    v = rows[start].bit_length() - 1
    while v != start:
        order.append(v)
        v = rows[v].bit_length() - 1
    return order


def _match_special(g: DirectedGraph) -> NearCyclicWitness | None:
    """Match a weakly connected ``g`` against ``A_{p,q}`` (q != 1) or ``B_{s,t}``."""
    # Shape fingerprint: k vertices, k+1 arcs, one vertex of out-degree 2 and
    # one of in-degree 2, everything else degree (1, 1).
    if g.arc_count != g.n + 1:
        return None
    outdeg, indeg = g.out_degrees(), g.in_degrees()
    heads = [v for v in g.vertices if outdeg[v] == 2]
    tails = [v for v in g.vertices if indeg[v] == 2]
    if len(heads) != 1 or len(tails) != 1:
        return None
    if any(d not in (1, 2) for d in outdeg) or any(d not in (1, 2) for d in indeg):
        return None
    u, v = heads[0], tails[0]
    if not g.has_arc(u, v):
        return None
    rows = list(g.out_rows)
    rows[u] &= ~(1 << v)
    rest = DirectedGraph(g.n, tuple(rows))
    if any(popcount(c) != 1 for c in rest.in_rows):
        return None
    around_u = _cycle_order(rows, u)
    if len(around_u) == g.n:
        return NearCyclicWitness("A", (g.n, around_u.index(v) if v != u else 0))
    if v in around_u:
        return None
    around_v = _cycle_order(rows, v)
    if len(around_u) + len(around_v) != g.n:
        return None
    return NearCyclicWitness("B", (len(around_u), len(around_v)))


def is_near_cyclic(g: DirectedGraph) -> tuple[bool, NearCyclicWitness | None]:
    """Decide whether ``g`` is ``A_{p,q}`` or ``B_{s,t}`` plus disjoint cycles, up to isomorphism.

    ``A_{p,1}`` (and ``A_{1,0}``) coincide with ``C_p``; such a component
    counts as a cycle, so a disjoint union of cycles is not near-cyclic.
    """
    special: NearCyclicWitness | None = None
    cycles = []
    for comp in weak_components(g):
        sub, _ = induced_subgraph(g, comp)
        length = _cycle_length(sub)
        if length is not None:
            cycles.append(length)
            continue
        match = _match_special(sub)
        if match is None or special is not None:
            return False, None
        special = match
    if special is None:
        return False, None
    return True, NearCyclicWitness(special.kind, special.params, tuple(sorted(cycles)))


def _partitions(total: int, largest: int | None = None) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    top = total if largest is None else min(largest, total)
    for part in range(top, 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


def near_cyclic_members(n: int) -> Iterator[tuple[NearCyclicWitness, DirectedGraph]]:
    """Every near-cyclic graph on ``n`` vertices, one per isomorphism class."""
    for k in range(1, n + 1):
        specials = [(NearCyclicWitness("A", (k, q)), chorded_cycle(k, q)) for q in range(k) if q != 1 % k]
        specials += [
            (NearCyclicWitness("B", (s, k - s)), link_of_cycles(s, k - s)) for s in range(1, k)
        ]
        for witness, base in specials:
            for parts in _partitions(n - k):
                graph = base
                for c in parts:
                    graph = disjoint_union(graph, cycle(c))
                yield NearCyclicWitness(witness.kind, witness.params, tuple(sorted(parts))), graph


def cycle_type(g: DirectedGraph) -> Counter[int] | None:
    """Multiset of cycle lengths if ``g`` is a disjoint union of cycles."""
    lengths: Counter[int] = Counter()
    for comp in weak_components(g):
        sub, _ = induced_subgraph(g, comp)
        length = _cycle_length(sub)
        if length is None:
            return None
        lengths[length] += 1
    return lengths


def describe(g: DirectedGraph) -> str:
    ok, witness = is_near_cyclic(g)
    if ok:
        return str(witness)
    lengths = cycle_type(g)
    if lengths is not None:
        return " + ".join(f"C_{c}" for c in sorted(lengths.elements())) or "empty"
    return f"graph(n={g.n}, arcs={g.arc_count})"


__all__ = [
    "ALIASES",
    "FAMILIES",
    "NearCyclicWitness",
    "chorded_cycle",
    "cycle",
    "cycle_type",
    "describe",
    "empty",
    "g_n",
    "is_near_cyclic",
    "link_of_cycles",
    "make_graph",
    "near_cyclic_members",
    "parse_family_spec",
    "transitive_tournament",
]
