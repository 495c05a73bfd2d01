"""Seeded generators and exhaustive enumerators of graphs and networks."""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from disjnet.bits import full_mask, iter_bits
from disjnet.graph import DirectedGraph, is_strong
from disjnet.network import TruthTableNetwork, disjunctive_table

DEFAULT_SEED = 20201


def rng_for(seed: int | None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def all_digraphs(n: int) -> Iterator[DirectedGraph]:
    for index in range(1 << (n * n)):
        yield DirectedGraph.from_index(n, index)


def random_graph(n: int, rng: random.Random, density: float | None = None) -> DirectedGraph:
    if density is None:
        density = rng.uniform(0.05, 0.6)
    rows = []
    for _ in range(n):
        row = 0
        for j in range(n):
            if rng.random() < density:
                row |= 1 << j
        rows.append(row)
    return DirectedGraph(n, tuple(rows))


def _cycle_cover_arcs(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [0] * n
    for i in range(n):
        rows[i] |= 1 << perm[i]
    return rows


def random_nontrivial_graph(n: int, rng: random.Random, density: float | None = None) -> DirectedGraph:
    """A random graph plus a random cycle cover, so every vertex is on a cycle."""
    base = random_graph(n, rng, density)
    cover = _cycle_cover_arcs(n, rng)
    return DirectedGraph(n, tuple(a | b for a, b in zip(base.out_rows, cover)))


def random_strong_graph(n: int, rng: random.Random) -> DirectedGraph:
    """Random strong graph with a cycle; about half are layered so the loop number exceeds 1."""
    if n == 1:
        return DirectedGraph(1, (1,))
    while True:
        if rng.random() < 0.5:
            order = list(range(n))
            rng.shuffle(order)
            rows = [0] * n
            for k in range(n):
                rows[order[k]] |= 1 << order[(k + 1) % n]
            density = rng.uniform(0.0, 0.3)
            for i in range(n):
                for j in range(n):
                    if rng.random() < density:
                        rows[i] |= 1 << j
            return DirectedGraph(n, tuple(rows))
        # Layered: arcs only from class c to class c + 1 (mod layers).
        layers = rng.randint(2, n)
        order = list(range(n))
        rng.shuffle(order)
        cls = {}
        for k, v in enumerate(order):
            cls[v] = k if k < layers else rng.randrange(layers)
        density = rng.uniform(0.3, 0.8)
        rows = [0] * n
        for i in range(n):
            for j in range(n):
                if cls[j] == (cls[i] + 1) % layers and rng.random() < density:
                    rows[i] |= 1 << j
        g = DirectedGraph(n, tuple(rows))
        if is_strong(g):
            return g


def random_table(n: int, rng: random.Random) -> TruthTableNetwork:
    top = full_mask(n)
    return TruthTableNetwork(n, tuple(rng.randint(0, top) for _ in range(1 << n)))


def _random_monotone_coordinate(n: int, rng: random.Random, allow_constant: bool) -> list[int]:
    """Truth column of a random monotone DNF, as a list of 0/1 over states."""
    terms = []
    count = rng.randint(0 if allow_constant else 1, 3)
    for _ in range(count):
        size = rng.randint(0 if allow_constant else 1, max(1, min(n, 3)))
        terms.append(sum(1 << v for v in rng.sample(range(n), min(size, n))))
    return [int(any(s & t == t for t in terms)) for s in range(1 << n)]


def random_monotone_table(n: int, rng: random.Random, allow_constant: bool = True) -> TruthTableNetwork:
    columns = [_random_monotone_coordinate(n, rng, allow_constant) for _ in range(n)]
    return TruthTableNetwork(
        n, tuple(sum(columns[i][s] << i for i in range(n)) for s in range(1 << n))
    )


def random_locally_idempotent(n: int, rng: random.Random) -> TruthTableNetwork:
    """Random network fixing 0...0 and 1...1; half of them monotone."""
    top = full_mask(n)
    if rng.random() < 0.5:
        f = random_monotone_table(n, rng, allow_constant=False)
        if f.table[0] == 0 and f.table[top] == top:
            return f
    table = [rng.randint(0, top) for _ in range(1 << n)]
    table[0], table[top] = 0, top
    return TruthTableNetwork(n, tuple(table))


def random_function_on(inputs: int, n: int, rng: random.Random) -> list[int]:
    """Truth column of a random Boolean function depending essentially on every vertex of ``inputs``."""
    variables = list(iter_bits(inputs))
    d = len(variables)
    if d == 0:
        value = rng.randint(0, 1)
        return [value] * (1 << n)
    while True:
        local = [rng.randint(0, 1) for _ in range(1 << d)]
        essential = all(
            any(local[a] != local[a | (1 << k)] for a in range(1 << d) if not (a >> k) & 1)
            for k in range(d)
        )
        if essential:
            break
    column = []
    for s in range(1 << n):
        a = 0
        for k, v in enumerate(variables):
            if (s >> v) & 1:
                a |= 1 << k
        column.append(local[a])
    return column


def random_network_on_graph(g: DirectedGraph, rng: random.Random) -> TruthTableNetwork:
    """Random Boolean network whose interaction graph is exactly ``g``."""
    columns = [random_function_on(g.in_rows[j], g.n, rng) for j in range(g.n)]
    n = g.n
    return TruthTableNetwork(n, tuple(sum(columns[j][s] << j for j in range(n)) for s in range(1 << n)))


def all_networks(n: int) -> Iterator[TruthTableNetwork]:
    """Every Boolean network of dimension ``n``; ``(2**n)**(2**n)`` of them."""
    for table in product(range(1 << n), repeat=1 << n):
        yield TruthTableNetwork(n, table)


def monotone_functions(n: int) -> list[int]:
    """Monotone Boolean functions of ``n`` variables, each as a ``2**n``-bit column mask."""
    size = 1 << n
    found = []
    for column in range(1 << size):
        ok = True
        for s in range(size):
            if (column >> s) & 1:
                continue
            # a 0 at s forces 0 at every state below s
            for i in iter_bits(s):
                if (column >> (s ^ (1 << i))) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(column)
    return found


def all_monotone_networks(n: int) -> Iterator[TruthTableNetwork]:
    columns = monotone_functions(n)
    size = 1 << n
    for choice in product(columns, repeat=n):
        yield TruthTableNetwork(
            n, tuple(sum(((choice[i] >> s) & 1) << i for i in range(n)) for s in range(size))
        )


def perturbed_disjunctive(g: DirectedGraph, rng: random.Random) -> TruthTableNetwork:
    """The disjunctive network on ``g`` with one output bit flipped at one state."""
    table = list(disjunctive_table(g))
    s = rng.randrange(len(table))
    table[s] ^= 1 << rng.randrange(g.n)
    return TruthTableNetwork(g.n, tuple(table))


def characterisation_corpus(
    samples: int, max_n: int, rng: random.Random
) -> Iterator[tuple[str, TruthTableNetwork]]:
    """Mixed corpus for the disjunctive characterisations.

    Disjunctive networks, monotone networks, single-bit perturbations of
    disjunctive networks and uniform random tables, in rotation.
    """
    kinds = ["disjunctive", "monotone", "perturbed", "random"]
    for k in range(samples):
        n = rng.randint(1, max_n)
        kind = kinds[k % len(kinds)]
        if kind == "disjunctive":
            yield kind, TruthTableNetwork(n, disjunctive_table(random_graph(n, rng)))
        elif kind == "monotone":
            f = random_monotone_table(n, rng)
            if rng.random() < 0.5 and f.table[0]:
                # lowering f(0) to 0 keeps f monotone
                f = TruthTableNetwork(n, (0,) + f.table[1:])
            yield kind, f
        elif kind == "perturbed":
            yield kind, perturbed_disjunctive(random_graph(n, rng), rng)
        else:
            yield kind, random_table(n, rng)
