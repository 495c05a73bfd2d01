"""Image, periodic and fixed ranks, extremal results and rank constructors."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, reduce

from disjnet.bits import full_mask, popcount, subset_unions
from disjnet.errors import InputError, OracleMismatch
from disjnet.dynamics import Topology, fixed_points, image_points_by_test, periodic_structure
from disjnet.families import empty, is_near_cyclic, transitive_tournament
from disjnet.graph import DirectedGraph, disjoint_union, is_strong, loop_number
from disjnet.limits import ENUMERATION_CAP, ORACLE_CAP, check_cap
from disjnet.network import DisjunctiveNetwork, TruthTableNetwork
from disjnet.oracle import build_functional_graph, oracle_fixed_set, oracle_image_set


@dataclass(frozen=True)
class RankTriple:
    image_rank: int
    periodic_rank: int
    fixed_rank: int

    @property
    def is_flat(self) -> bool:
        """All three ranks equal (equivalent to idempotence)."""
        return self.image_rank == self.periodic_rank == self.fixed_rank

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.image_rank, self.periodic_rank, self.fixed_rank)


def cross_checked_ranks(
    f: DisjunctiveNetwork, cap: int = ORACLE_CAP
) -> tuple[RankTriple, dict[str, bool]]:
    """Ranks from the oracle plus one agreement flag per fast path."""
    check_cap(f.n, cap, "ranks")
    image = oracle_image_set(f, cap)
    fg = build_functional_graph(f, cap)
    periodic = fg.cycle_states()
    fixed = oracle_fixed_set(f, cap)
    agreement = {"image": image_points_by_test(f, cap) == image}
    if is_strong(f.graph) and loop_number(f.graph) > 0:
        agreement["periodic"] = periodic_structure(f, cap=cap).count == len(periodic)
    fast_fixed = fixed_points(f, cap=cap)
    if isinstance(fast_fixed, Topology):
        agreement["fixed"] = fast_fixed.opens == fixed
    return RankTriple(len(image), len(periodic), len(fixed)), agreement


def ranks(f: DisjunctiveNetwork, cap: int = ORACLE_CAP) -> RankTriple:
    triple, agreement = cross_checked_ranks(f, cap)
    failed = [name for name, ok in agreement.items() if not ok]
    if failed:
        raise OracleMismatch(f"fast path disagrees with the oracle for: {', '.join(failed)}")
    return triple


def table_ranks(table: list[int] | tuple[int, ...]) -> RankTriple:
    """Ranks of an arbitrary map on ``range(len(table))``.

    The periodic points are the eventual image: iterate the image until it
    stops shrinking.
    """
    image = set(table)
    current = image
    while True:
        nxt = {table[s] for s in current}
        if len(nxt) == len(current):
            break
        current = nxt
    fixed = sum(1 for s, v in enumerate(table) if s == v)
    return RankTriple(len(image), len(current), fixed)


# --------------------------------------------------------------------------
# monotone networks of every rank


def weight_order(n: int) -> list[int]:
    """States by Hamming weight, ties by increasing index."""
    return sorted(range(1 << n), key=lambda s: (popcount(s), s))


def construct_monotone_with_rank(n: int, k: int) -> TruthTableNetwork:
    """Idempotent monotone network with exactly ``k`` image points.

    The first ``k - 1`` states in weight order are fixed and every other state
    goes to the all-ones configuration.
    """
    if not 1 <= k <= 1 << n:
        raise InputError(f"k must lie in 1..{1 << n}, got {k}")
    top = full_mask(n)
    table = [top] * (1 << n)
    for s in weight_order(n)[: k - 1]:
        table[s] = s
    return TruthTableNetwork(n, tuple(table))


# --------------------------------------------------------------------------
# exhaustive scans over all digraphs


@dataclass(frozen=True)
class GraphRanks:
    index: int
    ranks: RankTriple
    bijective: bool


def _scan_range(n: int, start: int, stop: int) -> list[tuple[int, int, int, int]]:
    mask = full_mask(n)
    out = []
    for index in range(start, stop):
        rows = [(index >> (i * n)) & mask for i in range(n)]
        table = subset_unions(rows)
        triple = table_ranks(table)
        out.append((index, triple.image_rank, triple.periodic_rank, triple.fixed_rank))
    return out


@lru_cache(maxsize=8)
def _all_graph_ranks(n: int, workers: int) -> tuple[GraphRanks, ...]:
    total = 1 << (n * n)
    if workers > 1:
        step = max(1, total // (workers * 8))
        bounds = [(n, s, min(s + step, total)) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_range, *zip(*bounds)))
        rows = [r for chunk in chunks for r in chunk]
    else:
        rows = _scan_range(n, 0, total)
    size = 1 << n
    return tuple(GraphRanks(i, RankTriple(a, b, c), a == size) for i, a, b, c in rows)


def all_graph_ranks(n: int, workers: int = 1, enum_cap: int = ENUMERATION_CAP) -> tuple[GraphRanks, ...]:
    """Ranks of the disjunctive network on every digraph with ``n`` vertices.

    A disjunctive network is bijective iff its image rank is ``2**n``.
    """
    check_cap(n, enum_cap, "exhaustive digraph enumeration", flag="--enum-cap")
    return _all_graph_ranks(n, max(1, workers))


@dataclass
class SingularMaxResult:
    kind: str
    n: int
    max_rank: int
    expected_max: int
    achievers: list[DirectedGraph]
    achiever_shapes: dict[str, int]
    family_count: int
    # graphs that achieve the maximum but are outside the family, and vice versa
    unexpected: list[DirectedGraph] = field(default_factory=list)
    missing: list[DirectedGraph] = field(default_factory=list)

    @property
    def achiever_count(self) -> int:
        return len(self.achievers)

    @property
    def passed(self) -> bool:
        return self.max_rank == self.expected_max and not self.unexpected and not self.missing

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "max_rank": self.max_rank,
            "expected_max": self.expected_max,
            "achiever_count": self.achiever_count,
            "achiever_shapes": dict(sorted(self.achiever_shapes.items())),
            "achievers": [g.arcs() for g in self.achievers],
            "unexpected": [g.arcs() for g in self.unexpected],
            "missing": [g.arcs() for g in self.missing],
            "passed": self.passed,
        }


def _near_cyclic_witness(g: DirectedGraph):
    # near-cyclic graphs have exactly n + 1 arcs; skip the full check otherwise
    if g.arc_count != g.n + 1:
        return None
    ok, witness = is_near_cyclic(g)
    return witness if ok else None


def _in_family(kind: str, witness) -> bool:
    if witness is None:
        return False
    if kind == "image":
        return True
    if witness.kind != "B" or witness.params != (1, 1):
        return False
    if kind == "periodic":
        return True
    return all(c == 1 for c in witness.cycles)


def _verify_singular(kind: str, n: int, workers: int, enum_cap: int) -> SingularMaxResult:
    if n < 2:
        raise InputError(f"the singular maximum is stated for n >= 2, got {n}")
    table = all_graph_ranks(n, workers, enum_cap)
    pick = {
        "image": lambda t: t.image_rank,
        "periodic": lambda t: t.periodic_rank,
        "fixed": lambda t: t.fixed_rank,
    }[kind]
    singular = [row for row in table if not row.bijective]
    best = max(pick(row.ranks) for row in singular)
    achievers, unexpected, missing = [], [], []
    shapes: Counter[str] = Counter()
    family_count = 0
    for row in singular:
        g = DirectedGraph.from_index(n, row.index)
        witness = _near_cyclic_witness(g)
        expected = _in_family(kind, witness)
        family_count += expected
        achieved = pick(row.ranks) == best
        if achieved:
            achievers.append(g)
            shapes[str(witness) if witness else "other"] += 1
        if achieved and not expected:
            unexpected.append(g)
        if expected and not achieved:
            missing.append(g)
    return SingularMaxResult(
        kind, n, best, 3 << (n - 2), achievers, dict(shapes), family_count, unexpected, missing
    )


def verify_singular_max(n: int, workers: int = 1, enum_cap: int = ENUMERATION_CAP) -> SingularMaxResult:
    """Max image rank over singular disjunctive networks; achievers must be the near-cyclic graphs."""
    return _verify_singular("image", n, workers, enum_cap)


def verify_singular_periodic_max(
    n: int, workers: int = 1, enum_cap: int = ENUMERATION_CAP
) -> SingularMaxResult:
    """Achievers must be ``B_{1,1}`` plus disjoint cycles."""
    return _verify_singular("periodic", n, workers, enum_cap)


def verify_singular_fixed_max(
    n: int, workers: int = 1, enum_cap: int = ENUMERATION_CAP
) -> SingularMaxResult:
    """The unique achiever (up to isomorphism) must be ``G_n``."""
    return _verify_singular("fixed", n, workers, enum_cap)


def singular_bound_counterexamples(n: int, enum_cap: int = ENUMERATION_CAP) -> dict[str, list[DirectedGraph]]:
    """Exhaustive check of the three image-rank bounds behind the singular maximum.

    * a source forces image rank ``<= 2**(n-1)``;
    * a vertex of in-degree ``d >= 2`` forces ``<= 2**(n-1) + 2**(n-d)``;
    * two vertices of in-degree 2 force ``<= 11/16 * 2**n``.
    """
    bad: dict[str, list[DirectedGraph]] = {"source": [], "in_degree": [], "two_in_degree_2": []}
    for row in all_graph_ranks(n, enum_cap=enum_cap):
        g = DirectedGraph.from_index(n, row.index)
        rank = row.ranks.image_rank
        degrees = g.in_degrees()
        if 0 in degrees and rank > 1 << (n - 1):
            bad["source"].append(g)
        for d in degrees:
            if d >= 2 and rank > (1 << (n - 1)) + (1 << (n - d)):
                bad["in_degree"].append(g)
                break
        if degrees.count(2) >= 2 and 16 * rank > 11 * (1 << n):
            bad["two_in_degree_2"].append(g)
    return bad


# --------------------------------------------------------------------------
# low ranks


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for d in range(2, math.isqrt(m) + 1):
        if m % d == 0:
            return False
    return True


def smallest_prime_greater_than(m: int) -> int:
    if m < 0:
        raise InputError(f"m must be non-negative, got {m}")
    p = m + 1
    while not _is_prime(p):
        p += 1
    return p


def factor_min_sum(r: int) -> tuple[int, int]:
    """Factorisation ``r = a*b`` with ``2 <= a <= b`` and ``a + b`` minimal."""
    if r < 4 or _is_prime(r):
        raise InputError(f"{r} is not a composite number >= 4")
    for a in range(math.isqrt(r), 1, -1):
        if r % a == 0:
            return a, r // a
    raise AssertionError("unreachable for composite r")


class RankOutOfRange(InputError):
    def __init__(self, n: int, r: int, p: int) -> None:
        super().__init__(f"rank {r} out of range for n={n}: p = {p}, valid r is 1..{p - 1}")
        self.n, self.r, self.p = n, r, p


def construct_disjunctive_with_rank(n: int, r: int) -> DirectedGraph:
    """Graph whose disjunctive network is idempotent with all three ranks ``r``.

    Valid for ``1 <= r <= p - 1`` where ``p`` is the smallest prime above
    ``n + 1``.  ``T_a`` contributes ``a + 1`` fixed points and ranks multiply
    over disjoint unions.
    """
    if n < 1:
        raise InputError(f"n must be at least 1, got {n}")
    p = smallest_prime_greater_than(n + 1)
    if not 1 <= r <= p - 1:
        raise RankOutOfRange(n, r, p)
    if r <= n + 1:
        return disjoint_union(transitive_tournament(r - 1), empty(n - r + 1))
    a, b = factor_min_sum(r)
    spare = n - a - b + 2
    if spare < 0:
        raise InputError(f"r={r}={a}*{b} needs {a + b - 2} vertices, only {n} available")
    parts = [transitive_tournament(a - 1), transitive_tournament(b - 1), empty(spare)]
    return reduce(disjoint_union, parts)
