"""Property suites behind ``disjnet verify``.

Each suite checks one result exhaustively at small dimension and on seeded
samples above it, always comparing the library's fast path with an
independent computation (full state scans, matrix powers, oracle
enumeration).  A suite returns a :class:`SuiteResult`; counterexamples are
recorded verbatim.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from disjnet.bits import format_config
from disjnet.dynamics import (
    Topology,
    dpartite_sets,
    fixed_points,
    graph_from_topology,
    is_image_point,
    is_topology,
    maximal_preimage,
    periodic_structure,
)
from disjnet.errors import InputError, ResourceError
from disjnet.graph import DirectedGraph, is_nontrivial, is_strong, loop_number
from disjnet.limits import ENUMERATION_CAP, check_cap
from disjnet.network import (
    DisjunctiveNetwork,
    TruthTableNetwork,
    closed_form_distance,
    conjunctive_network,
    distance_to_constant,
    interaction_graph,
    is_bijective,
    is_disjunctive_by_morphism,
    is_idempotent,
    is_monotone,
    is_permutation_of_variables,
    is_submodular,
    sandwich_check,
    to_truth_table,
)
from disjnet.oracle import all_topologies, build_functional_graph, oracle_fixed_set
from disjnet.ranks import (
    SingularMaxResult,
    construct_disjunctive_with_rank,
    smallest_prime_greater_than,
    table_ranks,
    verify_singular_fixed_max,
    verify_singular_max,
    verify_singular_periodic_max,
)
from disjnet.sampling import (
    all_digraphs,
    all_monotone_networks,
    all_networks,
    characterisation_corpus,
    random_locally_idempotent,
    random_monotone_table,
    random_network_on_graph,
    random_strong_graph,
    rng_for,
)

MAX_COUNTEREXAMPLES = 20


@dataclass
class SuiteResult:
    theorem: str
    n: int
    seed: int | None = None
    checked: int = 0
    passed: bool = True
    counterexamples: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(message)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "seed": self.seed,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


def _graph_text(g: DirectedGraph) -> str:
    return f"n={g.n} arcs={g.arcs()}"


def _table_text(f: TruthTableNetwork) -> str:
    return f"n={f.n} table={list(f.table)}"


def _disjunctive_on_own_graph(f: TruthTableNetwork) -> bool:
    return to_truth_table(DisjunctiveNetwork(interaction_graph(f))).table == f.table


def _characterisation_networks(n: int, samples: int, seed: int | None):
    for m in range(1, min(n, 2) + 1):
        for f in all_networks(m):
            yield "exhaustive", f
    yield from characterisation_corpus(samples, n, rng_for(seed))


def suite_char1(n: int, samples: int = 500, seed: int | None = None) -> SuiteResult:
    """Endomorphisms of OR fixing zero are exactly the disjunctive networks."""
    result = SuiteResult("char1", n, seed)
    counts: Counter[str] = Counter()
    for kind, f in _characterisation_networks(n, samples, seed):
        by_morphism = is_disjunctive_by_morphism(f)
        truth = _disjunctive_on_own_graph(f)
        counts[f"{kind}:{'disjunctive' if truth else 'other'}"] += 1
        if kind == "exhaustive" and f.n == 2:
            counts["exhaustive_n2"] += 1
        result.checked += 1
        if by_morphism != truth:
            result.fail(f"morphism test {by_morphism}, truth {truth}: {_table_text(f)}")
    result.details = dict(counts)
    return result


def suite_char2(n: int, samples: int = 500, seed: int | None = None) -> SuiteResult:
    """Monotone, submodular and fixing zero is equivalent to disjunctive."""
    result = SuiteResult("char2", n, seed)
    counts: Counter[str] = Counter()
    for _, f in _characterisation_networks(n, samples, seed):
        combined = is_monotone(f) and is_submodular(f) and f.table[0] == 0
        truth = _disjunctive_on_own_graph(f)
        counts["agree_true" if truth else "agree_false"] += combined == truth
        result.checked += 1
        if combined != truth:
            result.fail(f"monotone+submodular+zero {combined}, truth {truth}: {_table_text(f)}")
    result.details = dict(counts)
    return result


def suite_sandwich(n: int, samples: int = 500, seed: int | None = None) -> SuiteResult:
    """Locally idempotent networks lie between the AND and OR networks on their graph."""
    result = SuiteResult("sandwich", n, seed)
    rng = rng_for(seed)
    monotone = 0
    for _ in range(samples):
        f = random_locally_idempotent(rng.randint(1, n), rng)
        monotone += is_monotone(f)
        result.checked += 1
        if not sandwich_check(f):
            result.fail(_table_text(f))
    result.details = {"monotone_samples": monotone}
    return result


def suite_distance(n: int, samples: int = 100, seed: int | None = None) -> SuiteResult:
    """OR and AND networks attain the closed-form minimum distance to constants."""
    if n > 4:
        raise ResourceError("distance suite enumerates all graphs; n <= 4")
    result = SuiteResult("distance", n, seed)
    rng = rng_for(seed)
    sampled = 0
    for m in range(1, n + 1):
        for g in all_digraphs(m):
            closed = closed_form_distance(g)
            d_or = distance_to_constant(to_truth_table(DisjunctiveNetwork(g)))
            d_and = distance_to_constant(conjunctive_network(g))
            result.checked += 1
            if not d_or == d_and == closed:
                result.fail(f"d(or)={d_or} d(and)={d_and} closed={closed}: {_graph_text(g)}")
            if m == min(n, 3):
                for _ in range(samples):
                    f = random_network_on_graph(g, rng)
                    sampled += 1
                    if distance_to_constant(f) < closed:
                        result.fail(f"d(f) < {closed}: {_table_text(f)}")
    result.details = {"sampled_networks": sampled}
    return result


def suite_image_test(n: int) -> SuiteResult:
    """Maximal-preimage test versus full scans, every graph and every subset."""
    if n > 4:
        raise ResourceError("image-test suite enumerates all graphs; n <= 4")
    result = SuiteResult("image-test", n)
    for m in range(1, n + 1):
        size = 1 << m
        for g in all_digraphs(m):
            f = DisjunctiveNetwork(g)
            table = [f(s) for s in range(size)]
            union = [0] * size
            hit = [False] * size
            for s, v in enumerate(table):
                union[v] |= s
                hit[v] = True
            for x in range(size):
                result.checked += 1
                if is_image_point(f, x) != hit[x]:
                    result.fail(f"X={format_config(x, m)} test={not hit[x]}: {_graph_text(g)}")
                elif hit[x] and maximal_preimage(f, x) != union[x]:
                    result.fail(f"Y* wrong for X={format_config(x, m)}: {_graph_text(g)}")
    return result


def _check_dpartite(g: DirectedGraph, result: SuiteResult) -> None:
    f = DisjunctiveNetwork(g)
    period = loop_number(g)
    fg = build_functional_graph(f)
    oracle = fg.cycle_states()
    ps = periodic_structure(f)
    result.checked += 1
    text = _graph_text(g)
    if ps.periodic_points != oracle or dpartite_sets(g) != oracle:
        result.fail(f"periodic set mismatch: {text}")
        return
    if len(oracle) != 1 << period:
        result.fail(f"|periodic| = {len(oracle)} != 2**{period}: {text}")
    periods = {fg.period[s] for s in oracle}
    if any(period % p for p in periods):
        result.fail(f"period not dividing {period}: {text}")
    divisors = {p for p in range(1, period + 1) if period % p == 0}
    if periods != divisors:
        result.fail(f"periods {sorted(periods)} != divisors {sorted(divisors)}: {text}")
    if ps.periods != {s: fg.period[s] for s in oracle}:
        result.fail(f"periods disagree with the oracle: {text}")


def suite_dpartite(n: int, samples: int = 200, seed: int | None = None) -> SuiteResult:
    """Periodic points of a strong graph are exactly its D-partite sets."""
    result = SuiteResult("dpartite", n, seed)
    exhaustive = 0
    for m in range(1, min(n, 4) + 1):
        for g in all_digraphs(m):
            if is_strong(g) and loop_number(g) > 0:
                exhaustive += 1
                _check_dpartite(g, result)
    rng = rng_for(seed)
    loop_numbers: Counter[int] = Counter()
    for _ in range(samples):
        g = random_strong_graph(rng.randint(1, n), rng)
        loop_numbers[loop_number(g)] += 1
        _check_dpartite(g, result)
    result.details = {
        "exhaustive_strong_graphs": exhaustive,
        "sampled_loop_numbers": dict(sorted(loop_numbers.items())),
    }
    return result


def suite_topology(n: int) -> SuiteResult:
    """Fixed points of nontrivial graphs are topologies, and every topology arises."""
    if n > 4:
        raise ResourceError("topology suite enumerates all graphs; n <= 4")
    result = SuiteResult("topology", n)
    distinct: dict[int, set[frozenset[int]]] = {}
    graphs = 0
    for m in range(1, n + 1):
        seen = distinct.setdefault(m, set())
        for g in all_digraphs(m):
            if not is_nontrivial(g):
                continue
            graphs += 1
            f = DisjunctiveNetwork(g)
            top = fixed_points(f)
            result.checked += 1
            if not isinstance(top, Topology) or not is_topology(top.opens, m):
                result.fail(f"not a topology: {_graph_text(g)}")
                continue
            if top.opens != oracle_fixed_set(f):
                result.fail(f"fixed set mismatch: {_graph_text(g)}")
            seen.add(top.opens)
    for m, seen in distinct.items():
        for opens in seen:
            back = fixed_points(DisjunctiveNetwork(graph_from_topology(Topology(m, opens))))
            result.checked += 1
            if not isinstance(back, Topology) or back.opens != opens:
                result.fail(f"round trip failed for n={m} opens={sorted(opens)}")
        total = len(all_topologies(m))
        if len(seen) != total:
            result.fail(f"n={m}: {len(seen)} fixed-point topologies but {total} topologies exist")
    result.details = {
        "nontrivial_graphs": graphs,
        "distinct_topologies": {m: len(s) for m, s in distinct.items()},
    }
    return result


def suite_permutation(n: int, samples: int = 200, seed: int | None = None) -> SuiteResult:
    """A monotone network is bijective iff it permutes the variables."""
    result = SuiteResult("permutation", n, seed)
    bijective = 0

    def check(f: TruthTableNetwork) -> None:
        nonlocal bijective
        b = is_bijective(f)
        bijective += b
        result.checked += 1
        if b != is_permutation_of_variables(f)[0]:
            result.fail(_table_text(f))

    for m in range(1, min(n, 3) + 1):
        for f in all_monotone_networks(m):
            check(f)
    if n >= 4:
        rng = rng_for(seed)
        for k in range(samples):
            m = rng.randint(4, n)
            if k % 2:
                perm = list(range(m))
                rng.shuffle(perm)
                check(
                    TruthTableNetwork.from_function(
                        m, lambda s: sum(((s >> perm[i]) & 1) << i for i in range(m))
                    )
                )
            else:
                check(random_monotone_table(m, rng))
    result.details = {"bijective": bijective}
    return result


def _singular_suite(name: str, fn: Callable[..., SingularMaxResult]):
    def suite(n: int, workers: int = 1, enum_cap: int = ENUMERATION_CAP) -> SuiteResult:
        result = SuiteResult(name, n)
        outcome = fn(n, workers=workers, enum_cap=enum_cap)
        result.checked = 1 << (n * n)
        result.details = {k: v for k, v in outcome.to_dict().items() if k != "achievers"}
        if not outcome.passed:
            result.fail(
                f"max {outcome.max_rank} (expected {outcome.expected_max}); "
                f"{len(outcome.unexpected)} unexpected achievers, {len(outcome.missing)} missing"
            )
            for g in (outcome.unexpected + outcome.missing)[:MAX_COUNTEREXAMPLES]:
                result.counterexamples.append(_graph_text(g))
        return result

    suite.__name__ = f"suite_{name.replace('-', '_')}"
    return suite


suite_near_bijective = _singular_suite("near-bijective", verify_singular_max)
suite_periodic_max = _singular_suite("periodic-max", verify_singular_periodic_max)
suite_fixed_max = _singular_suite("fixed-max", verify_singular_fixed_max)


def suite_low_rank(n: int) -> SuiteResult:
    """Every rank below the prime bound is realised by an idempotent disjunctive network."""
    result = SuiteResult("low-rank", n)
    primes = {}
    for m in range(1, n + 1):
        p = smallest_prime_greater_than(m + 1)
        primes[m] = p
        for r in range(1, p):
            g = construct_disjunctive_with_rank(m, r)
            table = to_truth_table(DisjunctiveNetwork(g))
            triple = table_ranks(list(table.table))
            fg = build_functional_graph(table)
            periodic = len(fg.cycle_states())
            result.checked += 1
            if g.n != m or triple.as_tuple() != (r, r, r) or periodic != r or not is_idempotent(table):
                result.fail(f"n={m} r={r}: ranks {triple.as_tuple()}: {_graph_text(g)}")
    result.details = {"p": primes}
    return result


SUITES: dict[str, tuple[Callable[..., SuiteResult], int]] = {
    "char1": (suite_char1, 8),
    "char2": (suite_char2, 8),
    "sandwich": (suite_sandwich, 10),
    "distance": (suite_distance, 4),
    "image-test": (suite_image_test, 4),
    "dpartite": (suite_dpartite, 12),
    "topology": (suite_topology, 4),
    "permutation": (suite_permutation, 8),
    "near-bijective": (suite_near_bijective, 4),
    "periodic-max": (suite_periodic_max, 4),
    "fixed-max": (suite_fixed_max, 4),
    "low-rank": (suite_low_rank, 16),
}
"""Theorem id -> (suite, largest supported n).  The exhaustive graph scans
behind the three singular-maximum suites are bounded by ``enum_cap`` instead."""

SEEDED = {"char1", "char2", "sandwich", "distance", "dpartite", "permutation"}
PARALLEL = {"near-bijective", "periodic-max", "fixed-max"}


def run_suite(
    theorem: str,
    n: int,
    seed: int | None = None,
    samples: int | None = None,
    workers: int = 1,
    enum_cap: int = ENUMERATION_CAP,
) -> SuiteResult:
    if theorem not in SUITES:
        raise InputError(f"unknown theorem id {theorem!r}; choose from {', '.join(SUITES)}")
    suite, max_n = SUITES[theorem]
    if theorem in PARALLEL:
        check_cap(n, enum_cap, theorem, flag="--enum-cap")
    elif n > max_n:
        raise ResourceError(f"{theorem} supports n <= {max_n}, got n={n}")
    if n < 1 or (theorem in PARALLEL and n < 2):
        raise InputError(f"n={n} is too small for {theorem}")
    kwargs: dict = {}
    if theorem in SEEDED:
        kwargs["seed"] = seed
        if samples is not None:
            kwargs["samples"] = samples
    if theorem in PARALLEL:
        kwargs["workers"] = workers
        kwargs["enum_cap"] = enum_cap
    start = time.perf_counter()
    result = suite(n, **kwargs)
    result.seconds = time.perf_counter() - start
    return result


__all__ = ["SUITES", "SuiteResult", "run_suite"]
