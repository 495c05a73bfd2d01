"""Boolean networks: disjunctive, conjunctive and explicit truth tables.

A truth table stores ``table[s] = f(s)`` where the state index ``s`` is the
configuration itself (bit ``i`` of ``s`` is ``x_i``).  Whole-table predicates
are vectorised with numpy; pair scans run one row of the ``2**n x 2**n``
square at a time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from disjnet.bits import format_config, full_mask, iter_bits, parse_config, popcount, subset_unions
from disjnet.errors import InputError, PreconditionError, ResourceError
from disjnet.graph import DirectedGraph, identity_graph
from disjnet.limits import ORACLE_CAP, check_cap


@dataclass(frozen=True)
class Configuration:
    """A point of ``{0,1}^n``; ``bits`` doubles as the support set."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(f"configuration {self.bits:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def from_support(cls, n: int, vertices: Iterable[int]) -> Configuration:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} outside 0..{n - 1}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def from_string(cls, text: str) -> Configuration:
        """``"10"`` is ``x_0 = 1, x_1 = 0``."""
        return cls(len(text), parse_config(text))

    @classmethod
    def unit(cls, n: int, j: int) -> Configuration:
        return cls.from_support(n, [j])

    def support(self) -> frozenset[int]:
        return frozenset(iter_bits(self.bits))

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def distance(self, other: Configuration) -> int:
        return popcount(self.bits ^ _coerce(other, self.n))

    def __or__(self, other: Configuration) -> Configuration:
        return Configuration(self.n, self.bits | _coerce(other, self.n))

    def __and__(self, other: Configuration) -> Configuration:
        return Configuration(self.n, self.bits & _coerce(other, self.n))

    def __le__(self, other: Configuration) -> bool:
        return self.bits & ~_coerce(other, self.n) == 0

    def __str__(self) -> str:
        return format_config(self.bits, self.n)


def _coerce(x: Configuration | int, n: int) -> int:
    """Accept a Configuration or a raw state index of length ``n``."""
    if isinstance(x, Configuration):
        if x.n != n:
            raise InputError(f"configuration has length {x.n}, expected {n}")
        return x.bits
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        x = int(x)
        if x < 0 or x >> n:
            raise InputError(f"state {x} is not a configuration of length {n}")
        return x
    raise InputError(f"expected a Configuration or int, got {type(x).__name__}")


@dataclass(frozen=True)
class DisjunctiveNetwork:
    """The disjunctive network on ``graph``: ``f(X) = N^out(X)``."""

    graph: DirectedGraph

    @property
    def n(self) -> int:
        return self.graph.n

    def __call__(self, x: Configuration | int) -> int:
        return eval_disjunctive(self, x)


@dataclass(frozen=True)
class TruthTableNetwork:
    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        table = tuple(int(v) for v in self.table)
        if self.n < 0 or len(table) != 1 << self.n:
            raise InputError(f"table length must be 2**{self.n}, got {len(table)}")
        for s, v in enumerate(table):
            if v < 0 or v >> self.n:
                raise InputError(f"entry {s} -> {v} is not a configuration of length {self.n}")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], int]) -> TruthTableNetwork:
        return cls(n, tuple(fn(s) for s in range(1 << n)))

    @classmethod
    def constant(cls, n: int, value: int) -> TruthTableNetwork:
        return cls(n, (value,) * (1 << n))

    @classmethod
    def identity(cls, n: int) -> TruthTableNetwork:
        return cls(n, tuple(range(1 << n)))

    def __call__(self, x: Configuration | int) -> int:
        return self.table[_coerce(x, self.n)]

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "table": list(self.table)})

    @classmethod
    def from_json(cls, text: str) -> TruthTableNetwork:
        try:
            data = json.loads(text)
            return cls(int(data["n"]), tuple(int(v) for v in data["table"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad truth-table JSON: {exc}") from None

    def describe(self) -> str:
        return ", ".join(
            f"{format_config(s, self.n)}->{format_config(v, self.n)}" for s, v in enumerate(self.table)
        )


Network = DisjunctiveNetwork | TruthTableNetwork


# --------------------------------------------------------------------------
# evaluation in the four representations


def eval_disjunctive(f: DisjunctiveNetwork, x: Configuration | int) -> int:
    """OR of the out-rows of the vertices in ``supp(x)``; ``f(0) = 0``."""
    bits = _coerce(x, f.graph.n)
    return f.graph.out_neighbours(bits)


def eval_conjunctive(g: DirectedGraph, x: Configuration | int) -> int:
    """``f^and_i(x) = 1`` iff ``x_j = 1`` for every in-neighbour ``j`` of ``i``.

    Sources have an empty conjunction and therefore output 1.
    """
    bits = _coerce(x, g.n)
    out = 0
    for i, col in enumerate(g.in_rows):
        if col & bits == col:
            out |= 1 << i
    return out


def vec_mat_mul(x: Configuration | int, a: DirectedGraph) -> int:
    """Row vector times Boolean matrix, entrywise: ``y_j = OR_i (x_i AND a_ij)``."""
    bits = _coerce(x, a.n)
    out = 0
    for j, col in enumerate(a.in_rows):
        if bits & col:
            out |= 1 << j
    return out


def bool_mat_mul(a: DirectedGraph, b: DirectedGraph) -> DirectedGraph:
    """Boolean semiring product ``c_ij = OR_k a_ik AND b_kj``."""
    if a.n != b.n:
        raise InputError(f"dimension mismatch: {a.n} x {a.n} times {b.n} x {b.n}")
    return DirectedGraph(a.n, tuple(b.out_neighbours(row) for row in a.out_rows))


def mat_power(a: DirectedGraph, k: int) -> DirectedGraph:
    if k < 0:
        raise InputError(f"negative exponent {k}")
    result = identity_graph(a.n)
    base = a
    while k:
        if k & 1:
            result = bool_mat_mul(result, base)
        k >>= 1
        if k:
            base = bool_mat_mul(base, base)
    return result


def token_sliding_eval(f: DisjunctiveNetwork, tokens: Sequence[Iterable[Hashable]]) -> list[frozenset]:
    """Every vertex broadcasts all its tokens along its out-arcs.

    Vertex ``i`` ends up holding the union of the token sets of its
    in-neighbours.
    """
    g = f.graph
    if len(tokens) != g.n:
        raise InputError(f"expected {g.n} token sets, got {len(tokens)}")
    held = [frozenset(t) for t in tokens]
    return [frozenset().union(*(held[j] for j in iter_bits(g.in_rows[i]))) for i in range(g.n)]


def disjunctive_table(g: DirectedGraph) -> tuple[int, ...]:
    return tuple(subset_unions(g.out_rows))


def conjunctive_table(g: DirectedGraph) -> tuple[int, ...]:
    return tuple(eval_conjunctive(g, s) for s in range(1 << g.n))


def to_truth_table(f: DisjunctiveNetwork, cap: int = ORACLE_CAP) -> TruthTableNetwork:
    check_cap(f.n, cap, "to_truth_table")
    return TruthTableNetwork(f.n, disjunctive_table(f.graph))


def conjunctive_network(g: DirectedGraph, cap: int = ORACLE_CAP) -> TruthTableNetwork:
    check_cap(g.n, cap, "conjunctive_network")
    return TruthTableNetwork(g.n, conjunctive_table(g))


def as_truth_table(f: Network, cap: int = ORACLE_CAP) -> TruthTableNetwork:
    if isinstance(f, TruthTableNetwork):
        return f
    return to_truth_table(f, cap)


# --------------------------------------------------------------------------
# predicates on truth tables


def _low_halves(n: int, i: int) -> np.ndarray:
    """State indices with bit ``i`` clear."""
    states = np.arange(1 << n, dtype=np.int64)
    return states[(states >> i) & 1 == 0]


def interaction_graph(f: TruthTableNetwork) -> DirectedGraph:
    """Arc ``(i, j)`` iff flipping ``x_i`` changes ``f_j`` somewhere."""
    t = f.array
    rows = []
    for i in range(f.n):
        low = _low_halves(f.n, i)
        diff = t[low] ^ t[low | (1 << i)]
        rows.append(int(np.bitwise_or.reduce(diff)) if diff.size else 0)
    return DirectedGraph(f.n, tuple(rows))


def is_monotone(f: TruthTableNetwork) -> bool:
    # Covering pairs suffice: x <= y is a chain of single-bit raises.
    t = f.array
    for i in range(f.n):
        low = _low_halves(f.n, i)
        if np.any(t[low] & ~t[low | (1 << i)]):
            return False
    return True


def is_disjunctive_by_morphism(f: TruthTableNetwork) -> bool:
    """``f(0) = 0`` and ``f(x | y) = f(x) | f(y)`` for all pairs."""
    if f.table[0] != 0:
        return False
    t = f.array
    states = np.arange(1 << f.n, dtype=np.int64)
    for x in range(1 << f.n):
        if np.any(t[x | states] != (t[x] | t)):
            return False
    return True


def is_submodular(f: TruthTableNetwork) -> bool:
    """``f(x | y) | f(x & y) <= f(x) | f(y)`` componentwise for all pairs."""
    t = f.array
    states = np.arange(1 << f.n, dtype=np.int64)
    for x in range(1 << f.n):
        lhs = t[x | states] | t[x & states]
        if np.any(lhs & ~(t[x] | t)):
            return False
    return True


def is_locally_idempotent(f: TruthTableNetwork) -> bool:
    top = full_mask(f.n)
    return f.table[0] == 0 and f.table[top] == top


def sandwich_check(f: TruthTableNetwork) -> bool:
    """``f^and <= f <= f^or`` on the interaction graph of ``f``."""
    if not is_locally_idempotent(f):
        raise PreconditionError("sandwich_check needs a locally idempotent network")
    d = interaction_graph(f)
    t = f.array
    lower = np.asarray(conjunctive_table(d), dtype=np.int64)
    upper = np.asarray(disjunctive_table(d), dtype=np.int64)
    return not np.any(lower & ~t) and not np.any(t & ~upper)


def network_distance(f: TruthTableNetwork, g: TruthTableNetwork) -> int:
    """Sum over all states of the Hamming distance between ``f(x)`` and ``g(x)``."""
    if f.n != g.n:
        raise InputError("networks of different dimension")
    return sum(popcount(a ^ b) for a, b in zip(f.table, g.table))


def distance_to_constant(f: TruthTableNetwork) -> int:
    total = 0
    size = 1 << f.n
    t = f.array
    for i in range(f.n):
        ones = int(np.count_nonzero((t >> i) & 1))
        total += min(ones, size - ones)
    return total


def closed_form_distance(g: DirectedGraph) -> int:
    """Sum of ``2**(n - d_i)`` over non-sources ``i`` of in-degree ``d_i``."""
    total = sum(1 << (g.n - d) for d in g.in_degrees() if d)
    if total >> 64:
        raise ResourceError(f"closed-form distance {total} overflows a 64-bit word")
    return total


def is_idempotent(f: TruthTableNetwork) -> bool:
    t = f.array
    return bool(np.array_equal(t[t], t))


def is_bijective(f: TruthTableNetwork) -> bool:
    return len(set(f.table)) == len(f.table)


def is_permutation_of_variables(f: TruthTableNetwork) -> tuple[bool, list[int] | None]:
    """Find ``pi`` with ``f(x)_i = x_{pi[i]}`` for every ``x``.

    Candidate read off unit configurations: ``f(e^j)`` must be the single
    unit ``e^k``, giving ``pi[k] = j``.
    """
    n = f.n
    pi = [-1] * n
    for j in range(n):
        image = f.table[1 << j]
        if popcount(image) != 1:
            return False, None
        k = image.bit_length() - 1
        if pi[k] != -1:
            return False, None
        pi[k] = j
    for s in range(1 << n):
        expected = 0
        for i in range(n):
            if (s >> pi[i]) & 1:
                expected |= 1 << i
        if f.table[s] != expected:
            return False, None
    return True, pi


def compose(f: TruthTableNetwork, g: TruthTableNetwork) -> TruthTableNetwork:
    """``f o g``."""
    if f.n != g.n:
        raise InputError("networks of different dimension")
    return TruthTableNetwork(f.n, tuple(f.table[v] for v in g.table))


def power(f: TruthTableNetwork, k: int) -> TruthTableNetwork:
    """``f`` composed with itself ``k`` times, by repeated squaring of the table."""
    if k < 0:
        raise InputError(f"negative exponent {k}")
    result = TruthTableNetwork.identity(f.n)
    base = f
    while k:
        if k & 1:
            result = compose(base, result)
        k >>= 1
        if k:
            base = compose(base, base)
    return result
