"""Analysis reports: build, render as text, round-trip through JSON."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from disjnet.bits import format_config, to_sorted
from disjnet.dynamics import Topology, fixed_points, image_set, periodic_structure
from disjnet.families import is_near_cyclic
from disjnet.graph import (
    DirectedGraph,
    coverable_by_cycles,
    is_primitive,
    loop_number,
    scc,
    structural_predicates,
)
from disjnet.limits import ORACLE_CAP, POINT_CAP, check_cap
from disjnet.network import (
    DisjunctiveNetwork,
    is_bijective,
    is_idempotent,
    is_permutation_of_variables,
    to_truth_table,
)
from disjnet.oracle import build_functional_graph, oracle_fixed_set, oracle_image_set
from disjnet.ranks import cross_checked_ranks
from disjnet.sampling import DEFAULT_SEED

SCHEMA = 1
PRINT_CAP = 4096
PREVIEW = 32


@dataclass
class PointSummary:
    size: int
    members: list[int]
    truncated: bool

    @classmethod
    def of(cls, points: frozenset[int] | None, size: int, full: bool) -> PointSummary:
        if points is None:
            return cls(size, [], True)
        ordered = sorted(points)
        if full or size <= PRINT_CAP:
            return cls(size, ordered, False)
        return cls(size, ordered[:PREVIEW], True)


@dataclass
class AnalysisReport:
    n: int
    arcs: list[list[int]]
    sccs: list[list[int]]
    loop_number: int
    predicates: dict
    ranks: dict
    points: dict[str, PointSummary]
    classification: dict
    oracle: dict
    seed: int
    caps: dict
    schema: int = SCHEMA
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisReport:
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        fields = dict(data)
        fields["points"] = {k: PointSummary(**v) for k, v in data["points"].items()}
        return cls(**fields)

    @classmethod
    def from_json(cls, text: str) -> AnalysisReport:
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        lines = [f"n = {self.n}, {len(self.arcs)} arcs, {len(self.sccs)} strong components"]
        lines.append(f"loop number: {self.loop_number}")
        for key in sorted(self.predicates):
            lines.append(f"  {key}: {self.predicates[key]}")
        r = self.ranks
        lines.append(f"ranks (image, periodic, fixed): ({r['image']}, {r['periodic']}, {r['fixed']})")
        for name, summary in self.points.items():
            shown = " ".join(format_config(s, self.n) for s in summary.members)
            more = " ..." if summary.truncated else ""
            lines.append(f"{name} points [{summary.size}]: {shown}{more}")
        for key in sorted(self.classification):
            lines.append(f"{key}: {self.classification[key]}")
        if self.oracle["ran"]:
            flags = ", ".join(f"{k}={v}" for k, v in sorted(self.oracle["agreement"].items()))
            lines.append(f"oracle agreement: {flags}")
        lines.extend(f"note: {note}" for note in self.notes)
        return "\n".join(lines)


def _periodic_points(f: DisjunctiveNetwork, oracle_cap: int) -> tuple[frozenset[int] | None, int, str]:
    if loop_number(f.graph) == 0:
        # f^n sends everything to the empty configuration
        return frozenset({0}), 1, "acyclic"
    ps = periodic_structure(f, cap=oracle_cap)
    return ps.periodic_points, ps.count, ps.method


def analyze(
    g: DirectedGraph,
    oracle: bool = False,
    full: bool = False,
    oracle_cap: int = ORACLE_CAP,
    seed: int = DEFAULT_SEED,
) -> AnalysisReport:
    """Structural predicates, ranks, point sets and classifications of the OR network on ``g``."""
    check_cap(g.n, oracle_cap, "analyze (image points scan every state)")
    f = DisjunctiveNetwork(g)
    summary = structural_predicates(g)
    dec = scc(g)
    coverable, _ = coverable_by_cycles(g)
    predicates = {
        "strong": summary.is_strong,
        "nontrivial": summary.is_nontrivial,
        "reflexive": summary.is_reflexive,
        "coverable_by_cycles": coverable,
        "sources": sorted(summary.sources),
        "sinks": sorted(summary.sinks),
    }
    notes = []

    image = image_set(f, oracle_cap)
    periodic, periodic_count, method = _periodic_points(f, oracle_cap)
    notes.append(f"periodic points by {method}")
    fixed = fixed_points(f, cap=oracle_cap)
    if isinstance(fixed, Topology):
        fixed_set = fixed.opens
        notes.append("fixed points form a topology")
    else:
        fixed_set = fixed
        notes.append("fixed points by brute force (graph has an acyclic vertex)")

    agreement: dict[str, bool] = {}
    if oracle:
        triple, agreement = cross_checked_ranks(f, oracle_cap)
        agreement["image_set"] = oracle_image_set(f, oracle_cap) == image
        cycle_states = build_functional_graph(f, oracle_cap).cycle_states()
        if periodic is None:
            agreement["periodic_count"] = len(cycle_states) == periodic_count
        else:
            agreement["periodic_set"] = cycle_states == periodic
        agreement["fixed_set"] = oracle_fixed_set(f, oracle_cap) == fixed_set
        agreement["ranks"] = triple.as_tuple() == (len(image), periodic_count, len(fixed_set))

    table = to_truth_table(f, oracle_cap)
    near, witness = is_near_cyclic(g)
    classification = {
        "near_cyclic": near,
        "near_cyclic_witness": None if witness is None else str(witness),
        "primitive": is_primitive(g),
        "permutation_of_variables": is_permutation_of_variables(table)[0],
        "bijective": is_bijective(table),
        "idempotent": is_idempotent(table),
    }

    return AnalysisReport(
        n=g.n,
        arcs=[[i, j] for i, j in g.arcs()],
        sccs=[to_sorted(c) for c in dec.components],
        loop_number=loop_number(g),
        predicates=predicates,
        ranks={"image": len(image), "periodic": periodic_count, "fixed": len(fixed_set)},
        points={
            "image": PointSummary.of(image, len(image), full),
            "periodic": PointSummary.of(periodic, periodic_count, full),
            "fixed": PointSummary.of(fixed_set, len(fixed_set), full),
        },
        classification=classification,
        oracle={"ran": oracle, "agreement": agreement},
        seed=seed,
        caps={"oracle_cap": oracle_cap, "print_cap": PRINT_CAP, "point_cap": POINT_CAP},
        notes=notes,
    )
