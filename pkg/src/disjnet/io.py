"""Edge-list text, DOT export and JSON point sets."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from disjnet.errors import InputError
from disjnet.graph import DirectedGraph, from_edge_list
from disjnet.limits import MAX_VERTICES


def parse_edge_list(text: str, max_n: int = MAX_VERTICES) -> DirectedGraph:
    """Parse ``n`` on the first line, then one ``i j`` arc per line.

    ``#`` starts a comment; blank lines are ignored.  Errors name the line.
    """
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(v) for v in fields]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise InputError(f"line {lineno}: expected the vertex count, got {line!r}")
            n = values[0]
            if n > max_n:
                raise InputError(f"line {lineno}: n={n} exceeds the vertex cap {max_n}")
            continue
        if len(values) != 2:
            raise InputError(f"line {lineno}: expected 'i j', got {line!r}")
        i, j = values
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"line {lineno}: arc ({i}, {j}) has an endpoint outside 0..{n - 1}")
        arcs.append((i, j))
    if n is None:
        raise InputError("empty edge list: the first line must give the vertex count")
    return from_edge_list(n, arcs, max_n=max_n)


def read_edge_list(path: str | Path, max_n: int = MAX_VERTICES) -> DirectedGraph:
    try:
        text = Path(path).read_text()
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    return parse_edge_list(text, max_n)


def format_edge_list(g: DirectedGraph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.arcs()]
    return "\n".join(lines) + "\n"


def to_dot(g: DirectedGraph) -> str:
    lines = ["digraph {"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {i} -> {j};" for i, j in g.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def points_to_json(points: Iterable[int]) -> str:
    return json.dumps(sorted(points))


def points_from_json(text: str) -> frozenset[int]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(v, int) and v >= 0 for v in data):
        raise InputError("point sets are JSON arrays of non-negative integers")
    return frozenset(data)
