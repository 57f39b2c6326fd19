"""Vertex-coloured graphs, hop distances and the consistency checker.

A subset C of vertices is *consistent* when every vertex outside C has,
among its nearest C-members by hop distance, at least one vertex of its
own colour.  Distances here are edge counts; the argmin sets (and hence
all verdicts) are identical under the vertex-count convention, which is
just an offset of one.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError, InputError

INF = math.inf


@dataclass(frozen=True)
class ColouredGraph:
    """Simple undirected graph with one colour index per vertex."""

    colour_count: int
    colours: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.colours)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]

    @staticmethod
    def from_edges(
        colour_count: int,
        colours: Sequence[int],
        edges: Iterable[tuple[int, int]],
    ) -> "ColouredGraph":
        n = len(colours)
        for c in colours:
            if not 0 <= c < colour_count:
                raise InputError(f"colour {c} outside universe of {colour_count} colours")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return ColouredGraph(
            colour_count=colour_count,
            colours=tuple(colours),
            adjacency=tuple(tuple(sorted(a)) for a in adj),
        )

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = bfs_distances(self, 0)
        return all(d != INF for d in seen)


@dataclass(frozen=True)
class ConsistencyReport:
    valid: bool
    # one triple per failing vertex: (vertex, nearest members of C, colour it needed)
    violations: tuple[tuple[int, tuple[int, ...], int], ...]


def bfs_distances(graph: ColouredGraph, source: int) -> list[float]:
    """Hop distance (edge count) from ``source`` to every vertex; INF if unreachable."""
    n = graph.vertex_count
    if not 0 <= source < n:
        raise InputError(f"source {source} outside 0..{n - 1}")
    dist: list[float] = [INF] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in graph.adjacency[u]:
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return dist


def _multi_source_distances(graph: ColouredGraph, sources: Iterable[int]) -> list[float]:
    dist: list[float] = [INF] * graph.vertex_count
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in graph.adjacency[u]:
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return dist


def nearest_in_subset(graph: ColouredGraph, v: int, members: Iterable[int]) -> set[int]:
    """All members of C at minimum hop distance from v ({v} itself when v is a member)."""
    mset = set(members)
    if not mset:
        raise ContractError("nearest_in_subset needs a non-empty subset")
    for u in mset:
        if not 0 <= u < graph.vertex_count:
            raise InputError(f"subset member {u} outside 0..{graph.vertex_count - 1}")
    if v in mset:
        return {v}
    dist = bfs_distances(graph, v)
    best = min(dist[u] for u in mset)
    if best is INF:
        return set()
    return {u for u in mset if dist[u] == best}


def is_consistent(graph: ColouredGraph, members: Iterable[int]) -> ConsistencyReport:
    """Check the consistency condition and enumerate every failing vertex.

    Uses one multi-source BFS for the whole subset plus one per colour
    present in it: a vertex is fine exactly when its distance to the
    members of its own colour equals its distance to the subset.
    """
    mset = set(members)
    if not mset:
        raise ContractError("a candidate consistent subset must be non-empty")
    for u in mset:
        if not 0 <= u < graph.vertex_count:
            raise InputError(f"subset member {u} outside 0..{graph.vertex_count - 1}")

    dist_all = _multi_source_distances(graph, mset)
    by_colour: dict[int, list[int]] = {}
    for u in mset:
        by_colour.setdefault(graph.colours[u], []).append(u)
    dist_col = {c: _multi_source_distances(graph, us) for c, us in by_colour.items()}

    violations = []
    for v in range(graph.vertex_count):
        if v in mset:
            continue
        c = graph.colours[v]
        dcol = dist_col[c][v] if c in dist_col else INF
        if dist_all[v] is INF or dcol > dist_all[v]:
            nearest = tuple(sorted(nearest_in_subset(graph, v, mset)))
            violations.append((v, nearest, c))
    return ConsistencyReport(valid=not violations, violations=tuple(violations))


# --- serialization ---------------------------------------------------------

def graph_to_json_obj(graph: ColouredGraph) -> dict:
    return {
        "colour_count": graph.colour_count,
        "vertices": [{"id": i, "colour": c} for i, c in enumerate(graph.colours)],
        "edges": [[u, v] for u, v in graph.edges()],
    }


def graph_from_json_obj(obj: dict) -> ColouredGraph:
    try:
        colour_count = obj["colour_count"]
        vertices = obj["vertices"]
        edges = obj["edges"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"graph JSON missing field: {exc}") from exc
    ids = [v["id"] for v in vertices]
    if sorted(ids) != list(range(len(ids))):
        raise InputError("vertex ids must be contiguous 0..n-1")
    colours = [0] * len(ids)
    for v in vertices:
        colours[v["id"]] = v["colour"]
    return ColouredGraph.from_edges(colour_count, colours, [(e[0], e[1]) for e in edges])


def load_graph_json(text: str) -> ColouredGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    return graph_from_json_obj(obj)


def dump_graph_json(graph: ColouredGraph) -> str:
    return json.dumps(graph_to_json_obj(graph), indent=2)


def graph_to_dot(graph: ColouredGraph) -> str:
    lines = ["graph coloured {"]
    for i, c in enumerate(graph.colours):
        lines.append(f'  {i} [label="{i}", colorid={c}];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
