"""Shared helpers for the test suite."""

from __future__ import annotations

import math

from consistent_subset.graph import ColouredGraph


def path_graph(colours) -> ColouredGraph:
    return ColouredGraph.from_edges(
        max(colours) + 1,
        list(colours),
        [(i, i + 1) for i in range(len(colours) - 1)],
    )


def floyd_warshall(graph: ColouredGraph) -> list[list[float]]:
    """All-pairs distances by a deliberately naive method, used as an
    independent reference for the BFS-based code paths."""
    n = graph.vertex_count
    dist = [[math.inf] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u in range(n):
        for v in graph.adjacency[u]:
            dist[u][v] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik is math.inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return dist


def naive_is_consistent(graph: ColouredGraph, members) -> bool:
    """Definition-level consistency check from all-pairs distances."""
    members = set(members)
    dist = floyd_warshall(graph)
    for v in range(graph.vertex_count):
        if v in members:
            continue
        best = min(dist[v][c] for c in members)
        nearest = {c for c in members if dist[v][c] == best}
        if not any(graph.colours[c] == graph.colours[v] for c in nearest):
            return False
    return True
