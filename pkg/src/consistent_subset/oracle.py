"""Brute-force ground truth for minimum consistent subsets.

Subsets are enumerated as bitmasks grouped by population count, so the
first consistent subset found is guaranteed minimum.  The only virtue of
this module is obvious correctness; its consistency test is deliberately
independent of the checker in :mod:`consistent_subset.graph` (it walks
precomputed distance rings instead of running multi-source BFS).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import ContractError, ResourceLimitError
from .graph import ColouredGraph, bfs_distances

ENV_MAX_N = "MCS_ORACLE_MAX_N"
HARD_CAP = 26  # 2^n enumeration; beyond this the oracle is pointless


@dataclass(frozen=True)
class OracleConfig:
    max_vertices: int = 20
    enumerate_all_optima: bool = False

    def effective_cap(self) -> int:
        cap = self.max_vertices
        env = os.environ.get(ENV_MAX_N)
        if env is not None:
            try:
                cap = int(env)
            except ValueError as exc:
                raise ContractError(f"{ENV_MAX_N} must be an integer") from exc
        if cap > HARD_CAP:
            raise ContractError(f"oracle cap {cap} above the hard limit {HARD_CAP}")
        return cap


@dataclass(frozen=True)
class OracleResult:
    subset: frozenset[int]
    all_optima: Optional[tuple[frozenset[int], ...]] = None

    @property
    def size(self) -> int:
        return len(self.subset)


def _ring_tables(graph: ColouredGraph):
    """Per vertex: distance rings as bitmasks, paired with the same ring
    restricted to the vertex's own colour."""
    n = graph.vertex_count
    colour_mask = [0] * graph.colour_count
    for v, c in enumerate(graph.colours):
        colour_mask[c] |= 1 << v
    tables = []
    for v in range(n):
        dist = bfs_distances(graph, v)
        rings: dict[int, int] = {}
        for u, d in enumerate(dist):
            if u != v and d != float("inf"):
                rings.setdefault(int(d), 0)
                rings[int(d)] |= 1 << u
        own = colour_mask[graph.colours[v]]
        tables.append([(rings[d], rings[d] & own) for d in sorted(rings)])
    return tables


def _mask_consistent(mask: int, n: int, tables) -> bool:
    for v in range(n):
        if mask >> v & 1:
            continue
        for ring, ring_own in tables[v]:
            hit = ring & mask
            if hit:
                if not ring_own & mask:
                    return False
                break
        else:
            return False  # no member reachable from v at all
    return True


def oracle_mcs(graph: ColouredGraph, cfg: OracleConfig = OracleConfig()) -> OracleResult:
    """Exhaustive minimum consistent subset of a small graph."""
    n = graph.vertex_count
    cap = cfg.effective_cap()
    if n > cap:
        raise ResourceLimitError(
            f"graph has {n} vertices; oracle cap is {cap} "
            f"(override with {ENV_MAX_N}, hard limit {HARD_CAP})"
        )
    tables = _ring_tables(graph)
    for size in range(1, n + 1):
        optima = []
        for members in combinations(range(n), size):
            mask = 0
            for v in members:
                mask |= 1 << v
            if _mask_consistent(mask, n, tables):
                optima.append((mask, members))
                if not cfg.enumerate_all_optima:
                    break
        if optima:
            mask, members = min(optima)
            result = frozenset(members)
            if cfg.enumerate_all_optima:
                return OracleResult(
                    result, tuple(frozenset(m) for _, m in sorted(optima))
                )
            return OracleResult(result)
    raise ContractError("graph has no vertices")  # n == 0 only
