"""Exact minimum consistent subsets of coloured paths.

The solver builds an overlay digraph on the positions of the path: an
edge i -> j means i and j can be consecutive selected positions with
nothing selected between them.  Feasibility of a pair only depends on
the runs containing i and j, so the edge test is O(1) after one pass.
A minimum-interior source-to-sink path in the overlay is a minimum
consistent subset; ties are broken towards the lexicographically
smallest position sequence.

The anchored variant additionally forces one position into the subset
and can exclude positions outright, which is how the spider solver
expresses its "closest to the centre" side conditions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .errors import ContractError

_BIG = float("inf")


class Run(NamedTuple):
    start: int
    end: int  # inclusive
    colour: int


@dataclass(frozen=True)
class AnchorConstraint:
    """Force ``anchor`` into the subset; never select a ``forbidden`` position."""

    anchor: int
    forbidden: frozenset[int] = field(default_factory=frozenset)


def runs(colours: Sequence[int]) -> list[Run]:
    """Maximal same-coloured blocks, left to right."""
    out: list[Run] = []
    start = 0
    for i in range(1, len(colours) + 1):
        if i == len(colours) or colours[i] != colours[start]:
            out.append(Run(start, i - 1, colours[start]))
            start = i
    return out


def _run_extents(colours: Sequence[int]) -> tuple[list[int], list[int]]:
    """Per position: start and end index of the run containing it."""
    n = len(colours)
    start = [0] * n
    end = [0] * n
    for r in runs(colours):
        for p in range(r.start, r.end + 1):
            start[p] = r.start
            end[p] = r.end
    return start, end


def feasible_pair(colours: Sequence[int], i: int, j: int) -> bool:
    """Can i and j be consecutive selected positions?

    Every strictly-between position must find its own colour at minimum
    distance among {i, j}: the left half must match colour(i), the right
    half colour(j), and an exact midpoint may match either.
    """
    if i >= j:
        raise ContractError(f"feasible_pair needs i < j, got {i}, {j}")
    start, end = _run_extents(colours)
    return _feasible(colours, start, end, i, j)


def _feasible(colours, start, end, i: int, j: int) -> bool:
    if j == i + 1:
        return True
    left_top = (i + j - 1) // 2  # last index that must match colour(i)
    right_lo = (i + j) // 2 + 1  # first index that must match colour(j)
    if left_top >= i + 1 and end[i] < left_top:
        return False
    if right_lo <= j - 1 and start[j] > right_lo:
        return False
    if (i + j) % 2 == 0:
        mid = (i + j) // 2
        if colours[mid] not in (colours[i], colours[j]):
            return False
    return True


def _successors(colours, start, end, i: int, n: int):
    # beyond 2*end[i]+2-i the left-half condition is unsatisfiable
    hi = min(n - 1, 2 * end[i] + 2 - i)
    for j in range(i + 1, hi + 1):
        if _feasible(colours, start, end, i, j):
            yield j


def _min_counts_to_sink(colours, start, end, allowed) -> list[float]:
    """db[p] = fewest selected positions on a valid p..sink chain (p included)."""
    n = len(colours)
    db = [_BIG] * n
    last_run_start = start[n - 1]
    for p in range(n - 1, -1, -1):
        if not allowed[p]:
            continue
        best = 1.0 if p >= last_run_start else _BIG
        for q in _successors(colours, start, end, p, n):
            if db[q] + 1 < best:
                best = db[q] + 1
        db[p] = best
    return db


def _min_counts_to_anchor(colours, start, end, allowed, anchor: int) -> list[float]:
    """Same as above but the chain must terminate exactly at ``anchor``."""
    da = [_BIG] * len(colours)
    da[anchor] = 1
    for p in range(anchor - 1, -1, -1):
        if not allowed[p]:
            continue
        best = _BIG
        for q in _successors(colours, start, end, p, len(colours)):
            if q > anchor:
                break
            if da[q] + 1 < best:
                best = da[q] + 1
        da[p] = best
    return da


def _reconstruct(colours, start, end, value, total: int, anchor: Optional[int] = None) -> list[int]:
    """Greedy left-to-right walk picking the smallest position that still
    admits a completion of the right size; yields the lexicographically
    smallest optimal selection.  With an anchor, candidates beyond it are
    deferred until the anchor itself has been picked."""
    n = len(colours)
    first_run_end = end[0]
    picked: list[int] = []
    prev: Optional[int] = None
    remaining = total
    while remaining:
        if prev is None:
            candidates = (p for p in range(first_run_end + 1))
        else:
            candidates = _successors(colours, start, end, prev, n)
        before_anchor = anchor is not None and (prev is None or prev < anchor)
        for p in candidates:
            if before_anchor and p > anchor:
                break
            if value[p] == remaining:
                picked.append(p)
                prev = p
                remaining -= 1
                break
        else:  # pragma: no cover - guarded by the feasibility checks upstream
            raise AssertionError("overlay reconstruction lost its path")
    return picked


def solve_path(colours: Sequence[int]) -> list[int]:
    """Minimum consistent subset of a coloured path, as sorted positions."""
    if not colours:
        raise ContractError("path must have at least one vertex")
    start, end = _run_extents(colours)
    allowed = [True] * len(colours)
    db = _min_counts_to_sink(colours, start, end, allowed)
    total = min(db[p] for p in range(end[0] + 1))
    return _reconstruct(colours, start, end, db, int(total))


def solve_path_anchored(
    colours: Sequence[int], constraint: AnchorConstraint
) -> Optional[list[int]]:
    """Minimum consistent subset containing the anchor, or None if the
    forbidden positions rule every such subset out."""
    n = len(colours)
    if not 0 <= constraint.anchor < n:
        raise ContractError(f"anchor {constraint.anchor} outside 0..{n - 1}")
    if constraint.anchor in constraint.forbidden:
        return None
    allowed = [p not in constraint.forbidden for p in range(n)]
    start, end = _run_extents(colours)
    anchor = constraint.anchor

    db = _min_counts_to_sink(colours, start, end, allowed)
    if db[anchor] == _BIG:
        return None
    da = _min_counts_to_anchor(colours, start, end, allowed, anchor)
    # chains entering from the virtual source must begin inside the first run
    head = min((da[p] for p in range(end[0] + 1) if allowed[p]), default=_BIG)
    if head == _BIG:
        return None
    total = int(head + db[anchor] - 1)

    # value[p]: fewest selected from p to the sink while still passing the anchor
    value = [
        (da[p] + db[anchor] - 1 if p <= anchor else db[p]) if allowed[p] else _BIG
        for p in range(n)
    ]
    return _reconstruct(colours, start, end, value, total, anchor=anchor)
