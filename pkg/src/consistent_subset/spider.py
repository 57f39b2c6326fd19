"""Exact minimum consistent subsets of k-chromatic spiders.

A spider is one centre vertex with paths (legs) attached.  The solver
dispatches on how the centre's colour relates to the first runs of the
legs:

* Case 1 - the centre's colour is on no first run: the centre must be
  selected, and each leg is solved as an anchored path.
* Case 2 - every first run has the centre's colour: either keep the
  centre, or pick its replacement u on some first run and re-solve every
  leg with u as the selected vertex nearest to the centre.
* Case 3 - mixed first-run colours: sweep "gates", i.e. one selected
  vertex per chosen first run, all at the same depth, so that the centre
  and every leg without a gate see all the needed colours at one common
  distance.  Three sub-cases differ only in which first-run sets are
  swept.

Every candidate produced by the sweeps is validated with the
consistency checker before it may replace the (always valid) Case-1
style initializer, so the returned subset is consistent unconditionally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import ContractError, InputError, InternalError, ResourceLimitError
from .graph import ColouredGraph, is_consistent
from .paths import AnchorConstraint, solve_path, solve_path_anchored

DEFAULT_ENUMERATION_BUDGET = 200_000


class CaseLabel(enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3_SUB1 = "case3-sub1"
    CASE3_SUB2A = "case3-sub2a"
    CASE3_SUB2B = "case3-sub2b"
    PATH = "path"  # one or two legs: degenerates to a plain path


@dataclass(frozen=True)
class Spider:
    centre_colour: int
    legs: tuple[tuple[int, ...], ...]  # each ordered centre-adjacent first

    def __post_init__(self):
        if not self.legs:
            raise InputError("a spider needs at least one leg")
        if any(len(leg) == 0 for leg in self.legs):
            raise InputError("legs must be non-empty")

    @property
    def vertex_count(self) -> int:
        return 1 + sum(len(leg) for leg in self.legs)

    def colours_present(self) -> set[int]:
        present = {self.centre_colour}
        for leg in self.legs:
            present.update(leg)
        return present

    def leg_vertex(self, leg: int, depth: int) -> int:
        """Graph id of the vertex at 1-based ``depth`` on ``leg`` (centre is id 0)."""
        if not 1 <= depth <= len(self.legs[leg]):
            raise InputError(f"depth {depth} outside leg {leg}")
        return 1 + sum(len(l) for l in self.legs[:leg]) + (depth - 1)

    def to_graph(self, colour_count: Optional[int] = None) -> ColouredGraph:
        colours = [self.centre_colour]
        edges = []
        for li, leg in enumerate(self.legs):
            prev = 0
            for depth, c in enumerate(leg, start=1):
                vid = len(colours)
                colours.append(c)
                edges.append((prev, vid))
                prev = vid
        k = colour_count if colour_count is not None else max(colours) + 1
        return ColouredGraph.from_edges(k, colours, edges)


@dataclass(frozen=True)
class SpiderSolution:
    subset: frozenset[int]
    case: CaseLabel

    @property
    def size(self) -> int:
        return len(self.subset)


def first_runs(spider: Spider) -> list[tuple[int, int]]:
    """Per leg: (colour, length) of the run adjacent to the centre."""
    out = []
    for leg in spider.legs:
        length = 1
        while length < len(leg) and leg[length] == leg[0]:
            length += 1
        out.append((leg[0], length))
    return out


# --- spider text format ----------------------------------------------------

def spider_from_text(text: str) -> Spider:
    lines = [ln for ln in (l.strip() for l in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty spider description")
    try:
        centre = int(lines[0])
        legs = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1:])
    except ValueError as exc:
        raise InputError(f"spider text must contain integers: {exc}") from exc
    if centre < 0 or any(c < 0 for leg in legs for c in leg):
        raise InputError("colour indices must be non-negative")
    return Spider(centre_colour=centre, legs=legs)


def spider_to_text(spider: Spider) -> str:
    lines = [str(spider.centre_colour)]
    lines.extend(" ".join(str(c) for c in leg) for leg in spider.legs)
    return "\n".join(lines) + "\n"


# --- classification --------------------------------------------------------

def _covering_sets(spider: Spider, budget: int) -> list[tuple[int, ...]]:
    """All |psi|-sized sets of legs whose first-run colours cover psi."""
    fr = first_runs(spider)
    psi = {c for c, _ in fr}
    k2 = len(psi)
    out = []
    seen = 0
    for combo in combinations(range(len(spider.legs)), k2):
        seen += 1
        if seen > budget:
            raise ResourceLimitError(
                f"first-run set enumeration exceeded budget {budget}"
            )
        if {fr[i][0] for i in combo} == psi:
            out.append(combo)
    return out


def _legs_with_colour_outside(spider: Spider, palette: set[int]) -> set[int]:
    return {
        li for li, leg in enumerate(spider.legs) if any(c not in palette for c in leg)
    }


def classify(spider: Spider, budget: int = DEFAULT_ENUMERATION_BUDGET) -> CaseLabel:
    if len(spider.legs) < 3:
        raise ContractError("classification applies to spiders with at least 3 legs")
    fr = first_runs(spider)
    psi = {c for c, _ in fr}
    if spider.centre_colour not in psi:
        return CaseLabel.CASE1
    if psi == {spider.centre_colour}:
        return CaseLabel.CASE2
    if psi == spider.colours_present():
        return CaseLabel.CASE3_SUB1
    offside = _legs_with_colour_outside(spider, psi)
    for combo in _covering_sets(spider, budget):
        if not (offside - set(combo)):
            return CaseLabel.CASE3_SUB2A
    return CaseLabel.CASE3_SUB2B


# --- shared machinery ------------------------------------------------------

def _leg_suffix_solution(spider: Spider, leg: int, depth: int) -> set[int]:
    """Anchored solve of the leg from ``depth`` outward, anchor included.

    Realizes the gate sub-solution: minimum consistent subset of the part
    of the leg at depth >= ``depth`` that contains the depth-``depth``
    vertex.
    """
    colours = spider.legs[leg][depth - 1 :]
    sol = solve_path_anchored(colours, AnchorConstraint(0))
    assert sol is not None  # unconstrained anchored solves always exist
    return {spider.leg_vertex(leg, depth + p) for p in sol}


def solve_case1(spider: Spider) -> set[int]:
    """Centre selected; each leg solved as a path anchored at the centre.

    Valid for any spider, which makes it the initializer for every other
    case.
    """
    chosen = {0}
    for li, leg in enumerate(spider.legs):
        colours = (spider.centre_colour,) + leg
        sol = solve_path_anchored(colours, AnchorConstraint(0))
        assert sol is not None
        chosen.update(spider.leg_vertex(li, p) for p in sol if p > 0)
    return chosen


def solve_case2(spider: Spider) -> set[int]:
    """Best of keeping the centre versus replacing it by a first-run vertex u.

    For a candidate u at depth d on leg j, every other leg i is re-solved
    on the composite path (leg_i plus the centre-to-u segment) with u
    forced in and nothing selected strictly closer to the centre than u;
    leg j beyond u is solved anchored at u.
    """
    best = solve_case1(spider)
    fr = first_runs(spider)
    for j, (_, rho_len) in enumerate(fr):
        for du in range(1, rho_len + 1):
            u_id = spider.leg_vertex(j, du)
            candidate = {u_id}
            candidate.update(_leg_suffix_solution(spider, j, du))
            feasible = True
            for i in range(len(spider.legs)):
                if i == j:
                    continue
                leg = spider.legs[i]
                # u first, then the centre-to-u segment reversed, centre, leg i
                colours = tuple(reversed(spider.legs[j][:du])) + (spider.centre_colour,) + leg
                forbidden = frozenset(range(1, min(2 * du, len(colours))))
                sol = solve_path_anchored(colours, AnchorConstraint(0, forbidden))
                if sol is None:
                    feasible = False
                    break
                for p in sol:
                    if p > du:
                        candidate.add(spider.leg_vertex(i, p - du))
            if not feasible:
                continue
            if len(candidate) < len(best) and _valid(spider, candidate):
                best = candidate
    return best


def _gate_sweep(
    spider: Spider, best: set[int], run_sets: Sequence[tuple[int, ...]]
) -> set[int]:
    """Try every (first-run set, common gate depth) pair; keep the smallest
    consistent candidate.  Enumeration order (sets as given, depth
    ascending) breaks ties deterministically."""
    fr = first_runs(spider)
    for legs_in_s in run_sets:
        if not legs_in_s:
            continue
        dmax = min(fr[i][1] for i in legs_in_s)
        for d in range(1, dmax + 1):
            candidate: set[int] = set()
            for li in legs_in_s:
                candidate.update(_leg_suffix_solution(spider, li, d))
            if len(candidate) < len(best) and _valid(spider, candidate):
                best = candidate
    return best


def solve_case3_sub1(spider: Spider, budget: int = DEFAULT_ENUMERATION_BUDGET) -> set[int]:
    best = solve_case1(spider)
    return _gate_sweep(spider, best, _covering_sets(spider, budget))


def solve_case3_sub2a(spider: Spider, budget: int = DEFAULT_ENUMERATION_BUDGET) -> set[int]:
    fr = first_runs(spider)
    psi = {c for c, _ in fr}
    offside = _legs_with_colour_outside(spider, psi)
    qualifying = [
        combo for combo in _covering_sets(spider, budget) if not (offside - set(combo))
    ]
    best = solve_case1(spider)
    return _gate_sweep(spider, best, qualifying)


def solve_case3_sub2b(spider: Spider, budget: int = DEFAULT_ENUMERATION_BUDGET) -> set[int]:
    fr = first_runs(spider)
    psi = {c for c, _ in fr}
    offside = _legs_with_colour_outside(spider, psi)  # legs holding out-of-psi colours
    run_sets = []
    for combo in _covering_sets(spider, budget):
        in_s = set(combo)
        phi = offside - in_s
        if not phi:
            continue  # condition 2 fails for this set
        psi1 = {fr[i][0] for i in phi}
        s1 = sorted(phi)
        s2 = [i for i in combo if fr[i][0] not in psi1]
        s3 = [i for i in combo if fr[i][0] in psi1 and i in offside]
        run_sets.append(tuple(sorted(set(s1) | set(s2) | set(s3))))
    best = solve_case1(spider)
    return _gate_sweep(spider, best, run_sets)


def _valid(spider: Spider, candidate: set[int]) -> bool:
    return is_consistent(spider.to_graph(), candidate).valid


def _solve_as_path(spider: Spider) -> SpiderSolution:
    if len(spider.legs) == 1:
        colours = (spider.centre_colour,) + spider.legs[0]
        ids = [0] + [spider.leg_vertex(0, d) for d in range(1, len(spider.legs[0]) + 1)]
    else:
        left, right = spider.legs[0], spider.legs[1]
        colours = tuple(reversed(left)) + (spider.centre_colour,) + right
        ids = (
            [spider.leg_vertex(0, d) for d in range(len(left), 0, -1)]
            + [0]
            + [spider.leg_vertex(1, d) for d in range(1, len(right) + 1)]
        )
    sol = solve_path(colours)
    return SpiderSolution(frozenset(ids[p] for p in sol), CaseLabel.PATH)


def solve_spider(
    spider: Spider, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> SpiderSolution:
    """Exact minimum consistent subset of a spider, with its case label."""
    if len(spider.legs) <= 2:
        solution = _solve_as_path(spider)
    else:
        label = classify(spider, budget)
        if label is CaseLabel.CASE1:
            subset = solve_case1(spider)
        elif label is CaseLabel.CASE2:
            subset = solve_case2(spider)
        elif label is CaseLabel.CASE3_SUB1:
            subset = solve_case3_sub1(spider, budget)
        elif label is CaseLabel.CASE3_SUB2A:
            subset = solve_case3_sub2a(spider, budget)
        else:
            subset = solve_case3_sub2b(spider, budget)
        solution = SpiderSolution(frozenset(subset), label)
    if not _valid(spider, set(solution.subset)):
        raise InternalError("spider solver produced an inconsistent subset")
    return solution
