"""MAX-2SAT to coloured-tree instance generation.

Builds, for a 2-CNF formula, a tree whose minimum consistent subsets
track the number of simultaneously satisfiable clauses.  The tree is
made of:

* per variable: two 5-vertex literal paths, five 6-vertex variable
  paths, and m*n stabilizer pairs;
* per clause: a 17-vertex clause path and two 2-vertex occurrence paths
  coloured like the literal paths of the clause's literals;
* a central chain vertex joined to every variable gadget directly and to
  every clause gadget through three chain vertices, with every chain
  vertex heading its own monochromatic 8-vertex chain path.

Every path, stabilizer pair and chain path gets a fresh colour; only the
occurrence paths reuse colours (those of their literal paths).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ContractError, InputError
from .graph import ColouredGraph, bfs_distances

CHAIN_PATH_LEN = 8
CLAUSE_PATH_LEN = 17
LITERAL_PATH_LEN = 5
VARIABLE_PATH_LEN = 6
VARIABLE_PATHS = 5


@dataclass(frozen=True)
class Cnf2:
    """A MAX-2SAT instance: clauses are pairs of DIMACS-style literals
    (positive/negative 1-based variable indices)."""

    n_vars: int
    clauses: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n_vars < 1:
            raise InputError("need at least one variable")
        if not self.clauses:
            raise InputError("need at least one clause")
        for cl in self.clauses:
            if len(cl) != 2:
                raise InputError(f"clause {cl} does not have exactly 2 literals")
            for lit in cl:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise InputError(f"literal {lit} out of range for {self.n_vars} variables")

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)


def parse_cnf(text: str) -> Cnf2:
    """Parse DIMACS CNF, insisting on exactly two literals per clause."""
    n_vars = None
    n_clauses = None
    literals: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"bad problem line: {line!r}")
            n_vars, n_clauses = int(parts[2]), int(parts[3])
            continue
        try:
            literals.extend(int(t) for t in line.split())
        except ValueError as exc:
            raise InputError(f"bad clause line {line!r}: {exc}") from exc
    if n_vars is None:
        raise InputError("missing 'p cnf' problem line")
    clauses: list[tuple[int, int]] = []
    current: list[int] = []
    for lit in literals:
        if lit == 0:
            if len(current) != 2:
                raise InputError(f"clause {current} does not have exactly 2 literals")
            clauses.append((current[0], current[1]))
            current = []
        else:
            current.append(lit)
    if current:
        raise InputError("trailing literals without terminating 0")
    if n_clauses is not None and n_clauses != len(clauses):
        raise InputError(f"header promises {n_clauses} clauses, found {len(clauses)}")
    return Cnf2(n_vars=n_vars, clauses=tuple(clauses))


def count_satisfied(cnf: Cnf2, assignment: Sequence[bool]) -> int:
    if len(assignment) != cnf.n_vars:
        raise ContractError("assignment length must equal the variable count")
    return sum(
        1
        for a, b in cnf.clauses
        if _lit_value(a, assignment) or _lit_value(b, assignment)
    )


def _lit_value(lit: int, assignment: Sequence[bool]) -> bool:
    value = assignment[abs(lit) - 1]
    return value if lit > 0 else not value


def expected_size(cnf: Cnf2, k: int) -> int:
    """Size of the witness subset for an assignment satisfying k clauses."""
    m, n = cnf.n_clauses, cnf.n_vars
    if not 0 <= k <= m:
        raise ContractError(f"satisfied-clause count {k} outside 0..{m}")
    beta = 3 * m + 1
    return beta + m * n * n + 7 * n + 3 * m - k


# --- tree layout -----------------------------------------------------------

@dataclass(frozen=True)
class VariableGadget:
    positive_literal_path: tuple[int, ...]  # 5 ids, head first
    negative_literal_path: tuple[int, ...]
    variable_paths: tuple[tuple[int, ...], ...]  # 5 paths x 6 ids
    left_stabilizers: tuple[int, ...]  # mn ids
    right_stabilizers: tuple[int, ...]
    positive_colour: int
    negative_colour: int

    def all_vertices(self) -> list[int]:
        out = list(self.positive_literal_path) + list(self.negative_literal_path)
        for p in self.variable_paths:
            out.extend(p)
        out.extend(self.left_stabilizers)
        out.extend(self.right_stabilizers)
        return out


@dataclass(frozen=True)
class ClauseGadget:
    clause_path: tuple[int, ...]  # 17 ids
    left_occurrence: tuple[int, int]
    right_occurrence: tuple[int, int]
    chain_vertices: tuple[int, int, int]  # connector path; first is adjacent to p0


@dataclass(frozen=True)
class ReductionTree:
    graph: ColouredGraph
    cnf: Cnf2
    p0: int
    variables: tuple[VariableGadget, ...]
    clauses: tuple[ClauseGadget, ...]
    # beta chain paths of 8 ids each; path[0] is the chain vertex itself.
    # Order: p0's path first, then per clause the three connector paths.
    chain_paths: tuple[tuple[int, ...], ...]

    @property
    def beta(self) -> int:
        return len(self.chain_paths)

    @property
    def alpha(self) -> int:
        return CHAIN_PATH_LEN * self.beta


class _Builder:
    def __init__(self):
        self.colours: list[int] = []
        self.edges: list[tuple[int, int]] = []
        self.next_colour = 0

    def fresh_colour(self) -> int:
        c = self.next_colour
        self.next_colour += 1
        return c

    def vertex(self, colour: int) -> int:
        self.colours.append(colour)
        return len(self.colours) - 1

    def path(self, length: int, colour: int, attach: Optional[int] = None) -> tuple[int, ...]:
        ids = tuple(self.vertex(colour) for _ in range(length))
        for a, b in zip(ids, ids[1:]):
            self.edges.append((a, b))
        if attach is not None:
            self.edges.append((attach, ids[0]))
        return ids


def build_reduction(cnf: Cnf2) -> ReductionTree:
    n, m = cnf.n_vars, cnf.n_clauses
    b = _Builder()

    # central chain vertex; its colour is fixed once chain-path colours exist
    p0 = b.vertex(-1)

    variables = []
    for i in range(n):
        var_colours = [b.fresh_colour() for _ in range(VARIABLE_PATHS)]
        vpaths = tuple(b.path(VARIABLE_PATH_LEN, c) for c in var_colours)
        # first vertices of the variable paths form an induced path, in order
        for a, bb in zip(vpaths, vpaths[1:]):
            b.edges.append((a[0], bb[0]))
        pos_colour = b.fresh_colour()
        neg_colour = b.fresh_colour()
        pos_path = b.path(LITERAL_PATH_LEN, pos_colour, attach=vpaths[0][0])
        neg_path = b.path(LITERAL_PATH_LEN, neg_colour, attach=vpaths[-1][0])
        left_stab = []
        right_stab = []
        for _ in range(m * n):
            c = b.fresh_colour()
            s1 = b.vertex(c)
            s2 = b.vertex(c)
            b.edges.append((vpaths[0][0], s1))
            b.edges.append((vpaths[-1][0], s2))
            left_stab.append(s1)
            right_stab.append(s2)
        b.edges.append((p0, vpaths[2][0]))
        variables.append(
            VariableGadget(
                positive_literal_path=pos_path,
                negative_literal_path=neg_path,
                variable_paths=vpaths,
                left_stabilizers=tuple(left_stab),
                right_stabilizers=tuple(right_stab),
                positive_colour=pos_colour,
                negative_colour=neg_colour,
            )
        )

    def literal_colour(lit: int) -> int:
        g = variables[abs(lit) - 1]
        return g.positive_colour if lit > 0 else g.negative_colour

    clauses = []
    connector_heads = []  # chain vertices needing chain paths, in order
    for j, (l1, l2) in enumerate(cnf.clauses):
        clause_path = b.path(CLAUSE_PATH_LEN, b.fresh_colour())
        left_occ = b.path(2, literal_colour(l1), attach=clause_path[1])
        right_occ = b.path(2, literal_colour(l2), attach=clause_path[15])
        t1 = b.vertex(-1)
        t2 = b.vertex(-1)
        t3 = b.vertex(-1)
        b.edges.extend([(p0, t1), (t1, t2), (t2, t3), (t3, clause_path[8])])
        connector_heads.append((t1, t2, t3))
        clauses.append(
            ClauseGadget(
                clause_path=clause_path,
                left_occurrence=(left_occ[0], left_occ[1]),
                right_occurrence=(right_occ[0], right_occ[1]),
                chain_vertices=(t1, t2, t3),
            )
        )

    # every chain vertex heads its own monochromatic 8-vertex chain path
    chain_paths = []
    for head in [p0] + [t for trio in connector_heads for t in trio]:
        colour = b.fresh_colour()
        b.colours[head] = colour
        tail = b.path(CHAIN_PATH_LEN - 1, colour, attach=head)
        chain_paths.append((head,) + tail)

    graph = ColouredGraph.from_edges(b.next_colour, b.colours, b.edges)
    return ReductionTree(
        graph=graph,
        cnf=cnf,
        p0=p0,
        variables=tuple(variables),
        clauses=tuple(clauses),
        chain_paths=tuple(chain_paths),
    )


# --- witness construction --------------------------------------------------

# chain-path witness positions (1-based), chosen so that each chain
# selection sits exactly 8 hops from the ninth clause-path vertex it is
# closest to: any nearer hijacks that vertex, any farther abandons the
# head of its own chain path.
_CHAIN_POSITION_P0 = 5
_CHAIN_POSITIONS_CONNECTOR = (6, 7, 8)  # adjacent-to-p0 first


def witness_subset(tree: ReductionTree, assignment: Sequence[bool]) -> frozenset[int]:
    """The consistent-subset witness derived from a truth assignment.

    Its size is always expected_size(cnf, count_satisfied(cnf, assignment)).
    """
    cnf = tree.cnf
    if len(assignment) != cnf.n_vars:
        raise ContractError("assignment length must equal the variable count")
    chosen: set[int] = set()

    for i, gadget in enumerate(tree.variables):
        if assignment[i]:
            chosen.update(gadget.left_stabilizers)
            for j, vp in enumerate(gadget.variable_paths, start=1):
                chosen.add(vp[j])  # (j+1)-th vertex
            chosen.add(gadget.positive_literal_path[0])
            chosen.add(gadget.negative_literal_path[4])
        else:
            chosen.update(gadget.right_stabilizers)
            for j, vp in enumerate(gadget.variable_paths, start=1):
                chosen.add(vp[6 - j])  # (7-j)-th vertex
            chosen.add(gadget.positive_literal_path[4])
            chosen.add(gadget.negative_literal_path[0])

    for (l1, l2), gadget in zip(cnf.clauses, tree.clauses):
        v1, v2 = _lit_value(l1, assignment), _lit_value(l2, assignment)
        if v1 == v2 or not v1:
            # both-true, both-false, or only the right literal true:
            # take the left leaf and the occurrence head two hops from it
            chosen.add(gadget.clause_path[0])
            chosen.add(gadget.left_occurrence[0])
            far_value = v2
            far_head = gadget.right_occurrence[0]
        else:
            chosen.add(gadget.clause_path[16])
            chosen.add(gadget.right_occurrence[0])
            far_value = v1
            far_head = gadget.left_occurrence[0]
        if not far_value:
            chosen.add(far_head)

    chosen.add(tree.chain_paths[0][_CHAIN_POSITION_P0 - 1])
    for j in range(cnf.n_clauses):
        for offset, pos in enumerate(_CHAIN_POSITIONS_CONNECTOR):
            chosen.add(tree.chain_paths[1 + 3 * j + offset][pos - 1])

    return frozenset(chosen)


def extract_assignment(
    tree: ReductionTree, subset: frozenset[int]
) -> tuple[list[bool], list[int]]:
    """Read a truth assignment off a consistent subset.

    A variable is true when its positive literal path has one of its
    first three vertices selected, false when the fifth is selected.
    Returns (values, ambiguous-variable indices); ambiguous variables
    default to false.
    """
    values = []
    warnings = []
    for i, gadget in enumerate(tree.variables):
        pos = gadget.positive_literal_path
        if any(v in subset for v in pos[:3]):
            values.append(True)
        elif pos[4] in subset:
            values.append(False)
        else:
            values.append(False)
            warnings.append(i)
    return values, warnings


# --- validation ------------------------------------------------------------

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...]


def validate_tree(tree: ReductionTree) -> ValidationReport:
    """Check every structural invariant of a built reduction tree."""
    problems: list[str] = []
    g = tree.graph
    n, m = tree.cnf.n_vars, tree.cnf.n_clauses

    if g.edge_count != g.vertex_count - 1:
        problems.append(f"not a tree: {g.edge_count} edges for {g.vertex_count} vertices")
    if not g.is_connected():
        problems.append("graph is not connected")

    beta = tree.beta
    if beta != 3 * m + 1:
        problems.append(f"beta is {beta}, expected {3 * m + 1}")
    if tree.alpha != 8 * beta:
        problems.append(f"alpha is {tree.alpha}, expected {8 * beta}")

    expected_total = 8 * beta + n * (40 + 2 * m * n) + 21 * m
    if g.vertex_count != expected_total:
        problems.append(f"vertex total {g.vertex_count}, expected {expected_total}")

    # colour classes: literal colours cover the literal path plus its
    # occurrence copies; everything else is confined to a single path/pair
    by_colour: dict[int, int] = {}
    for c in g.colours:
        by_colour[c] = by_colour.get(c, 0) + 1
    literal_occurrences: dict[int, int] = {}
    for (l1, l2) in tree.cnf.clauses:
        for lit in (l1, l2):
            gadget = tree.variables[abs(lit) - 1]
            c = gadget.positive_colour if lit > 0 else gadget.negative_colour
            literal_occurrences[c] = literal_occurrences.get(c, 0) + 1
    for i, gadget in enumerate(tree.variables):
        for c in (gadget.positive_colour, gadget.negative_colour):
            want = LITERAL_PATH_LEN + 2 * literal_occurrences.get(c, 0)
            if by_colour.get(c) != want:
                problems.append(f"literal colour {c} has {by_colour.get(c)} vertices, expected {want}")
        for vp in gadget.variable_paths:
            c = g.colours[vp[0]]
            if by_colour.get(c) != VARIABLE_PATH_LEN:
                problems.append(f"variable-path colour {c} reused outside its path")
        for s1, s2 in zip(gadget.left_stabilizers, gadget.right_stabilizers):
            if g.colours[s1] != g.colours[s2]:
                problems.append(f"stabilizer pair ({s1}, {s2}) colours differ")
            elif by_colour.get(g.colours[s1]) != 2:
                problems.append(f"stabilizer colour {g.colours[s1]} reused")
    for gadget in tree.clauses:
        c = g.colours[gadget.clause_path[0]]
        if by_colour.get(c) != CLAUSE_PATH_LEN:
            problems.append(f"clause colour {c} reused outside its path")
    for path in tree.chain_paths:
        c = g.colours[path[0]]
        if by_colour.get(c) != CHAIN_PATH_LEN:
            problems.append(f"chain colour {c} reused outside its path")

    # occurrence paths must sit at hop distance >= 8 from their variable gadget
    for (l1, l2), gadget in zip(tree.cnf.clauses, tree.clauses):
        for lit, occ in ((l1, gadget.left_occurrence), (l2, gadget.right_occurrence)):
            var_vertices = tree.variables[abs(lit) - 1].all_vertices()
            for o in occ:
                dist = bfs_distances(g, o)
                closest = min(dist[v] for v in var_vertices)
                if closest < 8:
                    problems.append(
                        f"occurrence vertex {o} at distance {closest} from gadget of x{abs(lit)}"
                    )

    return ValidationReport(ok=not problems, problems=tuple(problems))


# --- serialization ---------------------------------------------------------

def tree_index_to_json_obj(tree: ReductionTree) -> dict:
    return {
        "p0": tree.p0,
        "beta": tree.beta,
        "alpha": tree.alpha,
        "n_vars": tree.cnf.n_vars,
        "cnf_clauses": [list(c) for c in tree.cnf.clauses],
        "variables": [
            {
                "positive_literal_path": list(v.positive_literal_path),
                "negative_literal_path": list(v.negative_literal_path),
                "variable_paths": [list(p) for p in v.variable_paths],
                "left_stabilizers": list(v.left_stabilizers),
                "right_stabilizers": list(v.right_stabilizers),
                "positive_colour": v.positive_colour,
                "negative_colour": v.negative_colour,
            }
            for v in tree.variables
        ],
        "clauses": [
            {
                "clause_path": list(c.clause_path),
                "left_occurrence": list(c.left_occurrence),
                "right_occurrence": list(c.right_occurrence),
                "chain_vertices": list(c.chain_vertices),
            }
            for c in tree.clauses
        ],
        "chains": [list(p) for p in tree.chain_paths],
    }


def tree_from_json_objs(graph: ColouredGraph, index: dict) -> ReductionTree:
    try:
        cnf = Cnf2(
            n_vars=index["n_vars"],
            clauses=tuple(tuple(c) for c in index["cnf_clauses"]),
        )
        variables = tuple(
            VariableGadget(
                positive_literal_path=tuple(v["positive_literal_path"]),
                negative_literal_path=tuple(v["negative_literal_path"]),
                variable_paths=tuple(tuple(p) for p in v["variable_paths"]),
                left_stabilizers=tuple(v["left_stabilizers"]),
                right_stabilizers=tuple(v["right_stabilizers"]),
                positive_colour=v["positive_colour"],
                negative_colour=v["negative_colour"],
            )
            for v in index["variables"]
        )
        clauses = tuple(
            ClauseGadget(
                clause_path=tuple(c["clause_path"]),
                left_occurrence=tuple(c["left_occurrence"]),
                right_occurrence=tuple(c["right_occurrence"]),
                chain_vertices=tuple(c["chain_vertices"]),
            )
            for c in index["clauses"]
        )
        return ReductionTree(
            graph=graph,
            cnf=cnf,
            p0=index["p0"],
            variables=variables,
            clauses=clauses,
            chain_paths=tuple(tuple(p) for p in index["chains"]),
        )
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad reduction index: {exc}") from exc


def dump_tree_index_json(tree: ReductionTree) -> str:
    return json.dumps(tree_index_to_json_obj(tree), indent=2)
