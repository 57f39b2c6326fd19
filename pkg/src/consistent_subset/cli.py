"""Command-line front end: solve, check, oracle, reduce, generate, export.

Exit codes: 0 success; 1 invalid input; 2 internal contract violation (a
solver emitted an inconsistent subset — must never happen); 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence, TextIO

from .errors import ContractError, InputError, InternalError, ResourceLimitError
from .generate import random_spider
from .graph import (
    graph_from_json_obj,
    graph_to_dot,
    graph_to_json_obj,
    is_consistent,
    load_graph_json,
)
from .oracle import OracleConfig, oracle_mcs
from .paths import solve_path
from .reduction import (
    build_reduction,
    count_satisfied,
    expected_size,
    extract_assignment,
    parse_cnf,
    tree_from_json_objs,
    tree_index_to_json_obj,
    witness_subset,
)
from .spider import (
    DEFAULT_ENUMERATION_BUDGET,
    classify,
    solve_spider,
    spider_from_text,
    spider_to_text,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_RESOURCE = 3


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _open_output(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    try:
        return open(path, "w", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def _emit(out: TextIO, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")
    if out is not sys.stdout:
        out.close()


def _parse_subset(text: str) -> frozenset[int]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad subset JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise InputError("subset must be a JSON array of vertex ids")
    return frozenset(data)


def _parse_assignment(text: str, n_vars: int) -> list[bool]:
    values = text.replace(",", " ").split()
    if len(values) != n_vars:
        raise InputError(f"assignment has {len(values)} values, need {n_vars}")
    out = []
    for v in values:
        if v in ("0", "false", "False"):
            out.append(False)
        elif v in ("1", "true", "True"):
            out.append(True)
        else:
            raise InputError(f"bad truth value {v!r}")
    return out


def _load_tree(graph_path: str, index_path: str):
    graph = load_graph_json(_read_text(graph_path))
    try:
        index = json.loads(_read_text(index_path))
    except json.JSONDecodeError as exc:
        raise InputError(f"bad index JSON: {exc}") from exc
    return tree_from_json_objs(graph, index)


# --- subcommands -----------------------------------------------------------

def _cmd_solve_spider(args) -> int:
    spider = spider_from_text(_read_text(args.input))
    solution = solve_spider(spider, budget=args.budget)
    graph = spider.to_graph()
    valid = is_consistent(graph, solution.subset).valid
    if not valid:
        print("solver emitted an inconsistent subset", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(
        _open_output(args.output),
        json.dumps(
            {
                "size": solution.size,
                "subset": sorted(solution.subset),
                "case": solution.case.value,
                "valid": valid,
            }
        ),
    )
    return EXIT_OK


def _cmd_solve_path(args) -> int:
    try:
        colours = json.loads(_read_text(args.input))
    except json.JSONDecodeError as exc:
        raise InputError(f"bad path JSON: {exc}") from exc
    if not isinstance(colours, list) or not all(isinstance(c, int) for c in colours):
        raise InputError("path input must be a JSON array of colour indices")
    subset = solve_path(colours)
    from .graph import ColouredGraph

    graph = ColouredGraph.from_edges(
        max(colours) + 1, colours, [(i, i + 1) for i in range(len(colours) - 1)]
    )
    valid = is_consistent(graph, frozenset(subset)).valid
    if not valid:
        print("solver emitted an inconsistent subset", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(
        _open_output(args.output),
        json.dumps({"size": len(subset), "subset": sorted(subset), "valid": valid}),
    )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    graph = load_graph_json(_read_text(args.input))
    result = oracle_mcs(graph, OracleConfig())
    valid = is_consistent(graph, result.subset).valid
    if not valid:
        print("oracle emitted an inconsistent subset", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(
        _open_output(args.output),
        json.dumps({"size": result.size, "subset": sorted(result.subset), "valid": valid}),
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    graph = load_graph_json(_read_text(args.input))
    subset = _parse_subset(_read_text(args.subset))
    report = is_consistent(graph, subset)
    _emit(
        _open_output(args.output),
        json.dumps(
            {
                "valid": report.valid,
                "violations": [
                    {"vertex": v, "nearest": list(near), "colour": c}
                    for v, near, c in report.violations
                ],
            }
        ),
    )
    return EXIT_OK


def _cmd_reduce(args) -> int:
    cnf = parse_cnf(_read_text(args.input))
    tree = build_reduction(cnf)
    if args.output is None or args.output == "-":
        raise InputError("reduce requires --output (writes <output> and <output>.index.json)")
    with open(args.output, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json_obj(tree.graph), fh, indent=2)
        fh.write("\n")
    with open(args.output + ".index.json", "w", encoding="utf-8") as fh:
        json.dump(tree_index_to_json_obj(tree), fh, indent=2)
        fh.write("\n")
    print(
        json.dumps({"vertices": tree.graph.vertex_count, "beta": tree.beta, "alpha": tree.alpha})
    )
    return EXIT_OK


def _cmd_witness(args) -> int:
    tree = _load_tree(args.input, args.index)
    assignment = _parse_assignment(args.assignment, tree.cnf.n_vars)
    subset = witness_subset(tree, assignment)
    k = count_satisfied(tree.cnf, assignment)
    want = expected_size(tree.cnf, k)
    if len(subset) != want:
        raise InternalError(f"witness size {len(subset)} != expected {want}")
    _emit(
        _open_output(args.output),
        json.dumps({"size": len(subset), "satisfied": k, "subset": sorted(subset)}),
    )
    return EXIT_OK


def _cmd_extract(args) -> int:
    tree = _load_tree(args.input, args.index)
    subset = _parse_subset(_read_text(args.subset))
    values, ambiguous = extract_assignment(tree, subset)
    _emit(
        _open_output(args.output),
        json.dumps(
            {
                "assignment": [int(v) for v in values],
                "satisfied": count_satisfied(tree.cnf, values),
                "ambiguous_variables": ambiguous,
            }
        ),
    )
    return EXIT_OK


def _cmd_gen_spider(args) -> int:
    rng = random.Random(args.seed)
    spider = random_spider(rng, args.legs, args.colors, args.max_leg_len)
    _emit(_open_output(args.output), spider_to_text(spider))
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    graph = load_graph_json(_read_text(args.input))
    _emit(_open_output(args.output), graph_to_dot(graph))
    return EXIT_OK


def _verify_one(seed: int, index: int, legs: int, colors: int, max_leg_len: int, budget: int):
    rng = random.Random(seed * 1_000_003 + index)
    spider = random_spider(rng, legs, colors, max_leg_len)
    solution = solve_spider(spider, budget=budget)
    oracle = oracle_mcs(spider.to_graph(), OracleConfig())
    return {
        "instance": index,
        "spider": spider_to_text(spider).splitlines(),
        "case": solution.case.value,
        "solver_size": solution.size,
        "oracle_size": oracle.size,
        "match": solution.size == oracle.size,
    }


def _cmd_verify_suite(args) -> int:
    out = _open_output(args.output)
    mismatches = 0
    worse_than_oracle = 0
    try:
        for i in range(args.count):
            record = _verify_one(
                args.seed, i, args.legs, args.colors, args.max_leg_len, args.budget
            )
            if not record["match"]:
                mismatches += 1
                if record["solver_size"] < record["oracle_size"]:
                    worse_than_oracle += 1
            out.write(json.dumps(record) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    print(
        json.dumps(
            {"instances": args.count, "mismatches": mismatches, "below_oracle": worse_than_oracle}
        ),
        file=sys.stderr,
    )
    return EXIT_OK if worse_than_oracle == 0 else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcs", description="Minimum consistent subset toolkit"
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, output=True):
        p.add_argument("--input", help="input file, or - for stdin")
        if output:
            p.add_argument("--output", help="output file, or - for stdout")

    p = sub.add_parser("solve-spider", help="solve a spider in text format")
    common(p)
    p.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    p.set_defaults(func=_cmd_solve_spider)

    p = sub.add_parser("solve-path", help="solve a path given as a JSON colour array")
    common(p)
    p.set_defaults(func=_cmd_solve_path)

    p = sub.add_parser("oracle", help="brute-force optimum for a small graph JSON")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("check", help="check a subset for consistency")
    common(p)
    p.add_argument("--subset", required=True, help="JSON array of vertex ids (file or -)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("reduce", help="build the tree for a DIMACS 2-CNF")
    common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("witness", help="witness subset for a truth assignment")
    common(p)
    p.add_argument("--index", required=True, help="reduction index sidecar JSON")
    p.add_argument("--assignment", required=True, help="space/comma-separated 0/1 values")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("extract", help="read an assignment off a subset")
    common(p)
    p.add_argument("--index", required=True)
    p.add_argument("--subset", required=True)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("gen-spider", help="emit a reproducible random spider")
    p.add_argument("--output", help="output file, or - for stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--legs", type=int, default=4)
    p.add_argument("--colors", type=int, default=3)
    p.add_argument("--max-leg-len", type=int, default=4)
    p.set_defaults(func=_cmd_gen_spider)

    p = sub.add_parser("export-dot", help="export graph JSON as DOT")
    common(p)
    p.set_defaults(func=_cmd_export_dot)

    p = sub.add_parser("verify-suite", help="solver-vs-oracle sweep, JSON lines")
    p.add_argument("--output", help="JSON-lines report file, or - for stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--legs", type=int, default=4)
    p.add_argument("--colors", type=int, default=3)
    p.add_argument("--max-leg-len", type=int, default=4)
    p.add_argument("--budget", type=int, default=DEFAULT_ENUMERATION_BUDGET)
    p.add_argument(
        "--parallel",
        type=int,
        default=1,
        metavar="N",
        help="worker count (accepted for compatibility; output order is by instance index)",
    )
    p.set_defaults(func=_cmd_verify_suite)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ContractError, InternalError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
