"""Command-line interface.

Exit codes: 0 success, 1 verified negative (no tree, check fails),
2 invalid input, 3 budget exceeded. Errors go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import colourings, constructions, matroid, oracle
from .errors import BudgetExceededError, InvalidInputError
from .graph import EdgeColouredGraph, classify_colouring
from .trees import Tree

EXIT_OK, EXIT_NEGATIVE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3

# tab10; colour k uses PALETTE[(k - 1) % len(PALETTE)]
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInputError(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from exc


def load_graph(path: str) -> EdgeColouredGraph:
    return EdgeColouredGraph.from_json(_read_json(path))


def load_tree(path: str) -> Tree:
    return Tree.from_json(_read_json(path))


def default_budget() -> int:
    raw = os.environ.get("HETEROTREE_BUDGET")
    if raw is None:
        return oracle.DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInputError(f"HETEROTREE_BUDGET must be an integer, got {raw!r}") from None
    if value < 0:
        raise InvalidInputError("HETEROTREE_BUDGET must be non-negative")
    return value


def to_dot(G: EdgeColouredGraph) -> str:
    lines = ["graph G {"]
    palette = " ".join(f"{k}={PALETTE[(k - 1) % len(PALETTE)]}" for k in G.classes)
    lines.append(f"  // palette: {palette}")
    for v in range(G.num_vertices):
        lines.append(f"  {v};")
    for u, v, c in G.edges:
        lines.append(f'  {u} -- {v} [color_index={c}, color="{PALETTE[(c - 1) % len(PALETTE)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heterotree", description="Heterochromatic spanning trees in edge-coloured graphs")
    parser.add_argument("--output", "-o", help="write result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="emit a coloured graph as JSON")
    gen.add_argument("family", choices=["graceful", "stellar", "nice", "cute", "bipartite-nice", "unique-tree"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--tree", help="tree JSON file (unique-tree only)")

    check = sub.add_parser("check", help="test a property of a coloured graph")
    check.add_argument("property", choices=["nice", "cute", "beautiful", "suzuki", "akbari", "lemma1"])
    check.add_argument("--input", required=True)

    find = sub.add_parser("find", help="find one heterochromatic spanning tree")
    find.add_argument("--input", required=True)

    fam = sub.add_parser("family", help="construct a certified family of trees")
    fam.add_argument("kind", choices=["nice", "beautiful"])
    fam.add_argument("--input", required=True)

    count = sub.add_parser("count", help="exact count by exhaustive enumeration")
    count.add_argument("--input", required=True)
    count.add_argument("--budget", type=int)
    count.add_argument("--keep", type=int, default=0)

    embed = sub.add_parser("embed", help="heterochromatic copy of a tree in a complete coloured graph")
    embed.add_argument("--input", required=True)
    embed.add_argument("--tree", required=True)

    dot = sub.add_parser("export-dot", help="Graphviz rendering")
    dot.add_argument("--input", required=True)
    return parser


def _require(value, flag: str, family: str) -> int:
    if value is None:
        raise InvalidInputError(f"generate {family} needs {flag}")
    return value


def _generate(args) -> tuple[int, str]:
    fam = args.family
    if fam == "unique-tree":
        if args.tree is None:
            raise InvalidInputError("generate unique-tree needs --tree")
        G = colourings.unique_tree_graph(load_tree(args.tree))
    elif fam == "bipartite-nice":
        G = colourings.bipartite_nice_colouring(_require(args.m, "--m", fam), args.seed)
    else:
        n = _require(args.n, "--n", fam)
        G = {
            "graceful": lambda: colourings.graceful_colouring(n),
            "stellar": lambda: colourings.stellar_colouring(n),
            "nice": lambda: colourings.random_nice_colouring(n, args.seed),
            "cute": lambda: colourings.random_cute_colouring(n, args.seed),
        }[fam]()
    return EXIT_OK, dumps(G.to_json())


def _check(args) -> tuple[int, str]:
    G = load_graph(args.input)
    prop = args.property
    out: dict = {"check": prop}
    if prop in ("nice", "cute"):
        cls = classify_colouring(G)
        out["verdict"] = prop in cls
        out["classes"] = sorted(cls.verdicts)
        out["sizes"] = list(cls.sizes)
    elif prop == "beautiful":
        B = colourings.verify_beautiful(G)
        out["verdict"] = B is not None
        if B is not None:
            out.update(B.to_json())
    elif prop == "suzuki":
        out["verdict"] = oracle.suzuki_check(G)
    elif prop == "akbari":
        out["verdict"] = oracle.akbari_alipour_check(G)
    else:
        holds, X = matroid.lemma1_condition_holds(G)
        out["verdict"] = holds
        if X is not None:
            out["violating"] = sorted(X)
    return (EXIT_OK if out["verdict"] else EXIT_NEGATIVE), dumps(out)


def _find(args) -> tuple[int, str]:
    G = load_graph(args.input)
    tree = matroid.find_heterochromatic_spanning_tree(G)
    if tree is None:
        return EXIT_NEGATIVE, dumps("absent")
    idx = sorted(tree)
    return EXIT_OK, dumps({"tree": idx, "edges": [list(G.edges[e]) for e in idx]})


def _family(args) -> tuple[int, str]:
    G = load_graph(args.input)
    build = constructions.nice_tree_family if args.kind == "nice" else constructions.beautiful_tree_family
    return EXIT_OK, dumps(build(G).to_json())


def _count(args) -> tuple[int, str]:
    G = load_graph(args.input)
    budget = default_budget() if args.budget is None else args.budget
    if args.keep < 0:
        raise InvalidInputError("--keep must be non-negative")
    report = oracle.enumerate_heterochromatic_spanning_trees(G, cap=args.keep, budget=budget)
    return EXIT_OK, dumps(report.to_json())


def _embed(args) -> tuple[int, str]:
    G = load_graph(args.input)
    mapping = oracle.heterochromatic_embedding(G, load_tree(args.tree))
    if mapping is None:
        return EXIT_NEGATIVE, dumps("absent")
    return EXIT_OK, dumps({"mapping": mapping})


def _export_dot(args) -> tuple[int, str]:
    return EXIT_OK, to_dot(load_graph(args.input))


COMMANDS = {
    "generate": _generate,
    "check": _check,
    "find": _find,
    "family": _family,
    "count": _count,
    "embed": _embed,
    "export-dot": _export_dot,
}


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Execute one command; returns ``(exit_code, stdout_text)``."""
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        code, text = COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        sys.stderr.write(dumps({"error": "budget_exceeded", "message": str(exc), "search_space": exc.search_space}))
        return EXIT_BUDGET
    except InvalidInputError as exc:
        sys.stderr.write(dumps({"error": "invalid_input", "message": str(exc)}))
        return EXIT_INVALID
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code
