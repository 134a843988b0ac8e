"""Command-line surface with stable JSON/CSV output.

Exit codes: 0 = success / mathematically true, 1 = a valid negative answer
(no coloring, not choosable), 2 = input or precondition error, 3 = resource
cap exceeded.  Negative answers deliberately get their own code so shell
pipelines can branch on mathematical content.

All documents are UTF-8 and newline-terminated; JSON is emitted with sorted
keys so identical invocations produce identical bytes.  ``--seed`` is
accepted everywhere for interface stability (defaulting to 0, never the
clock); the current subcommands are all deterministic and ignore it.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle as _oracle
from . import solvers as _solvers
from .assignments import (
    ListAssignment,
    assignment_from_json,
    assignment_to_json,
    build_assignment,
)
from .coloring import VerifyMode, classify_usage, verify
from .errors import InputError, PreconditionError, ResourceCapError
from .graphs import (
    FAMILY_NAMES,
    Graph,
    build_family,
    components,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAP = 3

REPORT_FAMILIES = (
    ("complete", 1), ("complete", 2), ("complete", 3),
    ("star", 1), ("star", 2), ("star", 3),
    ("path", 2), ("path", 3), ("path", 4),
    ("cycle", 3), ("cycle", 4),
)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def _load_graph(path: str) -> Graph:
    return graph_from_json(_load_json(path))


def _load_assignment(path: str) -> ListAssignment:
    return assignment_from_json(_load_json(path))


def _load_coloring(path: str) -> list[int]:
    doc = _load_json(path)
    try:
        colors = doc["colors"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"coloring document must have 'colors': {exc}")
    return [int(c) for c in colors]


def _cmd_family(args) -> int:
    g = build_family(args.name, args.param)
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(g) + "\n")
    else:
        _emit(graph_to_json(g))
    return EXIT_TRUE


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    L = _load_assignment(args.assignment)
    colors = _load_coloring(args.coloring)
    verdict = verify(g, L, colors, VerifyMode(args.mode))
    _emit(verdict.to_json())
    return EXIT_TRUE if verdict.ok else EXIT_FALSE


def _cmd_classify(args) -> int:
    L = _load_assignment(args.assignment)
    colors = _load_coloring(args.coloring)
    if len(colors) != L.n:
        raise InputError(f"coloring has {len(colors)} entries for {L.n} lists")
    classes = classify_usage(L, colors)
    _emit({"usage": [{"color": c, "class": u.value} for c, u in sorted(classes.items())]})
    return EXIT_TRUE


def _looks_like_star(g: Graph) -> bool:
    return g.n >= 2 and g.degree(0) == g.n - 1 and len(g.edges) == g.n - 1


def _auto_strategy(g: Graph, L: ListAssignment) -> str:
    n, k = g.n, L.k
    if k >= n or (k == n - 1 and not g.is_complete()):
        return "order"
    if _looks_like_star(g) and k >= 1 + -(-(g.n - 1) // 2):
        return "star"
    if all(len(comp) <= k for comp in components(g)):
        return "components"
    if g.max_degree >= 1 and k >= g.max_degree + -(-n // 2):
        return "smallorder"
    return "oracle"


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    L = _load_assignment(args.assignment)
    strategy = args.strategy
    if strategy == "auto":
        strategy = _auto_strategy(g, L)
    if strategy == "oracle":
        cap = args.cap if args.cap else _oracle.DEFAULT_SEARCH_CAP
        found, coloring = _oracle.exists_proportional_coloring(g, L, cap=cap)
        if not found:
            _emit({"found": False, "strategy": "oracle"})
            return EXIT_FALSE
        _emit({"colors": coloring, "strategy": "oracle"})
        return EXIT_TRUE
    if strategy == "star":
        if not _looks_like_star(g):
            raise InputError("solve --strategy star needs a star graph with center 0")
        coloring = _solvers.solve_star(g.n - 1, L)
    elif strategy == "components":
        coloring = _solvers.solve_components(g, L)
    elif strategy == "smallorder":
        coloring = _solvers.solve_smallorder(g, L)
    elif strategy == "order":
        coloring = _solvers.solve_order_bound(g, L)
    else:
        raise InputError(f"unknown strategy {strategy!r}")
    _emit({"colors": coloring, "strategy": strategy})
    return EXIT_TRUE


def _cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    if args.exists:
        if not args.assignment:
            raise InputError("oracle --exists needs --assignment")
        L = _load_assignment(args.assignment)
        cap = args.cap if args.cap else _oracle.DEFAULT_SEARCH_CAP
        found, coloring = _oracle.exists_proportional_coloring(g, L, cap=cap)
        _emit({"exists": found, "coloring": coloring})
        return EXIT_TRUE if found else EXIT_FALSE
    if args.k is None:
        raise InputError("oracle needs either --exists or --k")
    if args.equitable:
        if args.equitable == "colorable":
            cap = args.cap if args.cap else _oracle.DEFAULT_SEARCH_CAP
            ok = _oracle.equitable_colorable(g, args.k, cap=cap)
        else:
            nk_cap = args.cap if args.cap else _oracle.DEFAULT_NK_CAP
            ok = _oracle.equitable_choosable(g, args.k, nk_cap=nk_cap)
        _emit({"equitable": args.equitable, "k": args.k, "decision": ok})
        return EXIT_TRUE if ok else EXIT_FALSE
    nk_cap = args.cap if args.cap else _oracle.DEFAULT_NK_CAP
    verdict = _oracle.decide_proportional_k_choosability(
        g, args.k, nk_cap=nk_cap, threads=args.threads
    )
    _emit(verdict.to_json())
    return EXIT_TRUE if verdict.decision else EXIT_FALSE


def _cmd_chi_pc(args) -> int:
    g = _load_graph(args.graph)
    nk_cap = args.cap if args.cap else _oracle.DEFAULT_NK_CAP
    report = _oracle.chi_pc(g, args.k_max, nk_cap=nk_cap, threads=args.threads)
    _emit(report.to_json())
    return EXIT_TRUE if report.value is not None else EXIT_FALSE


def _cmd_gallery(args) -> int:
    instance = _oracle.gallery_instance(args.source, args.param)
    if args.format == "dot":
        sys.stdout.write(graph_to_dot(instance.graph) + "\n")
    else:
        _emit(instance.to_json())
    return EXIT_TRUE


def _cmd_report(args) -> int:
    nk_cap = args.cap if args.cap else _oracle.DEFAULT_NK_CAP
    sys.stdout.write("family,param,n,chi_pc\n")
    for name, param in REPORT_FAMILIES:
        g = build_family(name, [param])
        report = _oracle.chi_pc(g, args.k_max, nk_cap=nk_cap)
        value = report.value if report.value is not None else f">{args.k_max}"
        sys.stdout.write(f"{name},{param},{g.n},{value}\n")
    return EXIT_TRUE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="propcolor",
        description="Proportional choosability: solvers, verification, and oracles.",
    )
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subcommands (reserved; default 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="emit a named family graph")
    p.add_argument("--name", required=True, choices=[n.replace("_", "-") for n in FAMILY_NAMES])
    p.add_argument("--param", type=int, nargs="+", required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("verify", help="check a coloring against a predicate")
    p.add_argument("--graph", required=True)
    p.add_argument("--assignment", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", required=True, choices=[m.value for m in VerifyMode])
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("classify", help="per-color usage classes of a coloring")
    p.add_argument("--assignment", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("solve", help="construct a proportional coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--assignment", required=True)
    p.add_argument("--strategy", default="auto",
                   choices=["auto", "star", "components", "smallorder", "order", "oracle"])
    p.add_argument("--cap", type=int, default=0)
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("oracle", help="brute-force decisions on small instances")
    p.add_argument("--graph", required=True)
    p.add_argument("--assignment")
    p.add_argument("--exists", action="store_true",
                   help="decide proportional colorability of one assignment")
    p.add_argument("--k", type=int)
    p.add_argument("--equitable", choices=["colorable", "choosable"])
    p.add_argument("--cap", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("chi-pc", help="proportional choice number by ascending scan")
    p.add_argument("--graph", required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--cap", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(handler=_cmd_chi_pc)

    p = sub.add_parser("gallery", help="emit a hard-instance construction")
    p.add_argument("--source", required=True,
                   choices=[s.replace("_", "-") for s in _oracle.GALLERY_SOURCES])
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(handler=_cmd_gallery)

    p = sub.add_parser("report", help="chi_pc table for built-in families (CSV)")
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--cap", type=int, default=0)
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_INPUT
        return EXIT_INPUT if code != 0 else 0
    try:
        return args.handler(args)
    except (InputError, PreconditionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_CAP


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
